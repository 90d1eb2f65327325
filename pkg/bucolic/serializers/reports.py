"""
Serializers for the reports of every command. All of them take the graph the
report refers to as ``context["graph"]`` and print labels, never ids.
"""
from collections import OrderedDict

from rest_framework import serializers

from ..complexes import CellConfiguration
from ..cover import CoupleConflict
from ..decompose import serialize_tree
from ..graphs import ConditionWitness
from ..patterns import PatternOccurrence


class ReportSerializer(serializers.Serializer):
    """
    Base class: gives access to the graph in context and its labels.
    """

    @property
    def graph(self):
        return self.context["graph"]

    def labels(self, vertices):
        return self.graph.labels(vertices)


class CertificateSerializer(ReportSerializer):
    """
    Serializes a certificate: a condition witness, a pattern occurrence, a
    cell configuration, a conflict between cover couples, an isometric
    cycle or a list of any of them.
    """

    def to_representation(self, instance):
        if instance is None:
            return None
        if isinstance(instance, list):
            return [self.to_representation(item) for item in instance]

        data = OrderedDict()
        if isinstance(instance, ConditionWitness):
            data["kind"] = "condition"
            data["condition"] = instance.condition
            data["basepoint"] = self.graph.label(instance.basepoint)
            data["vertices"] = self.labels(instance.vertices)
            data["description"] = instance.describe(self.graph)
        elif isinstance(instance, PatternOccurrence):
            data["kind"] = "pattern"
            data["pattern"] = str(instance.pattern)
            data["vertices"] = self.labels(instance.vertices)
            data["description"] = instance.describe(self.graph)
        elif isinstance(instance, CellConfiguration):
            data["kind"] = "cells"
            data["condition"] = instance.condition
            data["cells"] = [self.labels(cell) for cell in instance.cells]
            data["description"] = instance.describe(self.graph)
        elif isinstance(instance, CoupleConflict):
            data["kind"] = "couples"
            data["couples"] = [
                CoupleConflict.couple_label(couple, self.graph) for couple in instance
            ]
            data["description"] = instance.describe(self.graph)
        elif isinstance(instance, tuple):
            data["kind"] = "cycle"
            data["vertices"] = self.labels(instance)
        else:
            data["kind"] = "other"
            data["description"] = str(instance)
        return data


class ClassReportSerializer(ReportSerializer):
    """
    Verdicts per class for the whole graph, then per connected component.
    """

    def classes(self, flags, certificates, timings=None):
        serializer = CertificateSerializer(context=self.context)
        classes = OrderedDict()
        for name, flag in flags.items():
            entry = OrderedDict()
            entry["member"] = flag
            entry["certificate"] = serializer.to_representation(certificates[name])
            if timings is not None:
                entry["seconds"] = round(timings[name], 6)
            classes[name] = entry
        return classes

    def to_representation(self, instance):
        data = OrderedDict()
        data["components"] = instance.components
        data["classes"] = self.classes(instance.flags, instance.certificates, instance.timings)
        data["per_component"] = [
            OrderedDict(
                [
                    ("vertices", self.labels(part.vertices)),
                    ("classes", self.classes(part.flags, part.certificates)),
                ]
            )
            for part in instance.per_component
        ]
        return data


class HullSerializer(ReportSerializer):
    """
    ``context["kind"]`` and ``context["seed"]`` describe the request.
    """

    def to_representation(self, instance):
        data = OrderedDict()
        data["kind"] = self.context.get("kind")
        data["seed"] = self.labels(sorted(self.context.get("seed", ())))
        data["vertices"] = self.labels(sorted(instance.vertices))
        data["trace"] = [
            OrderedDict([("round", round_), ("added", self.labels(added))])
            for round_, added in instance.closure_trace
        ]
        return data


class LocalConditionsSerializer(ReportSerializer):
    def to_representation(self, instance):
        certificates = CertificateSerializer(context=self.context)
        data = OrderedDict()
        for name, flag in instance.flags.items():
            data[name] = OrderedDict(
                [
                    ("holds", flag),
                    (
                        "certificate",
                        certificates.to_representation(instance.certificates[name]),
                    ),
                ]
            )
        return data


class CoverSerializer(ReportSerializer):
    """
    Growth of an unfolded cover; ``context["verdict"]`` carries the
    simple-connectivity verdict.
    """

    def to_representation(self, instance):
        data = OrderedDict()
        data["basepoint"] = self.graph.label(instance.basepoint)
        data["levels"] = [
            OrderedDict([("radius", radius), ("ball", size)])
            for radius, size in enumerate(instance.growth())
        ]
        data["vertices"] = len(instance)
        data["stabilized"] = instance.is_stabilized
        data["truncated"] = instance.truncated
        data["verdict"] = self.context.get("verdict")
        return data


class DecompositionSerializer(ReportSerializer):
    """
    A decomposition tree with its verification; ``context["verification"]``
    is the (verdict, diagnostics) pair.
    """

    def to_representation(self, instance):
        verdict, diagnostics = self.context.get("verification", (None, []))
        data = OrderedDict()
        data["tree"] = serialize_tree(instance)
        data["verified"] = verdict
        data["diagnostics"] = list(diagnostics)
        return data


class MooringSerializer(ReportSerializer):
    """
    ``context["combing"]`` is the (verdict, offending edge) pair.
    """

    def to_representation(self, instance):
        verdict, edge = self.context.get("combing", (None, None))
        data = OrderedDict()
        data["method"] = instance.method
        data["base"] = self.graph.label(instance.base)
        data["father"] = OrderedDict(
            (self.graph.label(vertex), self.graph.label(parent))
            for vertex, parent in instance.father.items()
        )
        data["combing"] = verdict
        data["violating_edge"] = self.labels(edge) if edge else None
        return data


class PrismSerializer(ReportSerializer):
    def to_representation(self, instance):
        data = OrderedDict()
        data["vertices"] = self.labels(sorted(instance.vertices))
        data["factors"] = [self.labels(factor) for factor in instance.factors]
        data["invariant"] = instance.is_invariant
        data["certificate"] = OrderedDict(
            (str(index), flag) for index, flag in instance.certificate.items()
        )
        data["barycenter"] = OrderedDict(
            (self.graph.label(vertex), str(weight))
            for vertex, weight in instance.barycenter.items()
        )
        data["stalled"] = instance.stalled
        data["oracle_confirmed"] = instance.oracle_confirmed
        data["stages"] = OrderedDict(
            (name, self.labels(vertices)) for name, vertices in instance.stages.items()
        )
        return data
