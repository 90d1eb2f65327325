"""
Class membership: weakly modular, bridged, weakly bridged, pre-median, bucolic
and strongly bucolic graphs.

Every predicate returns ``(flag, certificate)``. The certificate of a negative
answer is a ConditionWitness (a triangle or quadrangle condition failing at a
basepoint) or a PatternOccurrence (a forbidden induced subgraph); both replay
against the graph. Disconnected inputs are evaluated component by component
and fail on the first failing component; classify also reports every
component on its own.
"""
import logging
import time
from collections import OrderedDict

import networkx as nx

from . import patterns
from .graphs import is_weakly_modular

logger = logging.getLogger(__name__)

WEAKLY_MODULAR = "weakly-modular"
BRIDGED = "bridged"
WEAKLY_BRIDGED = "weakly-bridged"
BUCOLIC = "bucolic"
STRONGLY_BUCOLIC = "strongly-bucolic"
PREMEDIAN = "pre-median"

CLASS_NAMES = (
    WEAKLY_MODULAR,
    BRIDGED,
    WEAKLY_BRIDGED,
    BUCOLIC,
    STRONGLY_BUCOLIC,
    PREMEDIAN,
)

# forbidden induced patterns on top of weak modularity
FORBIDDEN = OrderedDict(
    [
        (WEAKLY_MODULAR, ()),
        (BRIDGED, (patterns.C4, patterns.C5)),
        (WEAKLY_BRIDGED, (patterns.C4,)),
        (BUCOLIC, (patterns.K23, patterns.W4, patterns.W4_MINUS)),
        (
            STRONGLY_BUCOLIC,
            (patterns.K23, patterns.W4, patterns.W4_MINUS, patterns.W5),
        ),
        (PREMEDIAN, (patterns.K23, patterns.W4_MINUS)),
    ]
)


class ComponentReport:
    """
    Flags and certificates of one connected component; ``vertices`` are ids
    of the whole graph.
    """

    def __init__(self, vertices):
        self.vertices = vertices
        self.flags = OrderedDict()
        self.certificates = OrderedDict()


class ClassReport:
    """
    Flags, certificates and timings (seconds) per class name, for the whole
    graph and for each connected component.
    """

    def __init__(self, components=1):
        self.flags = OrderedDict()
        self.certificates = OrderedDict()
        self.timings = OrderedDict()
        self.components = components
        self.per_component = []

    def record(self, name, flag, certificate, elapsed):
        self.flags[name] = flag
        self.certificates[name] = certificate
        self.timings[name] = elapsed

    def __getitem__(self, name):
        return self.flags[name]


class _Evaluation:
    """
    Memoizes weak modularity and first pattern occurrences per component so
    several predicates can share them.
    """

    def __init__(self, graph):
        self.graph = graph
        self.components = [graph.induced(part) for part in graph.components()]
        self._weakly_modular = {}
        self._occurrences = {}

    def weakly_modular(self, position):
        if position not in self._weakly_modular:
            self._weakly_modular[position] = is_weakly_modular(
                self.components[position]
            )
        return self._weakly_modular[position]

    def occurrence(self, position, pattern):
        key = (position, pattern)
        if key not in self._occurrences:
            self._occurrences[key] = patterns.first_occurrence(
                self.components[position], pattern
            )
        return self._occurrences[key]

    def component_member(self, position, name):
        flag, witness = self.weakly_modular(position)
        if not flag:
            return False, witness
        for pattern in FORBIDDEN[name]:
            occurrence = self.occurrence(position, pattern)
            if occurrence is not None:
                return False, occurrence
        return True, None

    def member(self, name):
        for position in range(len(self.components)):
            flag, certificate = self.component_member(position, name)
            if not flag:
                return False, certificate
        return True, None


def _member(graph, name):
    return _Evaluation(graph).member(name)


def is_bridged(graph):
    """
    Weakly modular without induced C4 and C5.
    """

    return _member(graph, BRIDGED)


def is_weakly_bridged(graph):
    """
    Weakly modular without induced C4.
    """

    return _member(graph, WEAKLY_BRIDGED)


def is_bucolic(graph):
    """
    Weakly modular without induced K23, W4 and W4^-.
    """

    return _member(graph, BUCOLIC)


def is_strongly_bucolic(graph):
    return _member(graph, STRONGLY_BUCOLIC)


def is_premedian(graph):
    return _member(graph, PREMEDIAN)


def is_two_connected(graph):
    """
    At least two vertices, connected, and no cut vertex (K2 counts as
    2-connected).
    """

    return graph.order >= 2 and nx.is_biconnected(graph.to_networkx())


def forbidden_occurrences(graph, kinds, exhaustive=False):
    """
    Occurrences of the given patterns; with ``exhaustive`` all of them,
    otherwise at most the first one per pattern.

    :rtype: list of bucolic.patterns.PatternOccurrence
    """

    found = []
    for kind in kinds:
        for vertices in patterns.find_induced(graph, kind, first_only=not exhaustive):
            found.append(patterns.PatternOccurrence(kind, vertices))
    return found


def has_isometric_long_cycle(graph):
    """
    Search for an isometric cycle of length greater than 3, shortest first.

    A cycle p0..p(k-1) is isometric when d(pi, pj) equals the cyclic index
    distance for every pair; partial paths are pruned with the same test.

    :return: (True, cycle vertex tuple) or (False, None)
    """

    for component in graph.components():
        sub = graph.induced(component)
        for length in range(4, sub.order + 1):
            cycle = _isometric_cycle(sub, length)
            if cycle is not None:
                return True, cycle
    return False, None


def _isometric_cycle(graph, length):
    def cyclic(i, j):
        gap = abs(i - j)
        return min(gap, length - gap)

    def extend(cycle):
        if len(cycle) == length:
            return tuple(cycle) if cycle[1] < cycle[-1] else None
        position = len(cycle)
        for vertex in sorted(graph.neighbours(cycle[-1])):
            if vertex <= cycle[0] or vertex in cycle:
                continue
            distances = graph.distances_from(vertex)
            if all(
                distances.get(other) == cyclic(position, index)
                for index, other in enumerate(cycle)
            ):
                found = extend(cycle + [vertex])
                if found is not None:
                    return found
        return None

    for start in graph.vertices:
        found = extend([start])
        if found is not None:
            return found
    return None


def classify(graph, exhaustive=False):
    """
    Evaluate every class predicate, sharing the weak-modularity computation.

    With ``exhaustive`` the certificate of a class failing on forbidden
    patterns lists every occurrence instead of the first one. The whole-graph
    verdict of a class is the conjunction of the component verdicts, with the
    certificate of the first failing component.

    :rtype: ClassReport
    """

    evaluation = _Evaluation(graph)
    report = ClassReport(components=len(evaluation.components))
    report.per_component = [
        ComponentReport(component.vertices) for component in evaluation.components
    ]
    for name in CLASS_NAMES:
        started = time.perf_counter()
        for position, part in enumerate(report.per_component):
            flag, certificate = evaluation.component_member(position, name)
            if exhaustive and isinstance(certificate, patterns.PatternOccurrence):
                certificate = forbidden_occurrences(
                    evaluation.components[position], FORBIDDEN[name], exhaustive=True
                )
            part.flags[name] = flag
            part.certificates[name] = certificate
        failing = [part for part in report.per_component if not part.flags[name]]
        if failing:
            flag, certificate = False, failing[0].certificates[name]
        else:
            flag, certificate = True, None
        report.record(name, flag, certificate, time.perf_counter() - started)
    logger.debug("classified %r: %s", graph, dict(report.flags))
    return report
