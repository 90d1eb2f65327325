from collections import OrderedDict

from rest_framework import serializers


def _tuples(length):
    return serializers.ListField(
        child=serializers.ListField(
            child=serializers.CharField(), min_length=length, max_length=length
        ),
        required=False,
        default=list,
    )


class GraphDocumentSerializer(serializers.Serializer):
    """
    Validates a structured graph document and renders a GraphDocument back
    into one. Vertices are referred to by label everywhere; a permutation in
    ``group`` lists the image of each vertex in the order of ``vertices``.
    """

    vertices = serializers.ListField(
        child=serializers.CharField(), required=False, default=list
    )
    edges = _tuples(2)
    triangles = _tuples(3)
    squares = _tuples(4)
    group = serializers.ListField(
        child=serializers.ListField(child=serializers.CharField()),
        required=False,
        default=list,
    )

    def validate_vertices(self, value):
        if len(set(value)) != len(value):
            raise serializers.ValidationError("vertex labels must be unique")
        return value

    def validate_edges(self, value):
        for first, second in value:
            if first == second:
                raise serializers.ValidationError("loop at vertex {}".format(first))
        return value

    def validate(self, attrs):
        """
        Every label used by an edge, a cell or a permutation must be declared
        when ``vertices`` is given.

        :param bucolic.serializers.documents.GraphDocumentSerializer self: This object instance
        :param dict attrs: The field-validated data
        :return: The validated data
        :rtype: dict
        """

        declared = set(attrs["vertices"])
        if not declared:
            return attrs
        errors = OrderedDict()
        for name in ("edges", "triangles", "squares", "group"):
            unknown = sorted(
                {label for item in attrs[name] for label in item} - declared
            )
            if unknown:
                errors[name] = "unknown vertices: {}".format(", ".join(unknown))
        for sequence in attrs["group"]:
            if len(sequence) != len(declared):
                errors["group"] = "a permutation must list {} images".format(
                    len(declared)
                )
        if errors:
            raise serializers.ValidationError(errors)
        return attrs

    def to_representation(self, instance):
        """
        Create an ordered dictionary from a GraphDocument, omitting empty
        cell and group lists.

        :param bucolic.serializers.documents.GraphDocumentSerializer self: This object instance
        :param bucolic.parsers.GraphDocument instance: A parsed or generated document
        :return: An ordered dictionary with labels in place of ids
        :rtype: collections.OrderedDict
        """

        graph = instance.graph
        data = OrderedDict()
        data["vertices"] = graph.labels(graph.vertices)
        data["edges"] = [graph.labels(edge) for edge in graph.edges]
        if instance.triangles:
            data["triangles"] = [graph.labels(cell) for cell in instance.triangles]
        if instance.squares:
            data["squares"] = [graph.labels(cell) for cell in instance.squares]
        if instance.group:
            data["group"] = [graph.labels(sequence) for sequence in instance.group]
        return data
