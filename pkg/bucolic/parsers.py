"""
Readers for the two graph document formats.

Edge lists hold one edge ``u v`` per line, ``#`` starts a comment and an
optional first line ``vertices: n`` declares the vertices ``0`` .. ``n-1``.
Structured documents are JSON records with ``vertices``, ``edges``,
``triangles``, ``squares`` and ``group`` fields.
"""
import codecs
import io
import json

from rest_framework.exceptions import ValidationError
from rest_framework.parsers import BaseParser, JSONParser

from .complexes import TriangleSquareComplex, flag_complex
from .graphs import Graph
from .objects import DocumentParseError
from .serializers import GraphDocumentSerializer

EDGE_LIST = "edge-list"
STRUCTURED = "structured"


class GraphDocument:
    """
    A parsed graph with its optional cells and group.

    ...

    Attributes
    ----------
    graph : bucolic.graphs.Graph
        ids 0..n-1 in order of declaration or first appearance, labels as read
    triangles, squares : list of tuple
        cells as id tuples; empty when the document declares none
    group : list of list
        permutations as image sequences in id order
    format : str
        ``"edge-list"`` or ``"structured"``
    """

    def __init__(self, graph, triangles=(), squares=(), group=(), format=EDGE_LIST):
        self.graph = graph
        self.triangles = [tuple(cell) for cell in triangles]
        self.squares = [tuple(cell) for cell in squares]
        self.group = [list(sequence) for sequence in group]
        self.format = format

    @property
    def has_cells(self):
        return bool(self.triangles or self.squares)

    def complex(self):
        """
        The declared triangle-square complex, or the flag complex of the graph
        when the document declares no cells.
        """

        if self.has_cells:
            return TriangleSquareComplex(self.graph, self.triangles, self.squares)
        return flag_complex(self.graph)


def _read_text(stream, encoding):
    """
    Decode a whole binary stream; undecodable bytes are reported by line and
    column (counted in bytes) like any other parse error.
    """

    raw = stream.read()
    try:
        return codecs.decode(raw, encoding)
    except UnicodeDecodeError as exc:
        line_start = raw.rfind(b"\n", 0, exc.start) + 1
        raise DocumentParseError(
            "undecodable byte at offset {} ({})".format(exc.start, exc.reason),
            line=raw.count(b"\n", 0, exc.start) + 1,
            column=exc.start - line_start + 1,
            meta={"offset": exc.start, "encoding": encoding},
        )


class _Labels:
    """
    Hands out ids in order of first appearance.
    """

    def __init__(self, declared=()):
        self.ids = {}
        for label in declared:
            self.id_for(label)

    def id_for(self, label):
        if label not in self.ids:
            self.ids[label] = len(self.ids)
        return self.ids[label]

    def labels(self):
        return {vertex: label for label, vertex in self.ids.items()}


class EdgeListParser(BaseParser):
    """
    Parses the plain edge-list format.
    """

    media_type = "text/plain"

    def parse(self, stream, media_type=None, parser_context=None):
        """
        :raises DocumentParseError: with the line and column of the offending token
        :rtype: GraphDocument
        """

        parser_context = parser_context or {}
        encoding = parser_context.get("encoding", "utf-8")
        text = _read_text(stream, encoding)

        declared = None
        edges = []
        labels = _Labels()
        seen_content = False
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0]
            tokens = line.split()
            if not tokens:
                continue
            if tokens[0] == "vertices:":
                if seen_content or declared is not None:
                    raise DocumentParseError(
                        "the vertices header must come first",
                        line=number,
                        column=raw.index("vertices:") + 1,
                    )
                declared = self._count(tokens, raw, number)
                labels = _Labels(str(vertex) for vertex in range(declared))
                seen_content = True
                continue
            seen_content = True
            if len(tokens) != 2:
                column = raw.index(tokens[2]) + 1 if len(tokens) > 2 else len(raw.rstrip()) + 1
                raise DocumentParseError(
                    "expected two vertices per edge, got {}".format(len(tokens)),
                    line=number,
                    column=column,
                )
            first, second = tokens
            columns = (raw.index(first) + 1, raw.index(second, raw.index(first) + len(first)) + 1)
            if first == second:
                raise DocumentParseError(
                    "loop at vertex {}".format(first), line=number, column=columns[1]
                )
            if declared is not None:
                for token, column in zip(tokens, columns):
                    if token not in labels.ids:
                        raise DocumentParseError(
                            "vertex {} is not among the {} declared".format(token, declared),
                            line=number,
                            column=column,
                        )
            edges.append((labels.id_for(first), labels.id_for(second)))

        graph = Graph.from_edges(edges, vertices=labels.ids.values(), labels=labels.labels())
        return GraphDocument(graph, format=EDGE_LIST)

    @staticmethod
    def _count(tokens, raw, number):
        try:
            (count,) = tokens[1:]
            count = int(count)
            if count < 0:
                raise ValueError(count)
        except ValueError:
            raise DocumentParseError(
                "the vertices header takes one non-negative integer",
                line=number,
                column=raw.index("vertices:") + len("vertices:") + 1,
            )
        return count


class GraphDocumentParser(JSONParser):
    """
    Parses structured JSON graph documents and validates them with the
    GraphDocumentSerializer.
    """

    def parse(self, stream, media_type=None, parser_context=None):
        """
        :raises DocumentParseError: on malformed JSON (with line and column)
        :raises rest_framework.exceptions.ValidationError: on a malformed record
        :rtype: GraphDocument
        """

        parser_context = parser_context or {}
        encoding = parser_context.get("encoding", "utf-8")
        try:
            data = json.loads(_read_text(stream, encoding))
        except json.JSONDecodeError as exc:
            raise DocumentParseError(exc.msg, line=exc.lineno, column=exc.colno)
        if not isinstance(data, dict):
            raise ValidationError({"document": "expected a record"})

        serializer = GraphDocumentSerializer(data=data)
        serializer.is_valid(raise_exception=True)
        return self.build(serializer.validated_data)

    @staticmethod
    def build(validated):
        labels = _Labels(validated["vertices"])
        edges = [(labels.id_for(a), labels.id_for(b)) for a, b in validated["edges"]]
        triangles = [tuple(labels.id_for(label) for label in cell) for cell in validated["triangles"]]
        squares = [tuple(labels.id_for(label) for label in cell) for cell in validated["squares"]]
        group = [[labels.id_for(label) for label in sequence] for sequence in validated["group"]]
        graph = Graph.from_edges(edges, vertices=labels.ids.values(), labels=labels.labels())
        return GraphDocument(graph, triangles, squares, group, format=STRUCTURED)


def parse_document(stream, format=None):
    """
    Parse a binary stream as an edge list or a structured document. Without an
    explicit ``format`` a document whose first non-blank byte is ``{`` is
    structured.

    :rtype: GraphDocument
    """

    raw = stream.read()
    if format is None:
        format = STRUCTURED if raw.lstrip().startswith(b"{") else EDGE_LIST
    parser = GraphDocumentParser() if format == STRUCTURED else EdgeListParser()
    return parser.parse(io.BytesIO(raw))
