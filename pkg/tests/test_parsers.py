import io
import json

from django.test import SimpleTestCase
from rest_framework.exceptions import ValidationError

from bucolic.objects import DocumentParseError
from bucolic.parsers import (
    EDGE_LIST,
    STRUCTURED,
    EdgeListParser,
    GraphDocumentParser,
    parse_document,
)


def _stream(text):
    return io.BytesIO(text.encode("utf-8"))


class EdgeListParserTestCase(SimpleTestCase):
    def test_labels_in_order_of_appearance(self):
        document = EdgeListParser().parse(_stream("b a  # first edge\n\na c\n"))

        graph = document.graph
        self.assertEqual(graph.labels(graph.vertices), ["b", "a", "c"])
        self.assertEqual(graph.edges, ((0, 1), (1, 2)))
        self.assertEqual(document.format, EDGE_LIST)
        self.assertFalse(document.has_cells)

    def test_vertices_header(self):
        document = EdgeListParser().parse(_stream("vertices: 4\n0 1\n"))

        self.assertEqual(document.graph.order, 4)
        self.assertEqual(document.graph.neighbours(3), set())

    def test_wrong_token_count(self):
        with self.assertRaises(DocumentParseError) as context:
            EdgeListParser().parse(_stream("0 1\n1 2 3\n"))
        self.assertEqual((context.exception.line, context.exception.column), (2, 5))

    def test_loop(self):
        with self.assertRaises(DocumentParseError) as context:
            EdgeListParser().parse(_stream("0 1\n  x x\n"))
        self.assertEqual((context.exception.line, context.exception.column), (2, 5))

    def test_labels_outside_the_header(self):
        with self.assertRaises(DocumentParseError) as context:
            EdgeListParser().parse(_stream("vertices: 3\n0 1\n2  7\n"))
        self.assertEqual((context.exception.line, context.exception.column), (3, 4))

    def test_undecodable_bytes(self):
        with self.assertRaises(DocumentParseError) as context:
            EdgeListParser().parse(io.BytesIO(b"0 1\n1 \xff\n"))
        self.assertEqual((context.exception.line, context.exception.column), (2, 3))
        self.assertEqual(context.exception.meta["offset"], 6)

    def test_late_or_bad_header(self):
        with self.assertRaises(DocumentParseError):
            EdgeListParser().parse(_stream("0 1\nvertices: 3\n"))
        with self.assertRaises(DocumentParseError):
            EdgeListParser().parse(_stream("vertices: many\n"))


class GraphDocumentParserTestCase(SimpleTestCase):
    def test_cells_and_group(self):
        record = {
            "vertices": ["a", "b", "c"],
            "edges": [["a", "b"], ["b", "c"], ["a", "c"]],
            "triangles": [["a", "b", "c"]],
            "group": [["b", "c", "a"]],
        }
        document = GraphDocumentParser().parse(_stream(json.dumps(record)))

        self.assertEqual(document.format, STRUCTURED)
        self.assertEqual(document.triangles, [(0, 1, 2)])
        self.assertEqual(document.group, [[1, 2, 0]])
        self.assertEqual(len(document.complex().triangles), 1)

    def test_malformed_json(self):
        with self.assertRaises(DocumentParseError) as context:
            GraphDocumentParser().parse(_stream('{"edges": [\n  ["a", "b"]\n'))
        self.assertEqual(context.exception.line, 3)

    def test_undecodable_bytes(self):
        with self.assertRaises(DocumentParseError) as context:
            GraphDocumentParser().parse(io.BytesIO(b'{"edges":\n [["\xff", "b"]]}'))
        self.assertEqual((context.exception.line, context.exception.column), (2, 5))

    def test_undeclared_vertices(self):
        record = {"vertices": ["a", "b"], "edges": [["a", "z"]]}

        with self.assertRaises(ValidationError) as context:
            GraphDocumentParser().parse(_stream(json.dumps(record)))
        self.assertIn("edges", context.exception.detail)

    def test_not_a_record(self):
        with self.assertRaises(ValidationError):
            GraphDocumentParser().parse(_stream("[1, 2]"))


class ParseDocumentTestCase(SimpleTestCase):
    def test_format_detection(self):
        self.assertEqual(parse_document(_stream('  {"edges": [["0", "1"]]}')).format, STRUCTURED)
        self.assertEqual(parse_document(_stream("0 1\n")).format, EDGE_LIST)

    def test_flag_complex_without_cells(self):
        document = parse_document(_stream("0 1\n1 2\n2 3\n3 0\n"))

        self.assertEqual(len(document.complex().squares), 1)
