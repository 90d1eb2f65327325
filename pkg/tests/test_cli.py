import hashlib
import io
import json
import os
from unittest import mock

from django.test import SimpleTestCase

from bucolic import cli
from bucolic.objects import InvalidParameterError

SQUARE_PATH = b"0 1\n1 2\n2 3\n"
FIVE_CYCLE = b"0 1\n1 2\n2 3\n3 4\n4 0\n"
SIX_CYCLE = b"0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n"
TWELVE_CYCLE = b"".join(
    "{} {}\n".format(vertex, (vertex + 1) % 12).encode() for vertex in range(12)
)
DOMINO = b"0 1\n1 2\n3 4\n4 5\n0 3\n1 4\n2 5\n"


class CliTestCase(SimpleTestCase):
    def run_cli(self, argv, stdin=b""):
        self.stdout = io.BytesIO()
        self.stderr = io.BytesIO()
        return cli.main(argv, stdin=io.BytesIO(stdin), stdout=self.stdout, stderr=self.stderr)

    def output(self):
        return self.stdout.getvalue().decode("utf-8")

    def document(self):
        return json.loads(self.stdout.getvalue().decode("utf-8"))


class CheckTestCase(CliTestCase):
    def test_member(self):
        exit_code = self.run_cli(["--format", "json", "check", "-"], DOMINO)

        self.assertEqual(exit_code, 0)
        document = self.document()
        self.assertTrue(document["data"]["classes"]["bucolic"]["member"])
        self.assertIsNone(document["data"]["classes"]["bucolic"]["certificate"])
        self.assertEqual(document["meta"]["input_hash"], hashlib.sha256(DOMINO).hexdigest())
        self.assertEqual(document["meta"]["command"], ["bucolic", "--format", "json", "check", "-"])

    def test_single_class_negative(self):
        exit_code = self.run_cli(["check", "-", "--class", "bucolic"], FIVE_CYCLE)

        self.assertEqual(exit_code, 1)
        self.assertIn("weakly-modular: no", self.output())
        self.assertIn("TC(0) fails at (2,3)", self.output())

    def test_all_classes_always_succeed(self):
        self.assertEqual(self.run_cli(["check", "-"], FIVE_CYCLE), 0)

    def test_parse_error(self):
        exit_code = self.run_cli(["check", "-"], b"0 1 2\n")

        self.assertEqual(exit_code, 2)
        self.assertIn(b"line 1, column 5", self.stderr.getvalue())

    def test_undecodable_input_is_a_parse_error(self):
        self.assertEqual(self.run_cli(["check", "-"], b"a \xff\n"), 2)
        self.assertIn(b"line 1, column 3", self.stderr.getvalue())

        exit_code = self.run_cli(["--format", "json", "check", "-"], b'{"edges": [["\xff", "b"]]}')
        self.assertEqual(exit_code, 2)
        error = self.document()["errors"][0]
        self.assertEqual(error["title"], "Parse error")
        self.assertEqual(error["meta"]["offset"], 13)

    def test_unknown_command(self):
        with mock.patch("sys.stderr", io.StringIO()):
            self.assertEqual(self.run_cli(["frobnicate"]), 2)

    def test_structured_document_with_cells(self):
        document = {
            "vertices": ["c", "x1", "x2", "x3", "x4"],
            "edges": [["c", "x1"], ["c", "x2"], ["c", "x3"], ["c", "x4"], ["x1", "x2"], ["x2", "x3"], ["x3", "x4"], ["x4", "x1"]],
            "triangles": [["c", "x1", "x2"]],
        }
        exit_code = self.run_cli(["--format", "json", "check", "-"], json.dumps(document).encode())

        self.assertEqual(exit_code, 0)
        conditions = self.document()["data"]["local_conditions"]
        self.assertFalse(conditions["flag"]["holds"])
        self.assertEqual(conditions["flag"]["certificate"]["kind"], "cells")


class HullTestCase(CliTestCase):
    def test_convex_hull(self):
        exit_code = self.run_cli(
            ["hull", "-", "--set", "0,2", "--kind", "convex", "--format", "json"], SQUARE_PATH
        )

        self.assertEqual(exit_code, 0)
        data = self.document()["data"]
        self.assertEqual(data["vertices"], ["0", "1", "2"])
        self.assertEqual(
            data["trace"], [{"round": 0, "added": ["0", "2"]}, {"round": 1, "added": ["1"]}]
        )

    def test_unknown_vertex(self):
        self.assertEqual(self.run_cli(["hull", "-", "--set", "9"], SQUARE_PATH), 2)
        self.assertIn(b"Unknown vertex", self.stderr.getvalue())


class CoverTestCase(CliTestCase):
    def test_cycle(self):
        exit_code = self.run_cli(["cover", "-", "--radius", "3"], SIX_CYCLE)

        self.assertEqual(exit_code, 1)
        self.assertEqual(
            self.output().splitlines(), ["r=0: 1", "r=1: 3", "r=2: 5", "r=3: 7", "verdict: no"]
        )

    def test_dot(self):
        exit_code = self.run_cli(["cover", "-", "--radius", "1", "--emit", "dot"], SIX_CYCLE)

        self.assertEqual(exit_code, 0)
        self.assertTrue(self.output().startswith("graph cover {"))
        self.assertIn('0 [label="0.0(0)"];', self.output())

    def test_budget_from_the_environment(self):
        with mock.patch.dict(os.environ, {"BUCOLIC_BUDGET": "3"}):
            with self.assertLogs("bucolic.cover", "WARNING"):
                exit_code = self.run_cli(["--format", "json", "cover", "-"], TWELVE_CYCLE)

        self.assertEqual(exit_code, 0)
        self.assertEqual(self.document()["data"]["verdict"], "budget-exceeded")
        self.assertTrue(self.document()["data"]["truncated"])

    def test_bad_budget(self):
        with mock.patch.dict(os.environ, {"BUCOLIC_BUDGET": "none"}):
            self.assertEqual(self.run_cli(["cover", "-"], SIX_CYCLE), 2)

    def test_budget_overrides(self):
        overrides = cli.budget_overrides({"BUCOLIC_BUDGET": "50"})

        self.assertEqual(overrides["COVER_VERTEX_BUDGET"], 50)
        self.assertEqual(cli.budget_overrides({}), {})
        with self.assertRaises(InvalidParameterError):
            cli.budget_overrides({"BUCOLIC_BUDGET": "-4"})


class DecomposeTestCase(CliTestCase):
    def test_domino(self):
        exit_code = self.run_cli(["--format", "json", "decompose", "-"], DOMINO)

        self.assertEqual(exit_code, 0)
        data = self.document()["data"]
        self.assertEqual(data["tree"]["kind"], "amalgam")
        self.assertTrue(data["verified"])
        self.assertEqual(data["diagnostics"], [])

    def test_not_bucolic(self):
        exit_code = self.run_cli(["--format", "json", "decompose", "-"], FIVE_CYCLE)

        self.assertEqual(exit_code, 1)
        error = self.document()["errors"][0]
        self.assertEqual(error["status"], "1")
        self.assertEqual(error["title"], "Precondition violation")
        self.assertEqual(error["meta"]["certificate"]["kind"], "condition")


class MoorTestCase(CliTestCase):
    def test_bfs_on_a_long_cycle(self):
        exit_code = self.run_cli(["moor", "-", "--method", "bfs", "--format", "json"], SIX_CYCLE)

        self.assertEqual(exit_code, 1)
        data = self.document()["data"]
        self.assertFalse(data["combing"])
        self.assertEqual(data["violating_edge"], ["3", "4"])

    def test_text_output(self):
        self.assertEqual(self.run_cli(["moor", "-", "--base", "1"], DOMINO), 0)
        self.assertIn("combing: pass", self.output())


class FixPrismTestCase(CliTestCase):
    def test_declared_group(self):
        document = {
            "vertices": ["a", "b", "c"],
            "edges": [["a", "b"], ["b", "c"]],
            "group": [["c", "b", "a"]],
        }
        exit_code = self.run_cli(["--format", "json", "fixprism", "-"], json.dumps(document).encode())

        self.assertEqual(exit_code, 0)
        data = self.document()["data"]
        self.assertEqual(data["vertices"], ["b"])
        self.assertEqual(data["barycenter"], {"b": "1"})
        self.assertEqual(data["group_order"], 2)
        self.assertTrue(data["invariant"])

    def test_not_bucolic(self):
        self.assertEqual(self.run_cli(["fixprism", "-"], FIVE_CYCLE), 1)
        self.assertTrue(self.stderr.getvalue().startswith(b"error: Precondition violation"))


class GenTestCase(CliTestCase):
    def test_edge_list(self):
        self.assertEqual(self.run_cli(["gen", "hypercube", "2"]), 0)
        self.assertEqual(self.output(), "00 01\n00 10\n01 11\n10 11\n")

    def test_json(self):
        self.assertEqual(self.run_cli(["gen", "hamming", "3,2", "--format", "json"]), 0)
        self.assertEqual(len(self.document()["data"]["vertices"]), 6)

    def test_bad_family(self):
        self.assertEqual(self.run_cli(["gen", "petersen"]), 2)
        self.assertEqual(self.run_cli(["gen", "wheel", "five"]), 2)
