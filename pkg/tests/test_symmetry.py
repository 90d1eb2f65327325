from fractions import Fraction
from unittest import mock

from django.test import SimpleTestCase

from bucolic import generators, symmetry
from bucolic.complexes import flag_complex
from bucolic.objects import (
    BudgetExceededError,
    InvalidParameterError,
    InvalidPermutationError,
    PreconditionViolation,
)
from bucolic.symmetry import GroupAction

from . import mocks


def _action(graph, *sequences):
    return GroupAction.from_sequences(graph, sequences)


class GroupActionTestCase(SimpleTestCase):
    def test_closure(self):
        group = _action(generators.cycle(4), [1, 2, 3, 0])

        self.assertEqual(len(group), 4)
        self.assertTrue(group.is_closed())
        self.assertEqual(group.orbits(), [frozenset(range(4))])

    def test_identity_is_always_present(self):
        group = GroupAction(generators.path(3), [])

        self.assertEqual(group.sequences(), [[0, 1, 2]])
        self.assertEqual(len(group.orbits()), 3)

    def test_rejects_non_automorphisms(self):
        with self.assertRaises(InvalidPermutationError):
            _action(generators.path(3), [1, 0, 2])
        with self.assertRaises(InvalidPermutationError):
            _action(generators.path(3), [2, 1])

    def test_closure_cap(self):
        with self.assertRaises(BudgetExceededError):
            GroupAction.from_sequences(generators.cycle(4), [[1, 2, 3, 0]], cap=2)

    def test_automorphisms(self):
        self.assertEqual(len(symmetry.automorphisms(generators.hypercube(3))), 48)
        self.assertEqual(len(symmetry.automorphisms(generators.wheel(5))), 10)
        with self.assertRaises(BudgetExceededError):
            symmetry.automorphisms(generators.complete(5), cap=10)

    def test_restrict(self):
        group = _action(generators.cycle(4), [0, 3, 2, 1])

        restricted = group.restrict({1, 3})
        self.assertEqual(len(restricted), 2)
        self.assertEqual(restricted.orbit(1), frozenset({1, 3}))
        with self.assertRaises(InvalidParameterError):
            group.restrict({0, 1})

    def test_invariance_certificate(self):
        group = _action(generators.cycle(4), [1, 2, 3, 0])

        certificate = group.invariance_certificate({0, 2})
        self.assertEqual(list(certificate.values()), [True, False, True, False])


class InvariantSubgraphTestCase(SimpleTestCase):
    def test_orbit_hull(self):
        graph = generators.path(5)
        group = _action(graph, [4, 3, 2, 1, 0])

        self.assertEqual(symmetry.invariant_bucolic_subgraph(graph, group, 0), frozenset(range(5)))
        self.assertEqual(symmetry.minimal_invariant_subgraph(graph, group), frozenset({2}))

    def test_invariant_box(self):
        graph = generators.path(4)
        group = _action(graph, [3, 2, 1, 0])

        self.assertEqual(symmetry.invariant_box(graph, group), frozenset({1, 2}))

    def test_invariant_prism_of_a_wheel(self):
        graph = generators.wheel(5)
        witness = symmetry.invariant_prism(graph, _action(graph, [0, 2, 3, 4, 5, 1]))

        self.assertEqual(witness.vertices, frozenset({0}))
        self.assertTrue(witness.is_invariant)

    def test_is_prism(self):
        self.assertTrue(symmetry.is_prism(generators.hamming([3, 2]), range(6)))
        self.assertFalse(symmetry.is_prism(generators.path(3), range(3)))
        self.assertFalse(symmetry.is_prism(generators.path(3), {0, 2}))


class BruteForceTestCase(SimpleTestCase):
    def test_path(self):
        graph = generators.path(3)
        found = symmetry.brute_force_invariant_prism(graph, _action(graph, [2, 1, 0]))

        self.assertEqual([witness.vertices for witness in found], [frozenset({1})])

    def test_budget(self):
        graph = generators.path(6)

        with self.assertRaises(BudgetExceededError):
            symmetry.brute_force_invariant_prism(graph, GroupAction(graph, []), budget=8)


class FixedPrismTestCase(SimpleTestCase):
    def test_fixed_prisms(self):
        domino = generators.domino()
        cases = [
            (generators.path(3), [[2, 1, 0]], {1}),
            (generators.path(4), [[3, 2, 1, 0]], {1, 2}),
            (generators.path(5), [[4, 3, 2, 1, 0]], {2}),
            (generators.complete(2), [[1, 0]], {0, 1}),
            (generators.complete(3), [[1, 2, 0]], {0, 1, 2}),
            (generators.complete(4), [[1, 2, 3, 0]], {0, 1, 2, 3}),
            (generators.cycle(4), [[1, 2, 3, 0]], {0, 1, 2, 3}),
            (generators.cycle(4), [[0, 3, 2, 1]], {0}),
            (generators.hypercube(3), [list(range(7, -1, -1))], set(range(8))),
            (generators.hypercube(3), [[4, 5, 6, 7, 0, 1, 2, 3]], {0, 4}),
            (domino, [[5, 4, 3, 2, 1, 0]], {1, 4}),
            (domino, [[5, 4, 3, 2, 1, 0], [3, 4, 5, 0, 1, 2]], {1, 4}),
            (generators.wheel(5), [[0, 2, 3, 4, 5, 1]], {0}),
            (generators.wheel(6), [[0, 2, 3, 4, 5, 6, 1]], {0}),
            (generators.hamming([3, 2]), [[1, 0, 3, 2, 5, 4]], {0, 1}),
            (generators.hamming([3, 3]), [[0, 3, 6, 1, 4, 7, 2, 5, 8]], {0}),
            (generators.grid(3, 3), [list(range(8, -1, -1))], {4}),
            (generators.path(6), [], {0}),
            (mocks.glue(domino, generators.wheel(5), 0, 1), [], {0}),
        ]
        for index, (graph, sequences, expected) in enumerate(cases):
            with self.subTest(index=index, graph=graph):
                group = GroupAction.from_sequences(graph, sequences)
                witness = symmetry.fixed_prism(graph, group)
                self.assertEqual(witness.vertices, frozenset(expected))
                self.assertTrue(witness.oracle_confirmed)
                self.assertFalse(witness.stalled)
                self.assertEqual(witness.verify(graph, group), (True, []))

    def test_full_automorphism_groups(self):
        cases = [
            (generators.wheel(5), {0}),
            (generators.hamming([3, 2]), set(range(6))),
            (generators.complete_bipartite(1, 3), {0}),
            (generators.cycle(4), set(range(4))),
            (generators.complete(3), set(range(3))),
        ]
        for graph, expected in cases:
            with self.subTest(graph=graph):
                witness = symmetry.fixed_prism(graph, symmetry.automorphisms(graph))
                self.assertEqual(witness.vertices, frozenset(expected))
                self.assertTrue(witness.oracle_confirmed)

    def test_barycenter(self):
        graph = generators.domino()
        group = _action(graph, [5, 4, 3, 2, 1, 0], [3, 4, 5, 0, 1, 2])

        witness = symmetry.fixed_prism(graph, group)
        self.assertEqual(list(witness.barycenter.items()), [(1, Fraction(1, 2)), (4, Fraction(1, 2))])
        self.assertEqual(witness.stages["minimal"], (1, 4))

    def test_fixed_prism_of_a_complex(self):
        graph = generators.path(3)
        witness = symmetry.fixed_prism(flag_complex(graph), _action(graph, [2, 1, 0]))
        self.assertEqual(witness.vertices, frozenset({1}))

    def test_stalled_dismantling_falls_back_to_brute_force(self):
        graph = generators.path(3)
        group = _action(graph, [2, 1, 0])

        with mock.patch("bucolic.symmetry._dismantle_orbits", return_value=None):
            with self.assertLogs("bucolic.symmetry", "WARNING"):
                witness = symmetry.fixed_prism(graph, group)
        self.assertTrue(witness.stalled)
        self.assertEqual(witness.vertices, frozenset({1}))

    def test_requires_a_bucolic_graph(self):
        graph = generators.wheel(4)

        with self.assertRaises(PreconditionViolation):
            symmetry.fixed_prism(graph, GroupAction(graph, []))
