import itertools
import random

from django.test import SimpleTestCase

from bucolic import generators, mooring
from bucolic.graphs import Graph, strong_product
from bucolic.mooring import Mooring
from bucolic.objects import DisconnectedGraphError

from . import mocks


class MooringTestCase(SimpleTestCase):
    def test_bfs_from_the_hub(self):
        result = mooring.bfs_mooring(generators.wheel(5), 0)

        self.assertEqual(result.method, mooring.BFS)
        self.assertEqual(set(result.father.values()), {0})
        self.assertEqual(result.order[0], 0)

    def test_lexbfs_order(self):
        self.assertEqual(mooring.lexbfs_order(generators.wheel(5), 0), [0, 1, 2, 5, 3, 4])

    def test_lexbfs_fathers(self):
        result = mooring.moor(generators.domino(), 0)

        self.assertEqual(result.method, mooring.LEXBFS)
        self.assertEqual(result.order, [0, 1, 3, 4, 2, 5])
        self.assertEqual(result.iterates(5), [5, 4, 1, 0])
        self.assertIsNone(result.violation(generators.domino()))

    def test_disconnected(self):
        with self.assertRaises(DisconnectedGraphError):
            mooring.bfs_mooring(Graph.from_edges([(0, 1), (2, 3)]), 0)


class CombingTestCase(SimpleTestCase):
    def test_long_cycle_is_not_combed(self):
        cycle = generators.cycle(6)

        self.assertEqual(mooring.verify_combing(cycle, mooring.bfs_mooring(cycle, 0)), (False, (3, 4)))

    def test_bad_father_map(self):
        square = generators.cycle(4)
        broken = Mooring(0, {0: 0, 1: 0, 2: 0, 3: 2})

        self.assertEqual(mooring.verify_combing(square, broken), (False, (2, 0)))

    def test_lexbfs_combs_weakly_bridged_graphs(self):
        for index, graph in enumerate(mocks.weakly_bridged_graphs()):
            for base in graph.vertices:
                with self.subTest(index=index, base=base):
                    self.assertEqual(
                        mooring.verify_combing(graph, mooring.lexbfs_mooring(graph, base)),
                        (True, None),
                    )

    def test_bfs_combs_bridged_graphs(self):
        graphs = mocks.bridged_graphs()
        graphs.append(Graph.from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1)]))
        for index, graph in enumerate(graphs):
            for base in graph.vertices:
                with self.subTest(index=index, base=base):
                    self.assertTrue(
                        mooring.verify_combing(graph, mooring.bfs_mooring(graph, base))[0]
                    )


class DismantlingTestCase(SimpleTestCase):
    def test_square_is_not_dismantlable(self):
        self.assertIsNone(mooring.dismantling_order(generators.cycle(4)))

    def test_wheel(self):
        order = mooring.dismantling_order(generators.wheel(5))

        self.assertEqual(order[0], 1)
        self.assertEqual(sorted(order), list(range(6)))
        self.assertEqual(mooring.dominator(generators.wheel(5), 1, set(range(6))), 0)

    def test_strong_products_of_dismantlable_graphs(self):
        rng = random.Random(mocks.SEED)
        factors = [
            generators.path(3),
            generators.path(4),
            generators.complete(3),
            generators.wheel(4),
            generators.wheel(5),
            mocks.random_tree(rng, 6),
            mocks.random_chordal(rng, 6),
        ]
        for factor in factors:
            self.assertIsNotNone(mooring.dismantling_order(factor))
        for first, second in itertools.combinations_with_replacement(factors, 2):
            product = strong_product(first, second)
            with self.subTest(first=first, second=second):
                order = mooring.dismantling_order(product)
                self.assertIsNotNone(order)
                self.assertEqual(sorted(order), list(product.vertices))

    def test_strong_product_with_a_square_is_not(self):
        self.assertIsNone(
            mooring.dismantling_order(strong_product(generators.cycle(4), generators.complete(2)))
        )
