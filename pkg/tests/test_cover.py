from django.test import SimpleTestCase

from bucolic import complexes, cover, generators, recognition
from bucolic.complexes import flag_complex
from bucolic.graphs import Graph, distances_from, is_isomorphic
from bucolic.objects import CoverPropertyViolation, DisconnectedGraphError, PreconditionViolation

from . import mocks


def ball_sizes(graph, centre, radius):
    """
    |B_r(centre)| for r = 0..radius, counted from plain distances.
    """

    distances = distances_from(graph, centre)
    return [sum(1 for d in distances.values() if d <= r) for r in range(radius + 1)]


class InitCoverTestCase(SimpleTestCase):
    def test_first_two_levels(self):
        state = cover.init_cover(flag_complex(generators.wheel(5)), 1)

        self.assertEqual(state.level, 1)
        self.assertEqual(len(state), 4)
        self.assertEqual(state.f[state.root], 1)
        self.assertEqual(sorted(state.f[vertex] for vertex in state.levels[1]), [0, 2, 5])

    def test_local_conditions_are_required(self):
        with self.assertRaises(PreconditionViolation):
            cover.init_cover(flag_complex(generators.wheel(4)), 0)


class UnfoldTestCase(SimpleTestCase):
    def test_cycle_unrolls_into_a_line(self):
        state, _cover_complex = cover.unfold(flag_complex(generators.cycle(6)), 0, radius=6)
        line = generators.path(13)

        self.assertEqual(state.growth(), [2 * r + 1 for r in range(7)])
        self.assertEqual(state.growth(), ball_sizes(line, 6, 6))
        self.assertEqual(cover.verdict(state), complexes.NO)

    def test_torus_unrolls_into_a_plane(self):
        state, _cover_complex = cover.unfold(flag_complex(generators.torus(5, 5)), 0, radius=4)
        plane = generators.grid(9, 9)

        self.assertEqual(state.growth(), [2 * r * r + 2 * r + 1 for r in range(5)])
        self.assertEqual(state.growth(), ball_sizes(plane, 4 * 9 + 4, 4))
        self.assertEqual(cover.verdict(state), complexes.NO)

    def test_cube_stabilizes(self):
        cube = generators.hypercube(3)
        state, cover_complex = cover.unfold(flag_complex(cube), 0)

        self.assertTrue(state.is_stabilized)
        self.assertEqual(state.growth(), [1, 4, 7, 8])
        self.assertEqual(cover.verdict(state), complexes.YES)
        self.assertTrue(is_isomorphic(state.cover_graph()[0], cube))
        self.assertEqual(len(cover_complex.squares), 6)

    def test_partial_unfolding_is_undecided(self):
        state, _cover_complex = cover.unfold(flag_complex(generators.cycle(12)), 0, radius=2)

        self.assertEqual(cover.verdict(state), cover.UNDECIDED)

    def test_budget(self):
        with self.assertLogs("bucolic.cover", "WARNING"):
            state, _cover_complex = cover.unfold(
                flag_complex(generators.cycle(12)), 0, vertex_budget=5
            )

        self.assertTrue(state.truncated)
        self.assertEqual(len(state), 7)
        self.assertEqual(cover.verdict(state), complexes.BUDGET_EXCEEDED)

    def test_cover_graph_labels(self):
        state, _cover_complex = cover.unfold(flag_complex(generators.cycle(6)), 0, radius=1)
        graph, index = state.cover_graph()

        self.assertEqual(graph.label(index[state.root]), "0.0(0)")
        self.assertEqual(graph.order, 3)


class ExtendCoverTestCase(SimpleTestCase):
    def test_extension_is_a_copy(self):
        state = cover.init_cover(flag_complex(generators.cycle(6)), 0)
        extended = cover.extend_cover(state)

        self.assertEqual(state.level, 1)
        self.assertEqual(extended.level, 2)
        self.assertEqual(len(extended.levels[2]), 2)

    def test_stabilized_state_is_returned_as_is(self):
        state, _cover_complex = cover.unfold(flag_complex(generators.complete(3)), 0)

        self.assertTrue(state.is_stabilized)
        self.assertIs(cover.extend_cover(state), state)

    def test_squares_glue_couples(self):
        state = cover.init_cover(flag_complex(generators.hypercube(3)), 0)
        state = cover.extend_cover(state)

        self.assertEqual(len(state.levels[2]), 3)
        for vertex in state.levels[2]:
            self.assertEqual(len(state.vertices[vertex].provenance), 2)


class VerifyLevelTestCase(SimpleTestCase):
    def test_properties_hold(self):
        state = cover.extend_cover(cover.init_cover(flag_complex(generators.domino()), 0))

        self.assertEqual(list(cover.verify_level(state)), list(cover.PROPERTIES))
        self.assertTrue(all(cover.verify_level(state).values()))

    def test_corrupted_level(self):
        state = cover.extend_cover(cover.init_cover(flag_complex(generators.cycle(6)), 0))
        first, second = sorted(state.levels[2])
        state.add_edge(first, second)

        with self.assertRaises(CoverPropertyViolation) as context:
            cover.verify_level(state)
        self.assertEqual(context.exception.prop, "Q")
        self.assertFalse(context.exception.precondition_breach)


class CoveringMapTestCase(SimpleTestCase):
    def corpus(self):
        """
        (complex, radius) pairs: bucolic graphs unfold completely, cycles and a
        torus only up to the radius.
        """

        unfoldings = [
            (flag_complex(graph), None) for graph in mocks.bucolic_graphs() if graph.order >= 2
        ]
        unfoldings += [(flag_complex(generators.cycle(k)), 4) for k in (5, 6, 7)]
        unfoldings += [(flag_complex(generators.torus(5, 5)), 3)]
        return unfoldings

    def test_edges_map_to_edges(self):
        for index, (complex_, radius) in enumerate(self.corpus()):
            state, _cover_complex = cover.unfold(complex_, 0, radius=radius)
            for vertex, neighbours in state.adjacency.items():
                for other in neighbours:
                    with self.subTest(index=index, edge=(vertex, other)):
                        self.assertTrue(complex_.graph.adjacent(state.f[vertex], state.f[other]))

    def test_bijective_on_unit_balls(self):
        for index, (complex_, radius) in enumerate(self.corpus()):
            state, _cover_complex = cover.unfold(complex_, 0, radius=radius)
            unfolded = state.level if state.is_stabilized else state.level - 1
            for vertex, cover_vertex in state.vertices.items():
                if cover_vertex.level > unfolded:
                    continue
                ball = state.closed_neighbourhood(vertex)
                images = [state.f[other] for other in ball]
                image = state.f[vertex]
                with self.subTest(index=index, vertex=vertex):
                    self.assertEqual(len(set(images)), len(images))
                    self.assertEqual(set(images), complex_.graph.neighbours(image) | {image})

    def test_basepoint_does_not_matter(self):
        for index, (complex_, radius) in enumerate(self.corpus()):
            vertices = complex_.graph.vertices
            first, _complex = cover.unfold(complex_, vertices[0], radius=radius)
            second, _complex = cover.unfold(complex_, vertices[-1], radius=radius)
            with self.subTest(index=index):
                self.assertEqual(first.is_stabilized, second.is_stabilized)
                if first.is_stabilized:
                    self.assertTrue(is_isomorphic(first.cover_graph()[0], second.cover_graph()[0]))
                    self.assertTrue(is_isomorphic(first.cover_graph()[0], complex_.graph))
                else:
                    self.assertEqual(first.growth(), second.growth())


class SimpleConnectivityTestCase(SimpleTestCase):
    def test_flag_complexes_of_bucolic_graphs_are_simply_connected(self):
        for graph in (generators.hypercube(3), generators.wheel(5), generators.domino()):
            with self.subTest(graph=graph):
                self.assertEqual(complexes.is_simply_connected(flag_complex(graph)), complexes.YES)

    def test_cycles_are_not(self):
        self.assertEqual(
            complexes.is_simply_connected(flag_complex(generators.cycle(7))), complexes.NO
        )

    def test_budget(self):
        self.assertEqual(
            complexes.is_simply_connected(flag_complex(generators.cycle(12)), vertex_budget=4),
            complexes.BUDGET_EXCEEDED,
        )

    def test_disconnected_complex(self):
        with self.assertRaises(DisconnectedGraphError):
            complexes.is_simply_connected(flag_complex(Graph.from_edges([(0, 1), (2, 3)])))

    def test_agrees_with_bucolic_recognition(self):
        """
        A flag complex passing the local conditions is simply connected
        exactly when its graph is bucolic.
        """

        corpus = mocks.bucolic_graphs() + mocks.weakly_bridged_graphs()
        corpus += mocks.not_simply_connected_graphs()
        checked = 0
        for index, graph in enumerate(corpus):
            if graph.order < 2:
                continue
            complex_ = flag_complex(graph)
            if not complexes.local_conditions(complex_).passes:
                continue
            with self.subTest(index=index, graph=graph):
                answer = complexes.is_simply_connected(complex_)
                self.assertNotEqual(answer, complexes.BUDGET_EXCEEDED)
                self.assertEqual(answer == complexes.YES, recognition.is_bucolic(graph)[0])
            checked += 1
        self.assertGreaterEqual(checked, 50)
