from django.test import SimpleTestCase

from bucolic import complexes, generators
from bucolic.complexes import CellConfiguration, TriangleSquareComplex, flag_complex
from bucolic.objects import BudgetExceededError, InvalidParameterError, PreconditionViolation
from bucolic.patterns import PatternOccurrence


class TriangleSquareComplexTestCase(SimpleTestCase):
    def test_canonical_cells(self):
        self.assertEqual(complexes.canonical_square((2, 1, 0, 3)), (0, 1, 2, 3))
        self.assertEqual(complexes.canonical_square((3, 0, 1, 2)), (0, 1, 2, 3))
        self.assertEqual(complexes.canonical_triangle((5, 1, 3)), (1, 3, 5))
        with self.assertRaises(InvalidParameterError):
            complexes.canonical_square((0, 1, 2))

    def test_cells_must_exist(self):
        with self.assertRaises(InvalidParameterError):
            TriangleSquareComplex(generators.cycle(4), triangles=[(0, 1, 2)])
        with self.assertRaises(InvalidParameterError):
            TriangleSquareComplex(generators.complete(4), squares=[(0, 1, 2, 3)])

    def test_flag_complex(self):
        cube = flag_complex(generators.hypercube(3))
        self.assertEqual((len(cube.triangles), len(cube.squares)), (0, 6))
        self.assertTrue(cube.has_square((1, 0, 2, 3)))
        self.assertEqual(len(cube.squares_at(0)), 3)

        wheel = flag_complex(generators.wheel(5))
        self.assertEqual((len(wheel.triangles), len(wheel.squares)), (5, 0))

    def test_flag_completion_budget(self):
        with self.settings(CELL_ENUMERATION_BUDGET=3):
            with self.assertRaises(BudgetExceededError):
                flag_complex(generators.hypercube(3))

    def test_is_flag(self):
        cube = flag_complex(generators.hypercube(3))
        missing = sorted(cube.squares)[0]
        holed = cube.without_cells(squares=[missing])

        self.assertEqual(complexes.is_flag(cube), (True, None))
        flag, configuration = complexes.is_flag(holed)
        self.assertFalse(flag)
        self.assertEqual(configuration, CellConfiguration(complexes.FLAG, [missing]))
        self.assertTrue(configuration.replay(holed))
        self.assertFalse(configuration.replay(cube))

    def test_cell_intersection(self):
        graph = generators.complete_bipartite(2, 3)
        complex_ = TriangleSquareComplex(graph, squares=[(0, 2, 1, 3), (0, 2, 1, 4)])

        configuration = complexes.cell_intersection_violation(complex_)
        self.assertEqual(configuration.condition, "intersection")
        self.assertTrue(configuration.replay(complex_))
        self.assertIsNone(complexes.cell_intersection_violation(flag_complex(generators.domino())))


class LocalConditionsTestCase(SimpleTestCase):
    def test_cube_passes(self):
        report = complexes.local_conditions(flag_complex(generators.hypercube(3)))

        self.assertTrue(report.passes)
        self.assertTrue(report.passes_strongly)
        self.assertIsNone(report.first_failure())

    def test_w5_only_matters_for_the_strong_variant(self):
        report = complexes.local_conditions(flag_complex(generators.wheel(5)))

        self.assertTrue(report.passes)
        self.assertFalse(report.passes_strongly)
        self.assertIsInstance(report.certificates[complexes.W5_FREE], PatternOccurrence)

    def test_w4(self):
        report = complexes.local_conditions(flag_complex(generators.wheel(4)))

        self.assertFalse(report.passes)
        name, certificate = report.first_failure()
        self.assertEqual(name, complexes.W4_FREE)
        self.assertTrue(certificate.replay(generators.wheel(4)))

    def test_extended_wheel_without_apex(self):
        complex_ = flag_complex(generators.extended_wheel())

        flag, configuration = complexes.w4_w5hat_condition(complex_)
        self.assertFalse(flag)
        self.assertEqual(configuration.condition, complexes.W5HAT_WHEEL)
        self.assertTrue(configuration.replay(complex_))

    def test_cube_with_a_missing_corner(self):
        complex_ = flag_complex(generators.hypercube(3).induced(range(7)))

        flag, configuration = complexes.cube_condition(complex_)
        self.assertFalse(flag)
        self.assertEqual(configuration.condition, complexes.CUBE)
        self.assertEqual(len(configuration.cells), 3)
        self.assertEqual(configuration.vertices, tuple(range(7)))
        self.assertTrue(configuration.replay(complex_))

    def test_house(self):
        house = generators.house()
        complex_ = flag_complex(house)

        flag, configuration = complexes.house_condition(complex_)
        self.assertFalse(flag)
        self.assertEqual(configuration.cells, ((1, 2, 4), (0, 1, 2, 3)))
        self.assertTrue(configuration.replay(complex_))
        self.assertEqual(complexes.house_condition(flag_complex(generators.hamming([3, 2]))), (True, None))

    def test_require_local_conditions(self):
        with self.assertRaises(PreconditionViolation) as context:
            complexes.require_local_conditions(flag_complex(generators.house()))
        self.assertIn("house", str(context.exception.detail))


class BoundedConditionsTestCase(SimpleTestCase):
    def test_hypercube_condition(self):
        self.assertEqual(
            complexes.hypercube_condition_bounded(generators.hypercube(4), kmax=3), (True, None)
        )
        flag, configuration = complexes.hypercube_condition_bounded(
            generators.hypercube(3).induced(range(7)), kmax=2
        )
        self.assertFalse(flag)
        self.assertEqual(configuration.condition, "hypercube")

    def test_hypercube_condition_needs_kmax_two(self):
        with self.assertRaises(InvalidParameterError):
            complexes.hypercube_condition_bounded(generators.hypercube(3), kmax=1)

    def test_hyperhouse_condition(self):
        self.assertEqual(
            complexes.hyperhouse_condition_bounded(generators.hamming([3, 2, 2])), (True, None)
        )
        flag, configuration = complexes.hyperhouse_condition_bounded(generators.house())
        self.assertFalse(flag)
        self.assertEqual(configuration.cells, ((1, 2, 4), (0, 1, 2, 3)))
