"""
Triangle-square complexes: flag completion, the local conditions (flagness,
W4 and extended 5-wheels, W5, cube, house), bounded cube/prism conditions and
the simple-connectivity decision.
"""
import itertools
import logging
from collections import OrderedDict

import networkx as nx

from . import generators, patterns
from .graphs import require_connected
from .objects import BudgetExceededError, InvalidParameterError, PreconditionViolation
from .utils import get_setting, sorted_tuple

logger = logging.getLogger(__name__)

YES = "yes"
NO = "no"
BUDGET_EXCEEDED = "budget-exceeded"

FLAG = "flag"
W4_FREE = "w4-free"
W5HAT_WHEEL = "w5hat-wheel"
W5_FREE = "w5-free"
CUBE = "cube"
HOUSE = "house"

LOCAL_CONDITIONS = (FLAG, W4_FREE, W5HAT_WHEEL, W5_FREE, CUBE, HOUSE)


def canonical_square(cycle):
    """
    The lexicographically least rotation or reflection of a 4-cycle.
    """

    cycle = tuple(cycle)
    if len(cycle) != 4:
        raise InvalidParameterError("a square has 4 vertices, got {}".format(cycle))
    forms = []
    for shift in range(4):
        rotated = cycle[shift:] + cycle[:shift]
        forms.append(rotated)
        forms.append((rotated[0],) + tuple(reversed(rotated[1:])))
    return min(forms)


def canonical_triangle(triangle):
    return sorted_tuple(triangle)


def square_edges(square):
    return [frozenset((square[i], square[(i + 1) % 4])) for i in range(4)]


class TriangleSquareComplex:
    """
    A graph with explicit triangle and square cells. Triangles are stored as
    sorted triples, squares in canonical cyclic order.

    :raises InvalidParameterError: when a triangle is not a 3-clique or a square
        is not an induced 4-cycle of the graph
    """

    def __init__(self, graph, triangles=(), squares=()):
        self.graph = graph
        self.triangles = frozenset(canonical_triangle(cell) for cell in triangles)
        self.squares = frozenset(canonical_square(cell) for cell in squares)

        for cell in self.triangles:
            if len(set(cell)) != 3 or any(
                not graph.adjacent(a, b) for a, b in itertools.combinations(cell, 2)
            ):
                raise InvalidParameterError(
                    "triangle {} is not a 3-clique".format(graph.labels(cell))
                )
        for cell in self.squares:
            if len(set(cell)) != 4 or not _is_induced_square(graph, cell):
                raise InvalidParameterError(
                    "square {} is not an induced 4-cycle".format(graph.labels(cell))
                )

    def __repr__(self):
        return "<TriangleSquareComplex |V|={} triangles={} squares={}>".format(
            self.graph.order, len(self.triangles), len(self.squares)
        )

    @property
    def cells(self):
        return sorted(self.triangles) + sorted(self.squares)

    def has_square(self, cycle):
        return canonical_square(cycle) in self.squares

    def has_triangle(self, triangle):
        return canonical_triangle(triangle) in self.triangles

    def squares_at(self, vertex):
        return [cell for cell in sorted(self.squares) if vertex in cell]

    def without_cells(self, triangles=(), squares=()):
        """
        A copy with some cells removed (used to diagnose non-flag inputs).
        """

        drop_t = {canonical_triangle(cell) for cell in triangles}
        drop_s = {canonical_square(cell) for cell in squares}
        return TriangleSquareComplex(
            self.graph, self.triangles - drop_t, self.squares - drop_s
        )


def _is_induced_square(graph, cell):
    a, b, c, d = cell
    return (
        graph.adjacent(a, b)
        and graph.adjacent(b, c)
        and graph.adjacent(c, d)
        and graph.adjacent(d, a)
        and not graph.adjacent(a, c)
        and not graph.adjacent(b, d)
    )


class CellConfiguration:
    """
    A configuration of cells breaking a local condition. ``cells`` holds vertex
    tuples; their meaning depends on ``condition``:

    - ``flag``: the missing (or extra) cell
    - ``cube``: the three squares lacking a completing cube
    - ``house``: the triangle and the square lacking a completing prism
    - ``w5hat-wheel``: the extended 5-wheel without an apex
    - ``intersection``: two cells meeting outside a common face
    - ``hypercube`` / ``hyperhouse``: the cubes or the clique and cube
    """

    def __init__(self, condition, cells):
        self.condition = condition
        self.cells = tuple(tuple(cell) for cell in cells)

    def __eq__(self, other):
        if not isinstance(other, CellConfiguration):
            return NotImplemented
        return (self.condition, self.cells) == (other.condition, other.cells)

    def __hash__(self):
        return hash((self.condition, self.cells))

    def __repr__(self):
        return "<CellConfiguration {} {}>".format(self.condition, self.cells)

    @property
    def vertices(self):
        return sorted_tuple({vertex for cell in self.cells for vertex in cell})

    def describe(self, graph):
        return "{} condition fails at {}".format(
            self.condition,
            " ".join("({})".format(",".join(graph.labels(cell))) for cell in self.cells),
        )

    def replay(self, complex_):
        """
        True when the configuration still breaks its condition in ``complex_``.
        """

        graph = complex_.graph
        if self.condition == FLAG:
            (cell,) = self.cells
            present = (
                complex_.has_triangle(cell) if len(cell) == 3 else complex_.has_square(cell)
            )
            flag_cells = flag_complex(graph)
            expected = (
                flag_cells.has_triangle(cell) if len(cell) == 3 else flag_cells.has_square(cell)
            )
            return present != expected
        if self.condition == CUBE:
            return _cube_apex(complex_, *self.cells) is None
        if self.condition == HOUSE:
            return _house_apex(complex_, *self.cells) is None
        if self.condition == W5HAT_WHEEL:
            (wheel,) = self.cells
            occurrence = patterns.PatternOccurrence(patterns.EXTENDED_W5, wheel)
            return occurrence.replay(graph) and not _common_neighbours(graph, wheel)
        if self.condition == "intersection":
            return not _proper_intersection(*self.cells)
        return False


def flag_complex(graph):
    """
    All triangles and all induced 4-cycles of a graph as cells.

    :raises BudgetExceededError: beyond ``CELL_ENUMERATION_BUDGET`` cells
    :rtype: TriangleSquareComplex
    """

    budget = get_setting("CELL_ENUMERATION_BUDGET")
    triangles = set()
    squares = set()
    for first, second in graph.edges:
        for third in graph.neighbours(first) & graph.neighbours(second):
            if third > second:
                triangles.add((first, second, third))
    for first, second in itertools.combinations(graph.vertices, 2):
        if graph.adjacent(first, second):
            continue
        common = sorted(graph.neighbours(first) & graph.neighbours(second))
        for left, right in itertools.combinations(common, 2):
            if not graph.adjacent(left, right):
                squares.add(canonical_square((first, left, second, right)))
        if len(triangles) + len(squares) > budget:
            raise BudgetExceededError(
                "more than {} cells in the flag completion".format(budget)
            )
    return TriangleSquareComplex(graph, triangles, squares)


def is_flag(complex_):
    """
    True when the cells are exactly the triangles and induced 4-cycles.

    :return: (True, None) or (False, CellConfiguration naming a missing or
        extra cell)
    """

    flag_cells = flag_complex(complex_.graph)
    for missing in sorted(flag_cells.triangles - complex_.triangles):
        return False, CellConfiguration(FLAG, [missing])
    for missing in sorted(flag_cells.squares - complex_.squares):
        return False, CellConfiguration(FLAG, [missing])
    return True, None


def _proper_intersection(first, second):
    common = set(first) & set(second)
    if len(common) <= 1:
        return True
    if len(common) > 2:
        return False
    pair = frozenset(common)

    def is_edge_of(cell):
        if len(cell) == 3:
            return True
        return pair in square_edges(cell)

    return is_edge_of(first) and is_edge_of(second)


def cell_intersection_violation(complex_):
    """
    Two distinct cells meeting in something other than nothing, a vertex or a
    common edge, or None.

    :rtype: CellConfiguration or None
    """

    for first, second in itertools.combinations(complex_.cells, 2):
        if not _proper_intersection(first, second):
            return CellConfiguration("intersection", [first, second])
    return None


def _common_neighbours(graph, vertices):
    common = set(graph.vertices)
    for vertex in vertices:
        common &= graph.neighbours(vertex)
    return common - set(vertices)


def _cube_apex(complex_, first, second, third):
    """
    The vertex completing three squares around a vertex into a cube whose six
    faces are cells, or None.
    """

    graph = complex_.graph
    (centre,) = set(first) & set(second) & set(third)
    outer = []
    for square in (first, second, third):
        position = square.index(centre)
        outer.append(square[(position + 2) % 4])
    corners = sorted_tuple(set(first) | set(second) | set(third))
    for apex in sorted(_common_neighbours(graph, outer)):
        if apex in corners or graph.adjacent(apex, centre):
            continue
        cube = corners + (apex,)
        sub = graph.induced(cube)
        if sub.size != 12 or any(sub.degree(vertex) != 3 for vertex in cube):
            continue
        faces = flag_complex(sub).squares
        if len(faces) == 6 and all(complex_.has_square(face) for face in faces):
            return apex
    return None


def _square_triples(complex_):
    graph = complex_.graph
    for centre in graph.vertices:
        by_corners = OrderedDict()
        for square in complex_.squares_at(centre):
            position = square.index(centre)
            pair = sorted_tuple((square[(position + 1) % 4], square[(position + 3) % 4]))
            by_corners.setdefault(pair, []).append(square)
        neighbours = sorted({vertex for pair in by_corners for vertex in pair})
        for a, b, c in itertools.combinations(neighbours, 3):
            for first in by_corners.get((a, b), ()):
                for second in by_corners.get((b, c), ()):
                    for third in by_corners.get((a, c), ()):
                        if len(set(first) & set(second) & set(third)) == 1 and len(
                            set(first) | set(second) | set(third)
                        ) == 7:
                            yield first, second, third


def cube_condition(complex_):
    """
    Three squares pairwise sharing an edge and jointly a vertex lie in a
    3-cube whose faces are all cells.

    :return: (True, None) or (False, CellConfiguration of the three squares)
    """

    for triple in _square_triples(complex_):
        if _cube_apex(complex_, *triple) is None:
            return False, CellConfiguration(CUBE, triple)
    return True, None


def _house_apex(complex_, triangle, square):
    """
    For a triangle u-v-w and a square u-v-x-y sharing the edge uv, a vertex w'
    adjacent to w, x, y and not to u, v such that the prism faces are cells.
    """

    graph = complex_.graph
    shared = set(triangle) & set(square)
    (w,) = set(triangle) - shared
    position = [i for i in range(4) if square[i] in shared and square[(i + 1) % 4] in shared]
    if not position:
        return None
    i = position[0]
    u, v, x, y = (square[(i + k) % 4] for k in range(4))
    # u-v-x-y cyclic: v ~ x and u ~ y
    for apex in sorted(_common_neighbours(graph, (w, x, y))):
        if apex in (u, v) or graph.adjacent(apex, u) or graph.adjacent(apex, v):
            continue
        if (
            complex_.has_triangle((x, y, apex))
            and complex_.has_square((v, w, apex, x))
            and complex_.has_square((u, w, apex, y))
        ):
            return apex
    return None


def house_condition(complex_):
    """
    Every triangle and square sharing an edge lie in a 3-prism whose faces
    are cells.

    :return: (True, None) or (False, CellConfiguration of the triangle and square)
    """

    for triangle in sorted(complex_.triangles):
        for first, second in itertools.combinations(triangle, 2):
            for square in sorted(complex_.squares):
                if frozenset((first, second)) not in square_edges(square):
                    continue
                if set(triangle) & set(square) != {first, second}:
                    continue
                if _house_apex(complex_, triangle, square) is None:
                    return False, CellConfiguration(HOUSE, [triangle, square])
    return True, None


def w4_w5hat_condition(complex_):
    """
    No induced W4 and every induced extended 5-wheel has a vertex adjacent to
    all seven of its vertices.

    :return: (True, None) or (False, PatternOccurrence of a W4 or
        CellConfiguration of an unapexed extended 5-wheel)
    """

    graph = complex_.graph
    occurrence = patterns.first_occurrence(graph, patterns.W4)
    if occurrence is not None:
        return False, occurrence
    for wheel in patterns.find_induced(graph, patterns.EXTENDED_W5):
        if not _common_neighbours(graph, wheel):
            return False, CellConfiguration(W5HAT_WHEEL, [wheel])
    return True, None


class LocalConditionsReport:
    """
    Flags and certificates of the local conditions. ``passes`` covers the
    conditions required for the cover construction; ``w5-free`` is only
    needed for the strongly bucolic variant.
    """

    def __init__(self):
        self.flags = OrderedDict()
        self.certificates = OrderedDict()

    def record(self, name, flag, certificate):
        self.flags[name] = flag
        self.certificates[name] = certificate

    @property
    def passes(self):
        return all(flag for name, flag in self.flags.items() if name != W5_FREE)

    @property
    def passes_strongly(self):
        return all(self.flags.values())

    def first_failure(self):
        for name, flag in self.flags.items():
            if not flag and name != W5_FREE:
                return name, self.certificates[name]
        return None


def local_conditions(complex_):
    """
    Evaluate every local condition.

    :rtype: LocalConditionsReport
    """

    report = LocalConditionsReport()
    report.record(FLAG, *is_flag(complex_))
    w4 = patterns.first_occurrence(complex_.graph, patterns.W4)
    report.record(W4_FREE, w4 is None, w4)
    report.record(W5HAT_WHEEL, *w4_w5hat_condition(complex_))
    w5 = patterns.first_occurrence(complex_.graph, patterns.W5)
    report.record(W5_FREE, w5 is None, w5)
    report.record(CUBE, *cube_condition(complex_))
    report.record(HOUSE, *house_condition(complex_))
    return report


def require_local_conditions(complex_):
    """
    :raises PreconditionViolation: naming the first failed local condition
    """

    report = local_conditions(complex_)
    failure = report.first_failure()
    if failure is not None:
        name, certificate = failure
        detail = certificate.describe(complex_.graph) if certificate is not None else name
        raise PreconditionViolation(
            "local condition {} fails: {}".format(name, detail), certificate=certificate
        )
    return report


def _occurrence_sets(graph, pattern_graph, budget):
    found = set()
    for vertices in patterns.find_induced_graph(graph, pattern_graph):
        found.add(frozenset(vertices))
        if len(found) > budget:
            raise BudgetExceededError(
                "more than {} induced copies of a {}-vertex pattern".format(
                    budget, pattern_graph.order
                )
            )
    return sorted(found, key=sorted)


def hypercube_condition_bounded(graph, kmax=None, budget=None):
    """
    For k = 2..kmax: three induced k-cubes pairwise meeting in (k-1)-cubes and
    jointly in a (k-2)-cube lie in an induced (k+1)-cube.

    :raises InvalidParameterError: for kmax < 2
    :raises BudgetExceededError: when cube enumeration exceeds the budget
    :return: (True, None) or (False, CellConfiguration of the three cubes)
    """

    kmax = get_setting("HYPERCUBE_KMAX", kmax)
    budget = get_setting("CELL_ENUMERATION_BUDGET", budget)
    if kmax < 2:
        raise InvalidParameterError("kmax must be >= 2, got {}".format(kmax))
    cubes = {
        k: _occurrence_sets(graph, generators.hypercube(k), budget)
        for k in range(2, kmax + 2)
    }
    for k in range(2, kmax + 1):
        facet = 2 ** (k - 1)
        ridge = 2 ** (k - 2)
        sharing = {cube: [] for cube in cubes[k]}
        for first, second in itertools.combinations(cubes[k], 2):
            if len(first & second) == facet:
                sharing[first].append(second)
                sharing[second].append(first)
        for first in cubes[k]:
            for second, third in itertools.combinations(sharing[first], 2):
                if third not in sharing[second]:
                    continue
                if len(first & second & third) != ridge:
                    continue
                union = first | second | third
                if not any(union <= bigger for bigger in cubes[k + 1]):
                    return False, CellConfiguration(
                        "hypercube", [sorted(first), sorted(second), sorted(third)]
                    )
    return True, None


def hyperhouse_condition_bounded(graph, budget=None, kmax=None):
    """
    Every maximal clique (at least a triangle) and induced k-cube (k >= 2)
    meeting in exactly an edge lie in an induced Hamming graph K_m □ Q_(k-1).

    :raises BudgetExceededError: when enumeration exceeds the budget
    :return: (True, None) or (False, CellConfiguration of the clique and cube)
    """

    budget = get_setting("CELL_ENUMERATION_BUDGET", budget)
    kmax = get_setting("HYPERCUBE_KMAX", kmax)
    cliques = [
        frozenset(clique)
        for clique in nx.find_cliques(graph.to_networkx())
        if len(clique) >= 3
    ]
    if len(cliques) > budget:
        raise BudgetExceededError("more than {} maximal cliques".format(budget))
    prisms = {}
    for k in range(2, kmax + 1):
        for cube in _occurrence_sets(graph, generators.hypercube(k), budget):
            for clique in sorted(cliques, key=sorted):
                shared = clique & cube
                if len(shared) != 2 or not graph.adjacent(*shared):
                    continue
                key = (len(clique), k)
                if key not in prisms:
                    prisms[key] = _occurrence_sets(
                        graph, generators.hamming([len(clique)] + [2] * (k - 1)), budget
                    )
                union = clique | cube
                if not any(union <= prism for prism in prisms[key]):
                    return False, CellConfiguration(
                        "hyperhouse", [sorted(clique), sorted(cube)]
                    )
    return True, None


def is_simply_connected(complex_, vertex_budget=None):
    """
    Decide simple connectivity by unfolding the universal cover from the
    smallest vertex: ``yes`` when it stabilizes as a copy of the complex,
    ``no`` as soon as it has more vertices than the complex,
    ``budget-exceeded`` when the vertex budget runs out first.

    :raises PreconditionViolation: when a local condition fails
    :raises DisconnectedGraphError: on a disconnected complex
    """

    from .cover import extend_cover, init_cover

    budget = get_setting("COVER_VERTEX_BUDGET", vertex_budget)
    graph = complex_.graph
    require_connected(graph)
    state = init_cover(complex_, graph.vertices[0])
    while True:
        if len(state) > graph.order:
            logger.debug("cover exceeds the complex at level %d", state.level)
            return NO
        if state.is_stabilized:
            assert len(state) == graph.order
            return YES
        if len(state) > budget:
            return BUDGET_EXCEEDED
        state = extend_cover(state)
