"""
Level-by-level construction of the universal cover of a triangle-square
complex.

Level 0 is the basepoint and level 1 its closed neighbourhood. Level i+1 is
built from the couples ``(w, z)`` where ``w`` lies on level i and ``z`` is a
neighbour of its image not yet seen around ``w``. Two couples with the same
``z`` are identified when their first members are equal or adjacent, or
span a square cell of the base together with ``z`` and a common neighbour on
level i-1. Each class becomes a new vertex mapped to ``z``.
"""
import itertools
import logging
from collections import OrderedDict, deque, namedtuple

from networkx.utils import UnionFind

from .complexes import (
    BUDGET_EXCEEDED,
    NO,
    YES,
    canonical_square,
    canonical_triangle,
    flag_complex,
    local_conditions,
    require_local_conditions,
)
from .graphs import Graph, quadrangle_condition_at, triangle_condition_at
from .objects import CoverConsistencyError, CoverPropertyViolation
from .utils import get_setting

logger = logging.getLogger(__name__)

PROPERTIES = ("P", "Q", "R", "S", "T")
UNDECIDED = "undecided"


class CoupleConflict(namedtuple("CoupleConflict", ["first", "second"])):
    """
    Two couples ``((level, index), z)`` put in one class without being
    directly related.
    """

    @staticmethod
    def couple_label(couple, base_graph):
        (level, index), image = couple
        return "({}.{}, {})".format(level, index, base_graph.label(image))

    def describe(self, base_graph):
        return "couples {} and {} are identified but not related".format(
            self.couple_label(self.first, base_graph),
            self.couple_label(self.second, base_graph),
        )


class CoverVertex:
    """
    A vertex of the cover: ``id`` is ``(level, index)``; ``provenance`` is
    None on levels 0 and 1 and otherwise the sorted couples of its class.
    """

    __slots__ = ("id", "level", "image", "provenance")

    def __init__(self, id, level, image, provenance=None):
        self.id = id
        self.level = level
        self.image = image
        self.provenance = provenance

    def __repr__(self):
        return "<CoverVertex {}.{} -> {}>".format(self.id[0], self.id[1], self.image)

    def label(self, base_graph):
        return "{}.{}({})".format(self.id[0], self.id[1], base_graph.label(self.image))


class CoverState:
    """
    The cover built so far: ``levels[j]`` is the set of ids at distance j from
    the basepoint, ``adjacency`` the cover graph and ``f`` the map to base
    vertices.
    """

    def __init__(self, base, basepoint):
        self.base = base
        self.basepoint = basepoint
        self.vertices = OrderedDict()
        self.levels = []
        self.adjacency = {}
        self.f = {}
        self.is_stabilized = False
        self.truncated = False

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return "<CoverState level={} |V|={}{}>".format(
            self.level, len(self), " stabilized" if self.is_stabilized else ""
        )

    @property
    def level(self):
        return len(self.levels) - 1

    @property
    def root(self):
        return (0, 0)

    def add_vertex(self, vertex):
        self.vertices[vertex.id] = vertex
        self.adjacency[vertex.id] = set()
        self.f[vertex.id] = vertex.image
        while len(self.levels) <= vertex.level:
            self.levels.append(set())
        self.levels[vertex.level].add(vertex.id)

    def add_edge(self, first, second):
        self.adjacency[first].add(second)
        self.adjacency[second].add(first)

    def copy(self):
        clone = CoverState(self.base, self.basepoint)
        clone.vertices = OrderedDict(self.vertices)
        clone.levels = [set(level) for level in self.levels]
        clone.adjacency = {vertex: set(nbrs) for vertex, nbrs in self.adjacency.items()}
        clone.f = dict(self.f)
        clone.is_stabilized = self.is_stabilized
        clone.truncated = self.truncated
        return clone

    def ball(self, radius):
        """
        The ids of levels 0..radius.
        """

        members = set()
        for level in self.levels[: radius + 1]:
            members |= level
        return members

    def closed_neighbourhood(self, vertex):
        return self.adjacency[vertex] | {vertex}

    def growth(self):
        """
        |B_r| for r = 0..level.
        """

        sizes = []
        total = 0
        for level in self.levels:
            total += len(level)
            sizes.append(total)
        return sizes

    def cover_graph(self):
        """
        The cover graph on ids 0..n-1 (in cover-id order) with labels
        ``level.class(image label)``. Returns the graph and the cover-id -> id map.
        """

        order = sorted(self.vertices)
        index = {vertex: position for position, vertex in enumerate(order)}
        graph = Graph.from_edges(
            (
                (index[first], index[second])
                for first in order
                for second in self.adjacency[first]
                if first < second
            ),
            vertices=range(len(order)),
            labels={
                index[vertex]: self.vertices[vertex].label(self.base.graph)
                for vertex in order
            },
        )
        return graph, index


def init_cover(complex_, basepoint):
    """
    Levels 0 and 1: the basepoint and its neighbours with the induced edges,
    mapped identically.

    :raises PreconditionViolation: when the complex fails a local condition
    :rtype: CoverState
    """

    require_local_conditions(complex_)
    graph = complex_.graph
    graph.check_vertex(basepoint)
    state = CoverState(complex_, basepoint)
    state.add_vertex(CoverVertex((0, 0), 0, basepoint))
    ids = {basepoint: (0, 0)}
    for position, neighbour in enumerate(sorted(graph.neighbours(basepoint))):
        ids[neighbour] = (1, position)
        state.add_vertex(CoverVertex((1, position), 1, neighbour))
    for first, second in itertools.combinations(sorted(ids), 2):
        if graph.adjacent(first, second):
            state.add_edge(ids[first], ids[second])
    return state


def _couples(state):
    graph = state.base.graph
    couples = []
    for vertex in sorted(state.levels[state.level]):
        seen = {state.f[other] for other in state.closed_neighbourhood(vertex)}
        for image in sorted(graph.neighbours(state.f[vertex]) - seen):
            couples.append((vertex, image))
    return couples


def _related(state, first, second):
    """
    The generating relation on couples (equal images plus adjacency or a
    square through a common lower neighbour).
    """

    (left, image), (right, other) = first, second
    if image != other:
        return False
    if left == right or right in state.adjacency[left]:
        return True
    below = state.level - 1
    for middle in state.adjacency[left] & state.adjacency[right]:
        if state.vertices[middle].level <= below and state.base.has_square(
            (state.f[middle], state.f[left], image, state.f[right])
        ):
            return True
    return False


def extend_cover(state):
    """
    Append one level to a copy of ``state``. When there are no couples the copy
    is marked stabilized and no level is added.

    :raises CoverConsistencyError: when two couples of one class are not
        directly related (the base violates the local conditions)
    :rtype: CoverState
    """

    if state.is_stabilized:
        return state
    couples = _couples(state)
    state = state.copy()
    if not couples:
        state.is_stabilized = True
        logger.debug("cover stabilized at level %d with %d vertices", state.level, len(state))
        return state

    classes = UnionFind(couples)
    by_image = OrderedDict()
    for couple in couples:
        by_image.setdefault(couple[1], []).append(couple)
    for group in by_image.values():
        for first, second in itertools.combinations(group, 2):
            if _related(state, first, second):
                classes.union(first, second)

    blocks = sorted(sorted(block) for block in classes.to_sets())
    for block in blocks:
        for first, second in itertools.combinations(block, 2):
            if not _related(state, first, second):
                conflict = CoupleConflict(first, second)
                raise CoverConsistencyError(
                    conflict.describe(state.base.graph), certificate=conflict
                )

    level = state.level + 1
    class_of = {}
    for index, block in enumerate(blocks):
        vertex = CoverVertex((level, index), level, block[0][1], tuple(block))
        state.add_vertex(vertex)
        for couple in block:
            class_of[couple] = vertex.id
            state.add_edge(couple[0], vertex.id)

    graph = state.base.graph
    by_owner = OrderedDict()
    for couple in couples:
        by_owner.setdefault(couple[0], []).append(couple)
    for owned in by_owner.values():
        for first, second in itertools.combinations(owned, 2):
            if graph.adjacent(first[1], second[1]):
                if class_of[first] != class_of[second]:
                    state.add_edge(class_of[first], class_of[second])

    logger.debug("cover level %d: %d new vertices", level, len(blocks))
    return state


def _violation(state, prop, detail, witness):
    breach = not local_conditions(state.base).passes
    return CoverPropertyViolation(
        "property {} fails at level {}: {}".format(prop, state.level, detail),
        prop,
        witness=witness,
        precondition_breach=breach,
    )


def _bfs_levels(state):
    distances = {state.root: 0}
    queue = deque([state.root])
    while queue:
        vertex = queue.popleft()
        for other in sorted(state.adjacency[vertex]):
            if other not in distances:
                distances[other] = distances[vertex] + 1
                queue.append(other)
    return distances


def _local_isomorphism_failure(state, vertex, onto_base_ball):
    """
    None when f maps the closed neighbourhood of ``vertex`` isomorphically onto
    its image (onto the whole base ball when ``onto_base_ball``), otherwise
    the offending cover vertices.
    """

    graph = state.base.graph
    ball = sorted(state.closed_neighbourhood(vertex))
    images = [state.f[member] for member in ball]
    if len(set(images)) != len(images):
        return tuple(ball)
    if onto_base_ball and set(images) != graph.closed_neighbourhood(state.f[vertex]):
        return tuple(ball)
    for first, second in itertools.combinations(ball, 2):
        if (second in state.adjacency[first]) != graph.adjacent(
            state.f[first], state.f[second]
        ):
            return (first, second)
    return None


def verify_level(state):
    """
    Check the five level properties of the current level:

    - P: the cover sphere of radius j around the basepoint is level j
    - Q: the triangle and quadrangle conditions hold at the basepoint
    - R: f is a local isomorphism onto base balls around levels < i
    - S: base squares on a cover edge below level i lift to cover squares
    - T: f is injective and edge-faithful around level i

    :raises CoverPropertyViolation: with the witnessing configuration
    :return: property -> True
    :rtype: collections.OrderedDict
    """

    report = OrderedDict()
    current = state.level
    base = state.base

    distances = _bfs_levels(state)
    for vertex, cover_vertex in state.vertices.items():
        if distances.get(vertex) != cover_vertex.level:
            raise _violation(
                state, "P", "vertex {} sits at distance {}".format(vertex, distances.get(vertex)), (vertex,)
            )
    report["P"] = True

    graph, index = state.cover_graph()
    for check in (triangle_condition_at, quadrangle_condition_at):
        witness = check(graph, index[state.root])
        if witness.is_violated:
            raise _violation(state, "Q", witness.describe(graph), witness)
    report["Q"] = True

    lower = sorted(state.ball(current - 1)) if current >= 1 else []
    for vertex in lower:
        failure = _local_isomorphism_failure(state, vertex, onto_base_ball=True)
        if failure is not None:
            raise _violation(state, "R", "around {}".format(vertex), failure)
    report["R"] = True

    for first in lower:
        for second in sorted(state.adjacency[first]):
            if second not in lower or second < first:
                continue
            witness = _square_lift_failure(state, first, second)
            if witness is not None:
                raise _violation(state, "S", "on edge {}-{}".format(first, second), witness)
    report["S"] = True

    for vertex in sorted(state.levels[current]):
        failure = _local_isomorphism_failure(state, vertex, onto_base_ball=False)
        if failure is not None:
            raise _violation(state, "T", "around {}".format(vertex), failure)
    report["T"] = True
    return report


def _square_lift_failure(state, first, second):
    base = state.base
    w, w_prime = state.f[first], state.f[second]
    for square in base.squares:
        if w not in square or w_prime not in square:
            continue
        position = square.index(w)
        if square[(position + 1) % 4] == w_prime:
            u, u_prime = square[(position + 2) % 4], square[(position + 3) % 4]
        elif square[(position + 3) % 4] == w_prime:
            u, u_prime = square[(position + 2) % 4], square[(position + 1) % 4]
        else:
            continue
        # square w - w' - u - u'
        lifts_u = [other for other in state.adjacency[second] if state.f[other] == u]
        lifts_u_prime = [other for other in state.adjacency[first] if state.f[other] == u_prime]
        if not any(
            b in state.adjacency[a]
            and a not in state.adjacency[first]
            and b not in state.adjacency[second]
            for a in lifts_u
            for b in lifts_u_prime
        ):
            return (first, second, u, u_prime)
    return None


def _star(cells, vertex):
    return {cell for cell in cells if vertex in cell}


def _star_failure(state, cover_complex, index, vertex):
    """
    None when f maps the cells through a cover vertex bijectively onto the
    cells through its image.
    """

    inverse = {position: cover_id for cover_id, position in index.items()}
    position = index[vertex]
    image = state.f[vertex]

    def project(cell):
        return tuple(state.f[inverse[member]] for member in cell)

    cover_triangles = _star(cover_complex.triangles, position)
    cover_squares = _star(cover_complex.squares, position)
    images_t = {canonical_triangle(project(cell)) for cell in cover_triangles}
    images_s = {canonical_square(project(cell)) for cell in cover_squares}
    if len(images_t) != len(cover_triangles) or len(images_s) != len(cover_squares):
        return (vertex,)
    if images_t != _star(state.base.triangles, image):
        return (vertex,)
    if images_s != _star(state.base.squares, image):
        return (vertex,)
    return None


def unfold(complex_, basepoint, radius=None, vertex_budget=None):
    """
    Unfold the cover up to ``radius`` levels, until it stabilizes, or until it
    has more than ``vertex_budget`` vertices (then ``state.truncated`` is set).

    Every level is checked with ``verify_level`` when ``VERIFY_COVER_LEVELS``
    is on. The cover complex is the flag completion of the cover graph; the
    star of every vertex at least two levels below the last one (every vertex
    once stabilized) must map isomorphically onto the star of its image.

    :return: (CoverState, TriangleSquareComplex of the cover)
    """

    budget = get_setting("COVER_VERTEX_BUDGET", vertex_budget)
    verify = get_setting("VERIFY_COVER_LEVELS")
    state = init_cover(complex_, basepoint)
    if verify:
        verify_level(state)
    while not state.is_stabilized and (radius is None or state.level < radius):
        if len(state) > budget:
            state.truncated = True
            logger.warning(
                "cover unfolding stopped at level %d: %d vertices exceed the budget %d",
                state.level,
                len(state),
                budget,
            )
            break
        state = extend_cover(state)
        if verify and not state.is_stabilized:
            verify_level(state)

    graph, index = state.cover_graph()
    cover_complex = flag_complex(graph)
    interior = state.level if state.is_stabilized else state.level - 2
    for vertex, cover_vertex in state.vertices.items():
        if cover_vertex.level <= interior:
            failure = _local_isomorphism_failure(
                state, vertex, onto_base_ball=True
            ) or _star_failure(state, cover_complex, index, vertex)
            if failure is not None:
                raise _violation(state, "star", "around {}".format(vertex), failure)
    return state, cover_complex


def verdict(state):
    """
    What an unfolded cover says about simple connectivity: ``yes`` once it
    stabilizes with as many vertices as the complex, ``no`` once it has more,
    ``budget-exceeded`` when truncated, ``undecided`` otherwise.
    """

    order = state.base.graph.order
    if len(state) > order:
        return NO
    if state.is_stabilized:
        return YES
    if state.truncated:
        return BUDGET_EXCEEDED
    return UNDECIDED
