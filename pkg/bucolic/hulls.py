"""
Convexity, gates, gated sets and hulls, and the fibers of a gated set.
"""
import itertools
import logging
from collections import OrderedDict, namedtuple

import networkx as nx

from . import patterns
from .graphs import interval, is_weakly_modular
from .objects import (
    BudgetExceededError,
    Error,
    InvalidParameterError,
    NotGatedError,
    PreconditionViolation,
)
from .recognition import is_bridged, is_two_connected, is_weakly_bridged
from .utils import get_setting, sorted_tuple

logger = logging.getLogger(__name__)


class HullResult:
    """
    A hull and how it was reached: ``closure_trace`` lists
    ``(round, vertices added)`` with round 0 holding the seed.
    """

    def __init__(self, vertices, closure_trace):
        self.vertices = frozenset(vertices)
        self.closure_trace = [(round_, sorted_tuple(added)) for round_, added in closure_trace]

    def __contains__(self, vertex):
        return vertex in self.vertices

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(sorted(self.vertices))

    def __repr__(self):
        return "<HullResult {} in {} round(s)>".format(
            sorted(self.vertices), len(self.closure_trace)
        )

    def replay(self):
        """
        The union of the trace; equals ``vertices`` for a well-formed result.
        """

        replayed = set()
        for _round, added in self.closure_trace:
            replayed.update(added)
        return frozenset(replayed)


class FiberPartition:
    """
    The fibers of a gated set ``base``: ``fibers[a]`` holds the vertices whose
    gate is ``a``, ``boundary[a]`` those with a neighbour in another fiber and
    ``cross[(a, b)]`` those with a neighbour in F_b, for adjacent a, b.
    """

    def __init__(self, base, fibers, boundary, cross):
        self.base = frozenset(base)
        self.fibers = fibers
        self.boundary = boundary
        self.cross = cross

    def fiber_of(self, vertex):
        for anchor, fiber in self.fibers.items():
            if vertex in fiber:
                return anchor
        return None


FiberComplementedResult = namedtuple(
    "FiberComplementedResult", ["holds", "certificate", "bounded", "caveat"]
)


def _check_subset(graph, vertices):
    vertices = frozenset(vertices)
    for vertex in vertices:
        graph.check_vertex(vertex)
    return vertices


def is_convex(graph, vertices):
    """
    True when every interval between two members stays inside.

    :return: (True, None) or (False, (u, v, x)) with x in I(u,v) outside the set
    """

    vertices = _check_subset(graph, vertices)
    for first, second in itertools.combinations(sorted(vertices), 2):
        outside = interval(graph, first, second) - vertices
        if outside:
            return False, (first, second, min(outside))
    return True, None


def convex_hull(graph, vertices):
    """
    The least convex superset, by interval closure to a fixpoint. Each round
    only pairs involving a vertex added by the previous round are expanded.

    :raises InvalidParameterError: on an empty set
    :raises DisconnectedGraphError: when the set spans several components
    :rtype: HullResult
    """

    vertices = _check_subset(graph, vertices)
    if not vertices:
        raise InvalidParameterError("the convex hull of an empty set is undefined")
    hull = set(vertices)
    trace = [(0, vertices)]
    fresh = set(vertices)
    round_ = 0
    while fresh:
        round_ += 1
        added = set()
        for first in sorted(fresh):
            for second in sorted(hull):
                if first != second:
                    added |= interval(graph, first, second) - hull
        hull |= added
        fresh = added
        if added:
            trace.append((round_, added))
    return HullResult(hull, trace)


def gate(graph, vertices, vertex):
    """
    The vertex of the set lying on shortest paths from ``vertex`` to every
    member, or None.

    :raises InvalidParameterError: on an empty set
    """

    vertices = _check_subset(graph, vertices)
    graph.check_vertex(vertex)
    if not vertices:
        raise InvalidParameterError("gates are taken in a nonempty set")
    if vertex in vertices:
        return vertex
    distances = graph.distances_from(vertex)
    if any(member not in distances for member in vertices):
        return None
    nearest = min(distances[member] for member in vertices)
    gates = [
        candidate
        for candidate in sorted(vertices)
        if distances[candidate] == nearest
        and all(
            nearest + graph.distances_from(candidate)[member] == distances[member]
            for member in vertices
        )
    ]
    assert len(gates) <= 1, "gate of {} is not unique".format(vertex)
    return gates[0] if gates else None


def gate_failure(graph, vertices):
    """
    Why a set is not gated: ``"empty"``, ``"disconnected"`` or the smallest
    outside vertex without a gate. None when the set is gated.
    """

    vertices = _check_subset(graph, vertices)
    if not vertices:
        return "empty"
    if not nx.is_connected(graph.to_networkx().subgraph(vertices)):
        return "disconnected"
    for vertex in graph.vertices:
        if vertex not in vertices and gate(graph, vertices, vertex) is None:
            return vertex
    return None


def is_gated(graph, vertices):
    """
    Every outside vertex has a gate (the set must induce a connected subgraph).

    :rtype: bool
    """

    return gate_failure(graph, vertices) is None


def _require_gated(graph, vertices, what):
    failure = gate_failure(graph, vertices)
    if failure is not None:
        reason = failure if isinstance(failure, str) else "no gate for {}".format(
            graph.label(failure)
        )
        raise NotGatedError(
            "{} {{{}}} is not gated: {}".format(
                what, ",".join(graph.labels(sorted(vertices))), reason
            ),
            certificate=failure,
        )


def _two_neighbour_closure(graph, seed, trace):
    """
    Add, round by round, every outside vertex with at least two neighbours
    inside. Two inside neighbours of a vertex are at distance 1 or 2, so this
    is closure under triangles on inside edges and under common neighbours of
    inside pairs at distance 2.
    """

    inside = set(seed)
    round_ = trace[-1][0] if trace else 0
    while True:
        added = sorted(
            vertex
            for vertex in graph.vertices
            if vertex not in inside and len(graph.neighbours(vertex) & inside) >= 2
        )
        if not added:
            return inside
        round_ += 1
        inside.update(added)
        trace.append((round_, added))
        logger.debug("closure round %d added %s", round_, added)


def gated_hull_of_triangle(graph, triangle):
    """
    The twin-ball hull of a triangle: the least set containing it and closed
    under adding vertices with two neighbours inside.

    The graph must be weakly modular without induced W4 and W4^-. The result
    is checked gated, 2-connected and weakly bridged, and bridged when the
    graph has no induced W5.

    :raises PreconditionViolation: naming the failed condition or the
        forbidden occurrence
    :rtype: HullResult
    """

    triangle = _check_subset(graph, triangle)
    if len(triangle) != 3 or any(
        not graph.adjacent(a, b) for a, b in itertools.combinations(triangle, 2)
    ):
        raise InvalidParameterError(
            "{{{}}} is not a triangle".format(",".join(graph.labels(sorted(triangle))))
        )

    modular, witness = is_weakly_modular(graph)
    if not modular:
        raise PreconditionViolation(
            "graph not weakly modular: {}".format(witness.describe(graph)),
            certificate=witness,
        )
    for pattern in (patterns.W4, patterns.W4_MINUS):
        occurrence = patterns.first_occurrence(graph, pattern)
        if occurrence is not None:
            raise PreconditionViolation(
                "graph contains an {}".format(occurrence.describe(graph)),
                certificate=occurrence,
            )

    trace = [(0, triangle)]
    hull = _two_neighbour_closure(graph, triangle, trace)

    _require_gated(graph, hull, "triangle hull")
    sub = graph.induced(hull)
    if not is_two_connected(sub):
        raise PreconditionViolation("triangle hull is not 2-connected")
    flag, certificate = is_weakly_bridged(sub)
    if not flag:
        raise PreconditionViolation(
            "triangle hull is not weakly bridged", certificate=certificate
        )
    if patterns.first_occurrence(graph, patterns.W5) is None:
        flag, certificate = is_bridged(sub)
        if not flag:
            raise PreconditionViolation(
                "triangle hull of a W5-free graph is not bridged",
                certificate=certificate,
            )
    return HullResult(hull, trace)


def gated_hull(graph, vertices):
    """
    Gated hull of an arbitrary nonempty set in a weakly modular graph: the
    convex hull of the set closed under triangles on inside edges and common
    neighbours of inside pairs at distance 2. The result is verified gated.

    :raises NotGatedError: when the closure is not gated (the graph is then
        not weakly modular)
    :rtype: HullResult
    """

    seed = convex_hull(graph, vertices)
    trace = list(seed.closure_trace)
    hull = _two_neighbour_closure(graph, seed.vertices, trace)
    _require_gated(graph, hull, "closure")
    return HullResult(hull, trace)


def gate_map(graph, vertices):
    """
    vertex -> gate for every vertex of a gated set's component.

    :raises NotGatedError: when some vertex has no gate
    """

    vertices = _check_subset(graph, vertices)
    _require_gated(graph, vertices, "set")
    return OrderedDict((vertex, gate(graph, vertices, vertex)) for vertex in graph.vertices)


def fibers(graph, vertices):
    """
    Partition the vertices by their gate in a gated set.

    :raises NotGatedError: on a set that is not gated
    :rtype: FiberPartition
    """

    gates = gate_map(graph, vertices)
    base = frozenset(vertices)
    members = OrderedDict((anchor, set()) for anchor in sorted(base))
    for vertex, anchor in gates.items():
        members[anchor].add(vertex)
    members = OrderedDict((anchor, frozenset(fiber)) for anchor, fiber in members.items())

    boundary = OrderedDict()
    for anchor, fiber in members.items():
        boundary[anchor] = frozenset(
            vertex
            for vertex in fiber
            if any(gates[other] != anchor for other in graph.neighbours(vertex))
        )

    cross = OrderedDict()
    for first, second in itertools.permutations(sorted(base), 2):
        if graph.adjacent(first, second):
            cross[(first, second)] = frozenset(
                vertex
                for vertex in members[first]
                if any(gates[other] == second for other in graph.neighbours(vertex))
            )
    return FiberPartition(base, members, boundary, cross)


def gated_sets(graph, exhaustive_cap=None):
    """
    Candidate gated sets, sorted by size then content.

    Up to ``GATED_SUBSET_ENUMERATION_CAP`` vertices every connected vertex
    subset is tested, which is exact. Above it the gated hulls of all subsets
    of at most three vertices are used; exotic gated sets may be missed.

    :return: (list of frozenset, exact flag)
    """

    cap = get_setting("GATED_SUBSET_ENUMERATION_CAP", exhaustive_cap)
    found = set()
    if graph.order <= cap:
        for size in range(1, graph.order + 1):
            for subset in itertools.combinations(graph.vertices, size):
                if is_gated(graph, subset):
                    found.add(frozenset(subset))
        exact = True
    else:
        for size in (1, 2, 3):
            for subset in itertools.combinations(graph.vertices, size):
                try:
                    found.add(gated_hull(graph, subset).vertices)
                except Error as exc:
                    logger.debug("no gated hull for %s: %s", subset, exc)
        exact = False
    return sorted(found, key=lambda part: (len(part), sorted(part))), exact


def is_fiber_complemented(graph, bound=None):
    """
    Bounded check that all fibers of all gated sets are gated.

    :raises BudgetExceededError: above ``bound`` vertices (``FIBER_CHECK_BOUND``)
    :return: FiberComplementedResult; the certificate of a failure is
        ``(gated set, anchor)`` for a fiber that is not gated
    """

    bound = get_setting("FIBER_CHECK_BOUND", bound)
    if graph.order > bound:
        raise BudgetExceededError(
            "bounded fiber check refused: {} vertices > {}".format(graph.order, bound)
        )
    caveat = None
    if graph.is_connected() and not is_weakly_modular(graph)[0]:
        caveat = "graph is not weakly modular; the fiber check is descriptive only"
        logger.warning(caveat)

    candidates, exact = gated_sets(graph)
    for candidate in candidates:
        partition = fibers(graph, candidate)
        for anchor, fiber in partition.fibers.items():
            if not is_gated(graph, fiber):
                return FiberComplementedResult(
                    False, (candidate, anchor), not exact, caveat
                )
    return FiberComplementedResult(True, None, not exact, caveat)


def convex_ball_filtration(graph, centre):
    """
    conv(B_k(centre)) for k = 0 .. eccentricity(centre), an increasing chain
    ending in the component of ``centre``.

    :rtype: list of frozenset
    """

    distances = graph.distances_from(centre)
    chain = []
    for radius in range(max(distances.values()) + 1):
        chain.append(convex_hull(graph, graph.ball(centre, radius)).vertices)
    return chain
