"""
Finite groups of graph automorphisms and the search for an invariant prism:
orbit hulls shrink to a minimal invariant bucolic subgraph, peripheral
stripping reaches an invariant box, and orbit dismantling in the strong
product of its factors yields an invariant clique whose projections span the
prism.
"""
import itertools
import logging
from collections import OrderedDict
from fractions import Fraction

from networkx.algorithms.isomorphism import GraphMatcher

from . import recognition
from .decompose import factorize, peripheral_subgraphs
from .graphs import Graph
from .hulls import convex_hull
from .objects import (
    BudgetExceededError,
    InvalidParameterError,
    InvalidPermutationError,
    PreconditionViolation,
)
from .utils import get_setting, sorted_tuple

logger = logging.getLogger(__name__)


class GroupAction:
    """
    A finite set of automorphisms of ``graph``, each stored as a dict from
    vertex to image. The identity is always present.
    """

    def __init__(self, graph, elements):
        self.graph = graph
        identity = {vertex: vertex for vertex in graph.vertices}
        unique = OrderedDict([(self._key(identity), identity)])
        for element in elements:
            element = self._validate(element)
            unique.setdefault(self._key(element), element)
        self.elements = list(unique.values())

    def _key(self, element):
        return tuple(element[vertex] for vertex in self.graph.vertices)

    def _validate(self, element):
        element = dict(element)
        vertices = set(self.graph.vertices)
        if set(element) != vertices or set(element.values()) != vertices:
            raise InvalidPermutationError(
                "{} is not a permutation of the vertices".format(
                    [element.get(vertex) for vertex in self.graph.vertices]
                )
            )
        for first, second in self.graph.edges:
            if not self.graph.adjacent(element[first], element[second]):
                raise InvalidPermutationError(
                    "permutation maps the edge {}-{} to the non-edge {}-{}".format(
                        self.graph.label(first),
                        self.graph.label(second),
                        self.graph.label(element[first]),
                        self.graph.label(element[second]),
                    )
                )
        return element

    @classmethod
    def from_sequences(cls, graph, sequences, close=True, cap=None):
        """
        Build an action from image sequences: position i of a sequence is the
        image of the i-th vertex in id order.
        """

        elements = []
        for sequence in sequences:
            sequence = list(sequence)
            if len(sequence) != graph.order:
                raise InvalidPermutationError(
                    "permutation {} has {} entries for {} vertices".format(
                        sequence, len(sequence), graph.order
                    )
                )
            elements.append(dict(zip(graph.vertices, sequence)))
        if close:
            return cls.from_generators(graph, elements, cap=cap)
        return cls(graph, elements)

    @classmethod
    def from_generators(cls, graph, generators, cap=None):
        """
        The group generated by ``generators`` (closure under composition).

        :raises BudgetExceededError: when the group outgrows ``GROUP_CLOSURE_CAP``
        """

        cap = get_setting("GROUP_CLOSURE_CAP", cap)
        action = cls(graph, generators)
        generators = action.elements[1:]
        known = OrderedDict((action._key(element), element) for element in action.elements)
        frontier = list(known.values())
        while frontier:
            fresh = []
            for element in frontier:
                for generator in generators:
                    product = {vertex: generator[element[vertex]] for vertex in graph.vertices}
                    key = action._key(product)
                    if key not in known:
                        known[key] = product
                        fresh.append(product)
                        if len(known) > cap:
                            raise BudgetExceededError(
                                "group closure exceeds {} elements".format(cap)
                            )
            frontier = fresh
        action.elements = list(known.values())
        return action

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return "<GroupAction of order {} on {!r}>".format(len(self), self.graph)

    def sequences(self):
        return [list(self._key(element)) for element in self.elements]

    def is_closed(self):
        keys = {self._key(element) for element in self.elements}
        return all(
            self._key({vertex: second[first[vertex]] for vertex in self.graph.vertices}) in keys
            for first in self.elements
            for second in self.elements
        )

    def image(self, element, vertices):
        return frozenset(element[vertex] for vertex in vertices)

    def orbit(self, vertex):
        self.graph.check_vertex(vertex)
        return frozenset(element[vertex] for element in self.elements)

    def orbits(self):
        """
        The vertex orbits ordered by smallest member.
        """

        found = []
        seen = set()
        for vertex in self.graph.vertices:
            if vertex not in seen:
                orbit = self.orbit(vertex)
                seen |= orbit
                found.append(orbit)
        return found

    def is_invariant(self, vertices):
        vertices = frozenset(vertices)
        return all(self.image(element, vertices) == vertices for element in self.elements)

    def invariance_certificate(self, vertices):
        """
        For every element (by index) whether it maps ``vertices`` onto itself.
        """

        vertices = frozenset(vertices)
        return OrderedDict(
            (index, self.image(element, vertices) == vertices)
            for index, element in enumerate(self.elements)
        )

    def restrict(self, vertices):
        """
        The action on the subgraph induced by an invariant vertex set.

        :raises InvalidParameterError: when the set is not invariant
        """

        vertices = frozenset(vertices)
        if not self.is_invariant(vertices):
            raise InvalidParameterError(
                "{{{}}} is not invariant".format(",".join(self.graph.labels(sorted(vertices))))
            )
        sub = self.graph.induced(vertices)
        return GroupAction(
            sub,
            [{vertex: element[vertex] for vertex in vertices} for element in self.elements],
        )


def automorphisms(graph, cap=None):
    """
    Every automorphism of ``graph``, enumerated with VF2.

    :raises BudgetExceededError: beyond ``AUTOMORPHISM_CAP`` elements
    :rtype: GroupAction
    """

    cap = get_setting("AUTOMORPHISM_CAP", cap)
    nx_graph = graph.to_networkx()
    elements = []
    for mapping in GraphMatcher(nx_graph, nx_graph).isomorphisms_iter():
        elements.append(mapping)
        if len(elements) > cap:
            raise BudgetExceededError("more than {} automorphisms".format(cap))
    return GroupAction(graph, elements)


def _require_bucolic(graph):
    flag, certificate = recognition.is_bucolic(graph)
    if not flag:
        raise PreconditionViolation("graph is not bucolic", certificate=certificate)


def _check_action(graph, group):
    if set(group.graph.vertices) != set(graph.vertices):
        raise InvalidParameterError("the group does not act on this graph")


def invariant_bucolic_subgraph(graph, group, vertex):
    """
    The convex hull of the orbit of ``vertex``.

    :raises PreconditionViolation: on a graph that is not bucolic
    :rtype: frozenset
    """

    _require_bucolic(graph)
    _check_action(graph, group)
    hull = convex_hull(graph, group.orbit(vertex)).vertices
    assert group.is_invariant(hull), "orbit hull is not invariant"
    assert recognition.is_bucolic(graph.induced(hull))[0], "orbit hull is not bucolic"
    return hull


def minimal_invariant_subgraph(graph, group):
    """
    Shrink to the inclusion-smallest orbit hull and repeat inside it until
    every orbit hull is the whole current subgraph.

    :rtype: frozenset
    """

    _require_bucolic(graph)
    _check_action(graph, group)
    current = frozenset(graph.vertices)
    while True:
        sub = graph.induced(current)
        hulls = {
            convex_hull(sub, group.orbit(vertex) & current).vertices for vertex in sorted(current)
        }
        smallest = min(hulls, key=lambda hull: (len(hull), sorted(hull)))
        if smallest == current:
            logger.debug("minimal invariant subgraph %s", sorted(current))
            return current
        current = smallest


def invariant_box(graph, group):
    """
    Strip the union of all peripheral subgraphs until none is left; the
    remainder is an invariant gated box.

    :raises PreconditionViolation: on a graph that is not bucolic
    :rtype: frozenset
    """

    _check_action(graph, group)
    current = frozenset(graph.vertices)
    while True:
        sub = graph.induced(current)
        peripherals = peripheral_subgraphs(sub)
        if not peripherals:
            break
        stripped = frozenset().union(*(periphery for periphery, _sep, _rest in peripherals))
        logger.debug("stripping peripheral vertices %s", sorted(stripped))
        assert stripped != current, "peripheral stripping emptied the graph"
        current = current - stripped
    assert group.is_invariant(current), "box is not invariant"
    return current


def strong_product_of_factors(box):
    """
    The strong product of the prime factors of ``box`` drawn on its own
    vertices: two vertices are adjacent when each coordinate pair is equal or
    adjacent in its factor.

    :return: (Graph, Factorization)
    """

    factorization = factorize(box)
    coordinates = factorization.coordinates
    edges = []
    for first, second in itertools.combinations(box.vertices, 2):
        if all(
            a == b or factor.adjacent(a, b)
            for factor, a, b in zip(factorization.factors, coordinates[first], coordinates[second])
        ):
            edges.append((first, second))
    product = Graph.from_edges(
        edges,
        vertices=box.vertices,
        labels={vertex: box.label(vertex) for vertex in box.vertices},
        coordinates=dict(coordinates),
    )
    return product, factorization


def is_clique(graph, vertices):
    return all(graph.adjacent(a, b) for a, b in itertools.combinations(vertices, 2))


def is_prism(graph, vertices):
    """
    Whether ``vertices`` induce a Hamming graph (a product of complete graphs).
    """

    if not vertices:
        return False
    sub = graph.induced(vertices)
    if not sub.is_connected():
        return False
    factorization = factorize(sub)
    return all(
        factor.size == factor.order * (factor.order - 1) // 2 for factor in factorization.factors
    )


class PrismWitness:
    """
    An invariant prism.

    ...

    Attributes
    ----------
    factors : list of tuple
        the cliques, one per factor of the box, whose product is the prism
    vertices : frozenset
    certificate : OrderedDict
        group element index -> whether it maps the prism onto itself
    stalled : bool
        orbit dismantling got stuck and the brute-force search answered
    barycenter : OrderedDict
        uniform weights over the prism vertices, the combinatorial centre
    """

    def __init__(self, factors, vertices, certificate, stalled=False):
        self.factors = [sorted_tuple(factor) for factor in factors]
        self.vertices = frozenset(vertices)
        self.certificate = certificate
        self.stalled = stalled
        self.oracle_confirmed = None
        self.stages = OrderedDict()
        weight = Fraction(1, len(self.vertices))
        self.barycenter = OrderedDict((vertex, weight) for vertex in sorted(self.vertices))

    def __repr__(self):
        return "<PrismWitness {}>".format(sorted(self.vertices))

    @property
    def is_invariant(self):
        return all(self.certificate.values())

    def verify(self, graph, group):
        """
        :return: (bool, list of diagnostics)
        """

        diagnostics = []
        if not is_prism(graph, self.vertices):
            diagnostics.append("vertices do not induce a product of cliques")
        if not group.is_invariant(self.vertices):
            diagnostics.append("prism is not invariant")
        return not diagnostics, diagnostics


def _dismantle_orbits(product, group):
    remaining = set(product.vertices)
    while not is_clique(product, remaining):
        for vertex in sorted(remaining):
            orbit = group.orbit(vertex)
            if orbit == remaining:
                continue
            if all(
                _dominated_from_outside(product, member, remaining, orbit) for member in orbit
            ):
                logger.debug("removing orbit %s", sorted(orbit))
                remaining -= orbit
                break
        else:
            return None
    return frozenset(remaining)


def _dominated_from_outside(graph, vertex, remaining, orbit):
    closed = (graph.neighbours(vertex) & remaining) | {vertex}
    return any(
        closed <= (graph.neighbours(candidate) & remaining) | {candidate}
        for candidate in graph.neighbours(vertex) & (remaining - orbit)
    )


def invariant_prism(box, group):
    """
    An invariant prism of an invariant box.

    Whole orbits dominated from outside are deleted from the strong product
    of the factors until a clique remains; the prism is the product of the
    clique's projections onto the factors. When no orbit can be removed the
    stall is logged and the smallest prism from the brute-force search is
    used.

    :rtype: PrismWitness
    """

    _check_action(box, group)
    product, factorization = strong_product_of_factors(box)
    clique = _dismantle_orbits(product, group)
    if clique is None:
        logger.warning("orbit dismantling stalled on %r; using brute force", box)
        candidates = brute_force_invariant_prism(box, group)
        if not candidates:
            raise PreconditionViolation("no invariant prism in {!r}".format(box))
        witness = candidates[0]
        witness.stalled = True
        return witness

    projections = [
        frozenset(factorization.coordinates[vertex][position] for vertex in clique)
        for position in range(len(factorization))
    ]
    inverse = factorization.inverse()
    vertices = frozenset(inverse[coords] for coords in itertools.product(*projections))
    return PrismWitness(projections, vertices, group.invariance_certificate(vertices))


def brute_force_invariant_prism(graph, group, budget=None):
    """
    Every invariant prism, found among the unions of orbits.

    :raises BudgetExceededError: when there are more than ``budget``
        (``PRISM_ENUMERATION_BUDGET``) unions to test
    :return: list of PrismWitness sorted by size then content
    """

    budget = get_setting("PRISM_ENUMERATION_BUDGET", budget)
    orbits = group.orbits()
    if 2 ** len(orbits) > budget:
        raise BudgetExceededError(
            "{} orbits give more than {} candidate prisms".format(len(orbits), budget)
        )
    found = []
    for count in range(1, len(orbits) + 1):
        for chosen in itertools.combinations(orbits, count):
            vertices = frozenset().union(*chosen)
            if not is_prism(graph, vertices):
                continue
            factorization = factorize(graph.induced(vertices))
            factors = [factor.vertices for factor in factorization.factors]
            found.append(
                PrismWitness(factors, vertices, group.invariance_certificate(vertices))
            )
    found.sort(key=lambda witness: (len(witness.vertices), sorted(witness.vertices)))
    return found


def fixed_prism(graph_or_complex, group):
    """
    Run the whole pipeline: minimal invariant bucolic subgraph, invariant box,
    invariant prism. The prism's barycenter is the fixed point.

    On graphs with at most ``BRUTE_FORCE_CROSS_CHECK_LIMIT`` vertices and a
    group of at most that order the result is checked against the brute-force
    search and ``oracle_confirmed`` is set.

    :raises PreconditionViolation: on a graph that is not bucolic
    :rtype: PrismWitness
    """

    graph = getattr(graph_or_complex, "graph", graph_or_complex)
    _require_bucolic(graph)
    _check_action(graph, group)

    minimal = minimal_invariant_subgraph(graph, group)
    sub_group = group.restrict(minimal)
    box = invariant_box(sub_group.graph, sub_group)
    box_group = sub_group.restrict(box)
    witness = invariant_prism(box_group.graph, box_group)

    witness.certificate = group.invariance_certificate(witness.vertices)
    assert witness.is_invariant, "prism is not invariant"
    witness.stages["minimal"] = sorted_tuple(minimal)
    witness.stages["box"] = sorted_tuple(box)

    limit = get_setting("BRUTE_FORCE_CROSS_CHECK_LIMIT")
    if graph.order <= limit and len(group) <= limit:
        oracle = brute_force_invariant_prism(graph, group)
        witness.oracle_confirmed = any(
            candidate.vertices == witness.vertices for candidate in oracle
        )
        if not witness.oracle_confirmed:
            logger.warning("prism %s not among the brute-force prisms", sorted(witness.vertices))
    return witness
