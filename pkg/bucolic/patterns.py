"""
Induced-pattern detection against a fixed catalogue of small reference graphs.
"""
import functools
import logging
from collections import namedtuple

from networkx.algorithms.isomorphism import GraphMatcher

from . import generators
from .graphs import Graph, cartesian_product
from .objects import InvalidParameterError

logger = logging.getLogger(__name__)


class PatternKind(namedtuple("PatternKind", ["tag", "k"])):
    """
    A forbidden or structural pattern. ``k`` is only set for the almost
    wheels W_k^-.
    """

    __slots__ = ()

    def __new__(cls, tag, k=None):
        return super().__new__(cls, tag, k)

    def __str__(self):
        if self.tag == "Wk_minus":
            return "W{}_minus".format(self.k)
        return self.tag

    @classmethod
    def almost_wheel(cls, k):
        if k < 4:
            raise InvalidParameterError("almost wheels need k >= 4, got {}".format(k))
        return cls("Wk_minus", k)

    @classmethod
    def parse(cls, name):
        """
        Inverse of ``str``: ``"K23"``, ``"W4_minus"``...
        """

        if name.endswith("_minus") and name.startswith("W"):
            return cls.almost_wheel(int(name[1:-len("_minus")]))
        if name not in TAGS:
            raise InvalidParameterError("unknown pattern {!r}".format(name))
        return cls(name)

    @property
    def reference_graph(self):
        return reference_graph(self)


TAGS = (
    "K23",
    "C4",
    "C5",
    "W4",
    "W5",
    "Wk_minus",
    "ExtendedW5",
    "House",
    "TwinHouse",
    "DoubleHouse",
    "Cogwheel3",
    "TriangularPrism",
    "DoublePrism",
)

K23 = PatternKind("K23")
C4 = PatternKind("C4")
C5 = PatternKind("C5")
W4 = PatternKind("W4")
W5 = PatternKind("W5")
W4_MINUS = PatternKind.almost_wheel(4)
EXTENDED_W5 = PatternKind("ExtendedW5")
HOUSE = PatternKind("House")
TWIN_HOUSE = PatternKind("TwinHouse")
DOUBLE_HOUSE = PatternKind("DoubleHouse")
COGWHEEL3 = PatternKind("Cogwheel3")
TRIANGULAR_PRISM = PatternKind("TriangularPrism")
DOUBLE_PRISM = PatternKind("DoublePrism")


def _twin_house():
    # u v x1 x2 y1 y2 w
    return Graph.from_edges(
        [(0, 1), (1, 3), (3, 2), (2, 0), (1, 5), (5, 4), (4, 0), (1, 6), (6, 3), (6, 5)],
        labels=dict(enumerate(["u", "v", "x1", "x2", "y1", "y2", "w"])),
    )


def _double_house():
    # triangle u v w, squares x-y-v-u and x-u-w-z
    return Graph.from_edges(
        [(0, 1), (1, 2), (2, 0), (3, 4), (4, 1), (0, 3), (2, 5), (5, 3)],
        labels=dict(enumerate("uvwxyz")),
    )


_BUILDERS = {
    "K23": lambda kind: generators.complete_bipartite(2, 3),
    "C4": lambda kind: generators.cycle(4),
    "C5": lambda kind: generators.cycle(5),
    "W4": lambda kind: generators.wheel(4),
    "W5": lambda kind: generators.wheel(5),
    "Wk_minus": lambda kind: generators.almost_wheel(kind.k),
    "ExtendedW5": lambda kind: generators.extended_wheel(),
    "House": lambda kind: generators.house(),
    "TwinHouse": lambda kind: _twin_house(),
    "DoubleHouse": lambda kind: _double_house(),
    "Cogwheel3": lambda kind: generators.cogwheel(),
    "TriangularPrism": lambda kind: generators.hamming([3, 2]),
    "DoublePrism": lambda kind: cartesian_product(
        generators.diamond(), generators.complete(2)
    ),
}


@functools.lru_cache(maxsize=None)
def reference_graph(kind):
    """
    The reference graph of a pattern, built once per pattern.

    :param PatternKind kind: The pattern
    :rtype: bucolic.graphs.Graph
    """

    return _BUILDERS[kind.tag](kind)


class PatternOccurrence:
    """
    An induced copy of a pattern: ``vertices[i]`` is the image of reference
    vertex ``i``.
    """

    def __init__(self, pattern, vertices):
        self.pattern = pattern
        self.vertices = tuple(vertices)

    def __eq__(self, other):
        if not isinstance(other, PatternOccurrence):
            return NotImplemented
        return (self.pattern, self.vertices) == (other.pattern, other.vertices)

    def __hash__(self):
        return hash((self.pattern, self.vertices))

    def __repr__(self):
        return "<PatternOccurrence {} {}>".format(self.pattern, self.vertices)

    def replay(self, graph):
        """
        True when the cited vertices still induce the pattern in ``graph``.
        """

        reference = reference_graph(self.pattern)
        for (i, first), (j, second) in _pairs(enumerate(self.vertices)):
            if reference.adjacent(i, j) != graph.adjacent(first, second):
                return False
        return len(set(self.vertices)) == reference.order

    def describe(self, graph):
        return "induced {} on {}".format(
            self.pattern, ",".join(graph.labels(self.vertices))
        )


def _pairs(items):
    items = list(items)
    for position, first in enumerate(items):
        for second in items[position + 1:]:
            yield first, second


def find_induced_graph(graph, pattern_graph, first_only=False):
    """
    Every vertex set of ``graph`` inducing a copy of ``pattern_graph``.

    Each occurrence is reported once, as the lexicographically least tuple
    ``t`` with ``t[i]`` the image of the i-th reference vertex; the list is
    sorted. With ``first_only`` the search stops at the first embedding found.

    :rtype: list of tuple
    """

    if pattern_graph.order > graph.order:
        return []
    reference_ids = pattern_graph.vertices
    matcher = GraphMatcher(graph.to_networkx(), pattern_graph.to_networkx())
    best = {}
    for mapping in matcher.subgraph_isomorphisms_iter():
        inverse = {reference: vertex for vertex, reference in mapping.items()}
        occurrence = tuple(inverse[reference] for reference in reference_ids)
        key = frozenset(occurrence)
        if key not in best or occurrence < best[key]:
            best[key] = occurrence
        if first_only:
            break
    return sorted(best.values())


def find_induced(graph, pattern, first_only=False):
    """
    Exhaustive induced search for one catalogue pattern.

    :param bucolic.graphs.Graph graph: The host graph
    :param PatternKind pattern: The pattern to look for
    :param bool first_only: Stop at the first occurrence
    :return: Vertex tuples, each inducing the pattern; empty when there is none
    :rtype: list of tuple
    """

    occurrences = find_induced_graph(graph, reference_graph(pattern), first_only)
    logger.debug("%s: %d induced occurrence(s) in %r", pattern, len(occurrences), graph)
    return occurrences


def first_occurrence(graph, pattern):
    """
    The first occurrence as a PatternOccurrence, or None.
    """

    occurrences = find_induced(graph, pattern, first_only=True)
    if not occurrences:
        return None
    return PatternOccurrence(pattern, occurrences[0])
