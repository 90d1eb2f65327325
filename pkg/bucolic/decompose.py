"""
Cartesian prime factorization, gated separators, peripheral subgraphs and the
decomposition of bucolic graphs into gated amalgams of products of primes.
"""
import itertools
import logging
from collections import OrderedDict

import networkx as nx
from networkx.utils import UnionFind

from . import recognition
from .graphs import Graph, require_connected
from .hulls import fibers, gate, gated_hull, gated_sets, is_gated
from .objects import (
    BudgetExceededError,
    DecompositionError,
    Error,
    NotGatedError,
    PreconditionViolation,
)
from .utils import get_setting, sorted_tuple

logger = logging.getLogger(__name__)

VERTEX = "vertex"
EDGE = "edge"
WEAKLY_BRIDGED = "weakly-bridged"
BRIDGED = "bridged"

PRIME_TAGS = (VERTEX, EDGE, WEAKLY_BRIDGED, BRIDGED)


class Factorization:
    """
    Prime factors of a connected graph as its layers through the smallest
    vertex, with ``coordinates[x]`` the tuple of gates of x in those layers.
    """

    def __init__(self, factors, coordinates):
        self.factors = factors
        self.coordinates = coordinates

    def __len__(self):
        return len(self.factors)

    def inverse(self):
        return {coords: vertex for vertex, coords in self.coordinates.items()}


def _edge(first, second):
    return (first, second) if first < second else (second, first)


def product_classes(graph):
    """
    Edge classes of the relation generated by Djokovic-Winkler (Theta) and by
    tau (two edges xy, xz with y, z non-adjacent and x their only common
    neighbour).

    :return: list of edge lists, ordered by smallest edge
    """

    edges = list(graph.edges)
    classes = UnionFind(edges)
    for (x, y), (u, v) in itertools.combinations(edges, 2):
        if graph.distance(x, u) + graph.distance(y, v) != graph.distance(
            x, v
        ) + graph.distance(y, u):
            classes.union((x, y), (u, v))
    for vertex in graph.vertices:
        for first, second in itertools.combinations(sorted(graph.neighbours(vertex)), 2):
            if graph.adjacent(first, second):
                continue
            common = graph.neighbours(first) & graph.neighbours(second)
            if common == {vertex}:
                classes.union(_edge(vertex, first), _edge(vertex, second))
    return sorted((sorted(block) for block in classes.to_sets()), key=lambda block: block[0])


def _layer(graph, root, block):
    sub = nx.Graph()
    sub.add_node(root)
    sub.add_edges_from(block)
    return frozenset(nx.node_connected_component(sub, root))


def _verify_factorization(graph, layers, coordinates):
    if any(None in coords for coords in coordinates.values()):
        return False
    if len(set(coordinates.values())) != graph.order:
        return False
    expected = 1
    for layer in layers:
        expected *= len(layer)
    if expected != graph.order:
        return False
    size = 0
    for layer in layers:
        layer_edges = sum(1 for a, b in itertools.combinations(layer, 2) if graph.adjacent(a, b))
        size += layer_edges * expected // len(layer)
    if size != graph.size:
        return False
    for first, second in graph.edges:
        differing = [
            position
            for position in range(len(layers))
            if coordinates[first][position] != coordinates[second][position]
        ]
        if len(differing) != 1:
            return False
        position = differing[0]
        if not graph.adjacent(coordinates[first][position], coordinates[second][position]):
            return False
    return True


def factorize(graph):
    """
    :raises DisconnectedGraphError: on disconnected input
    :rtype: Factorization
    """

    require_connected(graph)
    root = graph.vertices[0]
    if graph.size == 0:
        return Factorization([graph], {root: (root,)})

    layers = [_layer(graph, root, block) for block in product_classes(graph)]
    layers.sort(key=lambda layer: (-len(layer), sorted(layer)))
    coordinates = OrderedDict(
        (vertex, tuple(gate(graph, layer, vertex) for layer in layers))
        for vertex in graph.vertices
    )
    if len(layers) > 1 and not _verify_factorization(graph, layers, coordinates):
        logger.warning("product classes of %r do not factor it; treating it as prime", graph)
        layers = [frozenset(graph.vertices)]
    if len(layers) == 1:
        coordinates = OrderedDict((vertex, (vertex,)) for vertex in graph.vertices)
    return Factorization([graph.induced(layer) for layer in layers], coordinates)


def cartesian_prime_factorization(graph):
    """
    The Cartesian prime factors of a connected graph (K1 and primes factor
    as themselves).

    :rtype: list of bucolic.graphs.Graph
    """

    return factorize(graph).factors


def _candidate_sets(graph, bound, exhaustive):
    cap = get_setting("GATED_SUBSET_ENUMERATION_CAP")
    if graph.order <= cap:
        return gated_sets(graph)[0]
    if exhaustive and graph.order > bound:
        raise BudgetExceededError(
            "exhaustive separator search refused: {} vertices > {}".format(
                graph.order, bound
            )
        )
    found = set()
    if graph.order <= bound:
        found.update(gated_sets(graph, exhaustive_cap=0)[0])
    for first, second in graph.edges:
        try:
            prime = gated_hull(graph, (first, second)).vertices
            partition = fibers(graph, prime)
        except Error:
            continue
        for (a, b), cross in partition.cross.items():
            found.add(partition.fibers[a])
            try:
                found.add(gated_hull(graph, partition.fibers[a] | partition.cross[(b, a)]).vertices)
            except Error:
                continue
    return sorted(
        (part for part in found if is_gated(graph, part)),
        key=lambda part: (len(part), sorted(part)),
    )


def _split(graph, side):
    """
    The amalgam (H0, G', G'') generated by a gated candidate G', or None.
    """

    everything = frozenset(graph.vertices)
    outside = everything - side
    if not side or not outside:
        return None
    try:
        gates = {gate(graph, side, vertex) for vertex in outside}
        if None in gates:
            return None
        core = gated_hull(graph, gates).vertices
        other = gated_hull(graph, outside | core).vertices
    except NotGatedError:
        return None
    separator = side & other
    if not separator or separator == side or other == everything:
        return None
    for first, second in graph.edges:
        if (first in side - separator and second in other - separator) or (
            second in side - separator and first in other - separator
        ):
            return None
    return separator, side, other


def find_gated_separators(graph, bound=None, exhaustive=False):
    """
    All gated amalgam splittings (H0, G', G'') with G' among the candidate
    gated sets: G' and G'' cover the graph, meet in H0, are gated and both
    strictly contain H0. Sorted by |G'| then content.

    Up to ``GATED_SUBSET_ENUMERATION_CAP`` vertices every gated set is a
    candidate. Up to ``bound`` (``SEPARATOR_SEARCH_BOUND``) hulls of small
    subsets are added to the sets derived from fibers of edge hulls; above it
    only the fiber route is used.

    :raises BudgetExceededError: when ``exhaustive`` is requested above ``bound``
    :rtype: list of tuple of frozenset
    """

    bound = get_setting("SEPARATOR_SEARCH_BOUND", bound)
    require_connected(graph)
    found = OrderedDict()
    for side in _candidate_sets(graph, bound, exhaustive):
        split = _split(graph, side)
        if split is not None:
            found.setdefault((split[0], split[1]), split)
    separators = sorted(found.values(), key=lambda split: (len(split[1]), sorted(split[1]), sorted(split[0])))
    logger.debug("%d gated separator(s) in %r", len(separators), graph)
    return separators


def is_box(graph):
    return not find_gated_separators(graph)


def _require_bucolic(graph):
    flag, certificate = recognition.is_bucolic(graph)
    if not flag:
        raise PreconditionViolation("graph is not bucolic", certificate=certificate)


def peripheral_subgraphs(graph, separators=None):
    """
    The peripheral subgraphs U' = G' - H0 of a bucolic graph: halves of a
    gated amalgam (minus the separator) containing no gated separator. Each
    is reported once with its smallest separator and G'' = V - U'.

    :raises PreconditionViolation: on a graph that is not bucolic
    :return: list of (U', H0, G''); empty for a box
    """

    _require_bucolic(graph)
    if separators is None:
        separators = find_gated_separators(graph)
    if not separators:
        logger.info("%r is a box: no peripheral subgraphs", graph)
        return []
    everything = frozenset(graph.vertices)
    found = OrderedDict()
    for separator, side, _other in separators:
        periphery = side - separator
        if any(candidate[0] <= periphery for candidate in separators):
            continue
        known = found.get(periphery)
        if known is None or (len(separator), sorted(separator)) < (len(known), sorted(known)):
            found[periphery] = separator
    return [
        (periphery, separator, everything - periphery)
        for periphery, separator in sorted(found.items(), key=lambda item: sorted(item[0]))
    ]


class Prime:
    """
    A leaf: an indecomposable graph tagged with its class.
    """

    kind = "prime"

    def __init__(self, graph, tag):
        self.graph = graph
        self.tag = tag

    def __repr__(self):
        return "Prime({}, {})".format(self.tag, list(self.graph.vertices))

    def leaves(self):
        return [self]


class Product:
    """
    A box: the Cartesian product of its children; ``coordinates`` maps each
    vertex of ``graph`` to the tuple of its images in the children.
    """

    kind = "product"

    def __init__(self, graph, children, coordinates):
        self.graph = graph
        self.children = children
        self.coordinates = coordinates

    def __repr__(self):
        return "Product({})".format(", ".join(repr(child) for child in self.children))

    def leaves(self):
        return [leaf for child in self.children for leaf in child.leaves()]


class Amalgam:
    """
    The gated amalgam of two subgraphs along their common gated separator.
    """

    kind = "amalgam"

    def __init__(self, graph, left, right, separator):
        self.graph = graph
        self.left = left
        self.right = right
        self.separator = frozenset(separator)

    def __repr__(self):
        return "Amalgam({!r}, {!r}; {})".format(self.left, self.right, sorted(self.separator))

    def leaves(self):
        return self.left.leaves() + self.right.leaves()


def prime_tag(graph):
    """
    The most specific class of an indecomposable graph, or None.
    """

    if graph.order == 1:
        return VERTEX
    if graph.order == 2 and graph.size == 1:
        return EDGE
    if not recognition.is_two_connected(graph):
        return None
    if recognition.is_bridged(graph)[0]:
        return BRIDGED
    if recognition.is_weakly_bridged(graph)[0]:
        return WEAKLY_BRIDGED
    return None


def _decompose(graph):
    separators = find_gated_separators(graph)
    if separators:
        separator, side, other = separators[0]
        logger.debug("amalgam of %s and %s along %s", sorted(side), sorted(other), sorted(separator))
        return Amalgam(
            graph,
            _decompose(graph.induced(side)),
            _decompose(graph.induced(other)),
            separator,
        )
    factorization = factorize(graph)
    if len(factorization) == 1:
        tag = prime_tag(graph)
        if tag is None:
            raise DecompositionError(
                "indecomposable subgraph {{{}}} is neither an edge nor 2-connected "
                "weakly bridged".format(",".join(graph.labels(graph.vertices)))
            )
        return Prime(graph, tag)
    return Product(
        graph,
        [_decompose(factor) for factor in factorization.factors],
        factorization.coordinates,
    )


def decompose_bucolic(graph):
    """
    Decompose a finite connected bucolic graph into gated amalgams of
    Cartesian products of primes (edges and 2-connected weakly bridged
    graphs). Vertex ids are those of the input throughout the tree.

    :raises PreconditionViolation: on a graph that is not bucolic
    :raises DecompositionError: when a leaf fails to classify
    """

    require_connected(graph)
    _require_bucolic(graph)
    return _decompose(graph)


def recompose(tree):
    """
    Rebuild the graph of a tree bottom-up: amalgams are unions and products
    are rebuilt from their children through the coordinates.

    :rtype: bucolic.graphs.Graph
    """

    if tree.kind == "prime":
        return tree.graph
    if tree.kind == "amalgam":
        left, right = recompose(tree.left), recompose(tree.right)
        labels = {vertex: left.label(vertex) for vertex in left.vertices}
        labels.update({vertex: right.label(vertex) for vertex in right.vertices})
        return Graph.from_edges(
            set(left.edges) | set(right.edges),
            vertices=set(left.vertices) | set(right.vertices),
            labels=labels,
        )
    children = [recompose(child) for child in tree.children]
    inverse = {coords: vertex for vertex, coords in tree.coordinates.items()}
    edges = []
    for coords, vertex in inverse.items():
        for position, child in enumerate(children):
            for neighbour in child.neighbours(coords[position]):
                other = coords[:position] + (neighbour,) + coords[position + 1:]
                if other in inverse and vertex < inverse[other]:
                    edges.append((vertex, inverse[other]))
    missing = [
        coords
        for coords in itertools.product(*(child.vertices for child in children))
        if coords not in inverse
    ]
    if missing:
        raise DecompositionError("product coordinates miss {}".format(missing[0]))
    return Graph.from_edges(
        edges,
        vertices=inverse.values(),
        labels={vertex: tree.graph.label(vertex) for vertex in inverse.values()},
    )


def _nodes(tree):
    yield tree
    if tree.kind == "amalgam":
        yield from _nodes(tree.left)
        yield from _nodes(tree.right)
    elif tree.kind == "product":
        for child in tree.children:
            yield from _nodes(child)


def verify_decomposition(tree, graph):
    """
    Recompose the tree and compare it with ``graph`` (same edges and
    isomorphic), check every leaf against its tag and every separator for
    gatedness in its recomposed parent.

    :return: (bool, list of diagnostic strings)
    """

    diagnostics = []
    try:
        rebuilt = recompose(tree)
    except Error as exc:
        return False, [str(exc.detail)]
    if set(rebuilt.vertices) != set(graph.vertices) or set(rebuilt.edges) != set(graph.edges):
        diagnostics.append("recomposed graph differs from the input")
    if not nx.is_isomorphic(rebuilt.to_networkx(), graph.to_networkx()):
        diagnostics.append("recomposed graph is not isomorphic to the input")

    for node in _nodes(tree):
        if node.kind == "prime":
            tag = prime_tag(node.graph)
            if node.tag != tag and not (node.tag == WEAKLY_BRIDGED and tag == BRIDGED):
                diagnostics.append(
                    "leaf {} fails its tag {}".format(sorted(node.graph.vertices), node.tag)
                )
        elif node.kind == "amalgam":
            parent = recompose(node)
            left = frozenset(recompose(node.left).vertices)
            right = frozenset(recompose(node.right).vertices)
            if left & right != node.separator:
                diagnostics.append(
                    "separator {} is not the intersection of its sides".format(
                        sorted(node.separator)
                    )
                )
            if not is_gated(parent, node.separator):
                diagnostics.append(
                    "separator {} is not gated".format(
                        ",".join(parent.labels(sorted(node.separator)))
                    )
                )
            for side in (left, right):
                if not is_gated(parent, side):
                    diagnostics.append("side {} is not gated".format(sorted(side)))
    return not diagnostics, diagnostics


def prime_subgraphs(graph):
    """
    The gated hulls of all edges, deduplicated, each with its prime tag
    (None when it classifies as neither an edge nor 2-connected weakly
    bridged).

    :return: list of (frozenset, tag) sorted by content
    """

    hulls = OrderedDict()
    for edge in graph.edges:
        hull = gated_hull(graph, edge).vertices
        if hull not in hulls:
            hulls[hull] = prime_tag(graph.induced(hull))
    return sorted(hulls.items(), key=lambda item: sorted(item[0]))


def serialize_tree(tree):
    """
    Nested records with vertex labels; leaves carry their edge lists.
    """

    graph = tree.graph
    if tree.kind == "prime":
        return OrderedDict(
            [
                ("kind", "prime"),
                ("tag", tree.tag),
                ("vertices", graph.labels(graph.vertices)),
                ("edges", [graph.labels(edge) for edge in graph.edges]),
            ]
        )
    if tree.kind == "product":
        return OrderedDict(
            [
                ("kind", "product"),
                ("vertices", graph.labels(graph.vertices)),
                ("factors", [serialize_tree(child) for child in tree.children]),
            ]
        )
    return OrderedDict(
        [
            ("kind", "amalgam"),
            ("separator", graph.labels(sorted_tuple(tree.separator))),
            ("left", serialize_tree(tree.left)),
            ("right", serialize_tree(tree.right)),
        ]
    )
