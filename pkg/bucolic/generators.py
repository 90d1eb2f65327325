"""
Canonical labelled instances of the graph families used as a test corpus and
by the ``gen`` command.
"""
import itertools

import networkx as nx

from .graphs import Graph, cartesian_product
from .objects import InvalidParameterError


def _require(condition, message):
    if not condition:
        raise InvalidParameterError(message)


def cycle(k):
    """
    C_k on ids 0..k-1 in cyclic order.
    """

    _require(k >= 3, "cycle needs k >= 3, got {}".format(k))
    return Graph.from_networkx(nx.cycle_graph(k))


def path(k):
    """
    The path on k vertices (P4 is a-b-c-d), labelled a, b, c, ... when k <= 26.
    """

    _require(k >= 1, "path needs k >= 1, got {}".format(k))
    labels = None
    if k <= 26:
        labels = {vertex: chr(ord("a") + vertex) for vertex in range(k)}
    return Graph.from_edges(
        ((vertex, vertex + 1) for vertex in range(k - 1)),
        vertices=range(k),
        labels=labels,
    )


def complete(k):
    _require(k >= 1, "complete graph needs k >= 1, got {}".format(k))
    return Graph.from_networkx(nx.complete_graph(k))


def complete_bipartite(m, n):
    _require(m >= 1 and n >= 1, "complete bipartite graph needs m, n >= 1")
    return Graph.from_networkx(nx.complete_bipartite_graph(m, n))


def _wheel_labels(k):
    labels = {0: "c"}
    labels.update({vertex: "x{}".format(vertex) for vertex in range(1, k + 1)})
    return labels


def wheel(k):
    """
    W_k: hub ``c`` (id 0) joined to every vertex of the rim x1..xk (ids 1..k).
    """

    _require(k >= 3, "wheel needs k >= 3, got {}".format(k))
    return Graph.from_edges(nx.wheel_graph(k + 1).edges, labels=_wheel_labels(k))


def almost_wheel(k):
    """
    W_k minus the spoke c-x1.
    """

    _require(k >= 4, "almost wheel needs k >= 4, got {}".format(k))
    edges = [edge for edge in nx.wheel_graph(k + 1).edges if set(edge) != {0, 1}]
    return Graph.from_edges(edges, labels=_wheel_labels(k))


def extended_wheel():
    """
    W5 plus a vertex ``a`` adjacent to the consecutive rim vertices x1, x2.
    """

    labels = _wheel_labels(5)
    labels[6] = "a"
    return Graph.from_edges(
        list(nx.wheel_graph(6).edges) + [(6, 1), (6, 2)], labels=labels
    )


def hypercube(k):
    """
    Q_k with bit-string labels.
    """

    _require(k >= 0, "hypercube needs k >= 0, got {}".format(k))
    if k == 0:
        return complete(1)
    return Graph.from_networkx(nx.hypercube_graph(k))


def hamming(sizes):
    """
    The Cartesian product of complete graphs K_{n1} □ ... □ K_{nr}; vertices
    are coordinate tuples, adjacent when they differ in exactly one place.
    """

    sizes = list(sizes)
    _require(sizes, "hamming needs at least one clique size")
    _require(all(size >= 1 for size in sizes), "clique sizes must be >= 1")
    words = list(itertools.product(*(range(size) for size in sizes)))
    index = {word: position for position, word in enumerate(words)}
    edges = [
        (index[first], index[second])
        for first, second in itertools.combinations(words, 2)
        if sum(a != b for a, b in zip(first, second)) == 1
    ]
    separator = "" if all(size <= 10 for size in sizes) else ","
    return Graph.from_edges(
        edges,
        vertices=index.values(),
        labels={
            position: separator.join(str(part) for part in word)
            for word, position in index.items()
        },
        coordinates={position: word for word, position in index.items()},
    )


def grid(m, n):
    """
    P_m □ P_n.
    """

    _require(m >= 1 and n >= 1, "grid needs m, n >= 1")
    return Graph.from_networkx(nx.grid_2d_graph(m, n))


def torus(m, n):
    """
    C_m □ C_n.
    """

    return cartesian_product(cycle(m), cycle(n))


def domino():
    """
    K2 □ P3: two squares sharing the middle edge.
    """

    return grid(2, 3)


def house():
    """
    The square w-x-y-z with the triangle x-y-t on top.
    """

    return Graph.from_edges(
        [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (2, 4)],
        labels=dict(enumerate("wxyzt")),
    )


def diamond():
    """
    K4 minus an edge: the triangle a-b-c and a vertex d adjacent to a and b.
    """

    return Graph.from_edges(
        [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3)], labels=dict(enumerate("abcd"))
    )


def cogwheel():
    """
    CW3: centre o with spokes to a, b, c and three squares o-a-p-b, o-b-q-c
    and o-c-r-a.
    """

    return Graph.from_edges(
        [
            (0, 1), (0, 2), (0, 3),
            (1, 4), (4, 2),
            (2, 5), (5, 3),
            (3, 6), (6, 1),
        ],
        labels=dict(enumerate("oabcpqr")),
    )


FAMILIES = {
    "wheel": (wheel, 1),
    "almost-wheel": (almost_wheel, 1),
    "hypercube": (hypercube, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete": (complete, 1),
    "hamming": (hamming, None),
    "grid": (grid, 2),
    "complete-bipartite": (complete_bipartite, 2),
    "torus": (torus, 2),
    "domino": (domino, 0),
    "house": (house, 0),
    "diamond": (diamond, 0),
    "cogwheel": (cogwheel, 0),
    "extended-wheel": (extended_wheel, 0),
}


def generate(family, params=()):
    """
    Build a member of a named family from integer parameters; ``hamming``
    takes the whole parameter list as its clique sizes.

    :raises InvalidParameterError: for an unknown family or a wrong parameter count
    """

    if family not in FAMILIES:
        raise InvalidParameterError(
            "unknown family {!r}; choose from {}".format(
                family, ", ".join(sorted(FAMILIES))
            )
        )
    builder, arity = FAMILIES[family]
    params = [int(param) for param in params]
    if arity is None:
        return builder(params)
    _require(
        len(params) == arity,
        "{} takes {} parameter(s), got {}".format(family, arity, len(params)),
    )
    return builder(*params)
