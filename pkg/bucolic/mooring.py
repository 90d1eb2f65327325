"""
Moorings of a graph onto a basepoint: BFS and LexBFS spanning trees, the
geodesic 1-combing check along their father paths, and dismantling orders.
"""
import logging
from collections import OrderedDict, deque

from .graphs import require_connected

logger = logging.getLogger(__name__)

BFS = "bfs"
LEXBFS = "lexbfs"


class Mooring:
    """
    A father map onto ``base``: every other vertex points to a neighbour one
    step closer to the base.

    ...

    Attributes
    ----------
    base : vertex id
    father : OrderedDict
        vertex -> father, with ``father[base] == base``
    order : list
        the visit order of the search that produced the map
    method : str
        ``"bfs"``, ``"lexbfs"`` or ``"custom"``
    """

    def __init__(self, base, father, order=None, method="custom"):
        self.base = base
        self.father = OrderedDict(sorted(father.items()))
        self.order = list(order) if order is not None else list(self.father)
        self.method = method

    def __repr__(self):
        return "<Mooring {} onto {}>".format(self.method, self.base)

    def iterates(self, vertex):
        """
        The father path from ``vertex`` down to the base, both included.
        """

        path = [vertex]
        while path[-1] != self.base:
            path.append(self.father[path[-1]])
            if len(path) > len(self.father):
                raise ValueError("father map of {!r} has a cycle".format(self))
        return path

    def violation(self, graph):
        """
        The first vertex whose father is not a neighbour one step closer to the
        base, or None.
        """

        distances = graph.distances_from(self.base)
        if self.father.get(self.base) != self.base:
            return self.base
        for vertex in graph.vertices:
            parent = self.father.get(vertex)
            if vertex == self.base:
                continue
            if (
                parent is None
                or not graph.adjacent(vertex, parent)
                or distances[parent] != distances[vertex] - 1
            ):
                return vertex
        return None


def bfs_mooring(graph, base):
    """
    Breadth-first search from ``base`` with neighbours queued in id order;
    every vertex's father is the vertex that discovered it.

    :raises DisconnectedGraphError: on disconnected input
    :rtype: Mooring
    """

    require_connected(graph)
    graph.check_vertex(base)
    father = {base: base}
    order = []
    queue = deque([base])
    while queue:
        vertex = queue.popleft()
        order.append(vertex)
        for neighbour in sorted(graph.neighbours(vertex)):
            if neighbour not in father:
                father[neighbour] = vertex
                queue.append(neighbour)
    return Mooring(base, father, order, BFS)


def lexbfs_order(graph, base):
    """
    Lexicographic breadth-first order from ``base``.

    Visiting the i-th vertex appends ``n - i`` to the label of each unvisited
    neighbour; the next vertex is the one with the lexicographically largest
    label, ties going to the smallest id.
    """

    graph.check_vertex(base)
    labels = OrderedDict((vertex, []) for vertex in graph.vertices)
    labels[base] = [graph.order + 1]
    order = []
    while labels:
        vertex = max(labels, key=lambda candidate: (labels[candidate], -candidate))
        del labels[vertex]
        stamp = graph.order - len(order)
        order.append(vertex)
        for neighbour in graph.neighbours(vertex):
            if neighbour in labels:
                labels[neighbour].append(stamp)
    return order


def lexbfs_mooring(graph, base):
    """
    LexBFS from ``base``; the father of a vertex is its earliest visited
    neighbour that is closer to the base.

    :raises DisconnectedGraphError: on disconnected input
    :rtype: Mooring
    """

    require_connected(graph)
    order = lexbfs_order(graph, base)
    position = {vertex: index for index, vertex in enumerate(order)}
    distances = graph.distances_from(base)
    father = {base: base}
    for vertex in order[1:]:
        closer = [
            neighbour
            for neighbour in graph.neighbours(vertex)
            if distances[neighbour] == distances[vertex] - 1
        ]
        father[vertex] = min(closer, key=position.__getitem__)
    return Mooring(base, father, order, LEXBFS)


def moor(graph, base, method=LEXBFS):
    if method == BFS:
        return bfs_mooring(graph, base)
    return lexbfs_mooring(graph, base)


def verify_combing(graph, mooring):
    """
    Check that the father paths of the two ends of every edge stay at
    distance at most one step by step.

    :return: (True, None) or (False, offending edge); a father map that is not
        a mooring fails on (vertex, father)
    """

    broken = mooring.violation(graph)
    if broken is not None:
        return False, (broken, mooring.father.get(broken))
    paths = {vertex: mooring.iterates(vertex) for vertex in graph.vertices}
    for first, second in graph.edges:
        left, right = paths[first], paths[second]
        for step in range(max(len(left), len(right))):
            x = left[min(step, len(left) - 1)]
            y = right[min(step, len(right) - 1)]
            if x != y and not graph.adjacent(x, y):
                logger.debug(
                    "father paths of %s and %s split at step %d", first, second, step
                )
                return False, (first, second)
    return True, None


def dominator(graph, vertex, remaining):
    """
    The smallest remaining vertex other than ``vertex`` whose closed
    neighbourhood contains that of ``vertex``, or None.
    """

    closed = (graph.neighbours(vertex) & remaining) | {vertex}
    for candidate in sorted(graph.neighbours(vertex) & remaining):
        if closed <= (graph.neighbours(candidate) & remaining) | {candidate}:
            return candidate
    return None


def dismantling_order(graph):
    """
    Remove the smallest dominated vertex until one vertex remains.

    :return: the removal sequence (ending with the last vertex), or None when
        the graph is not dismantlable
    """

    remaining = set(graph.vertices)
    order = []
    while len(remaining) > 1:
        for vertex in sorted(remaining):
            if dominator(graph, vertex, remaining) is not None:
                remaining.discard(vertex)
                order.append(vertex)
                break
        else:
            logger.debug("no dominated vertex among %s", sorted(remaining))
            return None
    order.extend(remaining)
    return order
