"""
Finite simple graphs, the distance oracle, intervals, the triangle and
quadrangle conditions and Cartesian / strong products.
"""
import itertools
import logging

import networkx as nx

from .objects import DisconnectedGraphError, UnknownVertexError
from .utils import get_setting, sorted_tuple

logger = logging.getLogger(__name__)

SATISFIED = "satisfied"
VIOLATED = "violated"


class Graph:
    """
    An immutable finite simple undirected graph over opaque integer vertex ids.

    Input labels are kept in a side map for reporting. Distances are computed
    lazily per source and memoized; when the graph has at most
    ``DISTANCE_MATRIX_CAP`` vertices the first query fills the whole matrix.
    """

    def __init__(self, adjacency, labels=None, coordinates=None):
        """
        :param dict adjacency: vertex id -> iterable of neighbour ids
        :param dict labels: vertex id -> printable label (defaults to str(id))
        :param dict coordinates: vertex id -> tuple of factor vertices, set on
            graphs built as products
        """

        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(adjacency)
        for vertex, neighbours in adjacency.items():
            for neighbour in neighbours:
                if neighbour == vertex:
                    raise ValueError("loop at vertex {}".format(vertex))
                if neighbour not in adjacency:
                    raise UnknownVertexError(
                        "edge {}-{} names an unknown vertex".format(vertex, neighbour)
                    )
                nx_graph.add_edge(vertex, neighbour)

        self._nx = nx.freeze(nx_graph)
        self._vertices = sorted_tuple(nx_graph.nodes)
        self._neighbours = {
            vertex: frozenset(nx_graph.adj[vertex]) for vertex in self._vertices
        }
        self._labels = {
            vertex: str((labels or {}).get(vertex, vertex)) for vertex in self._vertices
        }
        self._ids = {label: vertex for vertex, label in self._labels.items()}
        self.coordinates = coordinates or {}
        self._distances = {}
        self._edges = None

    @classmethod
    def from_edges(cls, edges, vertices=(), labels=None, coordinates=None):
        """
        Build a graph from an iterable of vertex-id pairs.

        :param iterable edges: pairs of vertex ids
        :param iterable vertices: extra (possibly isolated) vertex ids
        :rtype: Graph
        """

        adjacency = {vertex: set() for vertex in vertices}
        for first, second in edges:
            adjacency.setdefault(first, set()).add(second)
            adjacency.setdefault(second, set()).add(first)
        return cls(adjacency, labels=labels, coordinates=coordinates)

    @classmethod
    def from_networkx(cls, nx_graph):
        """
        Relabel an arbitrary networkx graph onto integer ids 0..n-1 in the
        sorted order of its nodes, keeping the original nodes as labels.
        """

        try:
            nodes = sorted(nx_graph.nodes)
        except TypeError:
            nodes = sorted(nx_graph.nodes, key=repr)
        index = {node: position for position, node in enumerate(nodes)}
        return cls.from_edges(
            ((index[a], index[b]) for a, b in nx_graph.edges),
            vertices=range(len(nodes)),
            labels={position: _format_label(node) for node, position in index.items()},
        )

    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        if self._edges is None:
            self._edges = tuple(
                sorted(
                    (min(a, b), max(a, b)) for a, b in self._nx.edges
                )
            )
        return self._edges

    @property
    def order(self):
        return len(self._vertices)

    @property
    def size(self):
        return self._nx.number_of_edges()

    def __contains__(self, vertex):
        return vertex in self._neighbours

    def __len__(self):
        return len(self._vertices)

    def __iter__(self):
        return iter(self._vertices)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._neighbours == other._neighbours

    def __hash__(self):
        return hash((self._vertices, self.edges))

    def __repr__(self):
        return "<Graph |V|={} |E|={}>".format(self.order, self.size)

    def check_vertex(self, vertex):
        if vertex not in self._neighbours:
            raise UnknownVertexError("unknown vertex id {!r}".format(vertex))
        return vertex

    def neighbours(self, vertex):
        return self._neighbours[self.check_vertex(vertex)]

    def closed_neighbourhood(self, vertex):
        return self.neighbours(vertex) | {vertex}

    def adjacent(self, first, second):
        return second in self._neighbours[first]

    def label(self, vertex):
        return self._labels[vertex]

    def labels(self, vertices):
        return [self._labels[vertex] for vertex in vertices]

    def vertex_for(self, label):
        """
        Translate a printable label back into its vertex id.
        """

        label = str(label)
        if label not in self._ids:
            raise UnknownVertexError("unknown vertex {!r}".format(label))
        return self._ids[label]

    def to_networkx(self):
        """
        The frozen networkx graph backing this object (nodes are vertex ids).
        """

        return self._nx

    def degree(self, vertex):
        return len(self.neighbours(vertex))

    def distances_from(self, source):
        """
        Breadth-first distances from ``source``; vertices of other components
        are absent from the returned map.

        :param int source: A vertex id
        :return: vertex -> number of edges of a shortest path
        :rtype: dict
        """

        self.check_vertex(source)
        if source not in self._distances:
            if self.order <= get_setting("DISTANCE_MATRIX_CAP"):
                self._distances.update(
                    dict(nx.all_pairs_shortest_path_length(self._nx))
                )
            else:
                self._distances[source] = dict(
                    nx.single_source_shortest_path_length(self._nx, source)
                )
        return self._distances[source]

    def distance(self, first, second):
        """
        :raises DisconnectedGraphError: when no path joins the two vertices
        """

        self.check_vertex(second)
        distances = self.distances_from(first)
        if second not in distances:
            raise DisconnectedGraphError(
                "vertices {} and {} lie in different components".format(
                    self.label(first), self.label(second)
                )
            )
        return distances[second]

    def ball(self, centre, radius):
        return frozenset(
            vertex
            for vertex, dist in self.distances_from(centre).items()
            if dist <= radius
        )

    def is_connected(self):
        return self.order > 0 and nx.is_connected(self._nx)

    def components(self):
        """
        Vertex sets of the connected components, ordered by smallest vertex.
        """

        return sorted(
            (frozenset(component) for component in nx.connected_components(self._nx)),
            key=min,
        )

    def induced(self, vertices):
        """
        The subgraph induced by ``vertices``; ids and labels are preserved.

        :rtype: Graph
        """

        vertices = set(vertices)
        for vertex in vertices:
            self.check_vertex(vertex)
        return Graph(
            {vertex: self._neighbours[vertex] & vertices for vertex in vertices},
            labels={vertex: self._labels[vertex] for vertex in vertices},
            coordinates={
                vertex: self.coordinates[vertex]
                for vertex in vertices
                if vertex in self.coordinates
            },
        )

    def relabelled(self):
        """
        A copy whose ids are 0..n-1 in the order of the current ids, labels
        carried over. Returns the copy and the old -> new id map.
        """

        index = {vertex: position for position, vertex in enumerate(self._vertices)}
        graph = Graph.from_edges(
            ((index[a], index[b]) for a, b in self.edges),
            vertices=range(self.order),
            labels={index[vertex]: self._labels[vertex] for vertex in self._vertices},
        )
        return graph, index


class ConditionWitness:
    """
    Outcome of a local metric condition at a basepoint.

    For a violation ``vertices`` is the (v, w) pair of the triangle condition
    or the (v, w, z) triple of the quadrangle condition for which no vertex x
    exists. ``replay`` re-derives the failure from the graph.
    """

    def __init__(self, kind, vertices=(), condition=None, basepoint=None):
        self.kind = kind
        self.vertices = tuple(vertices)
        self.condition = condition
        self.basepoint = basepoint

    @classmethod
    def satisfied(cls, condition=None, basepoint=None):
        return cls(SATISFIED, condition=condition, basepoint=basepoint)

    @property
    def is_violated(self):
        return self.kind == VIOLATED

    def __bool__(self):
        return self.kind == SATISFIED

    def __eq__(self, other):
        if not isinstance(other, ConditionWitness):
            return NotImplemented
        return (self.kind, self.vertices, self.condition, self.basepoint) == (
            other.kind,
            other.vertices,
            other.condition,
            other.basepoint,
        )

    def __repr__(self):
        return "<ConditionWitness {} {} u={} {}>".format(
            self.condition, self.kind, self.basepoint, self.vertices
        )

    def replay(self, graph):
        """
        Check that the cited configuration really fails in ``graph``.

        :rtype: bool
        """

        if not self.is_violated:
            return False
        distances = graph.distances_from(self.basepoint)
        if self.condition == "TC":
            first, second = self.vertices
            return _triangle_premise(graph, distances, first, second) and not _closer_common_neighbours(
                graph, distances, first, second
            )
        if self.condition == "QC":
            first, second, apex = self.vertices
            return _quadrangle_premise(
                graph, distances, first, second, apex
            ) and not _closer_common_neighbours(graph, distances, first, second)
        return False

    def describe(self, graph):
        return "{}({}) fails at ({})".format(
            self.condition,
            graph.label(self.basepoint),
            ",".join(graph.labels(self.vertices)),
        )


def _format_label(node):
    if isinstance(node, tuple):
        parts = [_format_label(part) for part in node]
        if all(len(part) == 1 for part in parts):
            return "".join(parts)
        return ",".join(parts)
    return str(node)


def _closer_common_neighbours(graph, distances, first, second):
    target = distances[first] - 1
    return [
        vertex
        for vertex in graph.neighbours(first) & graph.neighbours(second)
        if distances.get(vertex) == target
    ]


def _triangle_premise(graph, distances, first, second):
    return (
        graph.adjacent(first, second)
        and first in distances
        and distances[first] == distances.get(second)
        and distances[first] >= 1
    )


def _quadrangle_premise(graph, distances, first, second, apex):
    return (
        first != second
        and not graph.adjacent(first, second)
        and graph.adjacent(first, apex)
        and graph.adjacent(second, apex)
        and first in distances
        and distances[first] == distances.get(second) == distances.get(apex, 0) - 1
        and distances[first] >= 1
    )


def distances_from(graph, source):
    """
    Shortest-path edge counts from ``source`` (unreachable vertices absent).
    """

    return dict(graph.distances_from(source))


def interval(graph, first, second):
    """
    I(u, v): the vertices lying on shortest (u, v)-paths.

    :raises DisconnectedGraphError: for a pair in different components
    :rtype: frozenset
    """

    total = graph.distance(first, second)
    from_first = graph.distances_from(first)
    from_second = graph.distances_from(second)
    return frozenset(
        vertex
        for vertex, dist in from_first.items()
        if dist + from_second.get(vertex, total + 1) == total
    )


def triangle_condition_at(graph, basepoint):
    """
    TC(u): every edge vw with d(u,v) = d(u,w) >= 1 has a common neighbour x
    with d(u,x) = d(u,v) - 1. Only the component of ``basepoint`` is scanned.

    :rtype: ConditionWitness
    """

    distances = graph.distances_from(basepoint)
    for first, second in graph.edges:
        if first not in distances or distances[first] != distances.get(second):
            continue
        if distances[first] == 0:
            continue
        if not _closer_common_neighbours(graph, distances, first, second):
            return ConditionWitness(
                VIOLATED, (first, second), condition="TC", basepoint=basepoint
            )
    return ConditionWitness.satisfied("TC", basepoint)


def quadrangle_condition_at(graph, basepoint):
    """
    QC(u): whenever 2 = d(v,w) <= d(u,v) = d(u,w) = d(u,z) - 1 for a common
    neighbour z of v and w, some common neighbour x of v and w has
    d(u,x) = d(u,v) - 1.

    :rtype: ConditionWitness
    """

    distances = graph.distances_from(basepoint)
    for apex in graph.vertices:
        level = distances.get(apex)
        if level is None or level < 2:
            continue
        lower = sorted(
            vertex
            for vertex in graph.neighbours(apex)
            if distances[vertex] == level - 1
        )
        for first, second in itertools.combinations(lower, 2):
            if graph.adjacent(first, second):
                continue
            if not _closer_common_neighbours(graph, distances, first, second):
                return ConditionWitness(
                    VIOLATED,
                    (first, second, apex),
                    condition="QC",
                    basepoint=basepoint,
                )
    return ConditionWitness.satisfied("QC", basepoint)


def require_connected(graph):
    if not graph.is_connected():
        raise DisconnectedGraphError(
            "graph has {} components; a connected graph is required".format(
                len(graph.components())
            )
        )


def is_weakly_modular(graph):
    """
    TC(u) and QC(u) at every vertex u.

    :return: (True, None) or (False, first violated ConditionWitness)
    :raises DisconnectedGraphError: on disconnected input
    """

    require_connected(graph)
    for basepoint in graph.vertices:
        for check in (triangle_condition_at, quadrangle_condition_at):
            witness = check(graph, basepoint)
            if witness.is_violated:
                logger.debug("weak modularity fails: %r", witness)
                return False, witness
    return True, None


def _product(first, second, rule):
    index = {}
    labels = {}
    coordinates = {}
    for a in first.vertices:
        for b in second.vertices:
            vertex = len(index)
            index[(a, b)] = vertex
            labels[vertex] = "({},{})".format(first.label(a), second.label(b))
            coordinates[vertex] = (a, b)
    edges = []
    for (a, b), vertex in index.items():
        for (c, d), other in index.items():
            if vertex < other and rule(a, b, c, d):
                edges.append((vertex, other))
    return Graph.from_edges(
        edges, vertices=index.values(), labels=labels, coordinates=coordinates
    )


def cartesian_product(first, second):
    """
    G1 □ G2: (a,b) ~ (c,d) iff they differ in exactly one coordinate and that
    coordinate pair is an edge.
    """

    return _product(
        first,
        second,
        lambda a, b, c, d: (a == c and second.adjacent(b, d))
        or (b == d and first.adjacent(a, c)),
    )


def strong_product(first, second):
    """
    G1 ⊠ G2: distinct pairs whose coordinates are pairwise equal or adjacent.
    """

    def rule(a, b, c, d):
        return (a == c or first.adjacent(a, c)) and (b == d or second.adjacent(b, d))

    return _product(first, second, rule)


def is_isomorphic(first, second):
    return nx.is_isomorphic(first.to_networkx(), second.to_networkx())


def components(graph):
    """
    The connected components as induced subgraphs, ordered by smallest vertex.
    """

    return [graph.induced(component) for component in graph.components()]


def induced_subgraph(graph, vertices):
    return graph.induced(vertices)
