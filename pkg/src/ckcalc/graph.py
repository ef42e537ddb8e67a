"""Finite directed graphs with a range/source edge convention.

A finite path w1 w2 ... wn satisfies range(w[i+1]) == source(w[i]); paths
extend on the right, so the continuations of a path are the edges whose
range equals the source of its last edge.  "No sources" means every vertex
is the range of at least one edge, which is what keeps the infinite path
space over every vertex nonempty.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BadInputError, InvalidGraphError


@dataclass(frozen=True)
class Edge:
    id: str
    range: str
    source: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    no_source_violations: tuple = ()
    isolated_vertices: tuple = ()
    order_violations: tuple = ()

    def as_json_obj(self):
        return {
            "ok": self.ok,
            "no_source_violations": list(self.no_source_violations),
            "isolated_vertices": list(self.isolated_vertices),
            "order_violations": list(self.order_violations),
        }


class Graph:
    """Immutable vertex/edge structure with the derived lookup maps."""

    def __init__(self, vertices, edges):
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        vset = set()
        for v in self.vertices:
            if not isinstance(v, str) or not v:
                raise InvalidGraphError("vertex ids must be nonempty strings")
            if v in vset:
                raise InvalidGraphError("duplicate vertex id %r" % v)
            vset.add(v)
        self.vertex_set = frozenset(vset)
        self.edge_by_id = {}
        self._in = {v: [] for v in self.vertices}
        self._out = {v: [] for v in self.vertices}
        for e in self.edges:
            if e.id in self.edge_by_id:
                raise InvalidGraphError("duplicate edge id %r" % e.id)
            if e.range not in vset or e.source not in vset:
                raise InvalidGraphError("edge %r touches unknown vertex" % e.id)
            self.edge_by_id[e.id] = e
            self._in[e.range].append(e)
            self._out[e.source].append(e)

    def in_edges(self, v):
        """Edges whose range is v: the edges a path at v can start with."""
        return tuple(self._in[v])

    def out_edges(self, v):
        return tuple(self._out[v])

    def edge(self, edge_id) -> Edge:
        try:
            return self.edge_by_id[edge_id]
        except KeyError:
            raise InvalidGraphError("unknown edge id %r" % (edge_id,)) from None

    def range_of(self, edge_id):
        return self.edge(edge_id).range

    def source_of(self, edge_id):
        return self.edge(edge_id).source

    def __repr__(self):
        return "Graph(%d vertices, %d edges)" % (len(self.vertices), len(self.edges))


class OrderedGraph:
    """Graph plus a total edge order whose in-edge sets are order intervals."""

    def __init__(self, graph: Graph, order):
        self.graph = graph
        self.order = tuple(order)
        self.position = {}
        for i, eid in enumerate(self.order):
            if eid not in graph.edge_by_id:
                raise InvalidGraphError("order mentions unknown edge %r" % eid)
            if eid in self.position:
                raise InvalidGraphError("order repeats edge %r" % eid)
            self.position[eid] = i
        if len(self.order) != len(graph.edges):
            raise InvalidGraphError("order must list every edge exactly once")
        self._vertex_pos = None

    def pos(self, edge_id):
        return self.position[edge_id]

    def vertex_pos(self, v):
        """Block position of a vertex: min order position among its in-edges.

        Vertices that are the range of no edge (excluded by the no-sources
        assumption) sort after all others, by id.
        """
        if self._vertex_pos is None:
            vp = {}
            sourceless = sorted(
                u for u in self.graph.vertices if not self.graph.in_edges(u)
            )
            for u in self.graph.vertices:
                ins = self.graph.in_edges(u)
                if ins:
                    vp[u] = (0, min(self.position[e.id] for e in ins))
            for j, u in enumerate(sourceless):
                vp[u] = (1, j)
            self._vertex_pos = vp
        return self._vertex_pos[v]


def validate(graph: Graph) -> ValidationReport:
    """Report vertices violating no-sources and isolated vertices."""
    graph = underlying(graph)
    no_source = tuple(sorted(v for v in graph.vertices if not graph.in_edges(v)))
    isolated = tuple(
        sorted(
            v
            for v in graph.vertices
            if not graph.in_edges(v) and not graph.out_edges(v)
        )
    )
    return ValidationReport(
        ok=not no_source and not isolated,
        no_source_violations=no_source,
        isolated_vertices=isolated,
    )


def validate_order(og: OrderedGraph) -> ValidationReport:
    """Check that each vertex's in-edge set is an interval of the order."""
    bad = []
    for v in sorted(og.graph.vertices):
        positions = sorted(og.position[e.id] for e in og.graph.in_edges(v))
        if positions and positions != list(range(positions[0], positions[-1] + 1)):
            bad.append(v)
    return ValidationReport(ok=not bad, order_violations=tuple(bad))


def _step_arcs(graph: Graph, edges):
    """Arcs v -> w meaning some edge in `edges` has range v and source w."""
    arcs = {v: set() for v in graph.vertices}
    for e in edges:
        arcs[e.range].add(e.source)
    return arcs


def _has_cycle(graph: Graph, edges):
    arcs = _step_arcs(graph, edges)
    state = {v: 0 for v in graph.vertices}  # 0 new, 1 on stack, 2 done
    for root in graph.vertices:
        if state[root]:
            continue
        stack = [(root, iter(sorted(arcs[root])))]
        state[root] = 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if state[w] == 1:
                    return True
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, iter(sorted(arcs[w]))))
                    advanced = True
                    break
            if not advanced:
                state[v] = 2
                stack.pop()
    return False


def has_loop(graph: Graph) -> bool:
    """True iff the graph contains a directed cycle."""
    graph = underlying(graph)
    return _has_cycle(graph, graph.edges)


def every_loop_has_entrance(graph: Graph) -> bool:
    """True iff no directed cycle consists solely of in-degree-1 vertices.

    A cycle with no entrance is exactly a cycle in the subgraph of edges
    whose range vertex has total in-degree one.
    """
    graph = underlying(graph)
    narrow = [e for e in graph.edges if len(graph.in_edges(e.range)) == 1]
    return not _has_cycle(graph, narrow)


def is_transitive(graph: Graph) -> bool:
    """True iff every ordered pair of distinct vertices is path-connected."""
    graph = underlying(graph)
    arcs = _step_arcs(graph, graph.edges)
    for v in graph.vertices:
        seen = set()
        frontier = [v]
        while frontier:
            u = frontier.pop()
            for w in arcs[u]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        if not graph.vertex_set <= seen | {v}:
            return False
    return True


def simple_cycles(graph: Graph):
    """All vertex-simple directed cycles, as tuples of edge ids.

    A cycle e1..en satisfies source(e[i]) == range(e[i+1]) and
    source(e[n]) == range(e[1]); the visited vertices range(ei) are distinct.
    Rotations are deduplicated by rooting each cycle at its smallest vertex.
    """
    graph = underlying(graph)
    out = []
    roots = sorted(graph.vertices)
    for root in roots:
        stack = [((eid,), graph.source_of(eid)) for eid in sorted(
            e.id for e in graph.in_edges(root))]
        while stack:
            path, cur = stack.pop()
            if cur == root:
                out.append(path)
                continue
            if cur < root:
                continue
            visited = {root, cur} | {graph.range_of(e) for e in path}
            for e in graph.in_edges(cur):
                nxt = graph.source_of(e.id)
                if nxt == root or nxt not in visited:
                    stack.append((path + (e.id,), nxt))
    return sorted(out, key=lambda c: (len(c), c))


def max_simple_loop_length(graph: Graph) -> int:
    """Length of the longest vertex-simple cycle; 1 for loop-free graphs."""
    cycles = simple_cycles(graph)
    return max((len(c) for c in cycles), default=1)


def graph_from_json_obj(obj):
    """Build Graph or OrderedGraph from the {"vertices","edges"[,"order"]} shape."""
    if not isinstance(obj, dict):
        raise BadInputError("graph JSON must be an object")
    try:
        vertices = list(obj["vertices"])
        raw_edges = list(obj["edges"])
    except (KeyError, TypeError) as exc:
        raise BadInputError("graph JSON needs 'vertices' and 'edges'") from exc
    edges = []
    for item in raw_edges:
        try:
            edges.append(Edge(id=item["id"], range=item["range"], source=item["source"]))
        except (KeyError, TypeError) as exc:
            raise BadInputError("edge entries need id/range/source") from exc
    g = Graph(vertices, edges)
    if "order" in obj:
        return OrderedGraph(g, list(obj["order"]))
    return g


def graph_to_json_obj(g):
    if isinstance(g, OrderedGraph):
        base = graph_to_json_obj(g.graph)
        base["order"] = list(g.order)
        return base
    return {
        "vertices": list(g.vertices),
        "edges": [
            {"id": e.id, "range": e.range, "source": e.source} for e in g.edges
        ],
    }


def underlying(g) -> Graph:
    """The plain Graph beneath either Graph or OrderedGraph."""
    return g.graph if isinstance(g, OrderedGraph) else g
