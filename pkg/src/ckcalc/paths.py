"""Finite paths, eventually periodic infinite paths, and groupoid points.

Infinite paths are represented exactly by a finite prefix plus a repeating
cycle of edge ids.  The representation is canonical: the cycle is primitive
(not a power of a shorter word) and the prefix cannot be shortened by
rotating the cycle.  With that normal form, equality of infinite paths is
equality of representations.

A groupoid point is a triple (x, k, y) of two infinite paths and an integer
such that x and y agree k steps apart far enough out; the constructor
checks that invariant, so every GroupoidPoint in circulation is a genuine
point of the shift groupoid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    BadInputError,
    ComposeMismatchError,
    InvalidPathError,
    InvalidPointError,
    LengthMismatchError,
    NotComposableError,
)
from .graph import Graph, OrderedGraph, underlying


@dataclass(frozen=True)
class FinPath:
    """A finite edge word; empty paths carry the vertex they sit at."""

    edges: tuple
    anchor: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.edges and self.anchor is not None:
            raise BadInputError("anchor is only for empty paths")
        if not self.edges and self.anchor is None:
            raise BadInputError("empty path needs an anchor vertex")

    def __len__(self):
        return len(self.edges)

    @property
    def is_empty(self):
        return not self.edges

    def word_starts_with(self, other: "FinPath") -> bool:
        """Word-level prefix test; an empty path is a prefix of anything."""
        if other.is_empty:
            return True
        return self.edges[: len(other.edges)] == other.edges

    def __repr__(self):
        if self.is_empty:
            return "FinPath(()@%s)" % self.anchor
        return "FinPath(%s)" % ("".join(self.edges) if all(
            len(e) == 1 for e in self.edges) else ",".join(self.edges))


def fpath(*edge_ids) -> FinPath:
    return FinPath(tuple(edge_ids))


def empty_path(vertex) -> FinPath:
    return FinPath((), vertex)


def check_finpath(g, p: FinPath):
    """Raise InvalidPathError unless p is a path of g."""
    g = underlying(g)
    if p.is_empty:
        if p.anchor not in g.vertex_set:
            raise InvalidPathError("anchor %r is not a vertex" % p.anchor)
        return
    for eid in p.edges:
        g.edge(eid)
    for a, b in zip(p.edges, p.edges[1:]):
        if g.range_of(b) != g.source_of(a):
            raise InvalidPathError("edges %r then %r do not chain" % (a, b))


def path_range(g, p: FinPath):
    g = underlying(g)
    return p.anchor if p.is_empty else g.range_of(p.edges[0])


def path_source(g, p: FinPath):
    g = underlying(g)
    return p.anchor if p.is_empty else g.source_of(p.edges[-1])


def concat(g, a: FinPath, b: FinPath) -> FinPath:
    """a followed by b; requires source(a) == range(b)."""
    g = underlying(g)
    if path_source(g, a) != path_range(g, b):
        raise ComposeMismatchError(
            "cannot concatenate: source %r != range %r"
            % (path_source(g, a), path_range(g, b))
        )
    if a.is_empty and b.is_empty:
        return a
    return FinPath(a.edges + b.edges)


def append_edge(g, p: FinPath, edge_id) -> FinPath:
    g = underlying(g)
    e = g.edge(edge_id)
    if e.range != path_source(g, p):
        raise ComposeMismatchError(
            "edge %r does not continue path at %r" % (edge_id, path_source(g, p))
        )
    return FinPath(p.edges + (edge_id,))


class EvPath:
    """Canonical eventually periodic infinite path."""

    __slots__ = ("prefix", "cycle")

    def __init__(self, prefix, cycle):
        prefix = tuple(prefix)
        cycle = tuple(cycle)
        if not cycle:
            raise BadInputError("eventually periodic path needs a nonempty cycle")
        n = len(cycle)
        for d in range(1, n + 1):
            if n % d == 0 and cycle[:d] * (n // d) == cycle:
                cycle = cycle[:d]
                break
        prefix = list(prefix)
        cycle = list(cycle)
        while prefix and prefix[-1] == cycle[-1]:
            prefix.pop()
            cycle = [cycle[-1]] + cycle[:-1]
        object.__setattr__(self, "prefix", tuple(prefix))
        object.__setattr__(self, "cycle", tuple(cycle))

    def __setattr__(self, name, value):
        raise AttributeError("EvPath is immutable")

    def __eq__(self, other):
        if not isinstance(other, EvPath):
            return NotImplemented
        return self.prefix == other.prefix and self.cycle == other.cycle

    def __hash__(self):
        return hash((self.prefix, self.cycle))

    def __repr__(self):
        return "EvPath(%r + %r*)" % (list(self.prefix), list(self.cycle))

    def edge_at(self, i) -> str:
        """1-indexed edge id of the infinite word."""
        if i < 1:
            raise BadInputError("positions are 1-indexed")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return self.cycle[(i - len(self.prefix) - 1) % len(self.cycle)]

    def truncation(self, n) -> tuple:
        return tuple(self.edge_at(i) for i in range(1, n + 1))


def ev(prefix, cycle) -> EvPath:
    return EvPath(prefix, cycle)


def check_evpath(g, x: EvPath):
    g = underlying(g)
    for eid in x.prefix + x.cycle:
        g.edge(eid)
    word = list(x.prefix) + list(x.cycle) + [x.cycle[0]]
    for a, b in zip(word, word[1:]):
        if g.range_of(b) != g.source_of(a):
            raise InvalidPathError("edges %r then %r do not chain" % (a, b))


def ev_range(g, x: EvPath):
    g = underlying(g)
    return g.range_of(x.edge_at(1))


def shift(x: EvPath) -> EvPath:
    """Drop the first edge."""
    if x.prefix:
        return EvPath(x.prefix[1:], x.cycle)
    return EvPath((), x.cycle[1:] + x.cycle[:1])


def shift_n(x: EvPath, n) -> EvPath:
    if n < 0:
        raise BadInputError("cannot shift by a negative amount")
    if n <= len(x.prefix):
        return EvPath(x.prefix[n:], x.cycle)
    m = (n - len(x.prefix)) % len(x.cycle)
    return EvPath((), x.cycle[m:] + x.cycle[:m])


def prepend(p: FinPath, x: EvPath) -> EvPath:
    """The infinite path reading p then x."""
    return EvPath(p.edges + x.prefix, x.cycle)


def is_s_minimal(og: OrderedGraph, p: FinPath) -> bool:
    """Whether p comes first among equal-length paths into its source.

    The competitors are the paths of length |p| whose range is s(p): the
    paths p can be extended by.  First-edge intervals make the comparison
    a plain lexicographic one.
    """
    if p.is_empty:
        raise BadInputError("s-extremal tests need a nonempty path")
    peers = continuations(og, path_source(og, p), len(p))
    return all(lex_compare(p, q, og) <= 0 for q in peers)


def is_s_maximal(og: OrderedGraph, p: FinPath) -> bool:
    """Whether p comes last among equal-length paths into its source."""
    if p.is_empty:
        raise BadInputError("s-extremal tests need a nonempty path")
    peers = continuations(og, path_source(og, p), len(p))
    return all(lex_compare(q, p, og) <= 0 for q in peers)


def sim_k(x: EvPath, k, y: EvPath) -> bool:
    """True iff x[i+k] == y[i] for all large i."""
    n0 = max(len(x.prefix) - k, len(y.prefix), 0) + 1
    span = math.lcm(len(x.cycle), len(y.cycle))
    return all(x.edge_at(i + k) == y.edge_at(i) for i in range(n0, n0 + span))


@dataclass(frozen=True)
class GroupoidPoint:
    x: EvPath
    k: int
    y: EvPath

    def __post_init__(self):
        if not sim_k(self.x, self.k, self.y):
            raise InvalidPointError(
                "paths are not shift-equivalent at degree %d" % self.k
            )


def compose(g1: GroupoidPoint, g2: GroupoidPoint) -> GroupoidPoint:
    if g1.y != g2.x:
        raise NotComposableError("middle paths differ")
    return GroupoidPoint(g1.x, g1.k + g2.k, g2.y)


def inverse(g: GroupoidPoint) -> GroupoidPoint:
    return GroupoidPoint(g.y, -g.k, g.x)


def lex_compare(x, y, og: OrderedGraph) -> int:
    """-1/0/1 comparison in the edge order; paths must be the same kind.

    Finite paths must have equal length; empty paths compare by the vertex
    block order their anchors occupy.  Eventually periodic paths compare
    edgewise out to a bound beyond which equality is forced by periodicity.
    """
    if isinstance(x, FinPath) and isinstance(y, FinPath):
        if len(x) != len(y):
            raise LengthMismatchError("lex compare needs equal lengths")
        if x.is_empty:
            a, b = og.vertex_pos(x.anchor), og.vertex_pos(y.anchor)
            return -1 if a < b else (1 if a > b else 0)
        for a, b in zip(x.edges, y.edges):
            pa, pb = og.pos(a), og.pos(b)
            if pa != pb:
                return -1 if pa < pb else 1
        return 0
    if isinstance(x, EvPath) and isinstance(y, EvPath):
        bound = (
            len(x.prefix)
            + len(y.prefix)
            + math.lcm(len(x.cycle), len(y.cycle))
        )
        for i in range(1, bound + 1):
            pa, pb = og.pos(x.edge_at(i)), og.pos(y.edge_at(i))
            if pa != pb:
                return -1 if pa < pb else 1
        return 0
    raise BadInputError("lex compare needs two paths of the same kind")


def continuations(g, v, length):
    """All paths of the given length whose range is v, in edge-list order."""
    g = underlying(g)
    acc = [()]
    cur_sources = [v]
    for _ in range(length):
        nxt, nxt_src = [], []
        for word, src in zip(acc, cur_sources):
            for e in g.in_edges(src):
                nxt.append(word + (e.id,))
                nxt_src.append(e.source)
        acc, cur_sources = nxt, nxt_src
    if length == 0:
        return [empty_path(v)]
    return [FinPath(w) for w in acc]


def all_finpaths(g, length):
    """All paths of the given length, grouped by range vertex in vertex order."""
    g = underlying(g)
    out = []
    for v in sorted(g.vertices):
        out.extend(continuations(g, v, length))
    return out


def paths_with_source(g, v, length):
    return [p for p in all_finpaths(g, length) if path_source(g, p) == v]


def primitive_loops(g, max_len):
    """All primitive loops (range == source, not a proper power), length <= max_len."""
    g = underlying(g)
    out = []
    for n in range(1, max_len + 1):
        for p in all_finpaths(g, n):
            if path_range(g, p) != path_source(g, p):
                continue
            word = p.edges
            primitive = True
            for d in range(1, n):
                if n % d == 0 and word[:d] * (n // d) == word:
                    primitive = False
                    break
            if primitive:
                out.append(p)
    return out


def enumerate_evpaths(g, max_prefix_len, max_cycle_len):
    """All canonical eventually periodic paths within the given size bounds."""
    g = underlying(g)
    seen = set()
    out = []
    for loop in primitive_loops(g, max_cycle_len):
        base = path_range(g, loop)
        for plen in range(0, max_prefix_len + 1):
            for pre in paths_with_source(g, base, plen):
                x = EvPath(pre.edges, loop.edges)
                if x not in seen:
                    seen.add(x)
                    out.append(x)
    out.sort(key=lambda x: (len(x.prefix), x.prefix, len(x.cycle), x.cycle))
    return out


def some_tail_from(g, v) -> EvPath:
    """A deterministic infinite path with range v (first in-edge walk)."""
    g = underlying(g)
    walk = []
    first_seen = {v: 0}
    cur = v
    while True:
        ins = g.in_edges(cur)
        if not ins:
            raise InvalidPathError("vertex %r has no in-edges" % cur)
        e = ins[0]
        walk.append(e.id)
        cur = e.source
        if cur in first_seen:
            cut = first_seen[cur]
            return EvPath(tuple(walk[:cut]), tuple(walk[cut:]))
        first_seen[cur] = len(walk)


def in_cylinder(g, x: EvPath, alpha: FinPath) -> bool:
    """True iff x starts with alpha (empty alpha: range match)."""
    g = underlying(g)
    if alpha.is_empty:
        return ev_range(g, x) == alpha.anchor
    return x.truncation(len(alpha)) == alpha.edges


def point_in_Z(g, point: GroupoidPoint, alpha: FinPath, beta: FinPath) -> bool:
    """Membership of (x,k,y) in the basic set determined by (alpha, beta)."""
    g = underlying(g)
    if point.k != len(alpha) - len(beta):
        return False
    if not in_cylinder(g, point.x, alpha) or not in_cylinder(g, point.y, beta):
        return False
    return shift_n(point.x, len(alpha)) == shift_n(point.y, len(beta))


def finpath_to_json_obj(p: FinPath):
    obj = {"edges": list(p.edges)}
    if p.is_empty:
        obj["anchor"] = p.anchor
    return obj


def evpath_to_json_obj(x: EvPath):
    return {"prefix": list(x.prefix), "cycle": list(x.cycle)}


def evpath_from_json_obj(obj) -> EvPath:
    if not isinstance(obj, dict) or "cycle" not in obj:
        raise BadInputError("eventually periodic path JSON needs 'cycle'")
    return EvPath(tuple(obj.get("prefix", ())), tuple(obj["cycle"]))


def point_to_json_obj(p: GroupoidPoint):
    return {
        "x": evpath_to_json_obj(p.x),
        "k": p.k,
        "y": evpath_to_json_obj(p.y),
    }


def point_from_json_obj(obj) -> GroupoidPoint:
    try:
        return GroupoidPoint(
            evpath_from_json_obj(obj["x"]),
            int(obj["k"]),
            evpath_from_json_obj(obj["y"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise BadInputError("point JSON needs x, k, y") from exc


def parse_edge_word(text) -> tuple:
    """Parse a comma-separated edge id list; empty string means no edges."""
    text = text.strip()
    if not text:
        return ()
    return tuple(part.strip() for part in text.split(","))
