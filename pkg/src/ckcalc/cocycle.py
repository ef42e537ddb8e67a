"""Cocycles induced by locally constant functions on the path space.

A depth-N function reads the first N edges of an infinite path.  The
induced cocycle at a point (x, k, y) is the telescoping sum

    sum_{j=0}^{k-1} f(S^j x)  +  sum_{j>=k} [ f(S^j x) - f(S^{j-k} y) ]

for k >= 0 (and minus the value at the inverse point for k < 0); beyond
the stabilization index the shifted paths coincide and the tail vanishes,
so the sum is finite and exact.  All values are plain rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadInputError,
    InvalidFunctionError,
    NotEqualizableError,
    PreconditionError,
    WindowTooShortError,
)
from .graph import max_simple_loop_length, underlying
from .paths import (
    EvPath,
    FinPath,
    GroupoidPoint,
    all_finpaths,
    check_finpath,
    empty_path,
    enumerate_evpaths,
    inverse,
    path_range,
    path_source,
    shift,
    shift_n,
)
from .scalars import format_rational, parse_rational


class LocallyConstantFn:
    """Depth-N function given by a total table on length-N edge words."""

    __slots__ = ("depth", "table")

    def __init__(self, depth, table):
        if depth < 0:
            raise BadInputError("depth must be nonnegative")
        clean = {}
        for word, value in dict(table).items():
            word = tuple(word)
            if len(word) != depth:
                raise BadInputError(
                    "table key %r does not have length %d" % (word, depth)
                )
            clean[word] = Fraction(value)
        if depth == 0 and () not in clean:
            raise BadInputError("depth-0 function needs a value at the empty word")
        object.__setattr__(self, "depth", depth)
        object.__setattr__(self, "table", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LocallyConstantFn is immutable")

    @classmethod
    def constant(cls, value) -> "LocallyConstantFn":
        return cls(0, {(): Fraction(value)})

    @classmethod
    def from_weights(cls, weights) -> "LocallyConstantFn":
        """Depth-1 function from an edge-id -> value map."""
        return cls(1, {(e,): v for e, v in dict(weights).items()})

    def value_at(self, word) -> Fraction:
        word = tuple(word)
        if len(word) < self.depth:
            raise InvalidFunctionError(
                "word of length %d is shorter than depth %d" % (len(word), self.depth)
            )
        key = word[: self.depth]
        try:
            return self.table[key]
        except KeyError:
            raise InvalidFunctionError("no table entry for %r" % (key,)) from None

    def value_on(self, x: EvPath) -> Fraction:
        return self.value_at(x.truncation(self.depth))

    def __repr__(self):
        return "LocallyConstantFn(depth=%d, %d entries)" % (self.depth, len(self.table))


def validate_total(g, f: LocallyConstantFn):
    """Make sure every length-depth path of the graph has a table entry."""
    for p in all_finpaths(underlying(g), f.depth):
        word = p.edges if not p.is_empty else ()
        if word not in f.table:
            raise InvalidFunctionError("table misses path %r" % (word,))


@dataclass(frozen=True)
class TailedPair:
    """Two paths sharing an unspecified tail after a common window.

    Represents x = prefix_x . window . T and y = prefix_y . window . T for
    an arbitrary common continuation T; cocycle values do not depend on T
    once the window is at least as long as the function depth.  The parts
    are plain edge words; graph validity is the caller's concern, which is
    what lets the loop-free weight device use synthetic edge lists.
    """

    prefix_x: FinPath
    prefix_y: FinPath
    window: FinPath

    @property
    def k(self):
        return len(self.prefix_x) - len(self.prefix_y)

    def swapped(self) -> "TailedPair":
        return TailedPair(self.prefix_y, self.prefix_x, self.window)


def _window_value(f, word, j):
    return f.value_at(word[j: j + f.depth])


def eval_cocycle_tailed(f: LocallyConstantFn, tp: TailedPair) -> Fraction:
    """Exact cocycle value on the family of points a tailed pair describes."""
    if len(tp.window) < f.depth:
        raise WindowTooShortError(
            "window %d shorter than depth %d" % (len(tp.window), f.depth)
        )
    k = tp.k
    if k < 0:
        return -eval_cocycle_tailed(f, tp.swapped())
    xw = tp.prefix_x.edges + tp.window.edges
    yw = tp.prefix_y.edges + tp.window.edges
    total = Fraction(0)
    for j in range(0, k):
        total += _window_value(f, xw, j)
    for j in range(k, len(tp.prefix_x)):
        total += _window_value(f, xw, j) - _window_value(f, yw, j - k)
    return total


def _shift_window(f, x: EvPath, j):
    return tuple(x.edge_at(j + i) for i in range(1, f.depth + 1))


def eval_cocycle(f: LocallyConstantFn, point: GroupoidPoint) -> Fraction:
    """Exact cocycle value at an eventually periodic groupoid point."""
    k = point.k
    if k < 0:
        return -eval_cocycle(f, inverse(point))
    x, y = point.x, point.y
    stable_from = max(len(x.prefix) - k, len(y.prefix), 0) + 1
    j_stop = stable_from + k - 1
    total = Fraction(0)
    for j in range(0, k):
        total += f.value_at(_shift_window(f, x, j))
    for j in range(k, j_stop):
        total += f.value_at(_shift_window(f, x, j)) - f.value_at(
            _shift_window(f, y, j - k)
        )
    return total


def reconstruct_f(g, f: LocallyConstantFn, max_prefix_len=None, max_cycle_len=None):
    """Check f(x) == cocycle(x, 1, Sx) across an exhaustive sample family.

    Returns (ok, failures) where failures lists (path, expected, got).
    """
    g = underlying(g)
    if max_cycle_len is None:
        max_cycle_len = max(2, max_simple_loop_length(g))
    if max_prefix_len is None:
        max_prefix_len = f.depth + max_cycle_len
    failures = []
    for x in enumerate_evpaths(g, max_prefix_len, max_cycle_len):
        expected = f.value_on(x)
        got = eval_cocycle(f, GroupoidPoint(x, 1, shift(x)))
        if got != expected:
            failures.append((x, expected, got))
    return not failures, failures


@dataclass(frozen=True)
class LoopGrowthReport:
    base: Fraction
    verified: bool
    unbounded: bool


def loop_growth(f: LocallyConstantFn, x: EvPath, period, k_max=50) -> LoopGrowthReport:
    """Linear growth of the cocycle along the powers of a periodic point."""
    if x.prefix:
        raise PreconditionError("loop growth needs a purely periodic path")
    if period < 1 or period % len(x.cycle) != 0:
        raise PreconditionError(
            "period must be a positive multiple of the primitive cycle length"
        )
    base = eval_cocycle(f, GroupoidPoint(x, period, x))
    verified = all(
        eval_cocycle(f, GroupoidPoint(x, k * period, x)) == k * base
        for k in range(1, k_max + 1)
    )
    return LoopGrowthReport(base=base, verified=verified, unbounded=base != 0)


def acyclic_weights(edge_ids):
    """Geometric weights 3^-i on a loop-free edge list, largest first.

    Each weight strictly dominates the sum of all smaller ones, which is
    what forces cocycle values built from them to be nonzero whenever the
    two prefixes differ as edge multisets.  The domination inequality is
    checked, not assumed.
    """
    edge_ids = list(edge_ids)
    if len(set(edge_ids)) != len(edge_ids):
        raise BadInputError("edge ids must be distinct")
    if not edge_ids:
        raise BadInputError("need at least one edge")
    weights = {e: Fraction(1, 3 ** (i + 1)) for i, e in enumerate(edge_ids)}
    for e, w in weights.items():
        smaller = sum((v for v in weights.values() if v < w), Fraction(0))
        if not w > smaller:
            raise PreconditionError("domination inequality failed at %r" % e)
    return weights


@dataclass(frozen=True)
class ObstructionWitness:
    """Pair of paths witnessing the integer-multiple window obstruction."""

    x: EvPath
    y: EvPath
    window: int
    loop_alpha: FinPath
    loop_beta: FinPath


def _bfs_connector(g, start, goal) -> FinPath:
    """Shortest path with range start and source goal, in edge-list order."""
    if start == goal:
        return empty_path(start)
    frontier = [(start, ())]
    seen = {start}
    while frontier:
        nxt = []
        for v, word in frontier:
            for e in g.in_edges(v):
                if e.source in seen:
                    continue
                w2 = word + (e.id,)
                if e.source == goal:
                    return FinPath(w2)
                seen.add(e.source)
                nxt.append((e.source, w2))
        frontier = nxt
    raise NotEqualizableError("no path from %r to %r" % (start, goal))


def _loop_check(g, p: FinPath, name):
    check_finpath(g, p)
    if p.is_empty or path_range(g, p) != path_source(g, p):
        raise PreconditionError("%s must be a nonempty loop" % name)


def equalize_loops(g, alpha: FinPath, beta: FinPath):
    """Bring two loops to a common base vertex and a common length."""
    g = underlying(g)
    _loop_check(g, alpha, "alpha")
    _loop_check(g, beta, "beta")
    if path_range(g, alpha) != path_range(g, beta):
        gam = _bfs_connector(g, path_range(g, alpha), path_range(g, beta))
        gam2 = _bfs_connector(g, path_range(g, beta), path_range(g, alpha))
        beta = FinPath(gam.edges + beta.edges + gam2.edges)
    la, lb = len(alpha), len(beta)
    if la != lb:
        alpha, beta = FinPath(alpha.edges * lb), FinPath(beta.edges * la)
    return alpha, beta


def integer_obstruction_witness(g, alpha: FinPath, beta: FinPath, ell) -> ObstructionWitness:
    """Construct the path pair on which every depth-N telescoping sum dies.

    N = ell * k where k is the common loop length after equalization; the
    witness is x = a^ell a b a^ell b^inf against y = a^ell b a a^ell b^inf.
    """
    g = underlying(g)
    if ell < 2:
        raise PreconditionError("multiplicity ell must be at least 2")
    alpha, beta = equalize_loops(g, alpha, beta)
    if not (set(beta.edges) - set(alpha.edges)):
        raise PreconditionError("beta must contain an edge alpha lacks")
    a, b = alpha.edges, beta.edges
    k = len(a)
    x = EvPath(a * ell + a + b + a * ell, b)
    y = EvPath(a * ell + b + a + a * ell, b)
    return ObstructionWitness(
        x=x, y=y, window=ell * k, loop_alpha=alpha, loop_beta=beta
    )


def truncation_telescope_sum(f: LocallyConstantFn, x: EvPath, y: EvPath) -> Fraction:
    """Sum of f(S^n x) - f(S^n y) over n >= 0, exact once the shifts merge."""
    bound = (
        max(len(x.prefix), len(y.prefix))
        + len(x.cycle) * len(y.cycle)
        + 1
    )
    merge_at = None
    for n in range(0, bound + 1):
        if shift_n(x, n) == shift_n(y, n):
            merge_at = n
            break
    if merge_at is None:
        raise PreconditionError("paths never merge; the sum does not terminate")
    total = Fraction(0)
    for n in range(0, merge_at):
        total += f.value_at(_shift_window(f, x, n)) - f.value_at(
            _shift_window(f, y, n)
        )
    return total


@dataclass(frozen=True)
class Z10Report:
    ok: bool
    failures: tuple


def is_z1_0_sampled(f: LocallyConstantFn, samples) -> Z10Report:
    """Sampled check that the cocycle vanishes exactly on unit points.

    A failure is a unit sample with nonzero value or a non-unit sample with
    value zero; the report lists every failing (point, value).
    """
    failures = []
    for point in samples:
        value = eval_cocycle(f, point)
        is_unit = point.k == 0 and point.x == point.y
        if is_unit and value != 0:
            failures.append((point, value))
        if not is_unit and value == 0:
            failures.append((point, value))
    return Z10Report(ok=not failures, failures=tuple(failures))


def cocycle_graded_projection(f: LocallyConstantFn, a, value) -> "AlgElement":
    """Part of an element supported where the cocycle equals the given value.

    Refines each monomial by continuation windows of the function depth;
    the cocycle is constant on each refined piece, so the projection is an
    exact selection of pieces.  With f constant 1 this is the usual grading.
    """
    from .ckalg import AlgElement, CKMono, mono_source
    from .paths import continuations

    value = Fraction(value)
    g = a.graph
    pairs = []
    for mono, coeff in a.terms.items():
        src = mono_source(g, mono)
        for w in continuations(g, src, f.depth):
            piece_value = eval_cocycle_tailed(
                f, TailedPair(mono.alpha, mono.beta, w)
            )
            if piece_value == value:
                pairs.append(
                    (
                        CKMono(
                            join_word(mono.alpha, w, src),
                            join_word(mono.beta, w, src),
                        ),
                        coeff,
                    )
                )
    return AlgElement(g, pairs)


def join_word(p: FinPath, w: FinPath, src) -> FinPath:
    """Word concatenation p then w, re-anchoring empties."""
    edges = p.edges + w.edges
    if edges:
        return FinPath(edges)
    return empty_path(src)


def fn_to_json_obj(f: LocallyConstantFn):
    table = [
        {"path": list(word), "value": format_rational(v)}
        for word, v in sorted(f.table.items())
    ]
    return {"depth": f.depth, "table": table}


def fn_from_json_obj(obj) -> LocallyConstantFn:
    try:
        depth = int(obj["depth"])
        entries = list(obj["table"])
    except (KeyError, TypeError, ValueError) as exc:
        raise BadInputError("function JSON needs depth and table") from exc
    table = {}
    for item in entries:
        try:
            table[tuple(item["path"])] = parse_rational(item["value"])
        except (KeyError, TypeError) as exc:
            raise BadInputError("table entries need path and value") from exc
    return LocallyConstantFn(depth, table)
