"""Nest projections over an ordered graph and the triangularity tests.

A level-j atom is the range projection of a length-j path; the atoms are
totally ordered by the lexicographic order the edge order induces, with
length-0 atoms (vertex projections) ordered by their in-edge blocks.  A
nest projection is a sum over an initial segment of one level.  Membership
of a monomial in the algebra leaving all these projections invariant has a
five-clause path characterization; an independent symbolic check with a
finite level bound serves as its oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ckalg import AlgElement, CKMono, check_mono, mono_source, path_tail_of
from .errors import BadInputError, OutOfRangeError
from .graph import OrderedGraph, max_simple_loop_length, underlying
from .paths import (
    FinPath,
    GroupoidPoint,
    all_finpaths,
    continuations,
    empty_path,
    is_s_maximal,
    is_s_minimal,
    lex_compare,
    path_range,
)


def _atom_key(og: OrderedGraph, word, anchor):
    """Sort key of a level atom given as a raw edge word (or a vertex)."""
    if word:
        return tuple(og.pos(e) for e in word)
    return og.vertex_pos(anchor)


def level_atoms(og: OrderedGraph, level):
    """All length-`level` paths, smallest first in the level order."""
    if level < 0:
        raise BadInputError("level must be nonnegative")
    atoms = all_finpaths(og, level)
    atoms.sort(key=lambda p: _atom_key(og, p.edges, p.anchor))
    return atoms


def nest_projection(og: OrderedGraph, level, cutpos) -> AlgElement:
    """Diagonal projection summing the first cutpos atoms of one level."""
    atoms = level_atoms(og, level)
    if not 0 <= cutpos <= len(atoms):
        raise OutOfRangeError(
            "cut %d outside 0..%d at level %d" % (cutpos, len(atoms), level)
        )
    pairs = [(CKMono(p, p), 1) for p in atoms[:cutpos]]
    return AlgElement(underlying(og), pairs)


def _head(og, p: FinPath, length) -> FinPath:
    if length == 0:
        return empty_path(path_range(og, p))
    return FinPath(p.edges[:length])


def in_alg_n(og: OrderedGraph, m: CKMono):
    """Five-clause membership test; returns (member, clause name or None)."""
    check_mono(og, m)
    a, b = m.alpha, m.beta
    if len(a) == len(b) and lex_compare(a, b, og) <= 0:
        return True, "equal_length_le"
    if len(a) >= len(b) and lex_compare(_head(og, a, len(b)), b, og) < 0:
        return True, "head_precedes"
    if len(a) > len(b):
        tail = path_tail_of(og, a, b)
        if tail is not None and not tail.is_empty and is_s_minimal(og, tail):
            return True, "s_minimal_tail"
    if len(b) >= len(a) and lex_compare(a, _head(og, b, len(a)), og) < 0:
        return True, "head_follows"
    if len(b) > len(a):
        tail = path_tail_of(og, b, a)
        if tail is not None and not tail.is_empty and is_s_maximal(og, tail):
            return True, "s_maximal_tail"
    return False, None


@dataclass(frozen=True)
class NestViolation:
    """A compression witnessing non-membership: the projection cutting the
    level just below `row` maps the monomial across the cut from `col`."""

    level: int
    cutpos: int
    row: FinPath
    col: FinPath


def default_level_bound(og, m: CKMono):
    return len(m.alpha) + len(m.beta) + 2 * max_simple_loop_length(og)


def in_alg_n_oracle(og: OrderedGraph, m: CKMono, level_bound=None):
    """Symbolic triangularity check against every nest cut up to a bound.

    At level j the nonzero compressions R_row * m * R_col are exactly the
    pairs row = (alpha w)_j, col = (beta w)_j over the continuations w that
    stretch the shorter path to length j.  The monomial passes iff no such
    pair has row after col, which is the same as passing every initial-
    segment projection.  Returns (member, violation or None).
    """
    check_mono(og, m)
    if level_bound is None:
        level_bound = default_level_bound(og, m)
    g = underlying(og)
    src = mono_source(g, m)
    ra = path_range(g, m.alpha)
    rb = path_range(g, m.beta)
    for level in range(0, level_bound + 1):
        if level == 0:
            if og.vertex_pos(ra) > og.vertex_pos(rb):
                atoms = level_atoms(og, 0)
                col_path = empty_path(rb)
                cut = atoms.index(col_path) + 1
                return False, NestViolation(0, cut, empty_path(ra), col_path)
            continue
        depth = max(0, level - min(len(m.alpha), len(m.beta)))
        for w in continuations(g, src, depth):
            row = (m.alpha.edges + w.edges)[:level]
            col = (m.beta.edges + w.edges)[:level]
            if _atom_key(og, row, None) > _atom_key(og, col, None):
                atoms = level_atoms(og, level)
                col_path = FinPath(col)
                cut = atoms.index(col_path) + 1
                return False, NestViolation(level, cut, FinPath(row), col_path)
    return True, None


def point_in_spectrum_alg_n(og: OrderedGraph, point: GroupoidPoint):
    """Clause test for a groupoid point against the nest-algebra spectrum.

    Besides the strictly-below and unit clauses, an isotropy point (x,k,x)
    belongs iff some length-|k| block of the periodic tail is s-minimal
    (k > 0) or s-maximal (k < 0); all cycle rotations are candidate blocks.
    Returns (member, clause name or None).
    """
    x, k, y = point.x, point.k, point.y
    cmp = lex_compare(x, y, og)
    if cmp < 0:
        return True, "strict_below"
    if cmp != 0:
        return False, None
    if k == 0:
        return True, "unit"
    size = abs(k)
    if size % len(x.cycle) != 0:
        return False, None
    start = len(x.prefix)
    for t in range(len(x.cycle)):
        block = FinPath(tuple(x.edge_at(start + t + i) for i in range(1, size + 1)))
        if k > 0 and is_s_minimal(og, block):
            return True, "s_minimal_block"
        if k < 0 and is_s_maximal(og, block):
            return True, "s_maximal_block"
    return False, None


def in_radical_spectrum(og: OrderedGraph, point: GroupoidPoint) -> bool:
    """Spectrum membership with x strictly below y."""
    member, _ = point_in_spectrum_alg_n(og, point)
    return member and lex_compare(point.x, point.y, og) < 0


def commutator(a: AlgElement, b: AlgElement) -> AlgElement:
    return a * b - b * a
