"""Shared builders for randomized tests.

Every random object is drawn from a caller-supplied random.Random so each
test controls its own seed and stays reproducible.
"""

import random
from fractions import Fraction

from ckcalc.ckalg import AlgElement, CKMono
from ckcalc.cocycle import LocallyConstantFn
from ckcalc.graph import underlying
from ckcalc.paths import (
    GroupoidPoint,
    all_finpaths,
    enumerate_evpaths,
    ev_range,
    path_source,
    paths_with_source,
    prepend,
)
from ckcalc.scalars import GaussianRational


def make_rng(seed=20260816):
    return random.Random(seed)


def rand_rational(rng, lo=-9, hi=9):
    return Fraction(rng.randint(lo, hi), rng.randint(1, 9))


def rand_coeff(rng):
    while True:
        c = GaussianRational(rand_rational(rng), rand_rational(rng))
        if not c.is_zero():
            return c


def paths_up_to(g, max_len):
    g = underlying(g)
    return [p for n in range(max_len + 1) for p in all_finpaths(g, n)]


def all_monos(g, max_len):
    """Every monomial with both path lengths at most max_len."""
    g = underlying(g)
    paths = paths_up_to(g, max_len)
    out = []
    for a in paths:
        for b in paths:
            if path_source(g, a) == path_source(g, b):
                out.append(CKMono(a, b))
    return out


def rand_element(g, rng, n_terms=4, max_len=3):
    monos = all_monos(g, max_len)
    pairs = [(rng.choice(monos), rand_coeff(rng)) for _ in range(rng.randint(1, n_terms))]
    return AlgElement(underlying(g), pairs)


def rand_diagonal(g, rng, n_terms=2, max_len=2):
    g = underlying(g)
    paths = paths_up_to(g, max_len)
    pairs = []
    for _ in range(rng.randint(1, n_terms)):
        p = rng.choice(paths)
        pairs.append((CKMono(p, p), rand_coeff(rng)))
    return AlgElement(g, pairs)


def rand_point(g, rng, max_side=3):
    """A random groupoid point built from a shared eventually periodic tail."""
    g = underlying(g)
    tails = enumerate_evpaths(g, 2, 2)
    z = rng.choice(tails)
    v = ev_range(g, z)
    m = rng.randint(0, max_side)
    n = rng.randint(0, max_side)
    xs = paths_with_source(g, v, m)
    ys = paths_with_source(g, v, n)
    if not xs or not ys:
        return GroupoidPoint(z, 0, z)
    x = prepend(rng.choice(xs), z)
    y = prepend(rng.choice(ys), z)
    return GroupoidPoint(x, m - n, y)


def rand_fn(g, rng, depth):
    g = underlying(g)
    table = {p.edges: rand_rational(rng) for p in all_finpaths(g, depth)}
    if depth == 0:
        table = {(): rand_rational(rng)}
    return LocallyConstantFn(depth, table)
