"""Seeded random generators used by the test batteries and the
random-stats command.  Every function takes an explicit random.Random so
runs are reproducible from a single seed."""

from __future__ import annotations

from fractions import Fraction
from random import Random
from typing import List, Sequence

from .matrix import TropMatrix
from .poly import BoolPoly, TropPoly
from .scalar import INF, TropScalar

_DENOMS = (1, 1, 1, 1, 2, 3, 4, 7)


def random_scalar(rng: Random, lo: int = -12, hi: int = 12) -> TropScalar:
    den = rng.choice(_DENOMS)
    num = rng.randint(lo * den, hi * den)
    if den == 1:
        return num
    v = Fraction(num, den)
    return int(v) if v.denominator == 1 else v


def random_poly(
    rng: Random,
    max_degree: int,
    lo: int = -12,
    hi: int = 12,
    inf_prob: float = 0.0,
) -> TropPoly:
    """Random nonzero polynomial of degree up to max_degree.  The leading
    coefficient stays finite so the degree is exact."""
    deg = rng.randint(0, max_degree)
    coeffs: List[TropScalar] = []
    for k in range(deg + 1):
        if k < deg and inf_prob > 0 and rng.random() < inf_prob:
            coeffs.append(INF)
        else:
            coeffs.append(random_scalar(rng, lo, hi))
    return TropPoly(coeffs)


def random_convex_poly(rng: Random, max_degree: int) -> TropPoly:
    """Polynomial whose every point sits on its own lower hull: heights
    integrate a strictly increasing slope sequence."""
    deg = rng.randint(2, max_degree)
    slopes: List[Fraction] = []
    s = Fraction(rng.randint(-8, 0))
    while len(slopes) < deg:
        slopes.append(s)
        s += Fraction(rng.randint(1, 4), rng.choice((1, 1, 2, 3)))
    coeffs: List[TropScalar] = [Fraction(rng.randint(-5, 5))]
    for k in range(deg):
        coeffs.append(coeffs[-1] + slopes[k])
    out = [int(c) if c.denominator == 1 else c for c in coeffs]
    return TropPoly(out)


def random_concave_sample(rng: Random, n: int, denominator: int = 10**6) -> TropPoly:
    """Degree-2n polynomial with c_0 = c_n = c_2n = 0 and continuous
    uniform rational interior coefficients in (0, 1]."""
    if n < 1:
        raise ValueError("n must be positive")
    coeffs: List[TropScalar] = []
    for k in range(2 * n + 1):
        if k in (0, n, 2 * n):
            coeffs.append(0)
        else:
            v = Fraction(rng.randint(1, denominator), denominator)
            coeffs.append(int(v) if v.denominator == 1 else v)
    return TropPoly(coeffs)


def random_boolean_support(rng: Random, degree: int, density: float = 0.5) -> BoolPoly:
    """Uniform-ish Boolean support containing 0 and the stated degree."""
    if degree < 1:
        raise ValueError("degree must be positive")
    support = {0, degree}
    for d in range(1, degree):
        if rng.random() < density:
            support.add(d)
    return BoolPoly(support)


def random_two_valued(
    rng: Random, nrows: int, ncols: int, low: TropScalar = 0, high: TropScalar = 1
) -> TropMatrix:
    """Matrix over exactly two values with both values in every column.

    The rank decision reads low entries as Boolean ones; a column with no
    low contributes nothing to the column space and breaks the chain
    characterization, so samples stay inside the domain where it is exact.
    Needs nrows >= 2 (a single row cannot host both values per column).
    """
    if low >= high:
        raise ValueError("low must be smaller than high")
    if nrows < 2:
        raise ValueError("need at least two rows for both values per column")
    rows = [[high] * ncols for _ in range(nrows)]
    for j in range(ncols):
        rows[rng.randrange(nrows)][j] = low
    for i in range(nrows):
        for j in range(ncols):
            if rows[i][j] == high and rng.random() < 0.35:
                rows[i][j] = low
    for j in range(ncols):
        if all(rows[i][j] == low for i in range(nrows)):
            rows[rng.randrange(nrows)][j] = high
    return TropMatrix(rows)


def planted_common_factor_pair(
    rng: Random, max_degree: int
) -> tuple:
    """Pair (f, g) sharing a planted nonconstant common factor, each of
    degree at most max_degree."""
    from .poly import trop_mul

    d = random_poly(rng, max_degree - 1, lo=0, hi=6)
    while d.degree < 1:
        d = random_poly(rng, max_degree - 1, lo=0, hi=6)
    room = max_degree - d.degree
    u = random_poly(rng, room, lo=0, hi=6)
    v = random_poly(rng, room, lo=0, hi=6)
    return trop_mul(d, u), trop_mul(d, v)
