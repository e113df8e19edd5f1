"""Residuation: superquotients, divisibility, bounded-degree lcm and gcd.

Tropical products only ever decrease coefficients (min of sums), so "d
divides s" is decided through the residual: the least q of the right
degree with d*q >= s coefficientwise has a closed form, and d divides s
exactly when d times that least superquotient lands on s on the nose.

The lcm of f and g at a chosen degree is computed by alternating the two
residual-projection steps h -> f*sq(f,h) and h -> g*sq(g,h) starting from
the all-zero polynomial of that degree.  Both steps are monotone, so the
iteration either reaches a common fixed point (the least common multiple
at that degree), or climbs past a ceiling no finite least fixed point can
reach, certifying that no common multiple with finite coefficients exists
at that degree, or runs out of its iteration budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .poly import TropPoly, trop_mul
from .scalar import INF, TropScalar


@dataclass(frozen=True)
class LcmReport:
    degree: int
    result: Optional[TropPoly]
    status: str  # "converged" | "no-common-multiple" | "iteration-limit"
    iterations: int


def least_superquotient(d: TropPoly, s: TropPoly, quotient_degree: int, floor=0) -> TropPoly:
    """Least q with deg q <= quotient_degree, q >= floor coefficientwise,
    and d*q >= s coefficientwise.

    Coefficient k of the result is the max of the floor and of
    s_i - d_{i-k} over the finite coefficients of d.  floor=None drops the
    clamp entirely, which is what exact divisibility checks need when
    coefficients may be negative.
    """
    if d.is_zero():
        raise ValueError("cannot divide by the zero polynomial")
    if quotient_degree < 0:
        raise ValueError("quotient degree must be nonnegative")
    if d.degree + quotient_degree < s.degree:
        raise ValueError("quotient degree too small for the dividend")
    support_d = [i for i, c in enumerate(d.coeffs) if c is not INF]
    out = []
    for k in range(quotient_degree + 1):
        best = floor
        for m in support_d:
            si = s.coefficient(m + k)
            if si is INF:
                best = INF
                break
            cand = si - d.coeffs[m]
            if best is None or (best is not INF and cand > best):
                best = cand
        out.append(best)
    return TropPoly(out)


def _geq(p: TropPoly, q: TropPoly, length: int) -> bool:
    # p >= q coefficientwise up to the given length (INF dominates all).
    for k in range(length):
        a, b = p.coefficient(k), q.coefficient(k)
        if b is INF:
            continue
        if a is INF:
            continue  # INF >= anything
        if a < b:
            return False
    return True


def divides(d: TropPoly, s: TropPoly) -> Tuple[bool, Optional[TropPoly]]:
    """Exact divisibility with witness quotient.

    d divides s iff d times the unclamped least superquotient equals s.
    """
    if d.is_zero() or s.is_zero():
        raise ValueError("divisibility is defined for nonzero polynomials")
    if s.degree < d.degree:
        raise ValueError("dividend degree below divisor degree")
    q = least_superquotient(d, s, s.degree - d.degree, floor=None)
    if trop_mul(d, q) == s:
        return True, q
    return False, None


def _validate_lcm_operand(p: TropPoly, name: str) -> None:
    if p.is_zero():
        raise ValueError(f"{name} must be nonzero")
    c0 = p.coefficient(0)
    if c0 is INF or c0 != 0:
        raise ValueError(f"{name} must have constant coefficient 0")
    for c in p.coeffs:
        if c is not INF and c < 0:
            raise ValueError(f"{name} must have nonnegative coefficients")


def _max_coeff(p: TropPoly):
    return max(c for c in p.coeffs if c is not INF)


def lcm(f: TropPoly, g: TropPoly, degree: int, iteration_limit: int = 1000) -> LcmReport:
    """Least common multiple of f and g at the given degree, if one exists.

    Inputs must be nonnegative with constant coefficient 0.  The chosen
    degree must lie between max(deg f, deg g) and deg f + deg g.
    """
    _validate_lcm_operand(f, "f")
    _validate_lcm_operand(g, "g")
    if not (max(f.degree, g.degree) <= degree <= f.degree + g.degree):
        raise ValueError("degree must lie between max(deg f, deg g) and deg f + deg g")
    # Every finite coordinate of the least fixed point is witnessed by an
    # equality chain that bottoms out at the zero floor after visiting each
    # coefficient or quotient position at most once (otherwise the whole
    # cycle component could shift down, contradicting leastness), and each
    # link adds at most one finite input coefficient.  Climbing past that
    # ceiling therefore certifies no finite common multiple exists.
    bound = 3 * (degree + 1) * max(_max_coeff(f), _max_coeff(g))
    h = TropPoly([0] * (degree + 1))
    length = degree + 1
    iterations = 0
    while True:
        h1 = trop_mul(f, least_superquotient(f, h, degree - f.degree, floor=0))
        assert _geq(h1, h, length), "projection step decreased a coefficient"
        h2 = trop_mul(g, least_superquotient(g, h1, degree - g.degree, floor=0))
        assert _geq(h2, h1, length), "projection step decreased a coefficient"
        iterations += 1
        if h2 == h:
            ok_f, _ = divides(f, h2)
            ok_g, _ = divides(g, h2)
            assert ok_f and ok_g, "fixed point fails the divisibility check"
            return LcmReport(degree, h2, "converged", iterations)
        h = h2
        # a coordinate forced to INF shows up as an INF entry or, after
        # trimming, as a drop in degree; either way no finite common
        # multiple of this degree can exist, since coordinates only grow
        if h.degree != degree or any(c is INF or c > bound for c in h.coeffs):
            return LcmReport(degree, None, "no-common-multiple", iterations)
        if iterations >= iteration_limit:
            return LcmReport(degree, None, "iteration-limit", iterations)


def gcd(f: TropPoly, g: TropPoly, iteration_limit: int = 1000) -> TropPoly:
    """Greatest common divisor via the lcm at the smallest convergent degree.

    gcd = least superquotient of the product f*g by that lcm, clamped at 0.
    """
    _validate_lcm_operand(f, "f")
    _validate_lcm_operand(g, "g")
    product = trop_mul(f, g)
    for degree in range(max(f.degree, g.degree), f.degree + g.degree + 1):
        report = lcm(f, g, degree, iteration_limit)
        if report.status == "converged":
            return least_superquotient(
                report.result, product, f.degree + g.degree - degree, floor=0
            )
    raise RuntimeError("lcm iteration did not converge at any admissible degree")
