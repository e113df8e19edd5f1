"""Formal polynomials over the min-plus semiring, plus their Boolean cousins.

A ``TropPoly`` is a dense coefficient sequence ``c_0 .. c_n`` of scalars
(see :mod:`tropoly.scalar`).  Missing terms are ``INF``.  Trailing ``INF``
entries are trimmed on construction, so the top coefficient of a nonzero
polynomial is always finite; the all-INF polynomial is the empty sequence
with degree -1.

Equality is formal: two polynomials are equal iff their trimmed coefficient
sequences are equal.  Polynomials that agree as piecewise-linear functions
but differ in some coefficient are NOT equal here.

``BoolPoly`` is a support set of nonnegative integers, equivalent to the
TropPoly with coefficient 0 on the support and INF elsewhere.  It is stored
as a bitmask so products (Minkowski sums) are a handful of shifts.

``BoolPoly2`` is a finite set of lattice points (i, j) with nonnegative
coordinates.  A support is "filled" when it is downward closed.  Products
are 2-D Minkowski sums; for filled operands the product is computed on the
staircase frontiers, which keeps large filled sets cheap.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Tuple

from .scalar import INF, TropScalar, as_scalar


class TropPoly:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [as_scalar(c) for c in coeffs]
        while cs and cs[-1] is INF:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: list) -> "TropPoly":
        # Internal: caller guarantees canonical scalars; only trims.
        self = object.__new__(cls)
        while coeffs and coeffs[-1] is INF:
            coeffs.pop()
        self._coeffs = tuple(coeffs)
        return self

    @classmethod
    def zero(cls) -> "TropPoly":
        return cls(())

    @classmethod
    def one(cls) -> "TropPoly":
        return cls((0,))

    @classmethod
    def monomial(cls, degree: int, coeff=0) -> "TropPoly":
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls([INF] * degree + [coeff])

    @property
    def coeffs(self) -> Tuple[TropScalar, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> TropScalar:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return INF

    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self._coeffs) if c is not INF)

    def __eq__(self, other):
        if isinstance(other, TropPoly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"TropPoly({list(self._coeffs)!r})"

    def __add__(self, other):
        if isinstance(other, TropPoly):
            return trop_add(self, other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, TropPoly):
            return trop_mul(self, other)
        return NotImplemented


def trop_add(p: TropPoly, q: TropPoly) -> TropPoly:
    """Coefficientwise min, padding the shorter operand with INF."""
    a, b = p._coeffs, q._coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        cur = out[i]
        if cur is INF or (c is not INF and c < cur):
            out[i] = c
    return TropPoly._raw(out)


def trop_mul(p: TropPoly, q: TropPoly) -> TropPoly:
    """Min-plus convolution: result coefficient k is min_i (p_i + q_{k-i}).

    The zero polynomial is absorbing.  Exact arithmetic throughout.
    """
    a, b = p._coeffs, q._coeffs
    if not a or not b:
        return TropPoly.zero()
    out = [INF] * (len(a) + len(b) - 1)
    inf = INF
    for i, ai in enumerate(a):
        if ai is inf:
            continue
        for j, bj in enumerate(b):
            if bj is inf:
                continue
            s = ai + bj
            k = i + j
            cur = out[k]
            if cur is inf or s < cur:
                out[k] = s
    return TropPoly._raw(out)


def trop_pow(p: TropPoly, e: int) -> TropPoly:
    if e < 0:
        raise ValueError("negative tropical power")
    acc = TropPoly.one()
    for _ in range(e):
        acc = trop_mul(acc, p)
    return acc


def evaluate(p: TropPoly, x: TropScalar) -> TropScalar:
    """min over i of (p_i + i*x).  The zero polynomial evaluates to INF."""
    x = as_scalar(x)
    best = INF
    for i, c in enumerate(p._coeffs):
        if c is INF:
            continue
        v = c + i * x
        if best is INF or v < best:
            best = v
    return best


def normalize_content(p: TropPoly) -> Tuple[int, TropScalar, TropPoly]:
    """Split p into monomial degree, additive constant, and core.

    p = x^m (tropically) times constant times core, formally; the core has a
    finite coefficient at degree 0 and minimum finite coefficient 0.
    """
    if p.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    cs = p._coeffs
    m = 0
    while cs[m] is INF:
        m += 1
    const = min(c for c in cs if c is not INF)
    core = TropPoly._raw([c - const for c in cs[m:]])
    return m, const, core


class BoolPoly:
    """Support set of a 0/INF polynomial, stored as a bitmask."""

    __slots__ = ("_mask",)

    def __init__(self, support: Iterable[int]):
        mask = 0
        for d in support:
            if not isinstance(d, int) or isinstance(d, bool) or d < 0:
                raise ValueError(f"support degrees must be nonnegative integers, got {d!r}")
            mask |= 1 << d
        self._mask = mask

    @classmethod
    def from_mask(cls, mask: int) -> "BoolPoly":
        if mask < 0:
            raise ValueError("negative mask")
        self = object.__new__(cls)
        self._mask = mask
        return self

    @property
    def mask(self) -> int:
        return self._mask

    @property
    def support(self) -> frozenset:
        return frozenset(self.degrees())

    def degrees(self) -> Tuple[int, ...]:
        m = self._mask
        out = []
        d = 0
        while m:
            if m & 1:
                out.append(d)
            m >>= 1
            d += 1
        return tuple(out)

    @property
    def degree(self) -> int:
        return self._mask.bit_length() - 1

    def __contains__(self, d: int) -> bool:
        return d >= 0 and (self._mask >> d) & 1 == 1

    def __eq__(self, other):
        if isinstance(other, BoolPoly):
            return self._mask == other._mask
        return NotImplemented

    def __hash__(self):
        return hash(self._mask)

    def __repr__(self):
        return f"BoolPoly({{{', '.join(map(str, self.degrees()))}}})"

    def to_trop(self) -> TropPoly:
        return TropPoly([0 if d in self else INF for d in range(self.degree + 1)])

    @classmethod
    def from_trop(cls, p: TropPoly) -> "BoolPoly":
        mask = 0
        for i, c in enumerate(p.coeffs):
            if c is INF:
                continue
            if c != 0:
                raise ValueError("polynomial has a finite coefficient other than 0")
            mask |= 1 << i
        return cls.from_mask(mask)


def bool_mul(a: BoolPoly, b: BoolPoly) -> BoolPoly:
    """Minkowski sum of the supports."""
    am, bm = a.mask, b.mask
    if am == 0 or bm == 0:
        return BoolPoly.from_mask(0)
    out = 0
    d = 0
    while am:
        if am & 1:
            out |= bm << d
        am >>= 1
        d += 1
    return BoolPoly.from_mask(out)


class BoolPoly2:
    """Finite set of lattice points in the first quadrant."""

    __slots__ = ("_points", "_filled")

    def __init__(self, points: Iterable[Tuple[int, int]]):
        pts = set()
        for p in points:
            i, j = p
            if not isinstance(i, int) or not isinstance(j, int) or i < 0 or j < 0:
                raise ValueError(f"points must be pairs of nonnegative integers, got {p!r}")
            pts.add((i, j))
        self._points = frozenset(pts)
        self._filled = None

    @property
    def points(self) -> frozenset:
        return self._points

    def __eq__(self, other):
        if isinstance(other, BoolPoly2):
            return self._points == other._points
        return NotImplemented

    def __hash__(self):
        return hash(self._points)

    def __len__(self):
        return len(self._points)

    def __repr__(self):
        return f"BoolPoly2({sorted(self._points)!r})"

    @property
    def is_filled(self) -> bool:
        """True iff the support is downward closed."""
        if self._filled is None:
            pts = self._points
            ok = True
            for (i, j) in pts:
                if i > 0 and (i - 1, j) not in pts:
                    ok = False
                    break
                if j > 0 and (i, j - 1) not in pts:
                    ok = False
                    break
            self._filled = ok
        return self._filled

    def frontier(self) -> frozenset:
        """The maximal points (nothing else in the set dominates them)."""
        pts = self._points
        out = set()
        for (i, j) in pts:
            dominated = False
            for (a, b) in pts:
                if (a, b) != (i, j) and a >= i and b >= j:
                    dominated = True
                    break
            if not dominated:
                out.add((i, j))
        return frozenset(out)

    def fill(self) -> "BoolPoly2":
        """Downward closure."""
        if self.is_filled:
            return self
        return _fill_from(self.frontier())


def _fill_from(frontier) -> BoolPoly2:
    pts = set()
    for (i, j) in frontier:
        for a in range(i + 1):
            for b in range(j + 1):
                pts.add((a, b))
    out = object.__new__(BoolPoly2)
    out._points = frozenset(pts)
    out._filled = True
    return out


def _maximal(points) -> frozenset:
    by_x = {}
    for (i, j) in points:
        if j > by_x.get(i, -1):
            by_x[i] = j
    out = set()
    best = -1
    for i in sorted(by_x, reverse=True):
        if by_x[i] > best:
            out.add((i, by_x[i]))
            best = by_x[i]
    return frozenset(out)


def bool2_mul(a: BoolPoly2, b: BoolPoly2) -> BoolPoly2:
    """2-D Minkowski sum of the supports.

    Filled operands stay filled, and are multiplied via their frontiers so
    the cost depends on the staircases rather than the full areas.
    """
    if not a.points or not b.points:
        return BoolPoly2(())
    if a.is_filled and b.is_filled:
        fa, fb = a.frontier(), b.frontier()
        sums = {(i + x, j + y) for (i, j) in fa for (x, y) in fb}
        return _fill_from(_maximal(sums))
    return BoolPoly2({(i + x, j + y) for (i, j) in a.points for (x, y) in b.points})
