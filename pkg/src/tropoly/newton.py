"""Newton diagrams (lower convex hulls of coefficient point sets).

The diagram of a polynomial is the lower hull of the points (i, c_i) over
the finite coefficients.  Vertices are the hull corners only: collinear
interior points lie on the hull but are not vertices.  Edges are recorded
as (width, slope) pairs with exact rational slopes, and consecutive edge
slopes strictly increase.

The product rule: the diagram of a tropical product is obtained by merging
the factor edge multisets in slope order, adding widths of equal-slope
edges, and starting at the vectorial sum of the start vertices.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from .poly import TropPoly
from .scalar import INF, TropScalar, as_scalar


class NewtonDiagram:
    __slots__ = ("_vertices", "_edges")

    def __init__(self, vertices: Sequence[Tuple[int, TropScalar]]):
        vs = [(int(x), as_scalar(y)) for x, y in vertices]
        if not vs:
            raise ValueError("a Newton diagram needs at least one vertex")
        for x, y in vs:
            if y is INF:
                raise ValueError("diagram vertices must be finite")
        for (x1, _), (x2, _) in zip(vs, vs[1:]):
            if x2 <= x1:
                raise ValueError("vertex x-coordinates must strictly increase")
        edges = []
        for (x1, y1), (x2, y2) in zip(vs, vs[1:]):
            w = x2 - x1
            s = _ratio(y2 - y1, w)
            edges.append((w, s))
        for (_, s1), (_, s2) in zip(edges, edges[1:]):
            if not s2 > s1:
                raise ValueError("edge slopes must strictly increase")
        self._vertices = tuple(vs)
        self._edges = tuple(edges)

    @property
    def vertices(self) -> Tuple[Tuple[int, TropScalar], ...]:
        return self._vertices

    @property
    def edges(self) -> Tuple[Tuple[int, TropScalar], ...]:
        return self._edges

    @property
    def span(self) -> int:
        return self._vertices[-1][0] - self._vertices[0][0]

    def height(self, x) -> TropScalar:
        """Exact hull height at horizontal position x (within the span)."""
        vs = self._vertices
        if x < vs[0][0] or x > vs[-1][0]:
            raise ValueError("position outside the diagram span")
        for (x1, y1), (x2, y2) in zip(vs, vs[1:]):
            if x1 <= x <= x2:
                return as_scalar(y1 + _ratio((y2 - y1) * (x - x1), x2 - x1))
        return vs[-1][1]

    def __eq__(self, other):
        if isinstance(other, NewtonDiagram):
            return self._vertices == other._vertices
        return NotImplemented

    def __hash__(self):
        return hash(self._vertices)

    def __repr__(self):
        return f"NewtonDiagram(vertices={list(self._vertices)!r})"


def _ratio(num, den):
    if isinstance(num, int) and isinstance(den, int):
        if num % den == 0:
            return num // den
        return Fraction(num, den)
    return as_scalar(Fraction(num) / Fraction(den))


def _cross(o, a, b):
    # Exact orientation of the path o -> a -> b; > 0 means a left turn,
    # which for ascending x keeps a below the chord o-b.
    return (a[0] - o[0]) * (b[1] - o[1]) - (b[0] - o[0]) * (a[1] - o[1])


def lower_hull(p: TropPoly) -> NewtonDiagram:
    """Newton diagram of p.  Rejects the zero polynomial."""
    pts = [(i, c) for i, c in enumerate(p.coeffs) if c is not INF]
    if not pts:
        raise ValueError("the zero polynomial has no Newton diagram")
    hull: List[Tuple[int, TropScalar]] = []
    for pt in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return NewtonDiagram(hull)


def merge_hulls(d1: NewtonDiagram, d2: NewtonDiagram) -> NewtonDiagram:
    """Diagram of a product from the diagrams of the factors."""
    x = d1.vertices[0][0] + d2.vertices[0][0]
    y = d1.vertices[0][1] + d2.vertices[0][1]
    merged = []
    for w, s in sorted(list(d1.edges) + list(d2.edges), key=lambda e: e[1]):
        if merged and merged[-1][1] == s:
            merged[-1][0] += w
        else:
            merged.append([w, s])
    vertices = [(x, y)]
    for w, s in merged:
        x += w
        y = as_scalar(y + s * w)
        vertices.append((x, y))
    return NewtonDiagram(vertices)


def is_strictly_above_chord(p: TropPoly) -> bool:
    """True iff every interior coefficient lies strictly above the segment
    from (0, c_0) to (n, c_n).

    Requires all coefficients finite and degree at least 2.
    """
    cs = p.coeffs
    n = len(cs) - 1
    if n < 2:
        raise ValueError("chord test needs degree at least 2")
    if any(c is INF for c in cs):
        raise ValueError("chord test needs all coefficients finite")
    c0, cn = cs[0], cs[n]
    for k in range(1, n):
        # c_k > c_0 + k (c_n - c_0)/n, cleared of the denominator.
        if not cs[k] * n > c0 * (n - k) + cn * k:
            return False
    return True
