"""Tropical matrices: assignment values, nonsingularity, and rank.

The tropical permanent of a square matrix is the minimum over permutations
of the sum of the selected entries, i.e. an assignment problem.  A square
matrix is nonsingular when that minimum is finite and attained by exactly
one permutation.  The resultant-style eliminant of two polynomials is
nonsingular exactly when the polynomials share no nontrivial factor, which
is what ``common_factor_obstruction`` certifies.

The assignment solver is a potentials-based shortest-augmenting-path
method over exact scalars; INF entries are forbidden cells.  Uniqueness is
decided by re-solving with each witness cell forbidden in turn.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .poly import TropPoly
from .scalar import INF, TropScalar, as_scalar


class TropMatrix:
    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rs = tuple(tuple(as_scalar(c) for c in row) for row in rows)
        if not rs or not rs[0]:
            raise ValueError("matrix must have at least one row and column")
        w = len(rs[0])
        if any(len(r) != w for r in rs):
            raise ValueError("matrix rows must have equal length")
        self._rows = rs

    @property
    def rows(self) -> Tuple[Tuple[TropScalar, ...], ...]:
        return self._rows

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0])

    def entry(self, i: int, j: int) -> TropScalar:
        return self._rows[i][j]

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "TropMatrix":
        return TropMatrix(tuple(tuple(self._rows[i][j] for j in col_idx) for i in row_idx))

    def __eq__(self, other):
        if isinstance(other, TropMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"TropMatrix({[list(r) for r in self._rows]!r})"


@dataclass(frozen=True)
class AssignmentResult:
    optimal_value: TropScalar
    witness: Optional[Tuple[int, ...]]  # witness[i] = column assigned to row i
    unique: bool


def _solve_assignment(rows, banned=()):
    """Minimum-cost perfect matching; returns (value, perm) or (INF, None).

    ``banned`` is a set of (row, col) cells treated as forbidden on top of
    the INF entries.
    """
    n = len(rows)
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    p = [0] * (n + 1)  # p[j] = 1-based row matched to column j; column 0 is virtual
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = INF
            j1 = -1
            row = rows[i0 - 1]
            ui0 = u[i0]
            for j in range(1, n + 1):
                if used[j]:
                    continue
                a = row[j - 1]
                if a is INF or (i0 - 1, j - 1) in banned:
                    cur = INF
                else:
                    cur = a - ui0 - v[j]
                if cur is not INF and (minv[j] is INF or cur < minv[j]):
                    minv[j] = cur
                    way[j] = j0
                mj = minv[j]
                if mj is not INF and (delta is INF or mj < delta):
                    delta = mj
                    j1 = j
            if delta is INF:
                return INF, None  # no finite perfect matching
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                elif minv[j] is not INF:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    perm = [0] * n
    for j in range(1, n + 1):
        perm[p[j] - 1] = j - 1
    value = 0
    for i in range(n):
        value = value + rows[i][perm[i]]
    return value, tuple(perm)


def min_assignment(m: TropMatrix) -> AssignmentResult:
    """Tropical permanent with witness permutation and uniqueness flag."""
    if m.nrows != m.ncols:
        raise ValueError("assignment needs a square matrix")
    rows = m.rows
    value, perm = _solve_assignment(rows)
    if perm is None:
        return AssignmentResult(INF, None, False)
    unique = True
    for i in range(len(perm)):
        alt, _ = _solve_assignment(rows, banned={(i, perm[i])})
        if alt is not INF and alt == value:
            unique = False
            break
    return AssignmentResult(value, perm, unique)


def is_nonsingular(m: TropMatrix) -> bool:
    res = min_assignment(m)
    return res.optimal_value is not INF and res.unique


def eliminant(f: TropPoly, g: TropPoly) -> TropMatrix:
    """Square matrix of shifted coefficient rows, s copies of f then r of g."""
    r, s = f.degree, g.degree
    if r < 1 or s < 1:
        raise ValueError("eliminant needs both degrees at least 1")
    n = r + s
    rows = []
    fc, gc = f.coeffs, g.coeffs
    for t in range(s):
        rows.append([INF] * t + list(fc) + [INF] * (n - r - 1 - t))
    for t in range(r):
        rows.append([INF] * t + list(gc) + [INF] * (n - s - 1 - t))
    return TropMatrix(rows)


def common_factor_obstruction(f: TropPoly, g: TropPoly) -> bool:
    """True certifies that f and g have no common factor."""
    return is_nonsingular(eliminant(f, g))


def tropical_rank(m: TropMatrix, size_cap: int = 8) -> int:
    """Largest k with a nonsingular k x k submatrix, by descending search.

    Guarded by size_cap: min(rows, cols) above it is refused since the
    enumeration is combinatorial; for full-rank questions on two-valued
    matrices use two_value_rank_full instead.
    """
    k0 = min(m.nrows, m.ncols)
    if k0 > size_cap:
        raise ValueError(
            f"matrix side {k0} exceeds size_cap {size_cap}; "
            "for two-valued matrices two_value_rank_full decides full rank directly"
        )
    for k in range(k0, 0, -1):
        for ri in itertools.combinations(range(m.nrows), k):
            for ci in itertools.combinations(range(m.ncols), k):
                if is_nonsingular(m.submatrix(ri, ci)):
                    return k
    return 0


def two_value_rank_full(m: TropMatrix) -> bool:
    """Full-rank decision for a k x n matrix over exactly two finite values.

    Requires k <= n and the higher value present in every column.  Marks
    the lower value and grows a covered-row set: each stage consumes a
    column whose marked cells hit exactly one uncovered row.  The matrix
    has tropical rank k iff all k rows get covered.
    """
    k, n = m.nrows, m.ncols
    if k > n:
        raise ValueError("expected at most as many rows as columns; transpose first")
    values = sorted({c for row in m.rows for c in row}, key=lambda c: (c is INF, c))
    if any(c is INF for row in m.rows for c in row):
        raise ValueError("entries must be finite")
    if len(values) != 2:
        raise ValueError(f"expected exactly two distinct values, found {len(values)}")
    low, high = values
    for j in range(n):
        if not any(m.entry(i, j) == high for i in range(k)):
            raise ValueError(f"column {j} lacks the higher value")
    marked = [[m.entry(i, j) == low for j in range(n)] for i in range(k)]
    covered = [False] * k
    for _ in range(k):
        found = -1
        for j in range(n):
            outside = [i for i in range(k) if marked[i][j] and not covered[i]]
            if len(outside) == 1:
                found = outside[0]
                break
        if found < 0:
            return False
        covered[found] = True
    return all(covered)
