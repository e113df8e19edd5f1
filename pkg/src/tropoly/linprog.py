"""Exact rational feasibility engines.

Two tools live here.  ``DifferenceSystem`` decides systems of difference
constraints x_v - x_u <= w incrementally, keeping the full implied-bound
matrix up to date after each added constraint; this is the pruning engine
of the factorization search, where feasibility questions arrive one edge
at a time along a branch.  ``linear_feasible`` decides a general rational
inequality system and produces a witness point; unit-two-variable systems
go through a doubled constraint graph, everything else through a phase-1
simplex with Bland's rule.

All arithmetic is int/Fraction.  Unreachability inside DifferenceSystem is
represented by a large integer sentinel chosen above any weight sum the
system can produce, so the inner loops stay plain min/plus on numbers; any
entry above the real-value bound means "no constraint".
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple


class DifferenceSystem:
    """Difference constraints with an incrementally maintained bound matrix.

    d[u][v] is the tightest implied upper bound on x_v - x_u.  Entries
    larger than ``threshold`` mean unbounded.  Adding a constraint that
    would create a negative cycle is refused (the system is unchanged and
    ``add`` returns False).
    """

    __slots__ = ("n", "d", "threshold", "_big", "feasible")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int, object]], weight_budget):
        # weight_budget: upper bound on the total absolute weight of every
        # constraint this system will ever see (initial and added).
        self.n = n
        b0 = weight_budget + 1
        self.threshold = b0
        self._big = 4 * b0
        big = self._big
        d = [[big] * n for _ in range(n)]
        self.d = d
        for i in range(n):
            d[i][i] = 0
        for u, v, w in edges:
            if w < d[u][v]:
                d[u][v] = w
        # Floyd-Warshall closure.
        rng = range(n)
        for k in rng:
            dk = d[k]
            for i in rng:
                dik = d[i][k]
                if dik >= b0:
                    continue
                di = d[i]
                for j in rng:
                    c = dik + dk[j]
                    if c < di[j]:
                        di[j] = c
        self.feasible = all(d[i][i] >= 0 for i in rng)

    def copy(self) -> "DifferenceSystem":
        out = object.__new__(DifferenceSystem)
        out.n = self.n
        out.threshold = self.threshold
        out._big = self._big
        out.feasible = self.feasible
        out.d = [row[:] for row in self.d]
        return out

    def bound(self, u: int, v: int):
        """Tightest implied x_v - x_u <= bound, or None if unbounded."""
        b = self.d[u][v]
        return None if b > self.threshold else b

    def consistent_with(self, u: int, v: int, w) -> bool:
        """Would adding x_v - x_u <= w keep the system feasible?"""
        return self.d[v][u] + w >= 0

    def add(self, u: int, v: int, w) -> bool:
        """Add x_v - x_u <= w.  Returns False (system unchanged) if the
        constraint contradicts the system."""
        d = self.d
        if d[v][u] + w < 0:
            return False
        if d[u][v] <= w:
            return True
        rng = range(self.n)
        threshold = self.threshold
        dv = d[v]
        for s in rng:
            dsu = d[s][u]
            if dsu >= threshold:
                continue
            base = dsu + w
            ds = d[s]
            if base >= ds[v]:
                # the closure already dominates every path through the new
                # edge from this row
                continue
            for t in rng:
                c = base + dv[t]
                if c < ds[t]:
                    ds[t] = c
        return True

    def solution(self) -> List:
        """A witness assignment: shortest distances from a virtual source
        with a zero edge to every node."""
        d = self.d
        out = []
        for v in range(self.n):
            m = 0
            for u in range(self.n):
                duv = d[u][v]
                if duv < m:
                    m = duv
            out.append(m)
        return out


Rel = str  # "<=", ">=", or "=="
Constraint = Tuple[Dict[str, object], Rel, object]


def linear_feasible(constraints: Sequence[Constraint]):
    """Decide a rational linear system.

    Each constraint is (coeffs, rel, rhs) with coeffs mapping variable
    names to rational coefficients and rel one of "<=", ">=", "==".
    Returns (True, witness dict) or (False, None).  The witness is checked
    against every constraint before it is returned.
    """
    rows: List[Tuple[Dict[str, Fraction], Fraction]] = []
    for coeffs, rel, rhs in constraints:
        cs = {v: Fraction(a) for v, a in coeffs.items() if a != 0}
        r = Fraction(rhs)
        if rel == "<=":
            rows.append((cs, r))
        elif rel == ">=":
            rows.append(({v: -a for v, a in cs.items()}, -r))
        elif rel == "==":
            rows.append((cs, r))
            rows.append(({v: -a for v, a in cs.items()}, -r))
        else:
            raise ValueError(f"unknown relation {rel!r}")

    for cs, r in rows:
        if not cs and r < 0:
            return False, None
    rows = [(cs, r) for cs, r in rows if cs]
    if not rows:
        return True, {}

    if all(len(cs) <= 2 and all(a == 1 or a == -1 for a in cs.values()) for cs, _ in rows):
        return _utvpi(rows)
    return _simplex_phase1(rows)


def _verify(rows, witness) -> None:
    for cs, r in rows:
        total = sum(a * witness[v] for v, a in cs.items())
        assert total <= r, "feasibility witness violates a constraint"


def _utvpi(rows):
    # Nodes (v, +1) and (v, -1) carry potentials +x_v and -x_v; each
    # constraint becomes a symmetric pair of weighted edges and the system
    # is feasible iff the graph has no negative cycle.
    variables = sorted({v for cs, _ in rows for v in cs})
    index = {}
    for v in variables:
        index[(v, 1)] = len(index)
        index[(v, -1)] = len(index)
    edges = []
    for cs, r in rows:
        items = sorted(cs.items())
        if len(items) == 1:
            (x, s) = items[0]
            edges.append((index[(x, -s)], index[(x, s)], 2 * r))
        else:
            (x, s1), (y, s2) = items
            edges.append((index[(x, -s1)], index[(y, s2)], r))
            edges.append((index[(y, -s2)], index[(x, s1)], r))
    n = len(index)
    dist = [Fraction(0)] * n
    for round_ in range(n):
        changed = False
        for u, v, w in edges:
            c = dist[u] + w
            if c < dist[v]:
                dist[v] = c
                changed = True
        if not changed:
            break
    else:
        if changed:
            return False, None
    for u, v, w in edges:
        if dist[u] + w < dist[v]:
            return False, None
    witness = {}
    for v in variables:
        val = (dist[index[(v, 1)]] - dist[index[(v, -1)]]) / 2
        witness[v] = int(val) if val.denominator == 1 else val
    _verify(rows, witness)
    return True, witness


def _simplex_phase1(rows):
    # Free variables split as v = v+ - v-; every row gets a slack; rows
    # are oriented to a nonnegative right side and given an artificial
    # basis where the slack cannot serve.  Feasible iff the artificials
    # can be driven to total zero.
    variables = sorted({v for cs, _ in rows for v in cs})
    ncols = 2 * len(variables)
    col_of = {v: 2 * i for i, v in enumerate(variables)}
    tableau: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for cs, r in rows:
        row = [Fraction(0)] * ncols
        for v, a in cs.items():
            row[col_of[v]] += a
            row[col_of[v] + 1] -= a
        tableau.append(row)
        rhs.append(Fraction(r))
    m = len(tableau)
    # slack columns
    for i in range(m):
        for j in range(m):
            tableau[i].append(Fraction(1 if i == j else 0))
    for i in range(m):
        if rhs[i] < 0:
            tableau[i] = [-a for a in tableau[i]]
            rhs[i] = -rhs[i]
    # artificial columns where the slack entered negated
    basis = [None] * m
    total = ncols + m
    for i in range(m):
        if tableau[i][ncols + i] == 1:
            basis[i] = ncols + i
        else:
            for r2 in range(m):
                tableau[r2].append(Fraction(1 if r2 == i else 0))
            basis[i] = total
            total += 1
    nart = total - ncols - m
    cost = [Fraction(0)] * (ncols + m) + [Fraction(1)] * nart

    def reduced_cost(j):
        z = Fraction(0)
        for i in range(m):
            cb = cost[basis[i]]
            if cb:
                z += cb * tableau[i][j]
        return z - cost[j]

    while True:
        entering = -1
        for j in range(total):
            if reduced_cost(j) > 0:
                entering = j
                break
        if entering < 0:
            break
        leaving = -1
        best = None
        for i in range(m):
            a = tableau[i][entering]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving < 0:
            break  # unbounded phase-1 objective cannot happen; defensive
        piv = tableau[leaving][entering]
        tableau[leaving] = [a / piv for a in tableau[leaving]]
        rhs[leaving] /= piv
        for i in range(m):
            if i != leaving:
                f = tableau[i][entering]
                if f:
                    tableau[i] = [a - f * b for a, b in zip(tableau[i], tableau[leaving])]
                    rhs[i] -= f * rhs[leaving]
        basis[leaving] = entering

    objective = sum(cost[basis[i]] * rhs[i] for i in range(m))
    if objective != 0:
        return False, None
    values = [Fraction(0)] * total
    for i in range(m):
        values[basis[i]] = rhs[i]
    witness = {}
    for v in variables:
        val = values[col_of[v]] - values[col_of[v] + 1]
        witness[v] = int(val) if val.denominator == 1 else val
    _verify(rows, witness)
    return True, witness
