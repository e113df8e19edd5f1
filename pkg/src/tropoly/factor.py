"""Factorization of min-plus polynomials.

The searchable structure of a tropical factorization: if p = f*g then the
diagram of p is the slope-ordered merge of the diagrams of f and g, so
every factorization selects, per hull edge of p, how much width each
factor takes (a DegreeSplit).  Within one split the unknown coefficients
satisfy a system of two-variable constraints:

    a_i + b_j >= c_{i+j}          for every index pair,
    some pair attains equality    at every product degree,

plus the pinned hull of each factor.  The search space can be boxed: any
factorization of a normalized polynomial can be shifted and capped so
both factors take values in [0, M] with M the largest finite coefficient
of p, without changing the product or the factor diagrams.  A cheap
interval pass over that box freezes every coefficient it pins exactly
(endpoints, hull vertices, all degrees forced to the cap), and only the
remaining free coefficients enter a difference-constraint system.  The
branch and bound then resolves attainment degree by degree: pairs whose
equality already follows are accepted silently, degrees with a single
viable pair are committed, and only genuinely ambiguous degrees branch,
fewest viable pairs first and ends inward on ties.

Polynomials with Infinity interior coefficients factor through support
pairs first: the two supports must add up to the support of p, so we
enumerate candidate left supports and run the numeric search on each
maximal compatible right support.

Boolean supports get their own exhaustive Minkowski decomposition and the
triple test, a one-sided irreducibility certificate.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .linprog import DifferenceSystem
from .newton import lower_hull
from .poly import BoolPoly, TropPoly, bool_mul, normalize_content, trop_mul
from .scalar import INF, TropScalar, as_scalar


@dataclass(frozen=True)
class DegreeSplit:
    left_degree: int
    right_degree: int
    # per hull edge of p: (width to the left factor, width to the right)
    edge_assignment: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class ChoiceProfile:
    # choices[k] = left index of the chosen attaining pair at degree k,
    # None where the product coefficient is Infinity
    choices: Tuple[Optional[int], ...]


@dataclass(frozen=True)
class FactorizationCertificate:
    """Self-verifying factorization: content plus two or more factors."""

    factors: Tuple[TropPoly, ...]
    monomial_degree: int
    constant: TropScalar

    def recombine(self) -> TropPoly:
        acc = TropPoly.monomial(self.monomial_degree, self.constant)
        for f in self.factors:
            acc = trop_mul(acc, f)
        return acc

    def verify(self, original: TropPoly) -> bool:
        return self.recombine() == original


def _require_core(p: TropPoly) -> None:
    if p.is_zero():
        raise ValueError("expected a nonzero polynomial")
    if p.coefficient(0) is INF:
        raise ValueError("expected a normalized polynomial (finite constant term)")
    if min(c for c in p.coeffs if c is not INF) != 0:
        raise ValueError("expected a normalized polynomial (minimum coefficient 0)")


def irreducible_by_chord(p: TropPoly) -> bool:
    """One-sided certificate: interior strictly above the end-to-end chord
    means p has no factorization beyond monomial content.

    Inconclusive (False) for degree below 2.  Rejects Infinity
    coefficients and non-normalized input.
    """
    _require_core(p)
    if any(c is INF for c in p.coeffs):
        raise ValueError("chord test applies to full-support polynomials")
    if p.degree < 2:
        return False
    from .newton import is_strictly_above_chord

    return is_strictly_above_chord(p)


def factor_convex(p: TropPoly) -> FactorizationCertificate:
    """Split a polynomial whose every coefficient point lies on its hull
    into deg p linear factors, one per unit of edge width."""
    _require_core(p)
    if any(c is INF for c in p.coeffs):
        raise ValueError("convex factorization applies to full-support polynomials")
    if p.degree < 2:
        raise ValueError("nothing to split below degree 2")
    diagram = lower_hull(p)
    for i, c in enumerate(p.coeffs):
        if diagram.height(i) != c:
            raise ValueError(f"coefficient at degree {i} lies above the hull")
    factors = []
    for w, s in diagram.edges:
        factors.extend(TropPoly([0, s]) for _ in range(w))
    cert = FactorizationCertificate(tuple(factors), 0, p.coefficient(0))
    assert cert.verify(p), "convex split failed to recombine"
    return cert


def candidate_degree_splits(p: TropPoly, integer_only: bool = False) -> List[DegreeSplit]:
    """All ways to distribute hull edge widths between two nontrivial
    factors, in lexicographic order of the per-edge left widths.

    With integer_only, splits whose forced factor hull vertices sit at
    non-integer heights are pruned.
    """
    _require_core(p)
    if p.degree <= 1:
        return []
    edges = lower_hull(p).edges
    splits = []
    for assign in itertools.product(*(range(w + 1) for w, _ in edges)):
        r = sum(assign)
        s = p.degree - r
        if r == 0 or s == 0:
            continue
        if integer_only and not _integer_prefix_heights(edges, assign):
            continue
        splits.append(
            DegreeSplit(r, s, tuple((l, w - l) for l, (w, _) in zip(assign, edges)))
        )
    return splits


def _integer_prefix_heights(edges, assign) -> bool:
    h = 0
    for l, (_, slope) in zip(assign, edges):
        h = h + l * slope
        if Fraction(h).denominator != 1:
            return False
    return True


def _polyline(edges, widths):
    """Vertices and segments of the factor hull selected by the widths.

    Returns (vertex dict x -> height, segment list (x1, x2, h1, slope)).
    """
    vertices = {0: 0}
    segments = []
    x = 0
    h = 0
    for (w, slope), l in zip(edges, widths):
        if l:
            segments.append((x, x + l, h, slope))
            x += l
            h = as_scalar(Fraction(h) + Fraction(slope) * l)
            vertices[x] = h
    return vertices, segments


def _polyline_height(vertices, segments, i):
    if i in vertices:
        return vertices[i]
    for x1, x2, h1, slope in segments:
        if x1 <= i <= x2:
            return as_scalar(Fraction(h1) + Fraction(slope) * (i - x1))
    raise ValueError(f"position {i} outside the factor span")


class _Search:
    """Attainment search over one degree split and one support pair."""

    def __init__(self, core: TropPoly, split: DegreeSplit, A: Sequence[int], B: Sequence[int]):
        self.core = core
        self.c = list(core.coeffs)
        self.n = core.degree
        self.A = list(A)
        self.B = list(B)
        self.split = split
        self.ok = self._prepare()

    def _prepare(self) -> bool:
        edges = lower_hull(self.core).edges
        left_w = [l for l, _ in self.split.edge_assignment]
        right_w = [r for _, r in self.split.edge_assignment]
        va, sa = _polyline(edges, left_w)
        vb, sb = _polyline(edges, right_w)
        # factor hull vertices must be support points
        if any(x not in self.A for x in va) or any(x not in self.B for x in vb):
            return False
        M = max(c for c in self.c if c is not INF)
        lo_a = {}
        hi_a = {}
        lo_b = {}
        hi_b = {}
        for i in self.A:
            L = _polyline_height(va, sa, i)
            lo_a[i] = L if L > 0 else 0
            hi_a[i] = M
        for j in self.B:
            L = _polyline_height(vb, sb, j)
            lo_b[j] = L if L > 0 else 0
            hi_b[j] = M
        self.va, self.sa, self.vb, self.sb = va, sa, vb, sb
        pairs: Dict[int, List[Tuple[int, int]]] = {}
        bset = set(self.B)
        for k in range(self.n + 1):
            if self.c[k] is INF:
                continue
            ps = [(i, k - i) for i in self.A if (k - i) in bset]
            if not ps:
                return False
            pairs[k] = ps
        self.pairs = pairs

        # Interval tightening: lower bounds from the >= side, upper bounds
        # from pinned vertices and degrees with a single index pair.  A few
        # rounds suffice; stopping early only leaves intervals looser.
        for _ in range(8):
            changed = False

            def raise_lo(d, key, v):
                nonlocal changed
                if v > d[key]:
                    d[key] = v
                    changed = True

            def drop_hi(d, key, v):
                nonlocal changed
                if v < d[key]:
                    d[key] = v
                    changed = True

            for x, h in va.items():
                raise_lo(lo_a, x, h + lo_a[0])
                drop_hi(hi_a, x, h + hi_a[0])
                raise_lo(lo_a, 0, lo_a[x] - h)
                drop_hi(hi_a, 0, hi_a[x] - h)
            for x, h in vb.items():
                raise_lo(lo_b, x, h + lo_b[0])
                drop_hi(hi_b, x, h + hi_b[0])
                raise_lo(lo_b, 0, lo_b[x] - h)
                drop_hi(hi_b, 0, hi_b[x] - h)
            for i in self.A:
                if i not in va:
                    raise_lo(lo_a, i, _polyline_height(va, sa, i) + lo_a[0])
            for j in self.B:
                if j not in vb:
                    raise_lo(lo_b, j, _polyline_height(vb, sb, j) + lo_b[0])
            for k, ps in pairs.items():
                ck = self.c[k]
                for i, j in ps:
                    raise_lo(lo_a, i, ck - hi_b[j])
                    raise_lo(lo_b, j, ck - hi_a[i])
                if len(ps) == 1:
                    i, j = ps[0]
                    drop_hi(hi_a, i, ck - lo_b[j])
                    drop_hi(hi_b, j, ck - lo_a[i])
            if any(lo_a[i] > hi_a[i] for i in self.A) or any(
                lo_b[j] > hi_b[j] for j in self.B
            ):
                return False
            if not changed:
                break

        # attainment candidates: pairs whose boxed sum range covers c_k
        self.attain: Dict[int, List[Tuple[int, int]]] = {}
        for k, ps in pairs.items():
            ck = self.c[k]
            cands = [
                (i, j)
                for i, j in ps
                if lo_a[i] + lo_b[j] <= ck and hi_a[i] + hi_b[j] >= ck
            ]
            if not cands:
                return False
            self.attain[k] = cands

        self.lo_a, self.hi_a, self.lo_b, self.hi_b = lo_a, hi_a, lo_b, hi_b
        self.const_a = {i for i in self.A if lo_a[i] == hi_a[i]}
        self.const_b = {j for j in self.B if lo_b[j] == hi_b[j]}
        free_a = [i for i in self.A if i not in self.const_a]
        free_b = [j for j in self.B if j not in self.const_b]
        self.node_a = {i: 1 + t for t, i in enumerate(free_a)}
        self.node_b = {j: 1 + len(free_a) + t for t, j in enumerate(free_b)}
        nv = 1 + len(free_a) + len(free_b)

        edges_sys = []
        wmax = max(
            [1, M]
            + [abs(self.c[k]) for k in pairs]
            + [abs(lo_a[i]) for i in self.A]
            + [abs(hi_a[i]) for i in self.A]
            + [abs(lo_b[j]) for j in self.B]
            + [abs(hi_b[j]) for j in self.B]
        )
        npairs = sum(len(ps) for ps in pairs.values())
        budget = wmax * (3 * npairs + 6 * nv + 4 * (len(self.A) + len(self.B)) + 16)

        for i, node in self.node_a.items():
            edges_sys.append((0, node, hi_a[i]))  # a_i - z <= hi
            edges_sys.append((node, 0, -lo_a[i]))  # z - a_i <= -lo
        for j, node in self.node_b.items():
            edges_sys.append((node, 0, hi_b[j]))  # z - b'_j <= hi  (b_j <= hi)
            edges_sys.append((0, node, -lo_b[j]))  # b'_j - z <= -lo (b_j >= lo)
        # relative hull pins where both ends are free
        if 0 in self.node_a:
            a0 = self.node_a[0]
            for i, node in self.node_a.items():
                if i == 0:
                    continue
                L = _polyline_height(va, sa, i)
                edges_sys.append((node, a0, -L))
                if i in va:
                    edges_sys.append((a0, node, va[i]))
        if 0 in self.node_b:
            b0 = self.node_b[0]
            for j, node in self.node_b.items():
                if j == 0:
                    continue
                L = _polyline_height(vb, sb, j)
                edges_sys.append((b0, node, -L))
                if j in vb:
                    edges_sys.append((node, b0, vb[j]))
        for k, ps in pairs.items():
            ck = self.c[k]
            for i, j in ps:
                na, nb = self.node_a.get(i), self.node_b.get(j)
                if na is not None and nb is not None:
                    # a_i + b_j >= c_k,  in node terms b'_j - a_i <= -c_k
                    edges_sys.append((na, nb, -ck))
                # mixed and constant pairs were folded into the intervals

        self.sys = DifferenceSystem(nv, edges_sys, budget)
        return self.sys.feasible

    # pair status against a system state -----------------------------------
    def _viable(self, sys: DifferenceSystem, k: int, i: int, j: int) -> bool:
        ck = self.c[k]
        ca = i in self.const_a
        cb = j in self.const_b
        if ca and cb:
            return self.lo_a[i] + self.lo_b[j] == ck
        d = sys.d
        if ca:
            t = ck - self.lo_a[i]
            nb = self.node_b[j]
            return -d[0][nb] <= t <= d[nb][0]
        if cb:
            t = ck - self.lo_b[j]
            na = self.node_a[i]
            return -d[na][0] <= t <= d[0][na]
        return d[self.node_a[i]][self.node_b[j]] + ck >= 0

    def _forced(self, sys: DifferenceSystem, k: int, i: int, j: int) -> bool:
        ck = self.c[k]
        ca = i in self.const_a
        cb = j in self.const_b
        if ca and cb:
            return self.lo_a[i] + self.lo_b[j] == ck
        d = sys.d
        if ca:
            t = ck - self.lo_a[i]
            nb = self.node_b[j]
            return d[nb][0] <= t and -d[0][nb] >= t
        if cb:
            t = ck - self.lo_b[j]
            na = self.node_a[i]
            return d[0][na] <= t and -d[na][0] >= t
        return d[self.node_b[j]][self.node_a[i]] <= ck

    def _commit(self, sys: DifferenceSystem, k: int, i: int, j: int) -> bool:
        ck = self.c[k]
        ca = i in self.const_a
        cb = j in self.const_b
        if ca and cb:
            return self.lo_a[i] + self.lo_b[j] == ck
        if ca:
            t = ck - self.lo_a[i]
            nb = self.node_b[j]
            return sys.add(nb, 0, t) and sys.add(0, nb, -t)
        if cb:
            t = ck - self.lo_b[j]
            na = self.node_a[i]
            return sys.add(0, na, t) and sys.add(na, 0, -t)
        return sys.add(self.node_b[j], self.node_a[i], ck)

    def run(self) -> Optional[Tuple[TropPoly, TropPoly]]:
        if not self.ok:
            return None
        return self._solve(self.sys, sorted(self.attain))

    def _solve(self, sys: DifferenceSystem, unresolved: List[int]):
        unresolved = list(unresolved)
        while True:
            progress = False
            viable_by_k = {}
            for k in list(unresolved):
                cands = [(i, j) for i, j in self.attain[k] if self._viable(sys, k, i, j)]
                if not cands:
                    return None
                if any(self._forced(sys, k, i, j) for i, j in cands):
                    unresolved.remove(k)
                    progress = True
                    continue
                if len(cands) == 1:
                    i, j = cands[0]
                    if not self._commit(sys, k, i, j):
                        return None
                    unresolved.remove(k)
                    progress = True
                    continue
                viable_by_k[k] = cands
            if not progress:
                break
        if not unresolved:
            return self._extract(sys)
        n = self.n
        k = min(unresolved, key=lambda kk: (len(viable_by_k[kk]), min(kk, n - kk), kk))
        rest = [kk for kk in unresolved if kk != k]
        for i, j in viable_by_k[k]:
            child = sys.copy()
            if not self._commit(child, k, i, j):
                continue
            res = self._solve(child, rest)
            if res is not None:
                return res
        return None

    def _extract(self, sys: DifferenceSystem):
        x = sys.solution()
        aval = {}
        bval = {}
        for i in self.A:
            aval[i] = self.lo_a[i] if i in self.const_a else x[self.node_a[i]] - x[0]
        for j in self.B:
            bval[j] = self.lo_b[j] if j in self.const_b else x[0] - x[self.node_b[j]]
        shift = min(aval.values())
        fa = TropPoly(
            [aval[i] - shift if i in aval else INF for i in range(self.split.left_degree + 1)]
        )
        fb = TropPoly(
            [bval[j] + shift if j in bval else INF for j in range(self.split.right_degree + 1)]
        )
        assert trop_mul(fa, fb) == self.core, "search witness fails to recombine"
        return fa, fb


def _support_pairs(support: Sequence[int], r: int, s: int):
    """Left supports A with 0, r in A, paired with the maximal compatible
    right support; every Minkowski decomposition of the support extends to
    one of these pairs."""
    sset = set(support)
    inner = sorted(x for x in sset if 0 < x < r)
    for bits in itertools.product((0, 1), repeat=len(inner)):
        A = [0] + [x for x, b in zip(inner, bits) if b] + ([r] if r else [])
        if r == 0:
            A = [0]
        B = [j for j in range(s + 1) if all(i + j in sset for i in A)]
        if not B or B[0] != 0 or B[-1] != s:
            continue
        sums = {i + j for i in A for j in B}
        if sums == sset:
            yield A, B


def factor_bnb(p: TropPoly, split: DegreeSplit) -> Optional[FactorizationCertificate]:
    """Search for a factorization of p fitting the given degree split.

    Returns a verified certificate or None when no factorization fits the
    split.  Feasibility pruning is the same exact decision linear_feasible
    makes on the partial system, maintained incrementally as difference
    constraints.
    """
    _require_core(p)
    n = p.degree
    if split.left_degree + split.right_degree != n:
        raise ValueError("split degrees do not sum to deg p")
    edges = lower_hull(p).edges
    if len(split.edge_assignment) != len(edges) or any(
        l + r != w for (l, r), (w, _) in zip(split.edge_assignment, edges)
    ):
        raise ValueError("split does not match the diagram of p")
    if split.left_degree == 0 or split.right_degree == 0:
        raise ValueError("split must give both factors positive degree")

    r, s = split.left_degree, split.right_degree
    if all(c is not INF for c in p.coeffs):
        candidates = [(list(range(r + 1)), list(range(s + 1)))]
    else:
        candidates = _support_pairs(
            [i for i, c in enumerate(p.coeffs) if c is not INF], r, s
        )
    for A, B in candidates:
        res = _Search(p, split, A, B).run()
        if res is not None:
            cert = FactorizationCertificate(res, 0, 0)
            assert cert.verify(p)
            return cert
    return None


_IRRED_CACHE: Dict[Tuple, Tuple[bool, Optional[Tuple[TropPoly, ...]]]] = {}


def is_irreducible(p: TropPoly, integer_only: bool = False):
    """Decide irreducibility up to monomial content.

    Returns (verdict, certificate): the certificate is present exactly
    when p is reducible.  With integer_only only integer-coefficient
    factorizations count; a rational-only factorization leaves the
    verdict irreducible.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no factorization theory")
    m, const, core = normalize_content(p)
    key = (core.coeffs, integer_only)
    hit = _IRRED_CACHE.get(key)
    if hit is None:
        hit = _is_irreducible_core(core, integer_only)
        _IRRED_CACHE[key] = hit
    verdict, factors = hit
    if verdict:
        return True, None
    cert = FactorizationCertificate(factors, m, const)
    assert cert.verify(p), "cached certificate fails on this content"
    return False, cert


def _is_irreducible_core(core: TropPoly, integer_only: bool):
    if core.degree <= 1:
        return True, None
    if integer_only and any(
        c is not INF and Fraction(c).denominator != 1 for c in core.coeffs
    ):
        # integer factors multiply to an integer polynomial, so none exist
        return True, None
    finite = all(c is not INF for c in core.coeffs)
    if finite:
        if irreducible_by_chord(core):
            return True, None
        diagram = lower_hull(core)
        if all(diagram.height(i) == c for i, c in enumerate(core.coeffs)):
            cert = factor_convex(core)
            # factor_convex parks core's degree-0 coefficient in the
            # certificate constant; fold it back into the first factor so
            # the returned tuple multiplies to core exactly
            first = cert.factors[0]
            if cert.constant != 0:
                first = TropPoly([c + cert.constant for c in first.coeffs])
            return False, (first, *cert.factors[1:])
    else:
        if all(c == 0 for c in core.coeffs if c is not INF):
            pair = factor_boolean_bnb(BoolPoly.from_trop(core))
            if pair is None:
                return True, None
            return False, (pair[0].to_trop(), pair[1].to_trop())
    for split in candidate_degree_splits(core, integer_only):
        if split.left_degree > split.right_degree:
            continue  # the mirrored assignment covers it
        cert = factor_bnb(core, split)
        if cert is not None:
            fa, fb = cert.factors
            if integer_only:
                fa, fb = round_to_integer_factorization(fa, fb)
                assert trop_mul(fa, fb) == core
            return False, (fa, fb)
    return True, None


def factor_boolean_bnb(b: BoolPoly) -> Optional[Tuple[BoolPoly, BoolPoly]]:
    """First Minkowski decomposition of the support, or None.

    The support must contain 0 (strip the monomial factor first).  Both
    parts of a decomposition contain 0 and at least one more element; the
    smallest positive support element always joins the left part, and left
    parts are scanned in descending bitmask order.
    """
    S = b.mask
    if not S & 1:
        raise ValueError("support must contain 0; strip the monomial factor first")
    n = b.degree
    if n <= 0:
        return None
    positive = S & ~1
    s1 = (positive & -positive).bit_length() - 1  # smallest positive element
    fixed = 1 | (1 << s1)
    rest = S & ~fixed
    sub = rest
    while True:
        A = sub | fixed
        B = 0
        for j in range(n + 1):
            if (A << j) | S == S:
                B |= 1 << j
        if bin(B).count("1") >= 2:
            prod = 0
            t = A
            d = 0
            while t:
                if t & 1:
                    prod |= B << d
                t >>= 1
                d += 1
            if prod == S:
                return BoolPoly.from_mask(A), BoolPoly.from_mask(B)
        if sub == 0:
            return None
        sub = (sub - 1) & rest


def boolean_triple_test(b: BoolPoly) -> bool:
    """True certifies irreducibility: the positive support is not a union
    of triples {d1, d2, d1 + d2} drawn from it."""
    if 0 not in b:
        raise ValueError("support must contain 0")
    P = set(b.degrees()) - {0}
    covered = set()
    for d1 in P:
        for d2 in P:
            if d2 < d1:
                continue
            if d1 + d2 in P:
                covered.update((d1, d2, d1 + d2))
    return covered != P


def round_to_integer_factorization(f: TropPoly, g: TropPoly) -> Tuple[TropPoly, TropPoly]:
    """Ceil one factor and floor the other.  When the product has integer
    coefficients it is preserved exactly."""
    product = trop_mul(f, g)
    for c in product.coeffs:
        if c is not INF and Fraction(c).denominator != 1:
            raise ValueError("rounding needs a product with integer coefficients")
    f2 = TropPoly([c if c is INF else math.ceil(c) for c in f.coeffs])
    g2 = TropPoly([c if c is INF else math.floor(c) for c in g.coeffs])
    assert trop_mul(f2, g2) == product, "rounding changed the product"
    return f2, g2


def choice_profile(p: TropPoly, f: TropPoly, g: TropPoly) -> ChoiceProfile:
    """The attaining pair per product degree, smallest left index first."""
    if trop_mul(f, g) != p:
        raise ValueError("not a factorization of p")
    choices: List[Optional[int]] = []
    for k in range(p.degree + 1):
        ck = p.coefficient(k)
        if ck is INF:
            choices.append(None)
            continue
        chosen = None
        for i in range(min(k, f.degree) + 1):
            fa, gb = f.coefficient(i), g.coefficient(k - i)
            if fa is not INF and gb is not INF and fa + gb == ck:
                chosen = i
                break
        assert chosen is not None
        choices.append(chosen)
    return ChoiceProfile(tuple(choices))
