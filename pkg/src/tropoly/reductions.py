"""Satisfiability instances and the encodings that tie them to tropical
factorization, plus the two-variable Boolean embedding.

The clause gadget works with a product polynomial of degree 2n whose
coefficients all lie in {0, 1, 2, 3}, zero exactly at 0, n, 2n.  Any
factorization into two degree-n halves can be normalized so both halves
have endpoint coefficients 0 and values in [0, 3].  Degrees whose base or
shifted coefficient is 3 are then pinned to value 3 in both halves, so
the only freedom left sits at the designated gadget degrees, where a
coefficient pair (c_d, c_{d+n}) = (1, 1) forces value 1 in exactly one
half: which half is the parity of that degree, and parities encode a
Boolean assignment.

Per literal the gadget owns two degrees x, y with x + y = z, the clause
degree.  Setting (c_z, c_{z+n}) = (2, 3) pins both halves to 3 at z, so
the only index pairs that can reach the required minimum 2 at z are the
clause's own literal pairs taking values (1, 1): the clause degree is
attainable exactly when some literal has opposite parities at x and y,
which is the truth convention.  Cross sums between gadget degrees are
kept unique by the audit and carry the couplings: (3, 3) forbids opposite
parity, (2, 3) forces it, (2, 2) leaves the pair free.  Chaining the
couplings over the occurrences of each variable makes parities spell a
consistent assignment.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from itertools import islice
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .poly import BoolPoly2, TropPoly, trop_mul
from .scalar import INF, TropScalar

SAME = "same-parity"
OPPOSITE = "opposite-parity"
UNCONSTRAINED = "unconstrained"


class GadgetError(ValueError):
    """Greedy degree selection or the distinctness audit failed."""


@dataclass(frozen=True)
class SatInstance:
    variable_count: int
    clauses: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if not isinstance(self.variable_count, int) or self.variable_count < 0:
            raise ValueError("variable_count must be a nonnegative integer")
        clauses = tuple(tuple(cl) for cl in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for ci, cl in enumerate(clauses):
            if not cl:
                raise ValueError(f"clause {ci} is empty")
            for lit in cl:
                if not isinstance(lit, int) or lit == 0:
                    raise ValueError(f"clause {ci}: literal {lit!r} is not a nonzero integer")
                if abs(lit) > self.variable_count:
                    raise ValueError(
                        f"clause {ci}: variable {abs(lit)} out of range 1..{self.variable_count}"
                    )

    def shape(self) -> List[int]:
        return [len(cl) for cl in self.clauses]

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        if len(assignment) != self.variable_count:
            raise ValueError("assignment length mismatch")
        return all(
            any(bool(assignment[abs(l) - 1]) != (l < 0) for l in cl) for cl in self.clauses
        )


@dataclass(frozen=True)
class GadgetLayout:
    n: int
    z: Tuple[int, ...]
    # per clause, per literal slot: the degree pair (x, y) with x + y = z
    pairs: Tuple[Tuple[Tuple[int, int], ...], ...]
    # cross-sum degree -> coupling role, sorted by degree
    constraint_degrees: Tuple[Tuple[int, str], ...]
    # signed literals mirroring pairs; all-zero slots mean shape-only layout
    clause_literals: Tuple[Tuple[int, ...], ...]
    variable_count: int

    def gadget_degrees(self) -> List[int]:
        out = []
        for clause in self.pairs:
            for x, y in clause:
                out.extend((x, y))
        return out

    def is_bound(self) -> bool:
        return any(lit != 0 for cl in self.clause_literals for lit in cl)

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "z": list(self.z),
                "pairs": [[list(p) for p in cl] for cl in self.pairs],
                "constraint_degrees": {str(d): role for d, role in self.constraint_degrees},
                "clause_literals": [list(cl) for cl in self.clause_literals],
                "variable_count": self.variable_count,
            },
            indent=2,
            sort_keys=True,
        )

    @staticmethod
    def from_json(text: str) -> "GadgetLayout":
        try:
            raw = json.loads(text)
            return GadgetLayout(
                n=raw["n"],
                z=tuple(raw["z"]),
                pairs=tuple(tuple((x, y) for x, y in cl) for cl in raw["pairs"]),
                constraint_degrees=tuple(
                    sorted((int(d), role) for d, role in raw["constraint_degrees"].items())
                ),
                clause_literals=tuple(tuple(cl) for cl in raw["clause_literals"]),
                variable_count=raw["variable_count"],
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed layout document: {exc}") from exc


def _audit(zs: Sequence[int], triples: Sequence[Tuple[int, int, int]], n: int) -> None:
    """Exhaustive distinctness check; raises GadgetError naming the first
    violation.  triples hold (x, y, z) per literal placed so far."""
    for z in zs:
        if not (5 * z > n and 4 * z < n):
            raise GadgetError(f"clause degree {z} is not strictly between n/5 and n/4 for n={n}")
    if len(set(zs)) != len(zs):
        raise GadgetError("clause degrees are not distinct")
    degrees = []
    for x, y, _ in triples:
        degrees.extend((x, y))
    seen = set()
    for d in degrees:
        if d <= 0:
            raise GadgetError(f"gadget degree {d} is not positive")
        if 4 * d >= n:
            raise GadgetError(f"gadget degree {d} reaches n/4 for n={n}")
        if d in seen:
            raise GadgetError(f"gadget degree {d} repeats")
        seen.add(d)
    zset = set(zs)
    if seen & zset:
        raise GadgetError(f"gadget degree {min(seen & zset)} collides with a clause degree")
    for x, y, z in triples:
        if x + y != z:
            raise GadgetError(f"literal pair {x}+{y} does not sum to its clause degree {z}")
    # every other pair of degree slots, doubles included, must have a sum
    # that hits nothing: no degree, no clause degree, no other sum
    sums: Dict[int, Tuple[int, int]] = {}
    literal_pairs = {frozenset((x, y)) for x, y, _ in triples if x != y}
    for a in range(len(degrees)):
        for b in range(a, len(degrees)):
            u, v = degrees[a], degrees[b]
            if a != b and frozenset((u, v)) in literal_pairs:
                continue
            su = u + v
            if su >= n:
                raise GadgetError(f"sum {u}+{v}={su} reaches n={n}")
            if su in seen:
                raise GadgetError(f"sum {u}+{v}={su} collides with gadget degree {su}")
            if su in zset:
                raise GadgetError(f"sum {u}+{v}={su} collides with clause degree {su}")
            if su in sums:
                pu, pv = sums[su]
                raise GadgetError(f"sums {pu}+{pv} and {u}+{v} coincide at {su}")
            sums[su] = (u, v)


def build_gadget(clause_literal_shape: Sequence[int], n: int) -> GadgetLayout:
    """Greedy gadget selection at half-degree n, audited exhaustively.

    Clause degrees are the first integers strictly between n/5 and n/4;
    literal degrees x are the smallest values at most n/8 whose partner
    y = z - x keeps every distinctness condition.  Raises GadgetError when
    the greedy run gets stuck, naming the first unsatisfiable choice.
    """
    shape = list(clause_literal_shape)
    if not shape or any(not isinstance(m, int) or m < 1 for m in shape):
        raise ValueError("shape must be a nonempty list of positive literal counts")
    if not isinstance(n, int) or n < 8:
        raise GadgetError(f"n={n} is too small for any gadget")
    zs = [z for z in range(n // 5 + 1, (n + 3) // 4) if 5 * z > n and 4 * z < n]
    if len(zs) < len(shape):
        raise GadgetError(
            f"only {len(zs)} clause degrees fit strictly between n/5 and n/4 at n={n}, "
            f"need {len(shape)}"
        )
    zs = zs[: len(shape)]
    triples: List[Tuple[int, int, int]] = []
    xmax = n // 8
    last_error: Optional[GadgetError] = None
    for ci, count in enumerate(shape):
        for t in range(count):
            z = zs[ci]
            for x in range(1, xmax + 1):
                y = z - x
                if y <= 0 or y == x:
                    continue
                try:
                    _audit(zs, triples + [(x, y, z)], n)
                except GadgetError as exc:
                    last_error = exc
                    continue
                triples.append((x, y, z))
                break
            else:
                raise GadgetError(
                    f"clause {ci} literal {t}: no x in 1..{xmax} works at n={n}"
                    + (f" (last collision: {last_error})" if last_error else "")
                )
    _audit(zs, triples, n)

    pairs = []
    it = iter(triples)
    for count in shape:
        pairs.append(tuple((x, y) for x, y, _ in islice(it, count)))
    roles: Dict[int, str] = {}
    degrees = [d for cl in pairs for p in cl for d in p]
    literal_pairs = {frozenset(p) for cl in pairs for p in cl}
    for d in degrees:
        roles[2 * d] = SAME
    for a in range(len(degrees)):
        for b in range(a + 1, len(degrees)):
            u, v = degrees[a], degrees[b]
            if frozenset((u, v)) in literal_pairs:
                continue
            roles.setdefault(u + v, UNCONSTRAINED)
    return GadgetLayout(
        n=n,
        z=tuple(zs),
        pairs=tuple(pairs),
        constraint_degrees=tuple(sorted(roles.items())),
        clause_literals=tuple((0,) * count for count in shape),
        variable_count=0,
    )


def minimal_gadget_n(clause_literal_shape: Sequence[int]) -> int:
    """Smallest n whose greedy gadget run passes the audit."""
    for n in range(8, 200000):
        try:
            build_gadget(clause_literal_shape, n)
            return n
        except GadgetError:
            continue
    raise RuntimeError("no workable n below 200000; shape is unreasonably large")


def _bind_instance(layout: GadgetLayout, inst: SatInstance) -> GadgetLayout:
    if [len(cl) for cl in layout.pairs] != inst.shape():
        raise ValueError("layout shape does not match the instance")
    roles = dict(layout.constraint_degrees)
    # couple consecutive occurrences of each variable: the x degrees must
    # share parity; the y degrees share parity exactly for equal polarity
    occ: Dict[int, List[Tuple[int, int, bool]]] = {}
    for ci, cl in enumerate(inst.clauses):
        for ti, lit in enumerate(cl):
            occ.setdefault(abs(lit), []).append((ci, ti, lit < 0))
    for places in occ.values():
        for (c1, t1, neg1), (c2, t2, neg2) in zip(places, places[1:]):
            x1, y1 = layout.pairs[c1][t1]
            x2, y2 = layout.pairs[c2][t2]
            roles[x1 + x2] = SAME
            roles[y1 + y2] = SAME if neg1 == neg2 else OPPOSITE
    return replace(
        layout,
        constraint_degrees=tuple(sorted(roles.items())),
        clause_literals=inst.clauses,
        variable_count=inst.variable_count,
    )


def _encoded_coeffs(layout: GadgetLayout) -> List[TropScalar]:
    n = layout.n
    c: List[TropScalar] = [3] * (2 * n + 1)
    c[0] = c[n] = c[2 * n] = 0
    for d in layout.gadget_degrees():
        c[d] = 1
        c[d + n] = 1
    for z in layout.z:
        c[z] = 2
        c[z + n] = 3
    for d, role in layout.constraint_degrees:
        if role == SAME:
            c[d] = 3
            c[d + n] = 3
        elif role == OPPOSITE:
            c[d] = 2
            c[d + n] = 3
        else:
            c[d] = 2
            c[d + n] = 2
    return c


def sat_to_poly(inst: SatInstance, n: int) -> Tuple[TropPoly, GadgetLayout]:
    """Encode a CNF instance as a degree-2n polynomial that factors into
    two degree-n halves exactly when the instance is satisfiable."""
    layout = _bind_instance(build_gadget(inst.shape(), n), inst)
    coeffs = _encoded_coeffs(layout)
    assert all(v in (0, 1, 2, 3) for v in coeffs)
    assert [k for k, v in enumerate(coeffs) if v == 0] == [0, n, 2 * n]
    return TropPoly(coeffs), layout


def assignment_to_factors(
    inst: SatInstance, layout: GadgetLayout, assignment: Sequence[bool]
) -> Tuple[TropPoly, TropPoly]:
    """Factors of the encoded polynomial spelled by a satisfying
    assignment.  A non-satisfying assignment leaves some clause degree
    unattained; the resulting product mismatch is detected and reported."""
    if not layout.is_bound() or layout.clause_literals != inst.clauses:
        raise ValueError("layout is not bound to this instance")
    if len(assignment) != inst.variable_count:
        raise ValueError("assignment length mismatch")
    n = layout.n
    a: List[TropScalar] = [3] * (n + 1)
    b: List[TropScalar] = [3] * (n + 1)
    a[0] = b[0] = a[n] = b[n] = 0
    for ci, cl in enumerate(inst.clauses):
        for ti, lit in enumerate(cl):
            x, y = layout.pairs[ci][ti]
            truth = bool(assignment[abs(lit) - 1]) != (lit < 0)
            a[x] = 1
            if truth:
                b[y] = 1
            else:
                a[y] = 1
    for d, role in layout.constraint_degrees:
        if role == UNCONSTRAINED:
            a[d] = 2
            b[d] = 2
    f, g = TropPoly(a), TropPoly(b)
    expected = TropPoly(_encoded_coeffs(layout))
    product = trop_mul(f, g)
    if product != expected:
        k = next(
            k
            for k in range(2 * n + 1)
            if product.coefficient(k) != expected.coefficient(k)
        )
        raise ValueError(
            f"product mismatch at degree {k}: the assignment leaves a clause unsatisfied"
        )
    return f, g


def normalize_factor_window(
    f: TropPoly, g: TropPoly, cap: TropScalar = 3
) -> Tuple[TropPoly, TropPoly]:
    """Gauge a factorization so both factors have minimum 0, then clamp
    values to the cap.  Product-preserving whenever the product's values
    fit under the cap; otherwise rejected."""
    if f.is_zero() or g.is_zero():
        raise ValueError("zero factors cannot be normalized")
    product = trop_mul(f, g)
    shift = min(c for c in f.coeffs if c is not INF)
    f2 = TropPoly([c if c is INF else min(c - shift, cap) for c in f.coeffs])
    g2 = TropPoly([c if c is INF else min(c + shift, cap) for c in g.coeffs])
    if trop_mul(f2, g2) != product:
        raise ValueError("window normalization does not preserve this product")
    return f2, g2


def factors_to_assignment(
    layout: GadgetLayout, f: TropPoly, g: TropPoly
) -> Tuple[bool, ...]:
    """Decode a factorization of the encoded polynomial back to a
    satisfying assignment by reading which factor carries value 1 at each
    gadget degree."""
    if not layout.is_bound():
        raise ValueError("layout carries no literal bindings; encode from an instance")
    expected = TropPoly(_encoded_coeffs(layout))
    f2, g2 = normalize_factor_window(f, g, cap=3)
    if trop_mul(f2, g2) != expected:
        raise ValueError("not a factorization of the encoded polynomial")
    parity: Dict[int, str] = {}
    for d in layout.gadget_degrees():
        av, bv = f2.coefficient(d), g2.coefficient(d)
        if av == 1 and bv != 1:
            parity[d] = "a"
        elif bv == 1 and av != 1:
            parity[d] = "b"
        else:
            raise ValueError(f"degree {d}: no readable parity (values {av}, {bv})")
    values: Dict[int, bool] = {}
    for ci, cl in enumerate(layout.clause_literals):
        for ti, lit in enumerate(cl):
            x, y = layout.pairs[ci][ti]
            truth = parity[x] != parity[y]
            var = abs(lit)
            value = truth != (lit < 0)
            if var in values and values[var] != value:
                raise ValueError(f"inconsistent parities for variable {var}")
            values[var] = value
    assignment = tuple(values.get(v, False) for v in range(1, layout.variable_count + 1))
    for ci, cl in enumerate(layout.clause_literals):
        if not any(bool(assignment[abs(l) - 1]) != (l < 0) for l in cl):
            raise ValueError(f"decoded assignment leaves clause {ci} unsatisfied")
    return assignment


def trop_to_bool2(p: TropPoly, m0: int) -> BoolPoly2:
    """Embed a nonnegative-integer tropical polynomial as a filled
    two-variable Boolean support: degree j with coefficient c becomes the
    point (m0 - j, m0 - c), downward filled."""
    if not isinstance(m0, int) or isinstance(m0, bool):
        raise ValueError("m0 must be an integer")
    points = set()
    for j, c in enumerate(p.coeffs):
        if c is INF:
            continue
        if isinstance(c, Fraction) or c < 0:
            raise ValueError(f"coefficient at degree {j} is not a nonnegative integer")
        if j > m0 or c > m0:
            raise ValueError(
                f"m0={m0} too small: degree {j} coefficient {c} would go negative"
            )
        points.add((m0 - j, m0 - c))
    return BoolPoly2(points).fill()
