"""Text formats for polynomials, matrices, and CNF instances.

Tropical polynomial: whitespace-separated coefficient tokens from degree 0
upward.  A token is an integer, a fraction p/q, or "inf".

Boolean polynomial: whitespace-separated distinct nonnegative degrees.

Two-variable Boolean polynomial: one "i j" point per line.

Matrix: one row per line, same coefficient tokens as polynomials.

CNF: DIMACS subset ("c" comments, one "p cnf V C" header, clause lines of
nonzero literals each terminated by 0).

All parse errors carry a 1-based line and column.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from .poly import BoolPoly, BoolPoly2, TropPoly
from .scalar import INF, TropScalar


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def _tokens(text: str, line: int = 1):
    col = 0
    n = len(text)
    while col < n:
        if text[col].isspace():
            col += 1
            continue
        start = col
        while col < n and not text[col].isspace():
            col += 1
        yield text[start:col], line, start + 1


def _scalar_token(tok: str, line: int, col: int) -> TropScalar:
    if tok == "inf":
        return INF
    if "/" in tok:
        num, _, den = tok.partition("/")
        try:
            n = int(num)
            d = int(den)
        except ValueError:
            raise ParseError(f"bad coefficient token {tok!r}", line, col)
        if d == 0:
            raise ParseError("zero denominator", line, col)
        v = Fraction(n, d)
        return int(v) if v.denominator == 1 else v
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"bad coefficient token {tok!r}", line, col)


def parse_poly(text: str, line: int = 1) -> TropPoly:
    coeffs = [_scalar_token(tok, ln, col) for tok, ln, col in _tokens(text, line)]
    if not coeffs:
        raise ParseError("empty polynomial", line, 1)
    return TropPoly(coeffs)


def format_scalar(c: TropScalar) -> str:
    if c is INF:
        return "inf"
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def format_poly(p: TropPoly) -> str:
    if p.is_zero():
        return "inf"
    return " ".join(format_scalar(c) for c in p.coeffs)


def parse_bool(text: str) -> BoolPoly:
    seen = set()
    for tok, ln, col in _tokens(text):
        try:
            d = int(tok)
        except ValueError:
            raise ParseError(f"bad degree token {tok!r}", ln, col)
        if d < 0:
            raise ParseError(f"negative degree {d}", ln, col)
        if d in seen:
            raise ParseError(f"duplicate degree {d}", ln, col)
        seen.add(d)
    if not seen:
        raise ParseError("empty support")
    return BoolPoly(seen)


def format_bool(b: BoolPoly) -> str:
    return " ".join(str(d) for d in b.degrees())


def parse_bool2(text: str) -> BoolPoly2:
    pts = set()
    for ln, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        toks = list(_tokens(raw, ln))
        if len(toks) != 2:
            raise ParseError("expected two coordinates per line", ln, toks[0][2] if toks else 1)
        pt = []
        for tok, l, col in toks:
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"bad coordinate token {tok!r}", l, col)
            if v < 0:
                raise ParseError(f"negative coordinate {v}", l, col)
            pt.append(v)
        pts.add((pt[0], pt[1]))
    if not pts:
        raise ParseError("empty point set")
    return BoolPoly2(pts)


def format_bool2(b: BoolPoly2) -> str:
    return "\n".join(f"{i} {j}" for i, j in sorted(b.points))


def parse_matrix(text: str):
    rows: List[List[TropScalar]] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        rows.append([_scalar_token(tok, l, col) for tok, l, col in _tokens(raw, ln)])
    if not rows:
        raise ParseError("empty matrix")
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise ParseError(f"row has {len(row)} entries, expected {width}", i + 1, 1)
    from .matrix import TropMatrix

    return TropMatrix(rows)


def format_matrix(m) -> str:
    return "\n".join(" ".join(format_scalar(c) for c in row) for row in m.rows)


def parse_dimacs(text: str):
    from .reductions import SatInstance

    header = None
    clauses: List[Tuple[int, ...]] = []
    current: List[int] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("c"):
            continue
        if stripped.startswith("p"):
            if header is not None:
                raise ParseError("duplicate header", ln, 1)
            parts = stripped.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("expected header 'p cnf <vars> <clauses>'", ln, 1)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError("bad header counts", ln, 1)
            continue
        if header is None:
            raise ParseError("clause before header", ln, 1)
        for tok, l, col in _tokens(raw, ln):
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal token {tok!r}", l, col)
            if lit == 0:
                if not current:
                    raise ParseError("empty clause", l, col)
                clauses.append(tuple(current))
                current = []
            else:
                if abs(lit) > header[0]:
                    raise ParseError(f"literal {lit} out of range", l, col)
                current.append(lit)
    if header is None:
        raise ParseError("missing header")
    if current:
        raise ParseError("unterminated clause", len(text.splitlines()), 1)
    if len(clauses) != header[1]:
        raise ParseError(f"header promises {header[1]} clauses, found {len(clauses)}")
    return SatInstance(header[0], tuple(clauses))
