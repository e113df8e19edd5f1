"""Batch command line for the toolkit.

Every subcommand reads exact text formats (see textio), prints a stable
plain-text report, and exits 0 for success or an affirmative decision,
1 for a negative decision (irreducible, not divisible, nonsingular,
no common multiple), 2 for malformed input or usage errors.  --json
wraps the same information in a one-object envelope.  Determinism: all
randomness flows through one seeded generator, so equal seeds give
byte-identical output; --threads is accepted as an advisory worker
count and this implementation always runs single-worker.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from random import Random
from typing import List, Optional, Tuple

from .divlcm import divides, gcd, lcm, least_superquotient
from .factor import (
    boolean_triple_test,
    candidate_degree_splits,
    factor_bnb,
    factor_boolean_bnb,
    irreducible_by_chord,
    is_irreducible,
)
from .matrix import eliminant, is_nonsingular, tropical_rank
from .newton import lower_hull
from .poly import BoolPoly, TropPoly, evaluate, normalize_content, trop_add, trop_mul
from .reductions import (
    GadgetError,
    GadgetLayout,
    factors_to_assignment,
    minimal_gadget_n,
    sat_to_poly,
)
from .sampling import random_boolean_support, random_concave_sample
from .scalar import INF
from .textio import (
    ParseError,
    format_bool,
    format_matrix,
    format_poly,
    format_scalar,
    parse_bool,
    parse_dimacs,
    parse_matrix,
    parse_poly,
)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _parse_scalar_arg(text: str):
    p = parse_poly(text)
    coeffs = p.coeffs if not p.is_zero() else (INF,)
    if len(coeffs) != 1:
        raise ValueError(f"expected a single value, got {len(coeffs)} tokens")
    return coeffs[0]


def _vertices_text(diagram) -> str:
    return ",".join(f"({x},{format_scalar(h)})" for x, h in diagram.vertices)


def _edges_text(diagram) -> str:
    return ",".join(f"({w},{format_scalar(s)})" for w, s in diagram.edges)


def _poly_report(p: TropPoly, args, prefix: str = "") -> str:
    """One output line per polynomial; long ones shrink to a hull summary
    unless --full asked for everything."""
    if p.is_zero():
        return prefix + format_poly(p)
    if not args.full and len(p.coeffs) > args.term_limit:
        d = lower_hull(p)
        return (
            f"{prefix}degree {p.degree} terms {len(p.coeffs)} "
            f"vertices {_vertices_text(d)}"
        )
    return prefix + format_poly(p)


# each handler returns (exit_code, status, json_result, text_lines)


def cmd_mul(args):
    r = trop_mul(parse_poly(args.p), parse_poly(args.q))
    return 0, "ok", {"product": format_poly(r)}, [_poly_report(r, args)]


def cmd_add(args):
    r = trop_add(parse_poly(args.p), parse_poly(args.q))
    return 0, "ok", {"sum": format_poly(r)}, [_poly_report(r, args)]


def cmd_eval(args):
    v = evaluate(parse_poly(args.p), _parse_scalar_arg(args.x))
    return 0, "ok", {"value": format_scalar(v)}, [format_scalar(v)]


def cmd_hull(args):
    p = parse_poly(args.p)
    if p.is_zero():
        raise ValueError("the zero polynomial has no diagram")
    d = lower_hull(p)
    lines = [f"vertices {_vertices_text(d)}", f"edges {_edges_text(d)}"]
    result = {
        "vertices": [[x, format_scalar(h)] for x, h in d.vertices],
        "edges": [[w, format_scalar(s)] for w, s in d.edges],
    }
    return 0, "ok", result, lines


def _factor_boolean(args):
    b = parse_bool(args.p)
    lines: List[str] = []
    shift = min(b.degrees())
    if shift:
        b = BoolPoly(d - shift for d in b.degrees())
        lines.append(f"content degree {shift}")
    if b.degree < 1:
        lines.append("irreducible (linear)")
        return 1, "irreducible", {"verdict": "irreducible", "reason": "linear"}, lines
    if boolean_triple_test(b):
        lines.append("irreducible (triple test)")
        return 1, "irreducible", {"verdict": "irreducible", "reason": "triple test"}, lines
    res = factor_boolean_bnb(b)
    if res is None:
        lines.append("irreducible (search exhausted)")
        return (
            1,
            "irreducible",
            {"verdict": "irreducible", "reason": "search exhausted"},
            lines,
        )
    f, g = res
    lines += [f"factor {format_bool(f)}", f"factor {format_bool(g)}"]
    result = {
        "verdict": "reducible",
        "content_degree": shift,
        "factors": [format_bool(f), format_bool(g)],
    }
    return 0, "reducible", result, lines


def _content_lines(m: int, const) -> List[str]:
    if m or const != 0:
        return [f"content degree {m} constant {format_scalar(const)}"]
    return []


def cmd_factor(args):
    if args.boolean:
        if args.split is not None or args.integer:
            raise ValueError("--boolean cannot combine with --split or --integer")
        return _factor_boolean(args)
    p = parse_poly(args.p)
    if p.is_zero():
        raise ValueError("the zero polynomial has no factorization theory")
    m, const, core = normalize_content(p)
    if args.split is not None:
        if args.integer:
            raise ValueError("--integer cannot combine with --split")
        cert = None
        for split in candidate_degree_splits(core):
            if split.left_degree != args.split:
                continue
            cert = factor_bnb(core, split)
            if cert is not None:
                break
        if cert is None:
            line = f"no factorization with factor degree {args.split}"
            return 1, "irreducible", {"verdict": "none", "split": args.split}, [line]
        lines = _content_lines(m, const)
        lines += [_poly_report(f, args, "factor ") for f in cert.factors]
        result = {
            "verdict": "reducible",
            "content": {"degree": m, "constant": format_scalar(const)},
            "factors": [format_poly(f) for f in cert.factors],
        }
        return 0, "reducible", result, lines
    verdict, cert = is_irreducible(p, integer_only=args.integer)
    if verdict:
        if core.degree <= 1:
            reason = "linear"
        elif all(c is not INF for c in core.coeffs) and irreducible_by_chord(core):
            reason = "chord certificate"
        else:
            reason = "search exhausted"
        return (
            1,
            "irreducible",
            {"verdict": "irreducible", "reason": reason},
            [f"irreducible ({reason})"],
        )
    assert cert.verify(p)
    lines = _content_lines(cert.monomial_degree, cert.constant)
    lines += [_poly_report(f, args, "factor ") for f in cert.factors]
    result = {
        "verdict": "reducible",
        "content": {
            "degree": cert.monomial_degree,
            "constant": format_scalar(cert.constant),
        },
        "factors": [format_poly(f) for f in cert.factors],
    }
    return 0, "reducible", result, lines


def cmd_divides(args):
    ok, witness = divides(parse_poly(args.d), parse_poly(args.s))
    if not ok:
        return 1, "no", {"divides": False}, ["no"]
    lines = ["yes", _poly_report(witness, args, "witness ")]
    return 0, "yes", {"divides": True, "witness": format_poly(witness)}, lines


def cmd_superquot(args):
    q = least_superquotient(parse_poly(args.d), parse_poly(args.s), args.degree)
    return 0, "ok", {"quotient": format_poly(q)}, [_poly_report(q, args)]


def cmd_lcm(args):
    report = lcm(parse_poly(args.f), parse_poly(args.g), args.degree, args.iteration_limit)
    lines = []
    result = {
        "status": report.status,
        "degree": report.degree,
        "iterations": report.iterations,
        "lcm": None,
    }
    if report.result is not None:
        lines.append(_poly_report(report.result, args))
        result["lcm"] = format_poly(report.result)
    lines.append(f"status {report.status}")
    code = 0 if report.status == "converged" else 1
    return code, report.status, result, lines


def cmd_gcd(args):
    g = gcd(parse_poly(args.f), parse_poly(args.g), args.iteration_limit)
    return 0, "ok", {"gcd": format_poly(g)}, [_poly_report(g, args)]


def cmd_eliminant(args):
    m = eliminant(parse_poly(args.f), parse_poly(args.g))
    rows = [[format_scalar(c) for c in row] for row in m.rows]
    return 0, "ok", {"matrix": rows}, format_matrix(m).splitlines()


def cmd_singular(args):
    m = parse_matrix(_read_text(args.matrix))
    if is_nonsingular(m):
        return 1, "nonsingular", {"singular": False}, ["nonsingular"]
    return 0, "singular", {"singular": True}, ["singular"]


def cmd_rank(args):
    r = tropical_rank(parse_matrix(_read_text(args.matrix)), size_cap=args.cap)
    return 0, "ok", {"rank": r}, [str(r)]


def cmd_sat_encode(args):
    inst = parse_dimacs(_read_text(args.dimacs))
    n = args.n if args.n is not None else minimal_gadget_n(inst.shape())
    poly, layout = sat_to_poly(inst, n)
    if args.poly_out:
        with open(args.poly_out, "w", encoding="utf-8") as fh:
            fh.write(format_poly(poly) + "\n")
    if args.layout_out:
        with open(args.layout_out, "w", encoding="utf-8") as fh:
            fh.write(layout.to_json() + "\n")
    result = {"n": n, "degree": poly.degree, "poly": format_poly(poly)}
    return 0, "ok", result, [f"n {n}"]


def cmd_sat_decode(args):
    layout = GadgetLayout.from_json(_read_text(args.layout))
    assignment = factors_to_assignment(layout, parse_poly(args.f), parse_poly(args.g))
    text = " ".join(str(i + 1) if v else str(-(i + 1)) for i, v in enumerate(assignment))
    return 0, "ok", {"assignment": list(assignment)}, [text]


def cmd_random_stats(args):
    rng = Random(args.seed)
    lines = [f"samples {args.samples}"]
    result = {"samples": args.samples, "mode": args.mode}
    if args.samples > 0:
        count = 0
        if args.mode == "boolean":
            if args.degree < 1:
                raise ValueError("boolean mode needs --degree at least 1")
            for _ in range(args.samples):
                b = random_boolean_support(rng, args.degree)
                if factor_boolean_bnb(b) is not None:
                    count += 1
        else:
            if args.degree < 2 or args.degree % 2:
                raise ValueError("tropical mode needs an even --degree of at least 2")
            for _ in range(args.samples):
                p = random_concave_sample(rng, args.degree // 2)
                verdict, _ = is_irreducible(p)
                if not verdict:
                    count += 1
        frac = Fraction(count, args.samples)
        lines += [f"factorable {count}", f"fraction {frac}"]
        result.update(factorable=count, fraction=str(frac))
    return 0, "ok", result, lines


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON envelope")
    common.add_argument("--full", action="store_true", help="never summarize long output")
    common.add_argument(
        "--term-limit",
        type=int,
        default=64,
        help="max coefficients printed before summarizing (default 64)",
    )
    common.add_argument(
        "--threads",
        type=int,
        default=1,
        help="advisory worker count; this implementation is single-worker",
    )

    parser = argparse.ArgumentParser(prog="tropoly", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(handler=fn)
        return sp

    sp = add("mul", cmd_mul, "min-plus product of two polynomials")
    sp.add_argument("p")
    sp.add_argument("q")

    sp = add("add", cmd_add, "coefficientwise minimum of two polynomials")
    sp.add_argument("p")
    sp.add_argument("q")

    sp = add("eval", cmd_eval, "evaluate a polynomial at a point")
    sp.add_argument("p")
    sp.add_argument("x")

    sp = add("hull", cmd_hull, "Newton diagram vertices and edges")
    sp.add_argument("p")

    sp = add("factor", cmd_factor, "factor or certify irreducible")
    sp.add_argument("p")
    sp.add_argument("--integer", action="store_true", help="integer factorizations only")
    sp.add_argument("--split", type=int, help="only factorizations with this left degree")
    sp.add_argument(
        "--boolean", action="store_true", help="treat input as a Boolean support list"
    )

    sp = add("divides", cmd_divides, "exact divisibility with quotient witness")
    sp.add_argument("d")
    sp.add_argument("s")

    sp = add("superquot", cmd_superquot, "least superquotient at a degree")
    sp.add_argument("d")
    sp.add_argument("s")
    sp.add_argument("--degree", type=int, required=True)

    sp = add("lcm", cmd_lcm, "least common multiple at a degree")
    sp.add_argument("f")
    sp.add_argument("g")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--iteration-limit", type=int, default=1000)

    sp = add("gcd", cmd_gcd, "greatest common divisor")
    sp.add_argument("f")
    sp.add_argument("g")
    sp.add_argument("--iteration-limit", type=int, default=1000)

    sp = add("eliminant", cmd_eliminant, "eliminant matrix of two polynomials")
    sp.add_argument("f")
    sp.add_argument("g")

    sp = add("singular", cmd_singular, "tropical singularity of a square matrix")
    sp.add_argument("matrix", help="matrix file path, or - for stdin")

    sp = add("rank", cmd_rank, "tropical rank of a matrix")
    sp.add_argument("matrix", help="matrix file path, or - for stdin")
    sp.add_argument("--cap", type=int, default=8, help="largest minor size tried")

    sp = add("sat-encode", cmd_sat_encode, "encode a DIMACS instance as a polynomial")
    sp.add_argument("dimacs", help="DIMACS file path, or - for stdin")
    sp.add_argument("--n", type=int, help="half degree; default: smallest audited n")
    sp.add_argument("--poly-out", help="write the polynomial here")
    sp.add_argument("--layout-out", help="write the layout JSON here")

    sp = add("sat-decode", cmd_sat_decode, "decode factors back to an assignment")
    sp.add_argument("layout", help="layout JSON file path, or - for stdin")
    sp.add_argument("f")
    sp.add_argument("g")

    sp = add("random-stats", cmd_random_stats, "factorability rate over random samples")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument(
        "--mode",
        choices=("boolean", "tropical"),
        default="boolean",
        help="boolean supports or concave equal-end samples",
    )

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    inputs = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return 2
    start = time.perf_counter()
    try:
        code, status, result, lines = args.handler(args)
    except (ValueError, RuntimeError, OSError) as exc:
        if args.json:
            envelope = {
                "command": args.command,
                "inputs": inputs,
                "result": {"message": str(exc)},
                "status": "error",
                "timings": {"total": time.perf_counter() - start},
            }
            print(json.dumps(envelope, sort_keys=True))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        envelope = {
            "command": args.command,
            "inputs": inputs,
            "result": result,
            "status": status,
            "timings": {"total": time.perf_counter() - start},
        }
        print(json.dumps(envelope, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
