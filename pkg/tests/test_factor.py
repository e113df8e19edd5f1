import itertools
import random
from fractions import Fraction

import pytest

from tropoly.factor import (
    DegreeSplit,
    boolean_triple_test,
    candidate_degree_splits,
    choice_profile,
    factor_bnb,
    factor_boolean_bnb,
    factor_convex,
    irreducible_by_chord,
    is_irreducible,
    round_to_integer_factorization,
)
from tropoly.newton import lower_hull
from tropoly.poly import BoolPoly, TropPoly, bool_mul, trop_mul
from tropoly.sampling import random_convex_poly
from tropoly.scalar import INF


def gauge(p):
    # shift so the minimum finite coefficient is 0
    m = min(c for c in p.coeffs if c is not INF)
    return TropPoly([c if c is INF else c - m for c in p.coeffs])


def true_split(p, f, g):
    """The degree split a known factorization induces through hull merging."""
    widths_f = {}
    for w, s in lower_hull(f).edges:
        widths_f[s] = widths_f.get(s, 0) + w
    assignment = []
    for w, s in lower_hull(p).edges:
        l = widths_f.get(s, 0)
        assignment.append((l, w - l))
    return DegreeSplit(f.degree, g.degree, tuple(assignment))


def test_chord_examples():
    assert irreducible_by_chord(TropPoly([0, 5, 0]))
    assert not irreducible_by_chord(TropPoly([0, 0]))
    assert not irreducible_by_chord(TropPoly([0, 1, 0, 2, 3]))
    with pytest.raises(ValueError):
        irreducible_by_chord(TropPoly([0, INF, 0]))
    with pytest.raises(ValueError):
        irreducible_by_chord(TropPoly([1, 2, 3]))  # min coefficient not 0


def test_factor_convex_documented():
    cert = factor_convex(TropPoly([0, 1, 3]))
    assert cert.factors == (TropPoly([0, 1]), TropPoly([0, 2]))
    assert cert.verify(TropPoly([0, 1, 3]))
    cert = factor_convex(TropPoly([0, 0, 0]))
    assert cert.factors == (TropPoly([0, 0]), TropPoly([0, 0]))
    cert = factor_convex(TropPoly([0, 2, 4, 6]))
    assert cert.factors == (TropPoly([0, 2]),) * 3
    with pytest.raises(ValueError):
        factor_convex(TropPoly([0, 5, 0]))  # coefficient above the hull


def test_factor_convex_random():
    # every hull-tight polynomial splits into deg p linear factors whose
    # slope multiset reads off the hull edge widths
    rng = random.Random(7411)
    for _ in range(150):
        p = gauge(random_convex_poly(rng, 9))
        cert = factor_convex(p)
        assert cert.verify(p)
        assert len(cert.factors) == p.degree
        slopes = sorted(f.coefficient(1) for f in cert.factors)
        expected = sorted(
            itertools.chain.from_iterable([s] * w for w, s in lower_hull(p).edges)
        )
        assert slopes == expected
        assert all(f.degree == 1 for f in cert.factors)


def test_candidate_splits_examples():
    splits = candidate_degree_splits(TropPoly([0, 1, 0, 2, 3]))
    assert len(splits) == 7
    assert sorted({s.left_degree for s in splits}) == [1, 2, 3]
    assert DegreeSplit(2, 2, ((1, 1), (1, 1))) in splits
    assert DegreeSplit(2, 2, ((2, 0), (0, 2))) in splits
    assert candidate_degree_splits(TropPoly([0, 5, 0])) == [
        DegreeSplit(1, 1, ((1, 1),))
    ]
    assert candidate_degree_splits(TropPoly([0, 1])) == []


def test_candidate_splits_integer_only_prunes_fractional_vertices():
    # single edge of width 2 and rise 1: the midpoint vertex would sit at
    # height 1/2, so integer mode drops the only split
    p = TropPoly([0, INF, 1])
    assert candidate_degree_splits(p) == [DegreeSplit(1, 1, ((1, 1),))]
    assert candidate_degree_splits(p, integer_only=True) == []


def test_factor_bnb_documented():
    p = TropPoly([0, 1, 0, 2, 3])
    cert = factor_bnb(p, DegreeSplit(2, 2, ((2, 0), (0, 2))))
    assert cert is not None and cert.verify(p)
    # mixing the two edges between the factors is infeasible here: both
    # factors would need leading coefficient 3/2 while c_2 = 0 demands a
    # leading 0 somewhere
    assert factor_bnb(p, DegreeSplit(2, 2, ((1, 1), (1, 1)))) is None
    assert factor_bnb(TropPoly([0, 5, 0]), DegreeSplit(1, 1, ((1, 1),))) is None
    cert = factor_bnb(TropPoly([0, 1, 2]), DegreeSplit(1, 1, ((1, 1),)))
    assert cert is not None
    assert cert.factors == (TropPoly([0, 1]), TropPoly([0, 1]))


def test_factor_bnb_validates_split():
    p = TropPoly([0, 1, 2])
    with pytest.raises(ValueError):
        factor_bnb(p, DegreeSplit(1, 2, ((1, 1),)))  # degrees do not sum
    with pytest.raises(ValueError):
        factor_bnb(p, DegreeSplit(1, 1, ((2, 0), (0, 0))))  # wrong edge count


def test_factor_bnb_planted_random():
    """A planted product must be recovered under its own induced split."""
    rng = random.Random(7412)
    for _ in range(120):
        def operand():
            deg = rng.randint(1, 4)
            coeffs = [rng.randint(0, 5) for _ in range(deg + 1)]
            coeffs[rng.randrange(deg + 1)] = 0
            for k in range(1, deg):
                if rng.random() < 0.2:
                    coeffs[k] = INF
            return TropPoly(coeffs)

        f, g = operand(), operand()
        p = trop_mul(f, g)
        cert = factor_bnb(p, true_split(p, f, g))
        assert cert is not None
        assert cert.verify(p)


def test_factor_bnb_agrees_with_bounded_grid_oracle():
    # integer polynomials: a factorization exists iff one exists on the
    # integer grid [0, max coefficient] (capping, then rounding, preserves
    # the product), so brute enumeration is a complete oracle
    rng = random.Random(7413)
    for _ in range(60):
        deg = rng.randint(2, 4)
        coeffs = [rng.randint(0, 2) for _ in range(deg + 1)]
        coeffs[rng.randrange(deg + 1)] = 0
        p = TropPoly(coeffs)
        M = max(p.coeffs)
        for r in range(1, deg // 2 + 1):
            s = deg - r
            brute = None
            for a in itertools.product(range(M + 1), repeat=r + 1):
                for b in itertools.product(range(M + 1), repeat=s + 1):
                    if trop_mul(TropPoly(a), TropPoly(b)) == p:
                        brute = (TropPoly(a), TropPoly(b))
                        break
                if brute:
                    break
            found = None
            for split in candidate_degree_splits(p):
                if split.left_degree not in (r, s):
                    continue
                found = factor_bnb(p, split)
                if found is not None:
                    break
            assert (found is not None) == (brute is not None)
            if found is not None:
                assert found.verify(p)


def test_is_irreducible_examples():
    verdict, cert = is_irreducible(TropPoly([0, 5, 0]))
    assert verdict and cert is None
    verdict, cert = is_irreducible(TropPoly([0, 1, 3]))
    assert not verdict and cert.verify(TropPoly([0, 1, 3]))
    verdict, cert = is_irreducible(TropPoly([0, 2, 0]))
    assert verdict and cert is None


def test_is_irreducible_strips_content():
    # x * (shift 2) * [0,1,3]: the certificate carries the monomial content
    p = TropPoly([INF, 2, 3, 5])
    verdict, cert = is_irreducible(p)
    assert not verdict
    assert cert.monomial_degree == 1 and cert.constant == 2
    assert cert.verify(p)
    # content alone never counts as a factorization
    verdict, cert = is_irreducible(TropPoly([INF, 1, 6, 1]))
    assert verdict and cert is None


def test_is_irreducible_integer_only():
    p = TropPoly([0, Fraction(1, 2), 1])
    verdict, cert = is_irreducible(p)
    assert not verdict
    assert cert.verify(p)
    verdict, cert = is_irreducible(p, integer_only=True)
    assert verdict and cert is None


def test_integer_only_agrees_on_integer_inputs():
    # rounding converts any rational factorization of an integer polynomial
    # into an integer one, so the two modes must give one verdict
    rng = random.Random(7414)
    for _ in range(40):
        deg = rng.randint(2, 5)
        coeffs = [rng.randint(0, 3) for _ in range(deg + 1)]
        coeffs[rng.randrange(deg + 1)] = 0
        p = TropPoly(coeffs)
        v_rat, cert_rat = is_irreducible(p)
        v_int, cert_int = is_irreducible(p, integer_only=True)
        assert v_rat == v_int
        if not v_int:
            assert cert_int.verify(p)
            for f in cert_int.factors:
                assert all(
                    c is INF or Fraction(c).denominator == 1 for c in f.coeffs
                )


def test_is_irreducible_inf_interior():
    verdict, cert = is_irreducible(TropPoly([0, INF, 1, 2]))
    assert verdict and cert is None
    p = TropPoly([0, INF, 0, INF, 0])
    verdict, cert = is_irreducible(p)
    assert not verdict and cert.verify(p)
    verdict, cert = is_irreducible(TropPoly([0, INF, 0]))
    assert verdict and cert is None


def test_factor_boolean_examples():
    pair = factor_boolean_bnb(BoolPoly([0, 1, 2, 3]))
    assert pair is not None
    assert bool_mul(*pair) == BoolPoly([0, 1, 2, 3])
    assert factor_boolean_bnb(BoolPoly([0, 1, 5])) is None
    pair = factor_boolean_bnb(BoolPoly([0, 2, 4]))
    assert pair is not None and bool_mul(*pair) == BoolPoly([0, 2, 4])
    with pytest.raises(ValueError):
        factor_boolean_bnb(BoolPoly([1, 2]))


def brute_boolean_decomposable(support):
    """Exhaustive scan over left parts; the maximal right part decides.

    For a fixed A, any valid B is a subset of Bmax = {j : A+j within S},
    and the Minkowski sum is monotone in B, so a decomposition with this A
    exists iff A + Bmax covers S and Bmax has a positive element.
    """
    S = frozenset(support)
    n = max(S)
    positives = sorted(S - {0})
    for size in range(1, len(positives) + 1):
        for extra in itertools.combinations(positives, size):
            A = frozenset((0,) + extra)
            Bmax = frozenset(
                j for j in range(n + 1) if all(a + j in S for a in A)
            )
            if len(Bmax) < 2:
                continue
            if {a + b for a in A for b in Bmax} == S:
                return True
    return False


def test_factor_boolean_exhaustive_small():
    # every support in [0, 10] containing 0, against the subset-pair oracle
    for n in range(1, 11):
        for inner in range(1 << max(0, n - 1)):
            mask = 1 | (inner << 1) | (1 << n)
            b = BoolPoly.from_mask(mask)
            pair = factor_boolean_bnb(b)
            expected = brute_boolean_decomposable(b.degrees())
            assert (pair is not None) == expected, f"support {b.degrees()}"
            if pair is not None:
                A, B = pair
                assert bool_mul(A, B) == b
                assert len(A.degrees()) >= 2 and len(B.degrees()) >= 2


def test_factor_boolean_sampled_wide():
    # degrees 11..14 sampled; the smallest positive element can be put in
    # the left part without loss (swapping the parts is also a decomposition)
    rng = random.Random(7415)
    for _ in range(120):
        n = rng.randint(11, 14)
        inner = rng.getrandbits(n - 1)
        mask = 1 | (inner << 1) | (1 << n)
        b = BoolPoly.from_mask(mask)
        pair = factor_boolean_bnb(b)
        S = frozenset(b.degrees())
        s1 = min(S - {0})
        positives = sorted(S - {0, s1})
        expected = False
        for size in range(len(positives) + 1):
            if expected:
                break
            for extra in itertools.combinations(positives, size):
                A = frozenset((0, s1) + extra)
                Bmax = frozenset(
                    j for j in range(n + 1) if all(a + j in S for a in A)
                )
                if len(Bmax) >= 2 and {a + c for a in A for c in Bmax} == S:
                    expected = True
                    break
        assert (pair is not None) == expected
        if pair is not None:
            assert bool_mul(*pair) == b


def test_boolean_triple_examples():
    assert boolean_triple_test(BoolPoly([0, 1, 5]))
    assert not boolean_triple_test(BoolPoly([0, 1, 5, 6]))
    assert factor_boolean_bnb(BoolPoly([0, 1, 5, 6])) is not None
    assert boolean_triple_test(BoolPoly([0, 2]))
    with pytest.raises(ValueError):
        boolean_triple_test(BoolPoly([2, 3]))


def test_triple_test_sound_exhaustive():
    # a passing triple test certifies irreducibility, never the reverse
    for n in range(1, 11):
        for inner in range(1 << max(0, n - 1)):
            mask = 1 | (inner << 1) | (1 << n)
            b = BoolPoly.from_mask(mask)
            if boolean_triple_test(b):
                assert factor_boolean_bnb(b) is None, f"support {b.degrees()}"


def test_round_to_integer_documented():
    f, g = round_to_integer_factorization(TropPoly([0, 1, 2]), TropPoly([0, 2]))
    assert (f, g) == (TropPoly([0, 1, 2]), TropPoly([0, 2]))
    f, g = round_to_integer_factorization(
        TropPoly([0, Fraction(3, 2), 3]), TropPoly([0, Fraction(3, 2)])
    )
    assert (f, g) == (TropPoly([0, 2, 3]), TropPoly([0, 1]))
    with pytest.raises(ValueError):
        round_to_integer_factorization(TropPoly([0, Fraction(1, 2)]), TropPoly([0]))


def test_round_to_integer_preserves_products():
    # brute search over half-integer factor pairs with integer product
    half = [Fraction(k, 2) for k in range(0, 5)]
    confirmed = fractional = 0
    for a in itertools.product(half, repeat=2):
        for b in itertools.product(half, repeat=3):
            f, g = TropPoly([0, *a]), TropPoly([0, *b])
            prod = trop_mul(f, g)
            if any(Fraction(c).denominator != 1 for c in prod.coeffs):
                continue
            f2, g2 = round_to_integer_factorization(f, g)
            assert trop_mul(f2, g2) == prod
            confirmed += 1
            if any(Fraction(c).denominator == 2 for c in (*a, *b)):
                fractional += 1
    assert confirmed > 0 and fractional > 0


def test_choice_profile():
    p = TropPoly([0, 1, 0, 2, 3])
    prof = choice_profile(p, TropPoly([0, 1, 0]), TropPoly([0, 2, 3]))
    assert prof.choices == (0, 1, 2, 2, 2)
    p = TropPoly([0, INF, 0, INF, 0])
    prof = choice_profile(p, TropPoly([0, INF, 0]), TropPoly([0, INF, 0]))
    assert prof.choices == (0, None, 0, None, 2)
    with pytest.raises(ValueError):
        choice_profile(TropPoly([0, 0]), TropPoly([0, 1]), TropPoly([0, 1]))
