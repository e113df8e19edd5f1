import random
from fractions import Fraction

import pytest

from tropoly.poly import (
    BoolPoly,
    BoolPoly2,
    TropPoly,
    bool2_mul,
    bool_mul,
    evaluate,
    normalize_content,
    trop_add,
    trop_mul,
    trop_pow,
)
from tropoly.sampling import random_poly
from tropoly.scalar import INF


def ref_mul(p, q):
    """Independent convolution: direct double loop over all index pairs."""
    if p.is_zero() or q.is_zero():
        return TropPoly.zero()
    out = [INF] * (p.degree + q.degree + 1)
    for i, a in enumerate(p.coeffs):
        for j, b in enumerate(q.coeffs):
            if a is INF or b is INF:
                continue
            v = a + b
            if out[i + j] is INF or v < out[i + j]:
                out[i + j] = v
    return TropPoly(out)


def test_trailing_infinities_trim():
    assert TropPoly([0, 1, INF, INF]).coeffs == (0, 1)
    assert TropPoly([INF, INF]).is_zero()
    assert TropPoly([]).is_zero()


def test_zero_one_monomial():
    assert TropPoly.zero().coeffs == ()
    assert TropPoly.one().coeffs == (0,)
    m = TropPoly.monomial(3, 5)
    assert m.coeffs == (INF, INF, INF, 5)
    assert m.degree == 3


def test_interior_infinity_is_kept():
    p = TropPoly([0, INF, 2])
    assert p.coeffs == (0, INF, 2)
    assert p.coefficient(1) is INF
    assert p.coefficient(99) is INF
    assert p.support() == (0, 2)


def test_zero_poly_properties():
    z = TropPoly.zero()
    assert z.is_zero()
    assert z.degree == -1
    assert z.coefficient(0) is INF


def test_degree_and_equality_are_formal():
    assert TropPoly([0, 1]) == TropPoly([0, 1, INF])
    assert TropPoly([0, 1]) != TropPoly([0, 2])
    assert hash(TropPoly([0, 1])) == hash(TropPoly([0, 1, INF]))


def test_add_is_pointwise_min():
    p = TropPoly([0, 5, INF])
    q = TropPoly([1, 2, 3])
    assert trop_add(p, q).coeffs == (0, 2, 3)
    assert (p + q) == trop_add(p, q)


def test_mul_documented_example():
    p = TropPoly([0, 1, 0])
    q = TropPoly([0, 2, 3])
    assert trop_mul(p, q).coeffs == (0, 1, 0, 2, 3)


def test_mul_with_zero_and_one():
    p = TropPoly([3, INF, 1])
    assert trop_mul(p, TropPoly.zero()).is_zero()
    assert trop_mul(TropPoly.zero(), p).is_zero()
    assert trop_mul(p, TropPoly.one()) == p


def test_mul_monomial_shifts():
    p = TropPoly([1, 2, 3])
    m = TropPoly.monomial(2, 5)
    assert trop_mul(p, m).coeffs == (INF, INF, 6, 7, 8)


def test_mul_against_reference_random():
    rng = random.Random(4511)
    for _ in range(300):
        p = random_poly(rng, 9, inf_prob=0.2)
        q = random_poly(rng, 9, inf_prob=0.2)
        assert trop_mul(p, q) == ref_mul(p, q)


def test_mul_associative_commutative_random():
    rng = random.Random(4512)
    for _ in range(120):
        p = random_poly(rng, 6, inf_prob=0.15)
        q = random_poly(rng, 6, inf_prob=0.15)
        r = random_poly(rng, 6, inf_prob=0.15)
        assert trop_mul(p, q) == trop_mul(q, p)
        assert trop_mul(trop_mul(p, q), r) == trop_mul(p, trop_mul(q, r))
        assert trop_mul(p, trop_add(q, r)) == trop_add(trop_mul(p, q), trop_mul(p, r))


def test_pow():
    p = TropPoly([0, 1])
    assert trop_pow(p, 0) == TropPoly.one()
    assert trop_pow(p, 1) == p
    assert trop_pow(p, 3) == trop_mul(p, trop_mul(p, p))
    with pytest.raises(ValueError):
        trop_pow(p, -1)


def test_evaluate():
    # min(0, 5 + x, 2x) at x = 0 is 0, at x = -3 is -6, at inf it is c_0
    p = TropPoly([0, 5, 0])
    assert evaluate(p, 0) == 0
    assert evaluate(p, -3) == -6
    assert evaluate(p, INF) == 0
    assert evaluate(TropPoly.zero(), 7) is INF
    assert evaluate(TropPoly([INF, 2]), INF) is INF


def test_evaluate_is_min_of_terms_random():
    rng = random.Random(4513)
    for _ in range(200):
        p = random_poly(rng, 8, inf_prob=0.2)
        x = Fraction(rng.randint(-12, 12), rng.choice((1, 2, 3)))
        want = min(
            (c + k * x for k, c in enumerate(p.coeffs) if c is not INF),
            default=INF,
        )
        assert evaluate(p, x) == want


def test_normalize_content():
    m, c, core = normalize_content(TropPoly([INF, 3, 5, INF, 4]))
    assert (m, c) == (1, 3)
    assert core.coeffs == (0, 2, INF, 1)
    assert core.coefficient(0) == 0
    assert min(v for v in core.coeffs if v is not INF) == 0


def test_normalize_content_already_core():
    p = TropPoly([0, 2, 1])
    assert normalize_content(p) == (0, 0, p)
    with pytest.raises(ValueError):
        normalize_content(TropPoly.zero())


def test_normalize_content_recombines():
    rng = random.Random(4514)
    for _ in range(100):
        p = random_poly(rng, 7, inf_prob=0.25)
        m, c, core = normalize_content(p)
        assert trop_mul(TropPoly.monomial(m, c), core) == p


def test_bool_poly_basics():
    b = BoolPoly([0, 2, 5])
    assert b.degrees() == (0, 2, 5)
    assert b.degree == 5
    assert 2 in b and 3 not in b
    assert BoolPoly.from_mask(0b100101) == b
    assert b.mask == 0b100101


def test_bool_mul_is_sumset():
    a = BoolPoly([0, 1])
    b = BoolPoly([0, 3])
    assert bool_mul(a, b).degrees() == (0, 1, 3, 4)


def test_bool_mul_random_against_sets():
    rng = random.Random(4515)
    for _ in range(200):
        a = BoolPoly(rng.sample(range(12), rng.randint(1, 6)))
        b = BoolPoly(rng.sample(range(12), rng.randint(1, 6)))
        want = sorted({x + y for x in a.degrees() for y in b.degrees()})
        assert list(bool_mul(a, b).degrees()) == want


def test_bool_trop_round_trip():
    b = BoolPoly([0, 2, 3])
    p = b.to_trop()
    assert p.coeffs == (0, INF, 0, 0)
    assert BoolPoly.from_trop(p) == b
    with pytest.raises(ValueError):
        BoolPoly.from_trop(TropPoly([0, 1]))


def test_bool2_fill_and_frontier():
    p = BoolPoly2({(1, 1)})
    f = p.fill()
    assert f.points == frozenset({(0, 0), (0, 1), (1, 0), (1, 1)})
    assert f.is_filled
    assert not p.is_filled
    assert f.frontier() == frozenset({(1, 1)})


def test_bool2_mul_minkowski_on_filled():
    a = BoolPoly2({(1, 0), (0, 1)}).fill()
    b = BoolPoly2({(1, 1)}).fill()
    prod = bool2_mul(a, b)
    want = BoolPoly2({(2, 1), (1, 2)}).fill()
    assert prod == want


def test_bool2_mul_random_against_sets():
    rng = random.Random(4516)
    for _ in range(100):
        pa = {(rng.randint(0, 5), rng.randint(0, 5)) for _ in range(rng.randint(1, 5))}
        pb = {(rng.randint(0, 5), rng.randint(0, 5)) for _ in range(rng.randint(1, 5))}
        a, b = BoolPoly2(pa), BoolPoly2(pb)
        want = {(x1 + x2, y1 + y2) for x1, y1 in pa for x2, y2 in pb}
        assert bool2_mul(a, b) == BoolPoly2(want)
