import random
from fractions import Fraction

import pytest

from tropoly.scalar import INF, as_scalar, is_finite, oplus, otimes


def test_as_scalar_accepts_ints_and_fractions():
    assert as_scalar(3) == 3
    assert as_scalar(-7) == -7
    assert as_scalar(Fraction(1, 2)) == Fraction(1, 2)


def test_as_scalar_demotes_integral_fractions():
    v = as_scalar(Fraction(6, 3))
    assert v == 2
    assert isinstance(v, int)


def test_as_scalar_accepts_float_infinity_only():
    assert as_scalar(float("inf")) is INF
    with pytest.raises(TypeError):
        as_scalar(0.5)
    with pytest.raises(TypeError):
        as_scalar(float("nan"))


def test_as_scalar_rejects_bool():
    # bool is an int subclass; it must not sneak in as 0/1
    with pytest.raises(TypeError):
        as_scalar(True)


def test_infinity_is_identity_and_absorber():
    assert oplus(INF, 5) == 5
    assert oplus(5, INF) == 5
    assert oplus(INF, INF) is INF
    assert otimes(INF, 5) is INF
    assert otimes(5, INF) is INF
    assert otimes(INF, INF) is INF


def test_is_finite():
    assert is_finite(0)
    assert is_finite(Fraction(-3, 2))
    assert not is_finite(INF)


def test_ops_on_finite_values():
    assert oplus(2, 5) == 2
    assert oplus(Fraction(1, 2), 1) == Fraction(1, 2)
    assert otimes(2, 5) == 7
    assert otimes(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_semiring_laws_random():
    rng = random.Random(20210)
    pool = [INF] + [Fraction(rng.randint(-40, 40), rng.choice((1, 1, 2, 3))) for _ in range(30)]
    pool = [as_scalar(v) if v is not INF else INF for v in pool]
    for _ in range(500):
        a, b, c = (rng.choice(pool) for _ in range(3))
        assert oplus(a, b) == oplus(b, a)
        assert otimes(a, b) == otimes(b, a)
        assert oplus(oplus(a, b), c) == oplus(a, oplus(b, c))
        assert otimes(otimes(a, b), c) == otimes(a, otimes(b, c))
        assert otimes(a, oplus(b, c)) == oplus(otimes(a, b), otimes(a, c))
        assert oplus(a, INF) == a
        assert otimes(a, 0) == a
