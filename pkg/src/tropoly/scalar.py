"""Scalars of the min-plus semiring.

A scalar is an exact rational number or the additive identity ``INF``.
Rationals are kept as plain ``int`` where possible and ``fractions.Fraction``
otherwise; there is no wrapper class, so ordinary ``+``, ``min`` and
comparisons do the semiring work on finite values.  ``INF`` is a singleton
that absorbs addition and is the largest element in the order.

Semiring dictionary:

    oplus(a, b)  = min(a, b)        identity INF
    otimes(a, b) = a + b            identity 0, absorber INF
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union


class _Infinity:
    """The unique infinite scalar.  Compare with ``x is INF``."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __hash__(self):
        return hash(math.inf)

    def __eq__(self, other):
        return other is self or (isinstance(other, float) and math.isinf(other) and other > 0)

    def __ne__(self, other):
        return not self.__eq__(other)

    # INF + x = INF for every scalar x.
    def __add__(self, other):
        if isinstance(other, (int, Fraction, _Infinity)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        # INF - finite = INF; INF - INF is undefined.
        if other is self:
            raise ArithmeticError("INF - INF is undefined")
        if isinstance(other, (int, Fraction)):
            return self
        return NotImplemented

    def __rsub__(self, other):
        raise ArithmeticError("cannot subtract INF from a finite scalar")

    def __neg__(self):
        raise ArithmeticError("-INF is not a scalar")

    # k * INF arises when raising to tropical powers: k copies of INF.
    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other > 0:
                return self
            if other == 0:
                return 0
            raise ArithmeticError("negative multiple of INF")
        return NotImplemented

    __mul__ = __rmul__

    def __lt__(self, other):
        if isinstance(other, (int, Fraction, _Infinity)):
            return False
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, _Infinity):
            return True
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, (int, Fraction)):
            return True
        if isinstance(other, _Infinity):
            return False
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (int, Fraction, _Infinity)):
            return True
        return NotImplemented


INF = _Infinity()

TropScalar = Union[int, Fraction, _Infinity]


def as_scalar(value) -> TropScalar:
    """Coerce *value* to a canonical scalar.

    Accepts int, Fraction (demoted to int when integral), INF, and infinite
    floats.  Finite floats are rejected: exactness is a package-wide
    guarantee and silently converting 0.1 would break it.
    """
    if value is INF:
        return INF
    if isinstance(value, bool):
        raise TypeError("bool is not a tropical scalar")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, float):
        if math.isinf(value) and value > 0:
            return INF
        raise TypeError(f"finite float {value!r} is not exact; use int or Fraction")
    raise TypeError(f"not a tropical scalar: {value!r}")


def is_finite(value: TropScalar) -> bool:
    return value is not INF


def oplus(a: TropScalar, b: TropScalar) -> TropScalar:
    """Tropical addition: min."""
    if a is INF:
        return b
    if b is INF:
        return a
    return a if a <= b else b


def otimes(a: TropScalar, b: TropScalar) -> TropScalar:
    """Tropical multiplication: ordinary addition, INF absorbing."""
    if a is INF or b is INF:
        return INF
    return a + b
