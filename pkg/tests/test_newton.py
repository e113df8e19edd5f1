import random
from fractions import Fraction

import pytest

from tropoly.newton import NewtonDiagram, is_strictly_above_chord, lower_hull, merge_hulls
from tropoly.poly import TropPoly, trop_mul
from tropoly.sampling import random_poly
from tropoly.scalar import INF


def test_hull_documented_example():
    d = lower_hull(TropPoly([0, 1, 0, 2, 3]))
    assert d.vertices == ((0, 0), (2, 0), (4, 3))
    assert d.edges == ((2, 0), (2, Fraction(3, 2)))
    assert d.span == 4


def test_hull_of_constant_and_monomial():
    assert lower_hull(TropPoly([5])).vertices == ((0, 5),)
    assert lower_hull(TropPoly([5])).edges == ()
    assert lower_hull(TropPoly.monomial(3, 2)).vertices == ((3, 2),)


def test_hull_ignores_infinite_positions():
    d = lower_hull(TropPoly([0, INF, INF, 6]))
    assert d.vertices == ((0, 0), (3, 6))
    assert d.edges == ((3, 2),)


def test_hull_rejects_zero():
    with pytest.raises(ValueError):
        lower_hull(TropPoly.zero())


def test_hull_collinear_points_collapse():
    # all on one line: single edge
    d = lower_hull(TropPoly([0, 2, 4, 6]))
    assert d.vertices == ((0, 0), (3, 6))
    assert d.edges == ((3, 2),)


def test_edge_slopes_strictly_increase_random():
    rng = random.Random(881)
    for _ in range(300):
        p = random_poly(rng, 12, inf_prob=0.2)
        d = lower_hull(p)
        slopes = [s for _, s in d.edges]
        assert all(a < b for a, b in zip(slopes, slopes[1:]))
        widths = [w for w, _ in d.edges]
        assert sum(widths) == d.span


def test_height_lower_bounds_coefficients_random():
    rng = random.Random(882)
    for _ in range(300):
        p = random_poly(rng, 12, inf_prob=0.2)
        d = lower_hull(p)
        lo = d.vertices[0][0]
        for k, c in enumerate(p.coeffs):
            if c is INF or not (lo <= k <= lo + d.span):
                continue
            assert d.height(k) <= c
        for x, h in d.vertices:
            assert p.coefficient(x) == h


def test_height_outside_span():
    d = lower_hull(TropPoly([0, 1]))
    assert d.height(0) == 0
    assert d.height(1) == 1
    assert d.height(Fraction(1, 2)) == Fraction(1, 2)
    with pytest.raises(ValueError):
        d.height(2)


def test_merge_equals_product_hull_random():
    rng = random.Random(883)
    for _ in range(400):
        p = random_poly(rng, 8, inf_prob=0.2)
        q = random_poly(rng, 8, inf_prob=0.2)
        assert merge_hulls(lower_hull(p), lower_hull(q)) == lower_hull(trop_mul(p, q))


def test_merge_interleaves_edges():
    # slopes 0 then 3/2 on one side, slope 1 on the other
    d1 = lower_hull(TropPoly([0, 1, 0, 2, 3]))
    d2 = lower_hull(TropPoly([0, 1]))
    merged = merge_hulls(d1, d2)
    assert merged.edges == ((2, 0), (1, 1), (2, Fraction(3, 2)))
    assert merged.vertices[0] == (0, 0)


def test_diagram_validation():
    with pytest.raises(ValueError):
        NewtonDiagram([])
    with pytest.raises(ValueError):
        NewtonDiagram([(0, 0), (2, 0), (4, Fraction(-1))])  # slopes must increase


def test_chord_examples():
    assert is_strictly_above_chord(TropPoly([0, 5, 0]))
    assert is_strictly_above_chord(TropPoly([0, 1, 0]))
    # a point on the chord defeats it
    assert not is_strictly_above_chord(TropPoly([0, 0, 0]))
    # below the chord too
    assert not is_strictly_above_chord(TropPoly([0, -1, 0]))


def test_chord_needs_all_finite():
    with pytest.raises(ValueError):
        is_strictly_above_chord(TropPoly([0, INF, 0]))
