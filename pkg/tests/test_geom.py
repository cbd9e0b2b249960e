import random
from fractions import Fraction

import pytest

from tilecheck.geom import (
    GeometryError,
    Plane,
    angular_cmp,
    canonical_direction3,
    det3,
    mat_vec3,
    plane_from,
    primitive3,
    rat,
    rat_str,
    side_of_plane,
    unimodular_to_e3,
)

Z_EQUALS_1 = plane_from((0, 0, 1), 1)


def test_side_of_plane_examples():
    assert side_of_plane((Fraction(0), Fraction(0), Fraction(0)), Z_EQUALS_1) == -1
    assert side_of_plane((Fraction(0), Fraction(0), Fraction(1)), Z_EQUALS_1) == 0
    assert side_of_plane((Fraction(1, 3), Fraction(0), Fraction(2)), Z_EQUALS_1) == 1


def test_side_of_plane_antisymmetric_under_negation():
    rng = random.Random(1)
    for _ in range(40):
        n = tuple(rng.randint(-5, 5) for _ in range(3))
        if n == (0, 0, 0):
            continue
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        p = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3))
        h = Plane(n, c)
        h_neg = Plane(tuple(-v for v in n), -c)
        assert side_of_plane(p, h) == -side_of_plane(p, h_neg)


def test_plane_canonical_form():
    assert plane_from((2, 4, 0), 6) == plane_from((1, 2, 0), 3)
    assert plane_from((-1, -2, 0), -3) == plane_from((1, 2, 0), 3)
    h = plane_from((Fraction(1, 2), 0, Fraction(-3, 2)), Fraction(5, 2))
    assert h.normal == (1, 0, -3)
    assert h.offset == Fraction(5)
    with pytest.raises(GeometryError):
        plane_from((0, 0, 0), 1)


def test_rat_parsing_and_formatting():
    assert rat("3/2") == Fraction(3, 2)
    assert rat(-4) == Fraction(-4)
    assert rat(Fraction(7, 3)) == Fraction(7, 3)
    assert rat_str(Fraction(3, 2)) == "3/2"
    assert rat_str(Fraction(-8, 4)) == "-2"
    with pytest.raises(GeometryError):
        rat(1.5)  # type: ignore[arg-type]
    with pytest.raises(GeometryError):
        rat("1/0")
    with pytest.raises(GeometryError):
        rat("nope")


def test_primitive_directions():
    assert primitive3((Fraction(2, 3), Fraction(-4, 3), Fraction(0))) == (1, -2, 0)
    assert canonical_direction3((Fraction(-2), Fraction(4), Fraction(0))) == (1, -2, 0)
    assert canonical_direction3((0, 0, -5)) == (0, 0, 1)


def test_unimodular_to_e3():
    rng = random.Random(2)
    cases = [(0, 0, 1), (0, 0, -1), (1, 0, 0), (2, 3, 5), (-4, 6, 9), (7, -3, 0)]
    for _ in range(30):
        v = tuple(rng.randint(-9, 9) for _ in range(3))
        if v == (0, 0, 0):
            continue
        cases.append(canonical_direction3(v))
    for d in cases:
        d = canonical_direction3(d)
        m = unimodular_to_e3(d)
        assert det3(*m) == 1
        assert all(c.denominator == 1 for row in m for c in row)
        assert mat_vec3(m, tuple(Fraction(c) for c in d)) == (0, 0, 1)


def test_angular_cmp_orders_counter_clockwise():
    vecs = [(1, 0), (2, 1), (0, 1), (-1, 1), (-1, 0), (-1, -3), (0, -1), (1, -1)]
    for i in range(len(vecs)):
        for j in range(len(vecs)):
            expected = 0 if i == j else (-1 if i < j else 1)
            assert angular_cmp(vecs[i], vecs[j]) == expected
