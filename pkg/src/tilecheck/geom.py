"""Exact rational scalars, vectors, and planes.

Every coordinate in this package is a `fractions.Fraction`; nothing here
ever rounds, so interior/boundary distinctions are decided, not
approximated. Points and directions are plain tuples of Fractions to keep
the innermost predicates cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

Rat = Fraction
Vec2 = tuple[Fraction, Fraction]
Vec3 = tuple[Fraction, Fraction, Fraction]
IVec3 = tuple[int, int, int]
IVec2 = tuple[int, int]

_F0 = Fraction(0)


class TileCheckError(Exception):
    """Base class for every error this package raises deliberately."""


class GeometryError(TileCheckError):
    """Geometric input violates a documented precondition."""


def rat(value: int | str | Fraction) -> Fraction:
    """Exact rational from an int, a Fraction, or a "p/q" string.

    Floats are refused: accepting one would silently smuggle rounding into
    an exact pipeline.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise GeometryError(f"not an exact rational: {value!r}") from exc
    raise GeometryError(f"not an exact rational: {value!r}")


def rat_str(x: Fraction) -> str:
    """Serialize exactly: a bare integer string or "p/q"."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def sign(x: Fraction | int) -> int:
    return (x > 0) - (x < 0)


def vec2(x, y) -> Vec2:
    return (rat(x), rat(y))


def vec3(x, y, z) -> Vec3:
    return (rat(x), rat(y), rat(z))


# -- componentwise vector arithmetic ----------------------------------------

def add3(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def sub3(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def neg3(a: Vec3) -> Vec3:
    return (-a[0], -a[1], -a[2])


def scale3(c: Fraction | int, a: Vec3) -> Vec3:
    return (c * a[0], c * a[1], c * a[2])


def dot3(a, b) -> Fraction:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def is_zero3(a) -> bool:
    return a[0] == 0 and a[1] == 0 and a[2] == 0


def add2(a: Vec2, b: Vec2) -> Vec2:
    return (a[0] + b[0], a[1] + b[1])


def sub2(a: Vec2, b: Vec2) -> Vec2:
    return (a[0] - b[0], a[1] - b[1])


def neg2(a: Vec2) -> Vec2:
    return (-a[0], -a[1])


def scale2(c: Fraction | int, a: Vec2) -> Vec2:
    return (c * a[0], c * a[1])


def dot2(a, b) -> Fraction:
    return a[0] * b[0] + a[1] * b[1]


def cross2(a, b):
    """Scalar cross product; positive when b is counter-clockwise of a."""
    return a[0] * b[1] - a[1] * b[0]


def is_zero2(a) -> bool:
    return a[0] == 0 and a[1] == 0


# -- primitive integer directions --------------------------------------------

def _scale_to_int(components) -> tuple[int, ...]:
    mult = reduce(lcm, (Fraction(c).denominator for c in components), 1)
    ints = [int(c * mult) for c in components]
    g = reduce(gcd, (abs(v) for v in ints), 0)
    if g == 0:
        raise GeometryError("zero vector has no direction")
    return tuple(v // g for v in ints)


def primitive3(v) -> IVec3:
    """Coprime integer vector with the same direction as the rational v."""
    return _scale_to_int(v)  # type: ignore[return-value]


def primitive2(v) -> IVec2:
    return _scale_to_int(v)  # type: ignore[return-value]


def _canonical_sign(ints: tuple[int, ...]) -> tuple[int, ...]:
    for c in ints:
        if c != 0:
            return ints if c > 0 else tuple(-v for v in ints)
    raise GeometryError("zero vector has no direction")


def canonical_direction3(v) -> IVec3:
    """Primitive integer direction with the first nonzero component positive."""
    return _canonical_sign(primitive3(v))  # type: ignore[return-value]


def canonical_direction2(v) -> IVec2:
    return _canonical_sign(primitive2(v))  # type: ignore[return-value]


# -- planes -------------------------------------------------------------------

@dataclass(frozen=True)
class Plane:
    """Rational plane {x : normal . x = offset} in canonical form.

    The normal is a coprime integer vector whose first nonzero component is
    positive, so two planes are equal exactly when their fields are equal.
    """

    normal: IVec3
    offset: Fraction

    def side_of(self, p: Vec3) -> int:
        return sign(dot3(self.normal, p) - self.offset)


def plane_from(normal, offset) -> Plane:
    """Canonical plane through {x : normal . x = offset}; normal may be rational."""
    prim = primitive3(normal)
    # primitive3 rescales by a positive factor; recover it to fix the offset
    scale = next(Fraction(raw) / p for raw, p in zip(normal, prim) if p != 0)
    off = rat(offset) / scale
    first = next(c for c in prim if c != 0)
    if first < 0:
        prim, off = tuple(-c for c in prim), -off
    return Plane(prim, off)  # type: ignore[arg-type]


def side_of_plane(p: Vec3, h: Plane) -> int:
    """Sign of normal . p - offset: -1 below, 0 on, +1 above. Exact."""
    return h.side_of(p)


# -- small exact linear algebra ----------------------------------------------

def det2(a, b) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def det3(a, b, c) -> Fraction:
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def solve_rows(rows: tuple[Vec3, Vec3, Vec3], rhs: Vec3) -> Vec3 | None:
    """Coefficients c with c1*rows[0] + c2*rows[1] + c3*rows[2] = rhs, or None."""
    d = det3(*rows)
    if d == 0:
        return None
    c1 = det3(rhs, rows[1], rows[2]) / d
    c2 = det3(rows[0], rhs, rows[2]) / d
    c3 = det3(rows[0], rows[1], rhs) / d
    return (c1, c2, c3)


def plane_intersection(planes: tuple[Plane, Plane, Plane]) -> Vec3 | None:
    """Common point of three planes, or None when the normals are dependent."""
    a, b, c = planes
    rows = (
        tuple(Fraction(v) for v in a.normal),
        tuple(Fraction(v) for v in b.normal),
        tuple(Fraction(v) for v in c.normal),
    )
    d = det3(*rows)
    if d == 0:
        return None
    rhs = (a.offset, b.offset, c.offset)
    # Cramer on the transposed system: rows are the constraint normals.
    x = det3((rhs[0], rows[0][1], rows[0][2]),
             (rhs[1], rows[1][1], rows[1][2]),
             (rhs[2], rows[2][1], rows[2][2])) / d
    y = det3((rows[0][0], rhs[0], rows[0][2]),
             (rows[1][0], rhs[1], rows[1][2]),
             (rows[2][0], rhs[2], rows[2][2])) / d
    z = det3((rows[0][0], rows[0][1], rhs[0]),
             (rows[1][0], rows[1][1], rhs[1]),
             (rows[2][0], rows[2][1], rhs[2])) / d
    return (x, y, z)


Mat3 = tuple[Vec3, Vec3, Vec3]  # three rows


def mat_vec3(m: Mat3, v: Vec3) -> Vec3:
    return (dot3(m[0], v), dot3(m[1], v), dot3(m[2], v))


def mat_mul3(a: Mat3, b: Mat3) -> Mat3:
    cols = tuple(zip(*b))
    return tuple(tuple(dot3(row, col) for col in cols) for row in a)  # type: ignore[return-value]


def mat_det3(m: Mat3) -> Fraction:
    return det3(*m)


def mat_identity3() -> Mat3:
    one, zero = Fraction(1), Fraction(0)
    return ((one, zero, zero), (zero, one, zero), (zero, zero, one))


def unimodular_to_e3(direction: IVec3) -> Mat3:
    """Integer matrix M with det +1 and M . d = (0, 0, 1) for primitive d.

    Built by running the Euclidean algorithm on the components with integer
    row operations, so the inverse is integral too.
    """
    d = list(direction)
    if reduce(gcd, (abs(c) for c in d)) != 1:
        raise GeometryError("direction must be a primitive integer vector")
    m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    def row_op(dst: int, src: int, q: int) -> None:
        d[dst] -= q * d[src]
        for j in range(3):
            m[dst][j] -= q * m[src][j]

    def clear_pair(i: int, j: int) -> None:
        # Euclid between components i and j until component i is zero.
        while d[i] != 0:
            if d[j] == 0 or abs(d[i]) < abs(d[j]):
                d[i], d[j] = d[j], d[i]
                m[i], m[j] = m[j], m[i]
                continue
            row_op(i, j, d[i] // d[j])

    clear_pair(0, 1)
    clear_pair(1, 2)
    if d[2] < 0:
        d[2] = -d[2]
        m[2] = [-c for c in m[2]]
    assert d == [0, 0, 1]
    rows = tuple(tuple(Fraction(c) for c in row) for row in m)
    if det3(*rows) < 0:
        rows = (tuple(-c for c in rows[0]), rows[1], rows[2])
    assert det3(*rows) == 1
    return rows  # type: ignore[return-value]


# -- exact angular order in the plane ----------------------------------------

def angular_half(v) -> int:
    """0 for angles in [0, pi) measured from +x counter-clockwise, 1 otherwise."""
    if v[1] > 0 or (v[1] == 0 and v[0] > 0):
        return 0
    return 1


def angular_cmp(a, b) -> int:
    """Exact counter-clockwise angular comparison of nonzero plane vectors."""
    ha, hb = angular_half(a), angular_half(b)
    if ha != hb:
        return -1 if ha < hb else 1
    return -sign(cross2(a, b))
