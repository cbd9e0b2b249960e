"""Rational lattices, greedy basis reduction, and exact Voronoi cells.

The Voronoi (Dirichlet) cell of a lattice is the intersection of the
half-spaces 2 x . v <= v . v over nonzero lattice vectors v; squared-norm
comparisons keep everything rational. Candidates come from a coefficient
box over the reduced basis, and completeness is asserted by checking that
enlarging the box does not change the cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geom import (
    GeometryError,
    Vec3,
    add3,
    det3,
    dot3,
    neg3,
    primitive3,
    rat,
    scale3,
)
from .polytope import (
    Location,
    Polytope3,
    clip_halfspace,
    locate_point,
    primitive_with_offset,
    validate,
)
from .zonotope import build_zonotope


@dataclass(frozen=True)
class Lattice3:
    """Three independent rational basis rows with their cached determinant."""

    basis: tuple[Vec3, Vec3, Vec3]
    determinant: Fraction

    def vector(self, c1: int, c2: int, c3: int) -> Vec3:
        b1, b2, b3 = self.basis
        return add3(add3(scale3(c1, b1), scale3(c2, b2)), scale3(c3, b3))

    def coefficients(self, point: Vec3) -> Vec3:
        """Exact coordinates of a point in this basis (Cramer)."""
        b1, b2, b3 = self.basis
        return (
            det3(point, b2, b3) / self.determinant,
            det3(b1, point, b3) / self.determinant,
            det3(b1, b2, point) / self.determinant,
        )


def lattice3(rows) -> Lattice3:
    basis = tuple(tuple(rat(c) for c in row) for row in rows)
    if len(basis) != 3 or any(len(r) != 3 for r in basis):
        raise GeometryError("lattice basis must be three 3-vectors")
    d = det3(*basis)
    if d == 0:
        raise GeometryError("singular basis")
    return Lattice3(basis, d)  # type: ignore[arg-type]


def _round_nearest(x: Fraction) -> int:
    half_up = x + Fraction(1, 2)
    return half_up.numerator // half_up.denominator


def reduce_basis(lat: Lattice3) -> Lattice3:
    """Greedy pairwise reduction until no vector can be shortened.

    Subtracts the rounded projection of one basis vector onto another
    whenever that strictly shrinks it; terminates because squared norms take
    discrete values on a lattice. The determinant is preserved up to sign.
    """
    rows = [list(r) for r in lat.basis]

    def norm_sq(r) -> Fraction:
        return r[0] * r[0] + r[1] * r[1] + r[2] * r[2]

    changed = True
    while changed:
        changed = False
        for i in range(3):
            for j in range(3):
                if i == j:
                    continue
                mu = _round_nearest(
                    Fraction(sum(rows[i][k] * rows[j][k] for k in range(3)))
                    / norm_sq(rows[j]))
                if mu == 0:
                    continue
                cand = [rows[i][k] - mu * rows[j][k] for k in range(3)]
                if norm_sq(cand) < norm_sq(rows[i]):
                    rows[i] = cand
                    changed = True

    canon = []
    for r in rows:
        first = next((c for c in r if c != 0), None)
        canon.append(tuple(r) if first is None or first > 0 else tuple(-c for c in r))
    canon.sort(key=lambda r: (norm_sq(r), r))
    return lattice3(canon)


@dataclass(frozen=True)
class DVCell:
    """Voronoi cell of a lattice with its facet-defining lattice vectors."""

    cell: Polytope3
    relevant_vectors: tuple[Vec3, ...]
    lattice: Lattice3


def _candidate_vectors(lat: Lattice3, box: int) -> list[Vec3]:
    """Shortest lattice vector per signed direction within the coefficient box."""
    best: dict[tuple[int, int, int], Vec3] = {}
    rng = range(-box, box + 1)
    for c1 in rng:
        for c2 in rng:
            for c3 in rng:
                if c1 == c2 == c3 == 0:
                    continue
                v = lat.vector(c1, c2, c3)
                d = primitive3(v)
                cur = best.get(d)
                if cur is None or dot3(v, v) < dot3(cur, cur):
                    best[d] = v
    return sorted(best.values(), key=lambda v: (dot3(v, v), v))


def dv_cell(lat: Lattice3, box: int = 3) -> DVCell:
    """Exact Voronoi cell via half-space clipping, shortest planes first.

    Starts from a generous bounding cube, cuts with candidate bisector
    planes in order of increasing norm, and stops as soon as no remaining
    candidate can reach the current circumradius. Redundant half-spaces
    disappear automatically: only facet-defining planes survive.
    """
    reduced = reduce_basis(lat)
    radius = sum(abs(c) for row in reduced.basis for c in row)
    cell = build_zonotope([
        (2 * radius, 0, 0), (0, 2 * radius, 0), (0, 0, 2 * radius),
    ])

    def circumradius_sq(p: Polytope3) -> Fraction:
        return max(dot3(v, v) for v in p.vertices)

    mu = circumradius_sq(cell)
    for v in _candidate_vectors(reduced, box):
        vv = dot3(v, v)
        if vv >= 4 * mu:
            break
        clipped = clip_halfspace(cell, v, vv / 2)
        if clipped is not cell:
            cell = clipped
            mu = circumradius_sq(cell)

    validate(cell)
    if locate_point((Fraction(0), Fraction(0), Fraction(0)), cell) is not Location.INTERIOR:
        raise GeometryError("origin not interior to the Voronoi cell")
    vset = set(cell.vertices)
    if any(neg3(v) not in vset for v in vset):
        raise GeometryError("Voronoi cell not symmetric")

    by_plane = {}
    for v in _candidate_vectors(reduced, box):
        by_plane.setdefault(primitive_with_offset(v, dot3(v, v) / 2), v)
    relevant = []
    for f in cell.facets:
        v = by_plane.get((f.normal, f.offset))
        if v is None:
            raise GeometryError("candidate coefficient box too small")
        relevant.append(v)
    return DVCell(cell, tuple(sorted(relevant)), lat)
