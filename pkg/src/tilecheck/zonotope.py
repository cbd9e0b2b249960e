"""Zonotopes: Minkowski sums of origin-centered segments.

Each generator vector g stands for the segment from -g/2 to +g/2, so every
zonotope built here is centered at the origin. Facets are enumerated from
pairwise cross products: each facet normal is orthogonal to a maximal
coplanar subset of generators, and the facet is that subset's zonogon
translated by half the signed sum of the remaining generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .geom import (
    GeometryError,
    IVec3,
    Vec3,
    add3,
    angular_cmp,
    canonical_direction3,
    cross3,
    dot3,
    is_zero3,
    neg3,
    scale3,
    sub3,
)
from .polytope import Facet, Polytope3, assemble, validate

GeneratorSet = tuple[Vec3, ...]


@dataclass(frozen=True)
class FacetClass:
    """The two antipodal facets sharing a normal direction, with the coplanar
    generators that span them."""

    normal: IVec3                      # canonical direction of the class
    facet_indices: tuple[int, int]
    generator_indices: tuple[int, ...]


def normalize_generators(raw) -> GeneratorSet:
    """Canonical generator set: merged parallels, canonical signs, sorted.

    Parallel generators are merged by summing their lengths along the common
    direction. Raises if any generator is zero or the set does not span
    3-space.
    """
    merged: dict[IVec3, Vec3] = {}
    for g in raw:
        v: Vec3 = tuple(Fraction(c) for c in g)  # type: ignore[assignment]
        if is_zero3(v):
            raise GeometryError("zero generator")
        d = canonical_direction3(v)
        first = next(c for c in v if c != 0)
        if first < 0:
            v = neg3(v)
        merged[d] = add3(merged[d], v) if d in merged else v
    gens = tuple(sorted(merged.values()))
    if len(gens) < 3:
        raise GeometryError("not full-dimensional")
    rank_ok = any(
        dot3(cross3(gens[i], gens[j]), gens[k]) != 0
        for i in range(len(gens))
        for j in range(i + 1, len(gens))
        for k in range(j + 1, len(gens))
    )
    if not rank_ok:
        raise GeometryError("not full-dimensional")
    return gens


def _zonogon_cycle(gens: list[Vec3], frame_u: Vec3, frame_w: Vec3) -> list[Vec3]:
    """Vertex cycle of the zonogon of coplanar generators, CCW in the frame.

    The frame (u, w) must be a positively oriented basis of the generators'
    plane; circular order is preserved under the linear frame map, which is
    all the construction needs.
    """
    oriented = []
    for g in gens:
        a, b = dot3(g, frame_u), dot3(g, frame_w)
        if b < 0 or (b == 0 and a < 0):
            g = neg3(g)
            a, b = -a, -b
        oriented.append((g, (a, b)))
    oriented.sort(key=cmp_to_key(lambda p, q: angular_cmp(p[1], q[1])))
    ordered = [g for g, _ in oriented]

    start = scale3(Fraction(-1, 2), _vec_sum(ordered))
    half = [start]
    for g in ordered[:-1]:
        half.append(add3(half[-1], g))
    return half + [neg3(p) for p in half]


def _vec_sum(vs) -> Vec3:
    total = (Fraction(0), Fraction(0), Fraction(0))
    for v in vs:
        total = add3(total, v)
    return total


def build_zonotope(raw) -> Polytope3:
    """Full vertex/facet/edge representation of the zonotope of `raw`.

    Accepts unnormalized generators; normalization errors propagate.
    """
    gens = normalize_generators(raw)
    m = len(gens)

    directions: dict[IVec3, None] = {}
    for i in range(m):
        for j in range(i + 1, m):
            n = cross3(gens[i], gens[j])
            directions.setdefault(canonical_direction3(n), None)

    point_facets = []
    for d in directions:
        d_frac: Vec3 = tuple(Fraction(c) for c in d)  # type: ignore[assignment]
        coplanar = [g for g in gens if dot3(d, g) == 0]
        rest_sum = _vec_sum([g if dot3(d, g) > 0 else neg3(g)
                             for g in gens if dot3(d, g) != 0])
        for outward in (d, tuple(-c for c in d)):
            shift = scale3(Fraction(1, 2), rest_sum)
            if outward != d:
                shift = neg3(shift)
            # frame (u, w, outward) right-handed so the cycle is CCW from outside
            u = coplanar[0]
            out_frac: Vec3 = tuple(Fraction(c) for c in outward)  # type: ignore[assignment]
            w = cross3(out_frac, u)
            cycle = [add3(p, shift) for p in _zonogon_cycle(coplanar, u, w)]
            offset = dot3(outward, cycle[0])
            point_facets.append((outward, offset, cycle))

    poly = assemble(point_facets, generators=gens)
    validate(poly)
    return poly


def facet_classes(poly: Polytope3) -> list[FacetClass]:
    """Group the facets of a built zonotope into antipodal normal classes."""
    if poly.generators is None:
        raise GeometryError("facet classes require a zonotope with generators")
    by_direction: dict[IVec3, list[int]] = {}
    for idx, f in enumerate(poly.facets):
        by_direction.setdefault(canonical_direction3(f.normal), []).append(idx)
    classes = []
    for d in sorted(by_direction):
        members = by_direction[d]
        if len(members) != 2:
            raise GeometryError("facet class without an antipodal pair")
        contributing = tuple(i for i, g in enumerate(poly.generators)
                             if dot3(d, g) == 0)
        classes.append(FacetClass(d, (members[0], members[1]), contributing))
    return classes
