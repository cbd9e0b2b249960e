"""Convex 3-polytopes with exact rational vertices and oriented facet cycles.

A `Polytope3` stores its vertices, its facets as (outward plane, vertex
cycle) pairs, and its edge list. Facet cycles run counter-clockwise seen
from outside and start at their smallest vertex index, facets are sorted by
their outward normal, and vertices are sorted lexicographically, so equal
polytopes have identical field values and serialization is byte-stable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key

from .geom import (
    GeometryError,
    IVec3,
    Plane,
    Vec3,
    add3,
    angular_cmp,
    cross3,
    det3,
    dot3,
    neg3,
    plane_from,
    primitive3,
    scale3,
    sign,
    sub3,
)


class Location(enum.Enum):
    INTERIOR = "Interior"
    BOUNDARY = "Boundary"
    OUTSIDE = "Outside"


@dataclass(frozen=True)
class Facet:
    """One facet: outward supporting plane plus its oriented vertex cycle."""

    normal: IVec3            # outward, coprime integers
    offset: Fraction         # normal . x = offset on the facet plane
    cycle: tuple[int, ...]   # vertex indices, counter-clockwise from outside

    def plane(self) -> Plane:
        return plane_from(self.normal, self.offset)


@dataclass(frozen=True)
class Polytope3:
    vertices: tuple[Vec3, ...]
    facets: tuple[Facet, ...]
    edges: tuple[tuple[int, int], ...]
    generators: tuple[Vec3, ...] | None = field(default=None, compare=False)

    def center(self) -> Vec3:
        n = len(self.vertices)
        total = (Fraction(0), Fraction(0), Fraction(0))
        for v in self.vertices:
            total = add3(total, v)
        return scale3(Fraction(1, n), total)

    def facet_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(len(f.cycle) for f in self.facets))

    def translate(self, t: Vec3) -> "Polytope3":
        verts = tuple(add3(v, t) for v in self.vertices)
        facets = tuple(
            Facet(f.normal, f.offset + dot3(f.normal, t), f.cycle) for f in self.facets
        )
        return Polytope3(verts, facets, self.edges, None)


def _rotate_to_min(cycle: tuple[int, ...]) -> tuple[int, ...]:
    k = cycle.index(min(cycle))
    return cycle[k:] + cycle[:k]


def assemble(point_facets: list[tuple[IVec3, Fraction, list[Vec3]]],
             generators: tuple[Vec3, ...] | None = None) -> Polytope3:
    """Build the canonical Polytope3 from facets given as point cycles.

    Each entry is (outward primitive normal, offset, cycle points CCW from
    outside). Vertices are deduplicated exactly and everything is put into
    canonical order.
    """
    index: dict[Vec3, int] = {}
    for _, _, pts in point_facets:
        for p in pts:
            index.setdefault(p, 0)
    ordered = sorted(index)
    index = {p: i for i, p in enumerate(ordered)}

    facets = []
    for normal, offset, pts in point_facets:
        cycle = _rotate_to_min(tuple(index[p] for p in pts))
        facets.append(Facet(normal, offset, cycle))
    facets.sort(key=lambda f: (f.normal, f.offset))

    edges = set()
    for f in facets:
        cyc = f.cycle
        for i, a in enumerate(cyc):
            b = cyc[(i + 1) % len(cyc)]
            edges.add((a, b) if a < b else (b, a))

    return Polytope3(tuple(ordered), tuple(facets), tuple(sorted(edges)), generators)


def validate(p: Polytope3) -> None:
    """Check convexity, incidence, orientation, and the Euler formula.

    Raises GeometryError with a specific message on the first violation.
    """
    nv, ne, nf = len(p.vertices), len(p.edges), len(p.facets)
    if nv < 4 or nf < 4:
        raise GeometryError("polytope needs at least 4 vertices and 4 facets")
    if nv - ne + nf != 2:
        raise GeometryError(f"Euler formula violated: V-E+F = {nv - ne + nf}")
    if len(set(p.vertices)) != nv:
        raise GeometryError("duplicate vertices")

    edge_count: dict[tuple[int, int], int] = {}
    for f in p.facets:
        cyc = f.cycle
        if len(cyc) < 3:
            raise GeometryError("facet cycle with fewer than 3 vertices")
        on_plane = {i for i, v in enumerate(p.vertices)
                    if dot3(f.normal, v) == f.offset}
        if set(cyc) != on_plane:
            raise GeometryError("facet cycle does not match its supporting plane")
        for i, v in enumerate(p.vertices):
            if dot3(f.normal, v) > f.offset:
                raise GeometryError("vertex on the outer side of a facet plane")
        normal_frac = tuple(Fraction(c) for c in f.normal)
        for i in range(len(cyc)):
            a = p.vertices[cyc[i]]
            b = p.vertices[cyc[(i + 1) % len(cyc)]]
            c = p.vertices[cyc[(i + 2) % len(cyc)]]
            turn = dot3(normal_frac, cross3(sub3(b, a), sub3(c, b)))
            if turn <= 0:
                raise GeometryError("facet cycle not strictly convex and CCW")
            e = (cyc[i], cyc[(i + 1) % len(cyc)])
            key = (min(e), max(e))
            edge_count[key] = edge_count.get(key, 0) + 1
    if set(edge_count) != set(p.edges) or any(c != 2 for c in edge_count.values()):
        raise GeometryError("every edge must belong to exactly two facets")


def polytope_from_raw(vertices: list[Vec3], cycles: list[list[int]]) -> Polytope3:
    """Polytope from raw vertex coordinates and facet index cycles.

    Cycles may come in either orientation; each is flipped, if necessary, so
    it runs counter-clockwise seen from outside. The result is validated, so
    non-convex or inconsistent input is rejected rather than mis-modelled.
    """
    if len(vertices) < 4:
        raise GeometryError("raw polytope needs at least 4 vertices")
    n = len(vertices)
    total = (Fraction(0), Fraction(0), Fraction(0))
    for v in vertices:
        total = add3(total, v)
    centroid = scale3(Fraction(1, n), total)

    point_facets = []
    for cyc in cycles:
        if len(cyc) < 3 or len(set(cyc)) != len(cyc):
            raise GeometryError("facet cycle must list at least 3 distinct vertices")
        if any(i < 0 or i >= n for i in cyc):
            raise GeometryError("facet cycle references a missing vertex")
        pts = [vertices[i] for i in cyc]
        # Newell normal: exact, and independent of which vertices are collinear
        normal = (Fraction(0), Fraction(0), Fraction(0))
        for i in range(len(pts)):
            normal = add3(normal, cross3(pts[i], pts[(i + 1) % len(pts)]))
        if normal == (0, 0, 0):
            raise GeometryError("degenerate facet cycle")
        offset = dot3(normal, pts[0])
        if any(dot3(normal, q) != offset for q in pts[1:]):
            raise GeometryError("facet cycle is not planar")
        if sign(dot3(normal, centroid) - offset) >= 0:
            pts = pts[::-1]
            normal = neg3(normal)
            offset = -offset
        prim = primitive3(normal)
        scale = next(Fraction(raw) / c for raw, c in zip(normal, prim) if c != 0)
        point_facets.append((prim, offset / scale, pts))

    poly = assemble(point_facets)
    validate(poly)
    return poly


# -- predicates ---------------------------------------------------------------

def locate_point(p: Vec3, poly: Polytope3) -> Location:
    """Exact point location against the facet half-spaces."""
    on_boundary = False
    for f in poly.facets:
        n = f.normal
        s = n[0] * p[0] + n[1] * p[1] + n[2] * p[2] - f.offset
        if s > 0:
            return Location.OUTSIDE
        if s == 0:
            on_boundary = True
    return Location.BOUNDARY if on_boundary else Location.INTERIOR


def polytope_volume(poly: Polytope3) -> Fraction:
    """Exact volume via a fan of tetrahedra from the vertex centroid."""
    o = poly.center()
    total = Fraction(0)
    for f in poly.facets:
        pts = [sub3(poly.vertices[i], o) for i in f.cycle]
        for i in range(1, len(pts) - 1):
            total += det3(pts[0], pts[i], pts[i + 1])
    if total == 0:
        raise GeometryError("zero volume")
    return total / 6


def is_centrally_symmetric(poly: Polytope3) -> bool:
    """True iff the vertex set maps to itself under reflection through its centroid."""
    c2 = scale3(2, poly.center())
    verts = set(poly.vertices)
    return all(sub3(c2, v) in verts for v in verts)


def facets_centrally_symmetric(poly: Polytope3) -> bool:
    """True iff every facet cycle is symmetric through the facet's own centroid."""
    for f in poly.facets:
        pts = [poly.vertices[i] for i in f.cycle]
        if len(pts) % 2 != 0:
            return False
        total = (Fraction(0), Fraction(0), Fraction(0))
        for p in pts:
            total = add3(total, p)
        c2 = scale3(Fraction(2, len(pts)), total)
        pset = set(pts)
        if any(sub3(c2, p) not in pset for p in pts):
            return False
    return True


def bounding_box(poly: Polytope3) -> tuple[Vec3, Vec3]:
    lo = tuple(min(v[i] for v in poly.vertices) for i in range(3))
    hi = tuple(max(v[i] for v in poly.vertices) for i in range(3))
    return lo, hi  # type: ignore[return-value]


# -- half-space clipping -------------------------------------------------------

def clip_halfspace(poly: Polytope3, normal: IVec3, offset: Fraction) -> Polytope3:
    """Intersect with {x : normal . x <= offset}; exact, returns input if no cut.

    The cutting plane must not contain the whole polytope and must leave a
    full-dimensional piece (true whenever a strictly interior point
    satisfies the constraint strictly, as for Voronoi cell construction).
    """
    side = [sign(dot3(normal, v) - offset) for v in poly.vertices]
    if all(s <= 0 for s in side):
        return poly
    if all(s >= 0 for s in side):
        raise GeometryError("half-space cuts away the whole polytope")

    crossing_cache: dict[tuple[int, int], Vec3] = {}

    def crossing(i: int, j: int) -> Vec3:
        key = (i, j) if i < j else (j, i)
        got = crossing_cache.get(key)
        if got is None:
            a, b = poly.vertices[i], poly.vertices[j]
            na, nb = dot3(normal, a), dot3(normal, b)
            t = (offset - na) / (nb - na)
            got = add3(a, scale3(t, sub3(b, a)))
            crossing_cache[key] = got
        return got

    point_facets: list[tuple[IVec3, Fraction, list[Vec3]]] = []
    section: dict[Vec3, None] = {}
    for f in poly.facets:
        cyc = f.cycle
        out_pts: list[Vec3] = []
        for i in range(len(cyc)):
            a, b = cyc[i], cyc[(i + 1) % len(cyc)]
            if side[a] <= 0:
                out_pts.append(poly.vertices[a])
                if side[a] == 0:
                    section[poly.vertices[a]] = None
            if side[a] * side[b] < 0:
                q = crossing(a, b)
                out_pts.append(q)
                section[q] = None
        # drop exact duplicates introduced by on-plane vertices
        dedup: list[Vec3] = []
        for p in out_pts:
            if not dedup or p != dedup[-1]:
                dedup.append(p)
        if len(dedup) > 1 and dedup[0] == dedup[-1]:
            dedup.pop()
        if len(dedup) >= 3:
            point_facets.append((f.normal, f.offset, dedup))

    cut_pts = list(section)
    if len(cut_pts) < 3:
        raise GeometryError("degenerate cut section")
    prim, off = primitive_with_offset(normal, offset)
    point_facets.append((prim, off, _order_section(cut_pts, normal)))
    return assemble(point_facets)


def primitive_with_offset(normal, offset: Fraction) -> tuple[IVec3, Fraction]:
    prim = primitive3(normal)
    scale = next(Fraction(raw) / c for raw, c in zip(normal, prim) if c != 0)
    return prim, offset / scale


def _order_section(pts: list[Vec3], normal) -> list[Vec3]:
    """Order coplanar points counter-clockwise seen from the +normal side."""
    n = len(pts)
    total = (Fraction(0), Fraction(0), Fraction(0))
    for p in pts:
        total = add3(total, p)
    c = scale3(Fraction(1, n), total)
    # 2D frame (u, w) with (u, w, normal) right-handed
    u = sub3(pts[0], c)
    w = cross3(tuple(Fraction(v) for v in normal), u)

    def coords(p: Vec3):
        d = sub3(p, c)
        return (dot3(d, u), dot3(d, w))

    return sorted(pts, key=cmp_to_key(lambda a, b: angular_cmp(coords(a), coords(b))))
