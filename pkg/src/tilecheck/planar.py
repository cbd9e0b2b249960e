"""Centrally symmetric 2m-gons and the local calculus of planar multiple tilings.

A vertex of a multiple tiling is surrounded by angular sectors of the
translates whose boundary passes through it. Chaining each sector's
clockwise boundary ray to the matching ray of the next sector decomposes
the sectors into wheels; each wheel closes after an integer number of full
turns, counted exactly by ray-crossing tests rather than by real-valued
angles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geom import (
    GeometryError,
    IVec2,
    TileCheckError,
    Vec2,
    add2,
    cross2,
    det2,
    dot2,
    neg2,
    primitive2,
    rat,
    scale2,
    sub2,
)
from .polytope import Location


class LocalTilingError(TileCheckError):
    """The sectors around a point do not chain into closed wheels."""


@dataclass(frozen=True)
class Polygon2m:
    """Strictly convex 2m-gon, centered at the origin, vertices clockwise.

    The cycle starts at the lexicographically smallest vertex and satisfies
    vertices[i + m] == -vertices[i].
    """

    vertices: tuple[Vec2, ...]

    @property
    def half_count(self) -> int:
        return len(self.vertices) // 2

    def edge(self, i: int) -> tuple[Vec2, Vec2]:
        v = self.vertices
        return v[i], v[(i + 1) % len(v)]


def polygon2m(points) -> Polygon2m:
    """Validate and canonicalize a centrally symmetric convex polygon.

    Counter-clockwise input is re-oriented; anything non-convex, odd, or not
    symmetric about the origin is rejected.
    """
    verts = [tuple(rat(c) for c in p) for p in points]
    n = len(verts)
    if n < 4 or n % 2 != 0:
        raise GeometryError("polygon needs an even vertex count of at least 4")
    if len(set(verts)) != n:
        raise GeometryError("duplicate polygon vertices")

    area2 = sum(cross2(verts[i], verts[(i + 1) % n]) for i in range(n))
    if area2 == 0:
        raise GeometryError("degenerate polygon")
    if area2 > 0:  # counter-clockwise: flip to the clockwise convention
        verts.reverse()

    for i in range(n):
        a, b, c = verts[i], verts[(i + 1) % n], verts[(i + 2) % n]
        if cross2(sub2(b, a), sub2(c, b)) >= 0:
            raise GeometryError("polygon not strictly convex")

    m = n // 2
    for i in range(n):
        if verts[(i + m) % n] != neg2(verts[i]):
            raise GeometryError("polygon not centrally symmetric about the origin")

    k = verts.index(min(verts))
    return Polygon2m(tuple(verts[k:] + verts[:k]))


def locate_in_polygon(p: Vec2, poly: Polygon2m) -> Location:
    verts = poly.vertices
    on = False
    for i in range(len(verts)):
        a = verts[i]
        b = verts[(i + 1) % len(verts)]
        c = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
        if c > 0:
            return Location.OUTSIDE
        if c == 0:
            on = True
    return Location.BOUNDARY if on else Location.INTERIOR


def polygon_area(poly: Polygon2m) -> Fraction:
    verts = poly.vertices
    area2 = sum(cross2(verts[i], verts[(i + 1) % len(verts)])
                for i in range(len(verts)))
    return abs(area2) / 2


# -- translate multisets in the plane -----------------------------------------

@dataclass(frozen=True)
class PlanarMultiset:
    """Finite multiset of plane translations, optionally repeated by a lattice."""

    base: tuple[Vec2, ...]
    period: tuple[Vec2, Vec2] | None = None

    def period_det(self) -> Fraction:
        assert self.period is not None
        return det2(self.period[0], self.period[1])


def planar_multiset(base, period=None) -> PlanarMultiset:
    base_t = tuple(tuple(rat(c) for c in t) for t in base)
    if period is None:
        return PlanarMultiset(base_t, None)
    rows = tuple(tuple(rat(c) for c in row) for row in period)
    if det2(rows[0], rows[1]) == 0:
        raise GeometryError("singular period basis")
    return PlanarMultiset(base_t, rows)  # type: ignore[arg-type]


def _coefficients(period, point: Vec2) -> Vec2:
    b1, b2 = period
    d = det2(b1, b2)
    return (det2(point, b2) / d, det2(b1, point) / d)


def canonicalize_planar(x: PlanarMultiset) -> PlanarMultiset:
    """Reduce base translates mod the period into the half-open fundamental cell."""
    if x.period is None:
        return PlanarMultiset(tuple(sorted(x.base)), None)
    b1, b2 = x.period
    reduced = []
    for t in x.base:
        c1, c2 = _coefficients(x.period, t)
        f1, f2 = c1 - (c1.numerator // c1.denominator), c2 - (c2.numerator // c2.denominator)
        reduced.append(add2(scale2(f1, b1), scale2(f2, b2)))
    return PlanarMultiset(tuple(sorted(reduced)), x.period)


def _bbox(poly: Polygon2m) -> tuple[Vec2, Vec2]:
    xs = [v[0] for v in poly.vertices]
    ys = [v[1] for v in poly.vertices]
    return (min(xs), min(ys)), (max(xs), max(ys))


def _translates_near(poly: Polygon2m, x: PlanarMultiset, p: Vec2):
    """All translates (with multiplicity) that could place the polygon over p."""
    if x.period is None:
        yield from x.base
        return
    (lo_x, lo_y), (hi_x, hi_y) = _bbox(poly)
    b1, b2 = x.period
    for t in x.base:
        # lattice vector lam must satisfy p - t - lam inside the bounding box
        lam_lo = (p[0] - t[0] - hi_x, p[1] - t[1] - hi_y)
        lam_hi = (p[0] - t[0] - lo_x, p[1] - t[1] - lo_y)
        corners = [
            (lam_lo[0], lam_lo[1]), (lam_lo[0], lam_hi[1]),
            (lam_hi[0], lam_lo[1]), (lam_hi[0], lam_hi[1]),
        ]
        coeffs = [_coefficients(x.period, c) for c in corners]
        for i1 in _int_range(min(c[0] for c in coeffs), max(c[0] for c in coeffs)):
            for i2 in _int_range(min(c[1] for c in coeffs), max(c[1] for c in coeffs)):
                lam = add2(scale2(i1, b1), scale2(i2, b2))
                q = sub2(sub2(p, t), lam)
                if lo_x <= q[0] <= hi_x and lo_y <= q[1] <= hi_y:
                    yield add2(t, lam)


def _int_range(lo: Fraction, hi: Fraction):
    start = lo.numerator // lo.denominator
    if start < lo:
        start += 1
    stop = hi.numerator // hi.denominator
    return range(start, stop + 1)


def multiplicity_at_2d(poly: Polygon2m, x: PlanarMultiset, p: Vec2) -> tuple[int, int]:
    """(interior count, closure count) of p over the translates, with multiplicity."""
    interior = closure = 0
    for t in _translates_near(poly, x, p):
        where = locate_in_polygon(sub2(p, t), poly)
        if where is Location.INTERIOR:
            interior += 1
            closure += 1
        elif where is Location.BOUNDARY:
            closure += 1
    return interior, closure


def vertex_star(poly: Polygon2m, x: PlanarMultiset, v: Vec2) -> tuple[Vec2, ...]:
    """Translates whose boundary passes through v, with multiplicity, sorted."""
    hits = [t for t in _translates_near(poly, x, v)
            if locate_in_polygon(sub2(v, t), poly) is Location.BOUNDARY]
    return tuple(sorted(hits))


def interior_multiplicity(poly: Polygon2m, x: PlanarMultiset, v: Vec2) -> int:
    """Number of translates whose open polygon contains v."""
    return multiplicity_at_2d(poly, x, v)[0]


def edge_interior_count(poly: Polygon2m, x: PlanarMultiset, v: Vec2) -> int:
    """Translated edges whose relative interior contains v, with multiplicity."""
    count = 0
    for t in _translates_near(poly, x, v):
        q = sub2(v, t)
        for i in range(len(poly.vertices)):
            a, b = poly.edge(i)
            if cross2(sub2(b, a), sub2(q, a)) == 0 and dot2(sub2(q, a), sub2(q, b)) < 0:
                count += 1
    return count


# -- adjacent wheels and exact turn counting -----------------------------------

@dataclass(frozen=True)
class Sector:
    """Angular sector of one translate at a boundary point.

    `start` and `end` are the primitive directions of the sector's boundary
    rays; sweeping clockwise from start to end (at most half a turn) covers
    the translate's inner angle.
    """

    translate: Vec2
    start: IVec2
    end: IVec2


@dataclass(frozen=True)
class Wheel:
    translates: tuple[Vec2, ...]
    winding: int


@dataclass(frozen=True)
class WheelDecomposition:
    vertex: Vec2
    wheels: tuple[Wheel, ...]

    @property
    def boundary_multiplicity(self) -> int:
        return sum(w.winding for w in self.wheels)


def _sector(poly: Polygon2m, translate: Vec2, v: Vec2) -> Sector:
    q = sub2(v, translate)
    verts = poly.vertices
    n = len(verts)
    if q in verts:
        i = verts.index(q)
        to_next = primitive2(sub2(verts[(i + 1) % n], q))
        to_prev = primitive2(sub2(verts[(i - 1) % n], q))
        return Sector(translate, to_next, to_prev)
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        if cross2(sub2(b, a), sub2(q, a)) == 0 and dot2(sub2(q, a), sub2(q, b)) < 0:
            d = primitive2(sub2(b, a))
            return Sector(translate, d, (-d[0], -d[1]))
    raise GeometryError("point is not on the polygon boundary")


def _arc_crosses(start: IVec2, end: IVec2, d: IVec2) -> int:
    """1 if the clockwise sweep from ray `start` to ray `end` passes direction d.

    Arcs span at most half a turn. The sweep counts arrival at `end` but not
    departure from `start`, so chained arcs count each passage exactly once.
    """
    if d == end:
        return 1
    turn = cross2(start, end)
    if turn < 0:  # strictly less than half a turn
        return 1 if cross2(start, d) < 0 and cross2(d, end) < 0 else 0
    if turn == 0 and dot2(start, end) < 0:  # exactly half a turn
        return 1 if cross2(start, d) < 0 else 0
    raise GeometryError("sector wider than half a turn")


def adjacent_wheels(poly: Polygon2m, x: PlanarMultiset, v: Vec2) -> WheelDecomposition:
    """Partition the sectors at v into wheels with exact integer windings.

    Each sector's clockwise boundary ray must be picked up by exactly one
    other sector; duplicate rays (from coincident translates) are paired in
    canonical translate order. Raises LocalTilingError when the rays cannot
    be matched perfectly.
    """
    star = vertex_star(poly, x, v)
    sectors = [_sector(poly, t, v) for t in star]
    if not sectors:
        return WheelDecomposition(v, ())

    pool: dict[IVec2, list[int]] = {}
    for i, s in enumerate(sectors):
        pool.setdefault(s.start, []).append(i)

    successor: list[int | None] = [None] * len(sectors)
    for i, s in enumerate(sectors):
        waiting = pool.get(s.end)
        if not waiting:
            raise LocalTilingError(f"not locally tiling at {v!r}: unmatched ray")
        successor[i] = waiting.pop(0)
    # every start ray must have been consumed
    if any(waiting for waiting in pool.values()):
        raise LocalTilingError(f"not locally tiling at {v!r}: leftover ray")

    seen = [False] * len(sectors)
    wheels = []
    for i in range(len(sectors)):
        if seen[i]:
            continue
        cycle = []
        j = i
        while not seen[j]:
            seen[j] = True
            cycle.append(j)
            j = successor[j]  # type: ignore[assignment]
        if j != i:
            raise LocalTilingError(f"not locally tiling at {v!r}: open chain")
        reference = sectors[i].start
        winding = sum(_arc_crosses(sectors[s].start, sectors[s].end, reference)
                      for s in cycle)
        if winding < 1:
            raise LocalTilingError(f"not locally tiling at {v!r}: zero winding")
        wheels.append(Wheel(tuple(sectors[s].translate for s in cycle), winding))
    return WheelDecomposition(v, tuple(wheels))


def boundary_multiplicity(poly: Polygon2m, x: PlanarMultiset, v: Vec2) -> int:
    """Total winding of the wheels at v."""
    return adjacent_wheels(poly, x, v).boundary_multiplicity


def direction_coverage(poly: Polygon2m, x: PlanarMultiset, v: Vec2, d) -> int:
    """How many sectors at v cover the direction d (counting each once).

    For a locally tiling multiset this equals the boundary multiplicity for
    every direction, independently of how wheels are matched; it is the
    direct turn-counting cross-check for `adjacent_wheels`.
    """
    dd = primitive2(d)
    star = vertex_star(poly, x, v)
    return sum(_arc_crosses(s.start, s.end, dd)
               for s in (_sector(poly, t, v) for t in star))


# -- vertex identities ----------------------------------------------------------

@dataclass(frozen=True)
class KappaIdentity:
    """Solution of boundary_mult = kappa * (m-1)/2 + ell/2 at one vertex."""

    vertex: Vec2
    boundary_mult: int
    ell: int
    kappa: Fraction
    consistent: bool


def kappa_identity(poly: Polygon2m, x: PlanarMultiset, v: Vec2) -> KappaIdentity:
    """Solve for kappa at v; consistent iff kappa is a positive integer."""
    w = adjacent_wheels(poly, x, v).boundary_multiplicity
    ell = edge_interior_count(poly, x, v)
    m = poly.half_count
    kappa = Fraction(2 * w - ell, m - 1)
    consistent = kappa.denominator == 1 and kappa >= 1
    return KappaIdentity(v, w, ell, kappa, consistent)


def verify_vertex_multiplicity(poly: Polygon2m, x: PlanarMultiset, k: int, v: Vec2) -> bool:
    """True iff interior multiplicity plus boundary multiplicity equals k at v."""
    phi = interior_multiplicity(poly, x, v)
    w = adjacent_wheels(poly, x, v).boundary_multiplicity
    return phi + w == k


def translated_vertex_orbits(poly: Polygon2m, x: PlanarMultiset) -> tuple[Vec2, ...]:
    """One representative for each translated-vertex class (mod the period)."""
    points: set[Vec2] = set()
    for t in x.base:
        for v in poly.vertices:
            p = add2(v, t)
            if x.period is not None:
                c1, c2 = _coefficients(x.period, p)
                f1 = c1 - (c1.numerator // c1.denominator)
                f2 = c2 - (c2.numerator // c2.denominator)
                p = add2(scale2(f1, x.period[0]), scale2(f2, x.period[1]))
            points.add(p)
    return tuple(sorted(points))


# -- sampled k-fold verification (2D analogue of the solid version) -------------

@dataclass(frozen=True)
class PlanarTilingReport:
    claimed_k: int
    volume_lhs: Fraction
    volume_rhs: Fraction
    samples_tested: int
    violations: tuple[tuple[Vec2, int, int], ...]
    boundary_hits: tuple[tuple[Vec2, int, int], ...]
    resolution: int

    @property
    def volume_ok(self) -> bool:
        return self.volume_lhs == self.volume_rhs

    @property
    def passed(self) -> bool:
        return self.volume_ok and not self.violations


def verify_k_fold_2d(poly: Polygon2m, x: PlanarMultiset, k: int,
                     resolution: int = 20) -> PlanarTilingReport:
    """Refutation-oriented check of a claimed k-fold planar tiling.

    Exact area identity plus a deterministic sample grid over one
    fundamental cell; sampling can refute but never prove.
    """
    if x.period is None:
        raise GeometryError("cannot verify unbounded multiset")
    lhs = k * abs(x.period_det())
    rhs = len(x.base) * polygon_area(poly)
    n = resolution
    off = (Fraction(1, 2 * n + 1), Fraction(1, 2 * n + 3))
    violations = []
    boundary_hits = []
    b1, b2 = x.period
    for i in range(n):
        for j in range(n):
            u = (Fraction(i, n) + off[0], Fraction(j, n) + off[1])
            p = add2(scale2(u[0], b1), scale2(u[1], b2))
            interior, closure = multiplicity_at_2d(poly, x, p)
            if interior != closure:
                boundary_hits.append((p, interior, closure))
            if not (interior <= k <= closure) or (interior == closure != k):
                violations.append((p, interior, closure))
    return PlanarTilingReport(k, lhs, rhs, n * n, tuple(violations),
                              tuple(boundary_hits), n)
