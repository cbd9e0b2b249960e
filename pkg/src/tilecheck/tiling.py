"""Translate multisets and sampled k-fold tiling verification in 3-space.

Multiplicity at a point is counted exactly: a translate contributes to the
closure count when the point lies in the closed polytope and to the
interior count only when it is strictly inside. Sampling over one
fundamental cell can refute a claimed k-fold tiling but never prove one, so
a pass is always labelled with its resolution.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .geom import GeometryError, Vec3, add3, rat, scale3, sub3
from .lattice import Lattice3
from .polytope import Location, Polytope3, bounding_box, locate_point, polytope_volume


@dataclass(frozen=True)
class TranslateMultiset:
    """Finite multiset of translations, optionally repeated by a period lattice."""

    base: tuple[Vec3, ...]
    period: Lattice3 | None = None


def translate_multiset(base, period: Lattice3 | None = None) -> TranslateMultiset:
    return TranslateMultiset(
        tuple(tuple(rat(c) for c in t) for t in base), period)


def canonicalize_multiset(x: TranslateMultiset) -> TranslateMultiset:
    """Reduce base translates mod the period into the half-open fundamental cell.

    Duplicates are kept (multiset semantics) and the result is sorted.
    """
    if x.period is None:
        return TranslateMultiset(tuple(sorted(x.base)), None)
    reduced = []
    for t in x.base:
        coeffs = x.period.coefficients(t)
        fracs = [c - (c.numerator // c.denominator) for c in coeffs]
        p = (Fraction(0), Fraction(0), Fraction(0))
        for f, row in zip(fracs, x.period.basis):
            p = add3(p, scale3(f, row))
        reduced.append(p)
    return TranslateMultiset(tuple(sorted(reduced)), x.period)


def _int_range(lo: Fraction, hi: Fraction):
    start = lo.numerator // lo.denominator
    if start < lo:
        start += 1
    stop = hi.numerator // hi.denominator
    return range(start, stop + 1)


def _translates_near(poly: Polytope3, x: TranslateMultiset, p: Vec3):
    """Translates (with multiplicity) whose copy of the polytope could contain p."""
    if x.period is None:
        yield from x.base
        return
    lo, hi = bounding_box(poly)
    basis = x.period.basis
    for t in x.base:
        lam_lo = tuple(p[i] - t[i] - hi[i] for i in range(3))
        lam_hi = tuple(p[i] - t[i] - lo[i] for i in range(3))
        corners = [
            (lam_lo[0] if a else lam_hi[0],
             lam_lo[1] if b else lam_hi[1],
             lam_lo[2] if c else lam_hi[2])
            for a in (0, 1) for b in (0, 1) for c in (0, 1)
        ]
        coeff_corners = [x.period.coefficients(q) for q in corners]
        ranges = [
            _int_range(min(cc[i] for cc in coeff_corners),
                       max(cc[i] for cc in coeff_corners))
            for i in range(3)
        ]
        for c1 in ranges[0]:
            for c2 in ranges[1]:
                for c3 in ranges[2]:
                    lam = x.period.vector(c1, c2, c3)
                    q = sub3(sub3(p, t), lam)
                    if all(lo[i] <= q[i] <= hi[i] for i in range(3)):
                        yield add3(t, lam)


def multiplicity_at(poly: Polytope3, x: TranslateMultiset, p: Vec3) -> tuple[int, int]:
    """(interior count, closure count) of the point over the translates."""
    interior = closure = 0
    for t in _translates_near(poly, x, p):
        where = locate_point(sub3(p, t), poly)
        if where is Location.INTERIOR:
            interior += 1
            closure += 1
        elif where is Location.BOUNDARY:
            closure += 1
    return interior, closure


@dataclass(frozen=True)
class SampleSpec:
    """Deterministic rational sample grid: resolution^3 points per cell.

    The grid is offset by (1/(2N+1), 1/(2N+3), 1/(2N+5)) in cell coordinates
    so samples tend to miss facet planes; exact arithmetic still detects any
    sample that lands on a boundary, and such hits are reported rather than
    skipped.
    """

    resolution: int = 10

    def points(self, period: Lattice3):
        n = self.resolution
        off = (Fraction(1, 2 * n + 1), Fraction(1, 2 * n + 3), Fraction(1, 2 * n + 5))
        b1, b2, b3 = period.basis
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    u = (Fraction(i, n) + off[0],
                         Fraction(j, n) + off[1],
                         Fraction(k, n) + off[2])
                    yield add3(add3(scale3(u[0], b1), scale3(u[1], b2)),
                               scale3(u[2], b3))


@dataclass(frozen=True)
class MultiplicityReport:
    claimed_k: int
    volume_lhs: Fraction        # k * |det period|
    volume_rhs: Fraction        # #base translates * volume
    samples_tested: int
    violations: tuple[tuple[Vec3, int, int], ...]
    boundary_hits: tuple[tuple[Vec3, int, int], ...]
    resolution: int

    @property
    def volume_ok(self) -> bool:
        return self.volume_lhs == self.volume_rhs

    @property
    def passed(self) -> bool:
        return self.volume_ok and not self.violations


def verify_k_fold(poly: Polytope3, x: TranslateMultiset, k: int,
                  spec: SampleSpec = SampleSpec(), threads: int = 1) -> MultiplicityReport:
    """Check a claimed k-fold tiling: exact volume identity plus sampling.

    At every sample the interior count must be at most k and the closure
    count at least k; a generic sample (off every boundary) must hit k
    exactly. Sample evaluation may run on several threads, but the report is
    assembled in grid order, so the output never depends on the thread
    count.
    """
    if x.period is None:
        raise GeometryError("cannot verify unbounded multiset")
    if k < 1:
        raise GeometryError("k must be a positive integer")
    lhs = k * abs(x.period.determinant)
    rhs = len(x.base) * polytope_volume(poly)

    samples = list(spec.points(x.period))

    def measure(p: Vec3) -> tuple[int, int]:
        return multiplicity_at(poly, x, p)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            counts = list(pool.map(measure, samples, chunksize=64))
    else:
        counts = [measure(p) for p in samples]

    violations = []
    boundary_hits = []
    for p, (interior, closure) in zip(samples, counts):
        if interior != closure:
            boundary_hits.append((p, interior, closure))
        if not (interior <= k <= closure) or (interior == closure != k):
            violations.append((p, interior, closure))
    return MultiplicityReport(k, lhs, rhs, len(samples), tuple(violations),
                              tuple(boundary_hits), spec.resolution)
