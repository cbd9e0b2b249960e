"""Belts, the four-or-six facet criterion, and the five classical cell types.

A belt is the cyclic run of facets picked out by translates of one edge:
inside each facet, the centrally symmetric facet polygon carries the edge
translate across to its opposite side, and the next facet continues the
run. Every query here is decided in exact rational arithmetic.
"""

from __future__ import annotations

import enum
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
    dot3,
    mat_vec3,
    primitive3,
    scale3,
    sub3,
    unimodular_to_e3,
)
from .planar import Polygon2m, polygon2m
from .polytope import (
    Polytope3,
    facets_centrally_symmetric,
    is_centrally_symmetric,
)


class BeltError(GeometryError):
    pass


@dataclass(frozen=True)
class Belt:
    """Facet cycle F_1..F_2m around one edge class.

    edge_translates[i] is the edge contained in facets[i-1] and facets[i];
    steps[i] carries edge_translates[i] onto edge_translates[i+1], indices
    cyclic. Steps sum to zero around the cycle.
    """

    direction: IVec3
    length_sq: Fraction
    facets: tuple[int, ...]
    edge_translates: tuple[tuple[int, int], ...]
    steps: tuple[Vec3, ...]

    @property
    def half_length(self) -> int:
        return len(self.facets) // 2


def _require_belt_admissible(poly: Polytope3) -> None:
    if not is_centrally_symmetric(poly) or not facets_centrally_symmetric(poly):
        raise BeltError("not belt-admissible")


def _edge_facet_map(poly: Polytope3) -> dict[tuple[int, int], list[int]]:
    out: dict[tuple[int, int], list[int]] = {}
    for idx, f in enumerate(poly.facets):
        cyc = f.cycle
        for i in range(len(cyc)):
            a, b = cyc[i], cyc[(i + 1) % len(cyc)]
            out.setdefault((min(a, b), max(a, b)), []).append(idx)
    return out


def _edge_midpoint(poly: Polytope3, edge: tuple[int, int]) -> Vec3:
    a, b = poly.vertices[edge[0]], poly.vertices[edge[1]]
    return scale3(Fraction(1, 2), add3(a, b))


def belt_of_edge(poly: Polytope3, edge: tuple[int, int]) -> Belt:
    """The belt through `edge`, reported with `edge` as its first translate.

    Of the two facets containing the edge, traversal starts toward the one
    whose outward normal is smaller in lexicographic order, which fixes the
    report deterministically.
    """
    _require_belt_admissible(poly)
    key = (min(edge), max(edge))
    edge_map = _edge_facet_map(poly)
    if key not in edge_map:
        raise BeltError("not an edge of the polytope")

    start_facets = sorted(edge_map[key], key=lambda i: poly.facets[i].normal)
    facet = start_facets[0]
    facets: list[int] = []
    translates: list[tuple[int, int]] = []
    steps: list[Vec3] = []
    current = key
    while True:
        facets.append(facet)
        translates.append(current)
        cyc = poly.facets[facet].cycle
        n = len(cyc)
        pos = next(i for i in range(n)
                   if {cyc[i], cyc[(i + 1) % n]} == set(current))
        # opposite edge of the centrally symmetric facet polygon
        half = n // 2
        opp = (cyc[(pos + half) % n], cyc[(pos + half + 1) % n])
        opp_key = (min(opp), max(opp))
        steps.append(sub3(_edge_midpoint(poly, opp_key), _edge_midpoint(poly, current)))
        facet = next(i for i in edge_map[opp_key] if i != facet)
        current = opp_key
        if current == key:
            break
        if len(facets) > 2 * len(poly.facets):
            raise BeltError("belt traversal did not close")

    a = poly.vertices[key[0]]
    b = poly.vertices[key[1]]
    d = sub3(b, a)
    return Belt(
        direction=canonical_direction3(d),
        length_sq=dot3(d, d),
        facets=tuple(facets),
        edge_translates=tuple(translates),
        steps=tuple(steps),
    )


def edge_class_representatives(poly: Polytope3) -> list[tuple[int, int]]:
    """Canonical representative edge per translate class (direction + length)."""
    classes: dict[tuple[IVec3, Fraction], tuple[int, int]] = {}
    for e in poly.edges:
        d = sub3(poly.vertices[e[1]], poly.vertices[e[0]])
        k = (canonical_direction3(d), dot3(d, d))
        if k not in classes or e < classes[k]:
            classes[k] = e
    return [classes[k] for k in sorted(classes)]


def all_belts(poly: Polytope3) -> list[Belt]:
    """One belt per translate class of edges (same direction and length)."""
    _require_belt_admissible(poly)
    return [belt_of_edge(poly, e) for e in edge_class_representatives(poly)]


# -- the four-or-six criterion ---------------------------------------------------

@dataclass(frozen=True)
class CriterionResult:
    """Outcome of the Venkov-McMullen belt criterion.

    `reason` is None on a pass; on failure it names the first violated
    condition and `belt` carries the offending belt when applicable.
    """

    passed: bool
    reason: str | None = None
    belt: Belt | None = None


def venkov_mcmullen(poly: Polytope3) -> CriterionResult:
    """Central symmetry, centrally symmetric facets, and belts of 4 or 6.

    Total: symmetry failures come back as results, never as exceptions.
    """
    if not is_centrally_symmetric(poly):
        return CriterionResult(False, "not centrally symmetric")
    if not facets_centrally_symmetric(poly):
        return CriterionResult(False, "facet not centrally symmetric")
    for belt in all_belts(poly):
        if len(belt.facets) not in (4, 6):
            return CriterionResult(False, f"belt of {len(belt.facets)} facets", belt)
    return CriterionResult(True)


class FedorovType(enum.Enum):
    PARALLELOTOPE = "Parallelotope"
    HEXAGONAL_PRISM = "HexagonalPrism"
    RHOMBIC_DODECAHEDRON = "RhombicDodecahedron"
    ELONGATED_DODECAHEDRON = "ElongatedDodecahedron"
    TRUNCATED_OCTAHEDRON = "TruncatedOctahedron"


_SIGNATURES: dict[tuple[int, tuple[int, ...]], FedorovType] = {
    (6, (4,) * 6): FedorovType.PARALLELOTOPE,
    (8, (4,) * 6 + (6,) * 2): FedorovType.HEXAGONAL_PRISM,
    (12, (4,) * 12): FedorovType.RHOMBIC_DODECAHEDRON,
    (12, (4,) * 8 + (6,) * 4): FedorovType.ELONGATED_DODECAHEDRON,
    (14, (4,) * 6 + (6,) * 8): FedorovType.TRUNCATED_OCTAHEDRON,
}


@dataclass(frozen=True)
class Classification:
    fedorov: FedorovType | None
    criterion: CriterionResult

    @property
    def label(self) -> str:
        if self.fedorov is not None:
            return self.fedorov.value
        return f"NotParallelohedron({self.criterion.reason})"


class UnclassifiableError(GeometryError):
    """Criterion passed but the facet-size signature matched no known type."""


def classify_fedorov(poly: Polytope3) -> Classification:
    """Combinatorial classification into the five lattice-tile types.

    Only attempted after the belt criterion passes; the result depends just
    on the facet-size multiset, so it is invariant under invertible linear
    maps of the generators.
    """
    crit = venkov_mcmullen(poly)
    if not crit.passed:
        return Classification(None, crit)
    sig = (len(poly.facets), poly.facet_sizes())
    ftype = _SIGNATURES.get(sig)
    if ftype is None:
        raise UnclassifiableError(
            f"unclassifiable: criterion passed but signature {sig} is unknown")
    return Classification(ftype, crit)


# -- projection along an edge -----------------------------------------------------

def project_along_edge(poly: Polytope3, edge: tuple[int, int]) -> Polygon2m:
    """Shadow of the polytope on the plane across the edge direction.

    A determinant-one integer map first sends the edge direction to the
    vertical axis, so the shadow is exact; the result is a centrally
    symmetric polygon with one edge per belt facet, centered at the origin.
    """
    a, b = poly.vertices[edge[0]], poly.vertices[edge[1]]
    d = primitive3(sub3(b, a))
    mat = unimodular_to_e3(d)
    center = poly.center()
    shifted = [mat_vec3(mat, sub3(v, center)) for v in poly.vertices]
    points = {(p[0], p[1]) for p in shifted}
    hull = _convex_hull_2d(sorted(points))
    return polygon2m(hull)


def _convex_hull_2d(points: list) -> list:
    """Monotone chain over exact rationals; collinear points are dropped."""
    if len(points) < 3:
        raise GeometryError("degenerate projection")

    def half(seq):
        out: list = []
        for p in seq:
            while len(out) >= 2:
                o, q = out[-2], out[-1]
                turn = (q[0] - o[0]) * (p[1] - o[1]) - (q[1] - o[1]) * (p[0] - o[0])
                if turn <= 0:
                    out.pop()
                else:
                    break
            out.append(p)
        return out

    lower = half(points)
    upper = half(list(reversed(points)))
    return lower[:-1] + upper[:-1]
