"""End-to-end verification suite over canonical solids and wheel arithmetic.

The suite replays, on concrete instances, the chain of checks behind the
classification of twofold translative tiles: the five classical cells pass
the belt criterion, Voronoi cells of standard lattices classify and fill
their determinant exactly, sampled multiplicity accepts true tilings and
refutes an impostor, the wheel-parameter arithmetic admits no consistent
configuration for long belts, and middle belt steps carry an edge strictly
inside the solid. Every verdict is per-instance; nothing here claims a
proof over all convex bodies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .belts import Belt, FedorovType, all_belts, belt_of_edge, classify_fedorov, venkov_mcmullen
from .geom import GeometryError, Vec3, add3, canonical_direction3, rat_str, scale3, sub3
from .lattice import dv_cell, lattice3
from .polytope import Location, Polytope3, locate_point, polytope_volume
from .tiling import SampleSpec, translate_multiset, verify_k_fold
from .zonotope import build_zonotope

# Canonical inputs, exact and versioned with the package.
CANONICAL_GENERATORS: dict[str, tuple[tuple[int, int, int], ...]] = {
    "cube": ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    "hexagonal_prism": ((1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)),
    "rhombic_dodecahedron": ((1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1)),
    "elongated_dodecahedron": ((1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1), (0, 0, 1)),
    "truncated_octahedron": ((1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1)),
    "octagonal_prism": ((1, 0, 0), (0, 1, 0), (1, 1, 0), (1, -1, 0), (0, 0, 1)),
    "decagonal_prism": ((1, 0, 0), (0, 1, 0), (1, 1, 0), (1, -1, 0), (2, 1, 0), (0, 0, 1)),
}

FEDOROV_EXPECTED: dict[str, FedorovType] = {
    "cube": FedorovType.PARALLELOTOPE,
    "hexagonal_prism": FedorovType.HEXAGONAL_PRISM,
    "rhombic_dodecahedron": FedorovType.RHOMBIC_DODECAHEDRON,
    "elongated_dodecahedron": FedorovType.ELONGATED_DODECAHEDRON,
    "truncated_octahedron": FedorovType.TRUNCATED_OCTAHEDRON,
}

CANONICAL_LATTICES: dict[str, tuple[tuple[Fraction | int, ...], ...]] = {
    "cubic": ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    "fcc": ((1, 1, 0), (1, 0, 1), (0, 1, 1)),
    "bcc": ((2, 0, 0), (0, 2, 0), (1, 1, 1)),
    "sheared_generic": ((2, 0, 0), (1, 2, 0), (0, 0, 2)),
    # stretched body-centered tetragonal: its Voronoi cell is the
    # elongated dodecahedron, completing the five types from lattices alone
    "stretched_body_centered": ((1, 0, 0), (0, 1, 0),
                                (Fraction(1, 2), Fraction(1, 2), Fraction(3, 2))),
}

LATTICE_EXPECTED: dict[str, FedorovType] = {
    "cubic": FedorovType.PARALLELOTOPE,
    "fcc": FedorovType.RHOMBIC_DODECAHEDRON,
    "bcc": FedorovType.TRUNCATED_OCTAHEDRON,
    "sheared_generic": FedorovType.HEXAGONAL_PRISM,
    "stretched_body_centered": FedorovType.ELONGATED_DODECAHEDRON,
}


# -- wheel parameter arithmetic -------------------------------------------------

@dataclass(frozen=True)
class WheelParams:
    """All (kappa, ell) with boundary multiplicity at most k at a belt of 2m facets.

    Feasible tuples are (kappa, ell, varpi, phi) with
    varpi = kappa*(m-1)/2 + ell/2 <= k and phi = k - varpi a nonnegative
    integer.
    """

    m: int
    k: int
    feasible: tuple[tuple[int, int, Fraction, int], ...]


def feasible_wheel_params(m: int, k: int, max_kappa: int = 4, max_ell: int = 4) -> WheelParams:
    """Enumerate feasible wheel parameters; the identity is monotone in both
    kappa and ell, so values beyond the natural cutoff cannot qualify."""
    if m < 2 or k < 1:
        raise GeometryError("need m >= 2 and k >= 1")
    rows = []
    kappa_cap = max(max_kappa, (2 * k) // (m - 1) + 1)
    ell_cap = max(max_ell, 2 * k + 1)
    for kappa in range(1, kappa_cap + 1):
        for ell in range(0, ell_cap + 1):
            varpi = Fraction(kappa * (m - 1), 2) + Fraction(ell, 2)
            if varpi > k:
                break
            phi = k - varpi
            if phi.denominator == 1 and phi >= 0:
                rows.append((kappa, ell, varpi, int(phi)))
    return WheelParams(m, k, tuple(rows))


@dataclass(frozen=True)
class CaseAnalysis:
    """Arithmetic of the long-belt contradiction for one (m, k).

    When no wheel parameters are feasible at all, the contradiction is
    vacuous. Otherwise a vertex forced to have interior multiplicity at
    least one has total multiplicity at least min_total; the contradiction
    holds when that exceeds k (any true multiplicity is an integer, so a
    fractional bound rounds up to integer_bound).
    """

    m: int
    k: int
    vacuous: bool
    min_boundary: Fraction
    min_total: Fraction
    integer_bound: int
    contradiction: bool


def case_analysis(m: int, k: int = 2) -> CaseAnalysis:
    if m < 4:
        raise GeometryError(
            "belt shift range empty for m < 4; no contradiction derivable")
    params = feasible_wheel_params(m, k)
    vacuous = not params.feasible
    min_boundary = Fraction(m - 1, 2)  # kappa = 1, ell = 0
    min_total = 1 + min_boundary       # forced interior multiplicity >= 1
    integer_bound = -((-min_total.numerator) // min_total.denominator)
    contradiction = vacuous or min_total > k
    return CaseAnalysis(m, k, vacuous, min_boundary, min_total, integer_bound,
                        contradiction)


def contradiction_check(m: int, k: int = 2) -> bool:
    """True iff no consistent vertex multiplicity survives at a belt of 2m facets."""
    return case_analysis(m, k).contradiction


# -- belt-step interior checks ----------------------------------------------------

@dataclass(frozen=True)
class BeltShiftCheck:
    index: int
    start: Location
    end: Location
    midpoint: Location

    @property
    def passed(self) -> bool:
        return (self.start is not Location.OUTSIDE
                and self.end is not Location.OUTSIDE
                and self.midpoint is Location.INTERIOR)


@dataclass(frozen=True)
class BeltShiftReport:
    """Results of shifting the base edge by the middle belt steps.

    For a belt of 2m facets the middle indices are the integers strictly
    between 1 and m-1; the check passes when the shifted open edge lies
    strictly inside the polytope. The boundary index m-1 is not part of the
    claim and is reported separately when requested.
    """

    edge: tuple[int, int]
    direction: tuple[int, int, int]
    half_length: int
    checks: tuple[BeltShiftCheck, ...]
    boundary_check: BeltShiftCheck | None

    @property
    def vacuous(self) -> bool:
        return not self.checks

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _shift_check(poly: Polytope3, edge: tuple[int, int], shift: Vec3, index: int) -> BeltShiftCheck:
    a = add3(poly.vertices[edge[0]], shift)
    b = add3(poly.vertices[edge[1]], shift)
    mid = scale3(Fraction(1, 2), add3(a, b))
    # both endpoints in the closed polytope + interior midpoint force the
    # whole open segment strictly inside, by convexity
    return BeltShiftCheck(index, locate_point(a, poly), locate_point(b, poly),
                          locate_point(mid, poly))


def belt_shift_interior_check(poly: Polytope3, edge: tuple[int, int],
                              include_boundary_index: bool = False) -> BeltShiftReport:
    belt = belt_of_edge(poly, edge)
    m = belt.half_length
    key = (min(edge), max(edge))
    checks = []
    for i in range(2, m - 1):
        checks.append(_shift_check(poly, key, belt.steps[i - 1], i))
    boundary = None
    if include_boundary_index and m - 1 >= 2:
        boundary = _shift_check(poly, key, belt.steps[m - 2], m - 1)
    return BeltShiftReport(key, belt.direction, m, tuple(checks), boundary)


def edge_of_direction(poly: Polytope3, direction) -> tuple[int, int]:
    """Canonical edge of the polytope parallel to the given direction."""
    want = canonical_direction3(tuple(Fraction(c) for c in direction))
    for e in poly.edges:
        d = sub3(poly.vertices[e[1]], poly.vertices[e[0]])
        if canonical_direction3(d) == want:
            return e
    raise GeometryError(f"no edge parallel to {direction}")


# -- the suite --------------------------------------------------------------------

@dataclass(frozen=True)
class SuiteStep:
    step: str
    title: str
    inputs: dict
    verdict: bool
    witness: dict | None = None


@dataclass(frozen=True)
class SuiteReport:
    steps: tuple[SuiteStep, ...]

    @property
    def passed(self) -> bool:
        return all(s.verdict for s in self.steps)


@dataclass(frozen=True)
class SuiteOptions:
    """Knobs for the suite; overrides exist so tests can inject failures."""

    resolution: int = 10
    max_m: int = 50
    threads: int = 1
    generator_overrides: dict[str, tuple] = field(default_factory=dict)
    cube_twofold_claim: int = 2


def _fmt_point(p) -> list[str]:
    return [rat_str(c) for c in p]


def _solid(name: str, options: SuiteOptions) -> Polytope3:
    gens = options.generator_overrides.get(name, CANONICAL_GENERATORS[name])
    return build_zonotope(gens)


def _step_fedorov(options: SuiteOptions) -> SuiteStep:
    inputs = {name: [list(g) for g in CANONICAL_GENERATORS[name]]
              for name in FEDOROV_EXPECTED}
    labels = {}
    witness = None
    ok = True
    for name, expected in FEDOROV_EXPECTED.items():
        try:
            result = classify_fedorov(_solid(name, options))
            labels[name] = result.label
            mismatch = result.fedorov is not expected
        except GeometryError as exc:
            labels[name] = f"error({exc})"
            mismatch = True
        if mismatch:
            ok = False
            if witness is None:
                witness = {"solid": name, "expected": expected.value,
                           "got": labels[name]}
    if ok and len(set(labels.values())) != len(labels):
        ok, witness = False, {"reason": "labels not pairwise distinct",
                              "labels": labels}
    return SuiteStep("a", "five canonical solids build and classify", inputs,
                     ok, witness)


def _step_lattices(options: SuiteOptions) -> SuiteStep:
    names = ("cubic", "fcc", "bcc", "sheared_generic")
    inputs = {n: [[rat_str(Fraction(c)) for c in row] for row in CANONICAL_LATTICES[n]]
              for n in names}
    witness = None
    ok = True
    for name in names:
        lat = lattice3(CANONICAL_LATTICES[name])
        cell = dv_cell(lat)
        label = classify_fedorov(cell.cell)
        vol = polytope_volume(cell.cell)
        if label.fedorov is not LATTICE_EXPECTED[name] or vol != abs(lat.determinant):
            ok = False
            if witness is None:
                witness = {"lattice": name, "label": label.label,
                           "volume": rat_str(vol),
                           "determinant": rat_str(lat.determinant)}
    return SuiteStep("b", "Voronoi cells classify and fill the determinant",
                     inputs, ok, witness)


def _step_cube_tilings(options: SuiteOptions) -> SuiteStep:
    cube = _solid("cube", options)
    spec = SampleSpec(options.resolution)
    inputs = {"onefold_period": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
              "twofold_period": [["1/2", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
              "twofold_claimed_k": options.cube_twofold_claim,
              "resolution": options.resolution}
    one = verify_k_fold(cube, translate_multiset([(0, 0, 0)], lattice3(((1, 0, 0), (0, 1, 0), (0, 0, 1)))),
                        1, spec, options.threads)
    half = lattice3(((Fraction(1, 2), 0, 0), (0, 1, 0), (0, 0, 1)))
    two = verify_k_fold(cube, translate_multiset([(0, 0, 0)], half),
                        options.cube_twofold_claim, spec, options.threads)
    ok = one.passed and two.passed
    witness = None
    if not one.passed:
        witness = {"tiling": "cube+Z3", "violations": len(one.violations),
                   "volume_ok": one.volume_ok}
    elif not two.passed:
        witness = {"tiling": "cube+half-shifted", "claimed_k": options.cube_twofold_claim,
                   "volume_ok": two.volume_ok,
                   "violations": len(two.violations)}
        if two.violations:
            p, i, c = two.violations[0]
            witness["first_violation"] = {"point": _fmt_point(p),
                                          "interior": i, "closure": c}
    return SuiteStep("c", "cube tilings verify at claimed multiplicity", inputs,
                     ok, witness)


def _step_octagonal(options: SuiteOptions) -> SuiteStep:
    prism = _solid("octagonal_prism", options)
    inputs = {"generators": [list(g) for g in CANONICAL_GENERATORS["octagonal_prism"]],
              "claim_period": [["7/2", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
              "claimed_k": 2, "resolution": options.resolution}
    crit = venkov_mcmullen(prism)
    belt_ok = (not crit.passed and crit.belt is not None
               and len(crit.belt.facets) == 8)
    # volume-matched claim: 2 * det = volume = 7
    claim_lattice = lattice3(((Fraction(7, 2), 0, 0), (0, 1, 0), (0, 0, 1)))
    report = verify_k_fold(prism, translate_multiset([(0, 0, 0)], claim_lattice),
                           2, SampleSpec(options.resolution), options.threads)
    refuted = report.volume_ok and not report.passed and report.violations
    ok = bool(belt_ok and refuted)
    witness = None
    if ok:
        p, i, c = report.violations[0]
        witness = {"belt_length": len(crit.belt.facets),
                   "refutation_point": _fmt_point(p),
                   "interior": i, "closure": c}
    else:
        witness = {"criterion_reason": crit.reason,
                   "claim_passed": report.passed}
    return SuiteStep("d", "octagonal prism rejected and its claim refuted",
                     inputs, ok, witness)


def _step_wheel_arithmetic(options: SuiteOptions) -> SuiteStep:
    inputs = {"k": 2, "m_range": [4, options.max_m]}
    witness = None
    ok = True
    for m in range(6, options.max_m + 1):
        if feasible_wheel_params(m, 2).feasible:
            ok, witness = False, {"m": m, "reason": "expected no feasible params"}
            break
    if ok and feasible_wheel_params(5, 2).feasible != ((1, 0, Fraction(2), 0),):
        ok, witness = False, {"m": 5, "reason": "unexpected feasible set"}
    if ok and feasible_wheel_params(4, 2).feasible != ((1, 1, Fraction(2), 0),):
        ok, witness = False, {"m": 4, "reason": "unexpected feasible set"}
    if ok:
        for m in range(4, options.max_m + 1):
            if not contradiction_check(m, 2):
                ok, witness = False, {"m": m, "reason": "no contradiction"}
                break
    return SuiteStep("e", "wheel arithmetic forbids belts beyond six facets",
                     inputs, ok, witness)


def _step_belt_shifts(options: SuiteOptions) -> SuiteStep:
    inputs = {"solids": ["octagonal_prism", "decagonal_prism"],
              "edge_direction": [0, 0, 1]}
    witness = None
    ok = True
    for name in ("octagonal_prism", "decagonal_prism"):
        prism = _solid(name, options)
        report = belt_shift_interior_check(prism, edge_of_direction(prism, (0, 0, 1)))
        if report.vacuous or not report.passed:
            ok = False
            witness = {"solid": name, "vacuous": report.vacuous,
                       "failed_indices": [c.index for c in report.checks if not c.passed]}
            break
    return SuiteStep("f", "middle belt steps carry the edge strictly inside",
                     inputs, ok, witness)


def verification_suite(options: SuiteOptions = SuiteOptions()) -> SuiteReport:
    """Run all suite steps in canonical order; each failure carries a witness."""
    steps = (
        _step_fedorov(options),
        _step_lattices(options),
        _step_cube_tilings(options),
        _step_octagonal(options),
        _step_wheel_arithmetic(options),
        _step_belt_shifts(options),
    )
    return SuiteReport(steps)
