import random
from fractions import Fraction

import pytest

from tilecheck.geom import GeometryError, add3
from tilecheck.lattice import lattice3
from tilecheck.tiling import (
    SampleSpec,
    canonicalize_multiset,
    multiplicity_at,
    translate_multiset,
    verify_k_fold,
)
from tilecheck.zonotope import build_zonotope

CUBE = build_zonotope([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
OCT_PRISM = build_zonotope([(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, -1, 0), (0, 0, 1)])

Z3 = lattice3(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
HALF_SHIFT = lattice3(((Fraction(1, 2), 0, 0), (0, 1, 0), (0, 0, 1)))


def fr(*cs):
    return tuple(Fraction(c) for c in cs)


def test_multiplicity_simple_lattice():
    x = translate_multiset([(0, 0, 0)], Z3)
    assert multiplicity_at(CUBE, x, fr(Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))) == (1, 1)


def test_multiplicity_twofold_generic_point():
    x = translate_multiset([(0, 0, 0)], HALF_SHIFT)
    p = fr(Fraction(1, 5), Fraction(1, 3), Fraction(1, 7))
    assert multiplicity_at(CUBE, x, p) == (2, 2)


def test_multiplicity_detects_boundary():
    x = translate_multiset([(0, 0, 0)], HALF_SHIFT)
    interior, closure = multiplicity_at(CUBE, x, fr(Fraction(1, 4), Fraction(1, 2), 0))
    assert interior < closure


def test_multiplicity_finite_multiset():
    x = translate_multiset([(0, 0, 0), (0, 0, 0), (10, 0, 0)])
    assert multiplicity_at(CUBE, x, fr(0, 0, 0)) == (2, 2)


def test_canonicalize_examples():
    x = canonicalize_multiset(translate_multiset([(Fraction(3, 2), 0, 0)], Z3))
    assert x.base == (fr(Fraction(1, 2), 0, 0),)
    x = canonicalize_multiset(translate_multiset([(0, 0, 0), (1, 0, 0)], Z3))
    assert x.base == (fr(0, 0, 0), fr(0, 0, 0))  # duplicates kept
    x = canonicalize_multiset(translate_multiset([(Fraction(1, 2), 0, 0)], HALF_SHIFT))
    assert x.base == (fr(0, 0, 0),)


def test_cube_unit_tiling_verifies():
    report = verify_k_fold(CUBE, translate_multiset([(0, 0, 0)], Z3), 1)
    assert report.passed
    assert report.samples_tested == 1000
    assert report.volume_lhs == report.volume_rhs == 1
    assert not report.violations and not report.boundary_hits


def test_cube_twofold_tiling_verifies():
    report = verify_k_fold(CUBE, translate_multiset([(0, 0, 0)], HALF_SHIFT), 2)
    assert report.passed
    assert report.volume_lhs == report.volume_rhs == 1
    assert not report.violations


def test_wrong_multiplicity_claim_fails():
    report = verify_k_fold(CUBE, translate_multiset([(0, 0, 0)], HALF_SHIFT), 3)
    assert not report.passed
    assert not report.volume_ok  # 3 * 1/2 != 1


def test_octagonal_prism_claim_refuted():
    lat = lattice3(((Fraction(7, 2), 0, 0), (0, 1, 0), (0, 0, 1)))
    report = verify_k_fold(OCT_PRISM, translate_multiset([(0, 0, 0)], lat), 2)
    assert report.volume_ok  # 2 * 7/2 = 7 = volume: necessity holds
    assert not report.passed
    assert report.violations  # sampling finds wrong multiplicities


def test_translation_equivariance():
    rng = random.Random(41)
    x = translate_multiset([(0, 0, 0), (Fraction(1, 4), 0, 0)], HALF_SHIFT)
    for _ in range(10):
        t = tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(3))
        p = tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(3))
        shifted = translate_multiset([add3(b, t) for b in x.base], x.period)
        assert multiplicity_at(CUBE, x, p) == multiplicity_at(CUBE, shifted, add3(p, t))


def test_reports_are_deterministic_and_thread_independent():
    x = translate_multiset([(0, 0, 0)], HALF_SHIFT)
    spec = SampleSpec(resolution=5)
    first = verify_k_fold(CUBE, x, 2, spec)
    second = verify_k_fold(CUBE, x, 2, spec)
    threaded = verify_k_fold(CUBE, x, 2, spec, threads=4)
    assert first == second == threaded


def test_unbounded_multiset_rejected():
    with pytest.raises(GeometryError, match="cannot verify unbounded multiset"):
        verify_k_fold(CUBE, translate_multiset([(0, 0, 0)]), 1)


def test_packing_covering_split_on_boundary_grid():
    # a grid that hits facet planes on purpose: boundary samples must satisfy
    # interior <= k <= closure rather than being skipped
    x = translate_multiset([(0, 0, 0)], Z3)
    hits = 0
    for i in range(5):
        p = fr(Fraction(i, 2), Fraction(1, 3), Fraction(1, 7))
        interior, closure = multiplicity_at(CUBE, x, p)
        assert interior <= 1 <= closure
        if interior != closure:
            hits += 1
    assert hits > 0
