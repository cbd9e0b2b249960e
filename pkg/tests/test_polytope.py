import random
from fractions import Fraction

import pytest

from tilecheck.geom import GeometryError
from tilecheck.polytope import (
    Location,
    clip_halfspace,
    facets_centrally_symmetric,
    is_centrally_symmetric,
    locate_point,
    polytope_from_raw,
    polytope_volume,
    validate,
)
from tilecheck.zonotope import build_zonotope

from oracle import zonotope_volume_by_determinants

UNIT_CUBE_GENS = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
RD_GENS = [(1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1)]
TO_GENS = [(1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1)]

TETRA_VERTICES = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
TETRA_FACETS = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]


def frac_point(x, y, z):
    return (Fraction(x), Fraction(y), Fraction(z))


def test_locate_point_in_unit_cube():
    cube = build_zonotope(UNIT_CUBE_GENS)
    assert locate_point(frac_point(0, 0, 0), cube) is Location.INTERIOR
    assert locate_point(frac_point(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
                        cube) is Location.BOUNDARY
    assert locate_point(frac_point(2, 0, 0), cube) is Location.OUTSIDE
    # a face point that is not a vertex
    assert locate_point(frac_point(Fraction(1, 2), 0, 0), cube) is Location.BOUNDARY


def test_cube_volume_is_one():
    assert polytope_volume(build_zonotope(UNIT_CUBE_GENS)) == 1


def test_volume_translation_invariant():
    rd = build_zonotope(RD_GENS)
    base = polytope_volume(rd)
    rng = random.Random(3)
    for _ in range(20):
        t = tuple(Fraction(rng.randint(-50, 50), rng.randint(1, 10)) for _ in range(3))
        assert polytope_volume(rd.translate(t)) == base


def test_volume_matches_determinant_formula():
    # frozen values computed with the generator-determinant oracle
    assert zonotope_volume_by_determinants(RD_GENS) == 16
    assert zonotope_volume_by_determinants(TO_GENS) == 32
    assert polytope_volume(build_zonotope(RD_GENS)) == 16
    assert polytope_volume(build_zonotope(TO_GENS)) == 32


def test_raw_tetrahedron_is_not_symmetric():
    tetra = polytope_from_raw([frac_point(*v) for v in TETRA_VERTICES], TETRA_FACETS)
    assert len(tetra.vertices) == 4
    assert len(tetra.facets) == 4
    assert not is_centrally_symmetric(tetra)
    assert not facets_centrally_symmetric(tetra)


def test_zonotope_is_symmetric():
    rd = build_zonotope(RD_GENS)
    assert is_centrally_symmetric(rd)
    assert facets_centrally_symmetric(rd)


def test_raw_polytope_rejects_bad_input():
    verts = [frac_point(*v) for v in TETRA_VERTICES]
    with pytest.raises(GeometryError):
        polytope_from_raw(verts, [[0, 1, 2]])  # open surface
    with pytest.raises(GeometryError):
        polytope_from_raw(verts, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 9]])
    with pytest.raises(GeometryError):
        polytope_from_raw(verts[:3], TETRA_FACETS)
    # non-planar "facet" over a square frame
    square = [frac_point(0, 0, 0), frac_point(1, 0, 0), frac_point(1, 1, 1),
              frac_point(0, 1, 0)]
    with pytest.raises(GeometryError):
        polytope_from_raw(square, [[0, 1, 2, 3], [0, 1, 2], [0, 2, 3], [1, 2, 3]])


def test_clip_cube_corner():
    cube = build_zonotope(UNIT_CUBE_GENS)
    # cut off the (+,+,+) corner strictly between vertices
    clipped = clip_halfspace(cube, (1, 1, 1), Fraction(5, 4))
    validate(clipped)
    assert len(clipped.vertices) == 10
    assert len(clipped.facets) == 7
    assert len(clipped.edges) == 15
    # removed corner tetrahedron has legs 1/4
    assert polytope_volume(clipped) == 1 - Fraction(1, 384)
    # cutting again with the same plane changes nothing
    assert clip_halfspace(clipped, (1, 1, 1), Fraction(5, 4)) is clipped


def test_clip_through_vertices():
    cube = build_zonotope(UNIT_CUBE_GENS)
    # the plane x+y+z = 1/2 passes exactly through three cube vertices
    clipped = clip_halfspace(cube, (1, 1, 1), Fraction(1, 2))
    validate(clipped)
    assert len(clipped.vertices) == 7
    assert len(clipped.facets) == 7
    assert len(clipped.edges) == 12
    assert polytope_volume(clipped) == Fraction(5, 6)


def test_clip_rejects_empty_result():
    cube = build_zonotope(UNIT_CUBE_GENS)
    with pytest.raises(GeometryError):
        clip_halfspace(cube, (0, 0, 1), Fraction(-3, 4))


def test_degenerate_volume_error():
    from tilecheck.polytope import assemble

    square = [frac_point(0, 0, 0), frac_point(1, 0, 0), frac_point(1, 1, 0),
              frac_point(0, 1, 0)]
    flat = assemble([
        ((0, 0, 1), Fraction(0), square),
        ((0, 0, -1), Fraction(0), list(reversed(square))),
    ])
    with pytest.raises(GeometryError, match="zero volume"):
        polytope_volume(flat)
