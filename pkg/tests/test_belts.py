import random
from fractions import Fraction

import pytest

from tilecheck.belts import (
    BeltError,
    FedorovType,
    all_belts,
    belt_of_edge,
    classify_fedorov,
    edge_class_representatives,
    project_along_edge,
    venkov_mcmullen,
)
from tilecheck.geom import add3, canonical_direction3, dot3, mat_vec3, neg3, sub3
from tilecheck.planar import polygon_area
from tilecheck.polytope import polytope_from_raw
from tilecheck.zonotope import build_zonotope

from oracle import belt_facet_scan, hull_vertices_2d, random_generators

CUBE = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
HEX_PRISM = [(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)]
RD = [(1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1)]
ED = RD + [(0, 0, 1)]
TO = [(1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1)]
OCT_PRISM = [(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, -1, 0), (0, 0, 1)]

TETRA = ([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)],
         [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])


def edge_with_direction(poly, direction):
    want = canonical_direction3(direction)
    return next(e for e in poly.edges
                if canonical_direction3(sub3(poly.vertices[e[1]],
                                             poly.vertices[e[0]])) == want)


def test_cube_belt_of_four():
    cube = build_zonotope(CUBE)
    for edge in cube.edges:
        belt = belt_of_edge(cube, edge)
        assert len(belt.facets) == 4
        assert sorted(belt.facets) == sorted(belt_facet_scan(cube, edge))


def test_hexagonal_prism_belts():
    prism = build_zonotope(HEX_PRISM)
    horizontal = edge_with_direction(prism, (1, 0, 0))
    belt = belt_of_edge(prism, horizontal)
    assert len(belt.facets) == 4
    sizes = sorted(len(prism.facets[i].cycle) for i in belt.facets)
    assert sizes == [4, 4, 6, 6]  # two hexagons plus two side facets
    vertical = edge_with_direction(prism, (0, 0, 1))
    assert len(belt_of_edge(prism, vertical).facets) == 6
    assert sorted(len(b.facets) for b in all_belts(prism)) == [4, 4, 4, 6]


def test_octagonal_prism_belt_of_eight():
    prism = build_zonotope(OCT_PRISM)
    vertical = edge_with_direction(prism, (0, 0, 1))
    belt = belt_of_edge(prism, vertical)
    assert len(belt.facets) == 8
    assert sorted(belt.facets) == sorted(belt_facet_scan(prism, vertical))


def test_belt_counts_per_solid():
    assert sorted(len(b.facets) for b in all_belts(build_zonotope(CUBE))) == [4, 4, 4]
    assert sorted(len(b.facets) for b in all_belts(build_zonotope(TO))) == [6] * 6
    assert sorted(len(b.facets) for b in all_belts(build_zonotope(RD))) == [6] * 4


def test_belt_structure_invariants():
    rng = random.Random(21)
    solids = [build_zonotope(g) for g in (CUBE, HEX_PRISM, RD, ED, TO, OCT_PRISM)]
    solids += [build_zonotope(random_generators(rng, rng.randint(3, 5)))
               for _ in range(5)]
    zero = (Fraction(0), Fraction(0), Fraction(0))
    for poly in solids:
        for belt in all_belts(poly):
            n = len(belt.facets)
            assert n % 2 == 0
            assert sorted(belt.facets) == sorted(
                belt_facet_scan(poly, belt.edge_translates[0]))
            # steps close up around the cycle
            total = zero
            for g in belt.steps:
                total = add3(total, g)
            assert total == zero
            # consecutive facets share the edge translate between them
            for i in range(n):
                f = poly.facets[belt.facets[i]].cycle
                cur = belt.edge_translates[i]
                nxt = belt.edge_translates[(i + 1) % n]
                assert set(cur) <= set(f) and set(nxt) <= set(f)
            # opposite facets are antipodal
            for i in range(n // 2):
                f1 = poly.facets[belt.facets[i]]
                f2 = poly.facets[belt.facets[i + n // 2]]
                assert f1.normal == tuple(-c for c in f2.normal)


def test_criterion_on_canonical_solids():
    for gens in (CUBE, HEX_PRISM, RD, ED, TO):
        assert venkov_mcmullen(build_zonotope(gens)).passed


def test_criterion_rejects_octagonal_prism():
    result = venkov_mcmullen(build_zonotope(OCT_PRISM))
    assert not result.passed
    assert result.reason == "belt of 8 facets"
    assert result.belt is not None and len(result.belt.facets) == 8


def test_criterion_rejects_tetrahedron():
    verts = [tuple(Fraction(c) for c in v) for v in TETRA[0]]
    tetra = polytope_from_raw(verts, TETRA[1])
    result = venkov_mcmullen(tetra)
    assert not result.passed
    assert result.reason == "not centrally symmetric"
    with pytest.raises(BeltError, match="not belt-admissible"):
        all_belts(tetra)


def test_fedorov_classification_labels():
    expected = {
        tuple(CUBE): FedorovType.PARALLELOTOPE,
        tuple(HEX_PRISM): FedorovType.HEXAGONAL_PRISM,
        tuple(RD): FedorovType.RHOMBIC_DODECAHEDRON,
        tuple(ED): FedorovType.ELONGATED_DODECAHEDRON,
        tuple(TO): FedorovType.TRUNCATED_OCTAHEDRON,
    }
    for gens, ftype in expected.items():
        assert classify_fedorov(build_zonotope(gens)).fedorov is ftype
    result = classify_fedorov(build_zonotope(OCT_PRISM))
    assert result.fedorov is None
    assert result.label == "NotParallelohedron(belt of 8 facets)"


def random_unimodular(rng):
    m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    for _ in range(6):
        i, j = rng.sample(range(3), 2)
        q = rng.randint(-2, 2)
        for c in range(3):
            m[i][c] += q * m[j][c]
    return tuple(tuple(Fraction(c) for c in row) for row in m)


def test_classification_invariant_under_linear_maps():
    rng = random.Random(22)
    for gens in (CUBE, HEX_PRISM, RD, ED, TO, OCT_PRISM):
        base = classify_fedorov(build_zonotope(gens)).label
        for _ in range(3):
            mat = random_unimodular(rng)
            mapped = [mat_vec3(mat, tuple(Fraction(c) for c in g)) for g in gens]
            assert classify_fedorov(build_zonotope(mapped)).label == base


def test_projection_of_cube_is_unit_square():
    cube = build_zonotope(CUBE)
    shadow = project_along_edge(cube, edge_with_direction(cube, (0, 0, 1)))
    half = Fraction(1, 2)
    assert set(shadow.vertices) == {(half, half), (half, -half),
                                    (-half, half), (-half, -half)}


def test_projection_of_octagonal_prism():
    prism = build_zonotope(OCT_PRISM)
    shadow = project_along_edge(prism, edge_with_direction(prism, (0, 0, 1)))
    assert len(shadow.vertices) == 8
    horizontal = [(1, 0), (0, 1), (1, 1), (1, -1)]
    sums = [(Fraction(0), Fraction(0))]
    for g in horizontal:
        sums = [(p[0] + s * Fraction(g[0], 2), p[1] + s * Fraction(g[1], 2))
                for p in sums for s in (1, -1)]
    assert set(shadow.vertices) == hull_vertices_2d(sums)


def test_projection_edge_count_matches_belt_length():
    for gens in (CUBE, HEX_PRISM, RD, ED, TO, OCT_PRISM):
        poly = build_zonotope(gens)
        for edge in edge_class_representatives(poly):
            belt = belt_of_edge(poly, edge)
            shadow = project_along_edge(poly, edge)
            assert 2 * shadow.half_count == len(belt.facets)


def test_projection_of_truncated_octahedron_is_hexagon():
    poly = build_zonotope(TO)
    shadow = project_along_edge(poly, edge_with_direction(poly, (1, 1, 0)))
    assert shadow.half_count == 3
    assert polygon_area(shadow) > 0
