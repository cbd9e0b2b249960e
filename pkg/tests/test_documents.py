import json
from fractions import Fraction
from pathlib import Path

import pytest

from tilecheck.belts import classify_fedorov
from tilecheck.documents import (
    DocumentError,
    canonical_json,
    load_document,
    parse_lattice,
    parse_polygon,
    parse_polytope,
    parse_tiling2d,
    parse_tiling3d,
    polytope_doc,
)
from tilecheck.lattice import dv_cell, lattice3

INPUTS = Path(__file__).resolve().parent.parent / "inputs"


def test_parse_zonotope_document():
    doc = load_document(INPUTS / "fedorov" / "cube.json")
    poly = parse_polytope(doc)
    assert len(poly.vertices) == 8


def test_parse_raw_polytope_document():
    doc = load_document(INPUTS / "raw" / "tetrahedron.json")
    poly = parse_polytope(doc)
    assert len(poly.facets) == 4


def test_parse_lattice_and_tilings():
    lat = parse_lattice(load_document(INPUTS / "lattices" / "fcc.json"))
    assert abs(lat.determinant) == 2
    poly, multiset, k = parse_tiling3d(load_document(
        INPUTS / "tilings" / "cube_halfshift_k2.json"))
    assert k == 2
    assert multiset.period is not None
    assert abs(multiset.period.determinant) == Fraction(1, 2)
    polygon, planar, k = parse_tiling2d(load_document(
        INPUTS / "planar" / "hexagon_k1.json"))
    assert k == 1
    assert polygon.half_count == 3


def test_document_errors_name_the_field(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"kind": "zonotope"}))
    with pytest.raises(DocumentError, match="missing field 'generators'"):
        parse_polytope(load_document(bad))

    bad.write_text(json.dumps({"kind": "lattice",
                               "basis": [[1, 0, 0], [0, 1, 0], [0, 0, "x"]]}))
    with pytest.raises(DocumentError, match=r"basis\[2\]\[2\]"):
        parse_lattice(load_document(bad))

    bad.write_text(json.dumps({"kind": "lattice",
                               "basis": [[1, 0, 0], [2, 0, 0], [0, 0, 1]]}))
    with pytest.raises(DocumentError, match="singular"):
        parse_lattice(load_document(bad))


def test_floats_are_rejected(tmp_path):
    doc = tmp_path / "f.json"
    doc.write_text(json.dumps({"kind": "zonotope",
                               "generators": [[1.5, 0, 0], [0, 1, 0], [0, 0, 1]]}))
    with pytest.raises(DocumentError, match="floats are not accepted"):
        parse_polytope(load_document(doc))


def test_unknown_kind_and_bad_json(tmp_path):
    doc = tmp_path / "g.json"
    doc.write_text(json.dumps({"kind": "mystery"}))
    with pytest.raises(DocumentError, match="unknown kind"):
        load_document(doc)
    doc.write_text("{not json")
    with pytest.raises(DocumentError, match="line 1"):
        load_document(doc)
    with pytest.raises(DocumentError, match="cannot read"):
        load_document(tmp_path / "missing.json")


def test_polytope_document_round_trip():
    cell = dv_cell(lattice3(((1, 1, 0), (1, 0, 1), (0, 1, 1)))).cell
    doc = polytope_doc(cell)
    rebuilt = parse_polytope(doc)
    assert rebuilt.vertices == cell.vertices
    assert [f.cycle for f in rebuilt.facets] == [f.cycle for f in cell.facets]
    assert classify_fedorov(rebuilt).label == "RhombicDodecahedron"


def test_canonical_json_is_sorted_and_exact():
    payload = {"b": Fraction(1, 2), "a": [Fraction(3), (1, 2)], "c": None}
    assert canonical_json(payload) == '{"a":["3",[1,2]],"b":"1/2","c":null}\n'
