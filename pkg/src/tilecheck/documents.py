"""JSON input documents and canonical report serialization.

One self-describing schema with a `kind` discriminator covers every input;
all numbers travel as exact rationals ("p/q" strings or integers), so
nothing round-trips through floats. Reports serialize canonically: sorted
keys, no whitespace variance, rationals as strings.
"""

from __future__ import annotations

import dataclasses
import enum
import json
from fractions import Fraction
from pathlib import Path

from .geom import GeometryError, TileCheckError, rat, rat_str
from .lattice import Lattice3, lattice3
from .planar import PlanarMultiset, Polygon2m, planar_multiset, polygon2m
from .polytope import Polytope3, polytope_from_raw
from .tiling import TranslateMultiset, translate_multiset
from .zonotope import build_zonotope

KINDS = ("zonotope", "raw_polytope", "lattice", "tiling3d", "tiling2d", "polygon")


class DocumentError(TileCheckError):
    """Malformed input document; the message names the offending field."""


def _fail(where: str, message: str) -> DocumentError:
    return DocumentError(f"{where}: {message}")


def _get(data: dict, field: str, where: str):
    if field not in data:
        raise _fail(where, f"missing field {field!r}")
    return data[field]


def _rational(value, where: str) -> Fraction:
    if isinstance(value, float):
        raise _fail(where, "floats are not accepted; use \"p/q\" strings")
    try:
        return rat(value)
    except GeometryError:
        raise _fail(where, f"expected a rational, got {value!r}") from None


def _vector(value, length: int, where: str) -> tuple[Fraction, ...]:
    if not isinstance(value, list) or len(value) != length:
        raise _fail(where, f"expected a list of {length} rationals")
    return tuple(_rational(c, f"{where}[{i}]") for i, c in enumerate(value))


def _vector_list(value, length: int, where: str) -> list[tuple[Fraction, ...]]:
    if not isinstance(value, list) or not value:
        raise _fail(where, "expected a non-empty list")
    return [_vector(v, length, f"{where}[{i}]") for i, v in enumerate(value)]


def _positive_int(value, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise _fail(where, f"expected a positive integer, got {value!r}")
    return value


def parse_polytope(data: dict, where: str = "document") -> Polytope3:
    kind = _get(data, "kind", where)
    if kind == "zonotope":
        gens = _vector_list(_get(data, "generators", where), 3, f"{where}.generators")
        try:
            return build_zonotope(gens)
        except GeometryError as exc:
            raise _fail(f"{where}.generators", str(exc)) from exc
    if kind == "raw_polytope":
        verts = _vector_list(_get(data, "vertices", where), 3, f"{where}.vertices")
        facets = _get(data, "facets", where)
        if not isinstance(facets, list) or not facets:
            raise _fail(f"{where}.facets", "expected a non-empty list")
        cycles = []
        for i, cyc in enumerate(facets):
            if (not isinstance(cyc, list)
                    or any(not isinstance(j, int) or isinstance(j, bool) for j in cyc)):
                raise _fail(f"{where}.facets[{i}]", "expected a list of vertex indices")
            cycles.append(cyc)
        try:
            return polytope_from_raw(verts, cycles)
        except GeometryError as exc:
            raise _fail(f"{where}.facets", str(exc)) from exc
    raise _fail(where, f"expected a polytope document, got kind {kind!r}")


def parse_lattice(data: dict, where: str = "document") -> Lattice3:
    if _get(data, "kind", where) != "lattice":
        raise _fail(where, "expected kind 'lattice'")
    rows = _vector_list(_get(data, "basis", where), 3, f"{where}.basis")
    if len(rows) != 3:
        raise _fail(f"{where}.basis", "expected exactly 3 basis vectors")
    try:
        return lattice3(rows)
    except GeometryError as exc:
        raise _fail(f"{where}.basis", str(exc)) from exc


def parse_polygon(data: dict, where: str = "document") -> Polygon2m:
    if _get(data, "kind", where) != "polygon":
        raise _fail(where, "expected kind 'polygon'")
    verts = _vector_list(_get(data, "vertices", where), 2, f"{where}.vertices")
    try:
        return polygon2m(verts)
    except GeometryError as exc:
        raise _fail(f"{where}.vertices", str(exc)) from exc


def parse_tiling3d(data: dict, where: str = "document") -> tuple[Polytope3, TranslateMultiset, int]:
    if _get(data, "kind", where) != "tiling3d":
        raise _fail(where, "expected kind 'tiling3d'")
    poly = parse_polytope(_get(data, "polytope", where), f"{where}.polytope")
    base = _vector_list(_get(data, "base_translates", where), 3,
                        f"{where}.base_translates")
    period = None
    if data.get("period_basis") is not None:
        rows = _vector_list(data["period_basis"], 3, f"{where}.period_basis")
        if len(rows) != 3:
            raise _fail(f"{where}.period_basis", "expected exactly 3 basis vectors")
        try:
            period = lattice3(rows)
        except GeometryError as exc:
            raise _fail(f"{where}.period_basis", str(exc)) from exc
    k = _positive_int(_get(data, "k", where), f"{where}.k")
    return poly, translate_multiset(base, period), k


def parse_tiling2d(data: dict, where: str = "document") -> tuple[Polygon2m, PlanarMultiset, int]:
    if _get(data, "kind", where) != "tiling2d":
        raise _fail(where, "expected kind 'tiling2d'")
    poly = parse_polygon(_get(data, "polygon", where), f"{where}.polygon")
    base = _vector_list(_get(data, "base_translates", where), 2,
                        f"{where}.base_translates")
    period = None
    if data.get("period_basis") is not None:
        rows = _vector_list(data["period_basis"], 2, f"{where}.period_basis")
        if len(rows) != 2:
            raise _fail(f"{where}.period_basis", "expected exactly 2 basis vectors")
        period = rows
    k = _positive_int(_get(data, "k", where), f"{where}.k")
    try:
        return poly, planar_multiset(base, period), k
    except GeometryError as exc:
        raise _fail(f"{where}.period_basis", str(exc)) from exc


def load_document(path: str | Path) -> dict:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {p}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"{p}: invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
    if not isinstance(data, dict):
        raise DocumentError(f"{p}: top-level value must be an object")
    kind = data.get("kind")
    if kind not in KINDS:
        raise DocumentError(
            f"{p}: unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    return data


# -- report serialization ---------------------------------------------------------

def to_jsonable(obj):
    """Recursively convert reports to JSON-safe data; rationals become strings."""
    if isinstance(obj, Fraction):
        return rat_str(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name))
                for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def canonical_json(obj) -> str:
    """Byte-stable JSON: sorted keys, compact separators, trailing newline."""
    return json.dumps(to_jsonable(obj), sort_keys=True, separators=(",", ":")) + "\n"


def polytope_doc(poly: Polytope3) -> dict:
    """Round-trippable raw-polytope document with exact coordinates."""
    return {
        "kind": "raw_polytope",
        "vertices": [[rat_str(c) for c in v] for v in poly.vertices],
        "facets": [list(f.cycle) for f in poly.facets],
    }
