"""Command-line front end: file ingestion, dispatch, bit-stable reports.

Exit codes: 0 for a passing verdict, 1 for a failing verdict, 2 for any
input error. `--json` emits canonical JSON (sorted keys, no whitespace
variance); the default is a short human-readable rendering of the same
report. All behavior is controlled by flags, never by environment
variables.
"""

from __future__ import annotations

import argparse
import sys

from .belts import (
    all_belts,
    classify_fedorov,
    edge_class_representatives,
    venkov_mcmullen,
)
from .documents import (
    DocumentError,
    canonical_json,
    load_document,
    parse_lattice,
    parse_polytope,
    parse_tiling2d,
    parse_tiling3d,
    polytope_doc,
)
from .geom import TileCheckError, rat_str
from .harness import (
    SuiteOptions,
    belt_shift_interior_check,
    feasible_wheel_params,
    verification_suite,
)
from .lattice import dv_cell
from .planar import (
    LocalTilingError,
    adjacent_wheels,
    edge_interior_count,
    interior_multiplicity,
    kappa_identity,
    translated_vertex_orbits,
    verify_k_fold_2d,
)
from .polytope import (
    facets_centrally_symmetric,
    is_centrally_symmetric,
    polytope_volume,
)
from .tiling import SampleSpec, verify_k_fold


def _point(p) -> list[str]:
    return [rat_str(c) for c in p]


def _criterion_dict(crit) -> dict:
    out = {"passed": crit.passed, "reason": crit.reason}
    if crit.belt is not None:
        out["belt_length"] = len(crit.belt.facets)
        out["belt_direction"] = list(crit.belt.direction)
    return out


def _cmd_analyze(args) -> tuple[int, dict, list[str]]:
    poly = parse_polytope(load_document(args.path))
    sym = is_centrally_symmetric(poly)
    fsym = facets_centrally_symmetric(poly)
    crit = venkov_mcmullen(poly)
    belt_lengths = [len(b.facets) for b in all_belts(poly)] if sym and fsym else None
    report = {
        "command": "analyze",
        "vertices": len(poly.vertices),
        "edges": len(poly.edges),
        "facets": len(poly.facets),
        "facet_sizes": list(poly.facet_sizes()),
        "volume": rat_str(polytope_volume(poly)),
        "centrally_symmetric": sym,
        "facets_centrally_symmetric": fsym,
        "belt_lengths": belt_lengths,
        "criterion": _criterion_dict(crit),
    }
    lines = [
        f"vertices {report['vertices']}, edges {report['edges']}, facets {report['facets']}",
        f"volume {report['volume']}",
        f"centrally symmetric: {sym}; facets centrally symmetric: {fsym}",
        f"belt lengths: {belt_lengths}",
        "criterion: PASS" if crit.passed else f"criterion: FAIL ({crit.reason})",
    ]
    return (0 if crit.passed else 1), report, lines


def _cmd_classify(args) -> tuple[int, dict, list[str]]:
    result = classify_fedorov(parse_polytope(load_document(args.path)))
    report = {
        "command": "classify",
        "label": result.label,
        "criterion": _criterion_dict(result.criterion),
    }
    return (0 if result.fedorov is not None else 1), report, [result.label]


def _cmd_dvcell(args) -> tuple[int, dict, list[str]]:
    lat = parse_lattice(load_document(args.path))
    cell = dv_cell(lat)
    label = classify_fedorov(cell.cell).label
    report = {
        "command": "dvcell",
        "determinant": rat_str(lat.determinant),
        "volume": rat_str(polytope_volume(cell.cell)),
        "facets": len(cell.cell.facets),
        "classification": label,
        "relevant_vectors": [_point(v) for v in cell.relevant_vectors],
        "cell": polytope_doc(cell.cell),
    }
    lines = [
        f"determinant {report['determinant']}, cell volume {report['volume']}",
        f"facets {report['facets']}, classification {label}",
        f"relevant vectors: {len(cell.relevant_vectors)}",
    ]
    return 0, report, lines


def _multiplicity_dict(rep, dimension: int) -> dict:
    return {
        "command": "multiplicity",
        "dimension": dimension,
        "claimed_k": rep.claimed_k,
        "passed": rep.passed,
        "volume": {"lhs": rat_str(rep.volume_lhs), "rhs": rat_str(rep.volume_rhs),
                   "ok": rep.volume_ok},
        "samples_tested": rep.samples_tested,
        "resolution": rep.resolution,
        "violations": [{"point": _point(p), "interior": i, "closure": c}
                       for p, i, c in rep.violations],
        "boundary_hits": [{"point": _point(p), "interior": i, "closure": c}
                          for p, i, c in rep.boundary_hits],
    }


def _cmd_multiplicity(args) -> tuple[int, dict, list[str]]:
    doc = load_document(args.path)
    if doc["kind"] == "tiling2d":
        polygon, multiset, k = parse_tiling2d(doc)
        rep = verify_k_fold_2d(polygon, multiset, k, resolution=args.samples)
        report = _multiplicity_dict(rep, 2)
    else:
        poly, multiset, k = parse_tiling3d(doc)
        rep = verify_k_fold(poly, multiset, k, SampleSpec(args.samples), args.threads)
        report = _multiplicity_dict(rep, 3)
    status = (f"verified at resolution {rep.resolution}" if rep.passed
              else f"REFUTED with {len(rep.violations)} violating samples"
              if rep.volume_ok else "volume identity fails")
    lines = [
        f"claimed k = {rep.claimed_k}: {status}",
        f"volume identity: {rat_str(rep.volume_lhs)} = {rat_str(rep.volume_rhs)}"
        f" -> {rep.volume_ok}",
        f"samples: {rep.samples_tested}, boundary hits: {len(rep.boundary_hits)}",
    ]
    if rep.violations:
        p, i, c = rep.violations[0]
        lines.append(f"first violation at {_point(p)}: interior {i}, closure {c}")
    return (0 if rep.passed else 1), report, lines


def _cmd_wheels(args) -> tuple[int, dict, list[str]]:
    polygon, multiset, k = parse_tiling2d(load_document(args.path))
    rows = []
    all_ok = True
    for v in translated_vertex_orbits(polygon, multiset):
        row: dict = {"vertex": _point(v)}
        try:
            wd = adjacent_wheels(polygon, multiset, v)
            ident = kappa_identity(polygon, multiset, v)
            phi = interior_multiplicity(polygon, multiset, v)
            row.update({
                "windings": [w.winding for w in wd.wheels],
                "boundary_multiplicity": wd.boundary_multiplicity,
                "interior_multiplicity": phi,
                "ell": edge_interior_count(polygon, multiset, v),
                "kappa": rat_str(ident.kappa),
                "kappa_consistent": ident.consistent,
                "identity_holds": phi + wd.boundary_multiplicity == k,
            })
            if not (ident.consistent and row["identity_holds"]):
                all_ok = False
        except LocalTilingError as exc:
            row["error"] = str(exc)
            all_ok = False
        rows.append(row)
    report = {"command": "wheels", "claimed_k": k, "vertices": rows,
              "passed": all_ok}
    lines = [f"claimed k = {k}; {len(rows)} vertex classes"]
    for row in rows:
        if "error" in row:
            lines.append(f"  {row['vertex']}: {row['error']}")
        else:
            lines.append(
                f"  {row['vertex']}: boundary {row['boundary_multiplicity']}, "
                f"interior {row['interior_multiplicity']}, ell {row['ell']}, "
                f"kappa {row['kappa']} ({'ok' if row['kappa_consistent'] else 'BAD'}), "
                f"identity {'ok' if row['identity_holds'] else 'BAD'}")
    lines.append("PASS" if all_ok else "FAIL")
    return (0 if all_ok else 1), report, lines


def _cmd_lemma6(args) -> tuple[int, dict, list[str]]:
    poly = parse_polytope(load_document(args.path))
    classes = []
    all_ok = True
    for edge in edge_class_representatives(poly):
        rep = belt_shift_interior_check(poly, edge, args.include_boundary_index)
        entry = {
            "direction": list(rep.direction),
            "half_length": rep.half_length,
            "vacuous": rep.vacuous,
            "passed": rep.passed,
            "checks": [{"index": c.index, "start": c.start.value,
                        "end": c.end.value, "midpoint": c.midpoint.value,
                        "passed": c.passed} for c in rep.checks],
        }
        if rep.boundary_check is not None:
            c = rep.boundary_check
            entry["boundary_check"] = {"index": c.index, "start": c.start.value,
                                       "end": c.end.value,
                                       "midpoint": c.midpoint.value,
                                       "passed": c.passed}
        classes.append(entry)
        all_ok = all_ok and rep.passed
    report = {"command": "lemma6", "edge_classes": classes, "passed": all_ok}
    lines = []
    for entry in classes:
        detail = ("vacuous" if entry["vacuous"]
                  else "pass" if entry["passed"] else "FAIL")
        lines.append(f"direction {entry['direction']}: belt of {2 * entry['half_length']},"
                     f" middle shifts {detail}")
    lines.append("PASS" if all_ok else "FAIL")
    return (0 if all_ok else 1), report, lines


def _cmd_params(args) -> tuple[int, dict, list[str]]:
    wp = feasible_wheel_params(args.m, args.k, args.max_kappa, args.max_ell)
    report = {
        "command": "params",
        "m": wp.m,
        "k": wp.k,
        "feasible": [{"kappa": kappa, "ell": ell,
                      "boundary_multiplicity": rat_str(varpi),
                      "interior_multiplicity": phi}
                     for kappa, ell, varpi, phi in wp.feasible],
    }
    lines = [f"m = {wp.m}, k = {wp.k}: {len(wp.feasible)} feasible tuples"]
    for kappa, ell, varpi, phi in wp.feasible:
        lines.append(f"  kappa {kappa}, ell {ell}, boundary {rat_str(varpi)}, "
                     f"interior {phi}")
    return 0, report, lines


def _cmd_theorem1(args) -> tuple[int, dict, list[str]]:
    options = SuiteOptions(resolution=args.samples, max_m=args.max_m,
                           threads=args.threads)
    suite = verification_suite(options)
    steps = []
    for s in suite.steps:
        steps.append({"step": s.step, "title": s.title, "inputs": s.inputs,
                      "verdict": "pass" if s.verdict else "fail",
                      "witness": s.witness})
    report = {"command": "theorem1", "passed": suite.passed,
              "resolution": args.samples, "max_m": args.max_m, "steps": steps}
    lines = [f"({s.step}) {'pass' if s.verdict else 'FAIL'}: {s.title}"
             for s in suite.steps]
    lines.append("PASS: all steps verified on instance"
                 if suite.passed else "FAIL")
    return (0 if suite.passed else 1), report, lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tilecheck",
        description="Exact verification of translative tilings: zonotopes, "
                    "belts, Voronoi cells, and tiling multiplicity.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str, path: bool = True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true",
                       help="emit a canonical JSON report")
        if path:
            p.add_argument("path", help="input document (JSON)")
        p.set_defaults(handler=handler)
        return p

    add("analyze", _cmd_analyze,
        "symmetry, belts, and the four-or-six belt criterion")
    add("classify", _cmd_classify,
        "classify into the five lattice-tile types")
    add("dvcell", _cmd_dvcell, "Voronoi cell of a lattice")

    p = add("multiplicity", _cmd_multiplicity,
            "verify a claimed k-fold tiling by exact sampling")
    p.add_argument("--samples", type=int, default=10, metavar="N",
                   help="grid resolution per axis (default 10)")
    p.add_argument("--threads", type=int, default=1,
                   help="worker threads for sample evaluation")

    add("wheels", _cmd_wheels,
        "per-vertex wheel decomposition and identities of a planar tiling")

    p = add("lemma6", _cmd_lemma6,
            "shift the base edge by middle belt steps; check strict interiority")
    p.add_argument("--include-boundary-index", action="store_true",
                   help="also test the boundary index m-1, reported separately")

    p = add("params", _cmd_params, "feasible wheel parameter table", path=False)
    p.add_argument("--m", type=int, required=True, help="half belt length")
    p.add_argument("--k", type=int, required=True, help="tiling multiplicity")
    p.add_argument("--max-kappa", type=int, default=4)
    p.add_argument("--max-ell", type=int, default=4)

    p = add("theorem1", _cmd_theorem1, "run the full verification suite",
            path=False)
    p.add_argument("--samples", type=int, default=10, metavar="N",
                   help="grid resolution per axis (default 10)")
    p.add_argument("--max-m", type=int, default=50,
                   help="upper bound of the wheel-arithmetic sweep")
    p.add_argument("--threads", type=int, default=1,
                   help="worker threads for sample evaluation")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, report, lines = args.handler(args)
    except (DocumentError, TileCheckError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        sys.stdout.write(canonical_json(report))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
