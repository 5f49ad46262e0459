"""Command-line front end: single-spec reports, family enumeration, cone
analysis, contraction classification and discriminant export.

All output is deterministic byte-for-byte for a fixed configuration and
seed.  JSON reports carry ``"schema": 1``; the CSV column order is fixed
(see CSV_COLUMNS).  Exit codes: 0 ok, 2 invalid degrees, 3 oracle mismatch,
4 inadmissible or refused spec.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from .chow import BundleSpec
from .discriminant import (
    build_discriminant,
    gradient_identity_holds,
    sample_section,
    scaling_law_check,
    singularity_witness,
    witness_section,
)
from .invariants import (
    CyInvariants,
    OracleMismatchError,
    admissibility_p3,
    invariants_p1,
    invariants_p3,
)
from .kahler import (
    RhoNotTwoError,
    boundary_rays,
    classify_contraction_p1,
    rationality_analysis,
    w_cubic,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_INVALID_DEGREES = 2
EXIT_ORACLE_MISMATCH = 3
EXIT_INADMISSIBLE = 4

CSV_COLUMNS = [
    "base",
    "degrees",
    "c1",
    "c2",
    "gamma",
    "c3_X",
    "h_dot_c2",
    "xi_dot_c2",
    "mk_dot_c2",
    "h3",
    "xi_h2",
    "xi2_h",
    "xi3",
    "fiber_count",
    "picard_number",
    "mk_cubed",
    "mk_sq_h",
    "oracle_ok",
    "rationality",
    "ray_c2_xi",
    "ray_c2_h",
    "contraction_kind",
    "contraction_count",
]


class CliError(Exception):
    def __init__(self, code: int, reason: str) -> None:
        super().__init__(reason)
        self.code = code
        self.reason = reason


def _parse_degrees(text: str, base: str) -> List[int]:
    try:
        degs = [int(x) for x in text.split(",")]
    except ValueError:
        raise CliError(EXIT_INVALID_DEGREES, f"unparsable degrees: {text!r}")
    want = 2 if base == "p3" else 4
    if len(degs) != want:
        raise CliError(
            EXIT_INVALID_DEGREES,
            f"base {base} needs {want} degrees, got {len(degs)}",
        )
    return degs


def _spec_for(base: str, degrees: List[int]) -> BundleSpec:
    return BundleSpec.from_split(3 if base == "p3" else 1, degrees)


def _invariants(spec: BundleSpec) -> CyInvariants:
    if spec.base_dim == 3:
        return invariants_p3(spec)
    return invariants_p1(spec)


def _report_row(spec: BundleSpec) -> dict:
    inv = _invariants(spec)
    row = {
        "base": "p3" if spec.base_dim == 3 else "p1",
        "degrees": list(spec.split_degrees),
        "oracle_ok": inv.oracle_checked,
    }
    row.update(inv.to_dict())
    del row["base_dim"]
    del row["oracle_checked"]
    try:
        kr = boundary_rays(spec)
        row["rationality"] = kr.rationality.value
        row["ray_c2_xi"], row["ray_c2_h"] = kr.c2_values
    except RhoNotTwoError:
        row["rationality"] = None
        row["ray_c2_xi"] = row["ray_c2_h"] = None
    if spec.base_dim == 1 and spec.normalized().c1 <= 3:
        cr = classify_contraction_p1(spec)
        row["contraction_kind"] = cr.kind.value
        row["contraction_count"] = cr.count
    else:
        row["contraction_kind"] = None
        row["contraction_count"] = None
    return row


def _emit(payload: dict, fmt: str, out: Optional[str]) -> None:
    if fmt == "json":
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        rows = payload.get("rows") or [payload.get("row", {})]
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(
                [_csv_cell(row.get(col)) for col in CSV_COLUMNS]
            )
        text = buf.getvalue()
    else:
        lines = []
        for key in sorted(payload):
            if key in ("rows",):
                for row in payload[key]:
                    lines.append(
                        " ".join(f"{k}={_csv_cell(v)}" for k, v in sorted(row.items()))
                    )
            else:
                lines.append(f"{key}: {json.dumps(payload[key], sort_keys=True)}")
        text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return " ".join(map(str, value))
    return value


def _cmd_invariants(args) -> int:
    degs = _parse_degrees(args.degrees, args.base)
    spec = _spec_for(args.base, degs)
    if args.base == "p3" and not admissibility_p3(spec).admissible:
        raise CliError(
            EXIT_INADMISSIBLE,
            f"splitting gap {abs(degs[1] - degs[0])} > 4: no smooth Calabi-Yau",
        )
    row = _report_row(spec)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "invariants",
        "base": args.base,
        "row": row,
        "rows": [row],
    }
    _emit(payload, args.format, args.out)
    return EXIT_OK


def _enumerate_specs(base: str, max_degree: int) -> List[BundleSpec]:
    specs = []
    if base == "p3":
        for b in range(0, max_degree + 1):
            if b > 4:
                continue  # survey skips inadmissible splittings
            specs.append(BundleSpec.from_split(3, (0, b)))
    else:
        for a1 in range(0, max_degree + 1):
            for a2 in range(a1, max_degree + 1):
                for a3 in range(a2, max_degree + 1):
                    specs.append(BundleSpec.from_split(1, (0, a1, a2, a3)))
    return specs


def _cmd_enumerate(args) -> int:
    specs = _enumerate_specs(args.base, args.max_degree)
    workers = max(1, int(os.environ.get("CYB_THREADS", "1")))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_report_row, specs))
    else:
        rows = [_report_row(s) for s in specs]
    rows.sort(key=lambda r: (r["base"], r["degrees"]))
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "enumerate",
        "base": args.base,
        "max_degree": args.max_degree,
        "rows": rows,
    }
    _emit(payload, args.format, args.out)
    if not all(r["oracle_ok"] for r in rows):
        raise CliError(EXIT_ORACLE_MISMATCH, "an oracle comparison failed")
    return EXIT_OK


def _cmd_kaehler(args) -> int:
    degs = _parse_degrees(args.degrees, args.base)
    spec = _spec_for(args.base, degs)
    try:
        report = boundary_rays(spec)
    except RhoNotTwoError as exc:
        raise CliError(EXIT_INADMISSIBLE, str(exc))
    inv = _invariants(spec.normalized())
    w = w_cubic(inv)
    analysis = rationality_analysis(w)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "kaehler",
        "base": args.base,
        "degrees": degs,
        "cubic": {
            "w30": str(w.w30),
            "w21": str(w.w21),
            "w12": str(w.w12),
            "w03": str(w.w03),
        },
        "rationality": analysis.verdict.value,
        "double_roots": [str(r) for r in analysis.double_roots],
        "report": report.to_dict(),
    }
    _emit(payload, args.format, args.out)
    return EXIT_OK


def _cmd_classify(args) -> int:
    degs = _parse_degrees(args.degrees, "p1")
    spec = _spec_for("p1", degs)
    try:
        report = classify_contraction_p1(spec)
    except RhoNotTwoError as exc:
        raise CliError(EXIT_INADMISSIBLE, str(exc))
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "classify",
        "degrees": degs,
        "report": report.to_dict(),
    }
    _emit(payload, args.format, args.out)
    return EXIT_OK


def _cmd_discriminant(args) -> int:
    degs = _parse_degrees(args.degrees, "p3")
    spec = _spec_for("p3", degs)
    if not admissibility_p3(spec).admissible:
        raise CliError(EXIT_INADMISSIBLE, "splitting gap > 4")
    q = sample_section(spec, args.seed, args.bound)
    octic = build_discriminant(q)
    checks = {
        "homogeneous_degree_8": octic.poly.is_zero()
        or octic.poly.total_degree() == 8,
        "scaling_law": scaling_law_check(q, "3/2"),
        "gradient_identity": gradient_identity_holds(q),
    }
    wq = witness_section(spec, args.seed, args.bound)
    witness = singularity_witness(wq, (1, 0, 0, 0))
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "discriminant",
        "degrees": degs,
        "seed": args.seed,
        "bound": args.bound,
        "octic": octic.to_text(),
        "octic_coeffs": octic.to_json_coeffs(),
        "checks": checks,
        "witness": {
            "point": [str(x) for x in witness.point],
            "on_base_locus": witness.on_base_locus,
            "singular_point_verified": witness.singular_point_verified,
            "note": witness.note,
        },
    }
    _emit(payload, args.format, args.out)
    if not all(checks.values()):
        raise CliError(EXIT_ORACLE_MISMATCH, "a discriminant self-check failed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cybundle",
        description="Exact invariants of Calabi-Yau threefolds in projective bundles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, base=True):
        if base:
            p.add_argument("--base", choices=("p3", "p1"), default="p3")
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--out", default=None)

    p = sub.add_parser("invariants", help="invariant report for one spec")
    p.add_argument("--degrees", required=True)
    common(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("enumerate", help="survey all normalized split specs")
    p.add_argument("--max-degree", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("kaehler", help="cubic form, rationality, boundary rays")
    p.add_argument("--degrees", required=True)
    common(p)
    p.set_defaults(func=_cmd_kaehler)

    p = sub.add_parser("classify", help="second-contraction classification (p1)")
    p.add_argument("--degrees", required=True)
    common(p, base=False)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("discriminant", help="discriminant octic for a seeded section")
    p.add_argument("--degrees", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=3)
    common(p, base=False)
    p.set_defaults(func=_cmd_discriminant)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(json.dumps({"error": exc.reason, "exit_code": exc.code}), file=sys.stderr)
        return exc.code
    except OracleMismatchError as exc:
        print(
            json.dumps({"error": str(exc), "exit_code": EXIT_ORACLE_MISMATCH}),
            file=sys.stderr,
        )
        return EXIT_ORACLE_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
