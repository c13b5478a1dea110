"""Batch CLI: dataset ingestion, bound chains, CM-type analyses, the
61-example verifier, class-number searches and Smith normal forms.

Exit codes: 0 success, 1 input or validation error, 2 verification failure.
All reports go to standard output as JSON (CSV available where tabular);
identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .bounds import BoundInputs, FieldRecord, chain_bounds
from .classnumbers import discs_with_class_number_at_most
from .cmtypes import (
    CMFieldSymbol,
    CMType,
    component_group_order,
    enumerate_cm_types,
    is_primitive,
    mt_rank,
    parse_cm_descriptor,
    reflex,
)
from .example61 import verify61_report
from .groups import Subgroup, build_group, load_group_table
from .snf import IntegerMatrix, smith_normal_form

FIELD_CSV_HEADER = ["label", "degree", "disc", "galois", "class_number"]


@dataclass(frozen=True)
class RunConfig:
    """Validated per-invocation options."""

    subcommand: str
    n: int | None = None
    g: int | None = None
    delta_file: str | None = None
    d_table_file: str | None = None
    group_spec: str | None = None
    subgroup_spec: str | None = None
    conj_spec: str | None = None
    phi_spec: str | None = None
    descriptor: str | None = None
    h_max: int | None = None
    search_limit: int | None = None
    fundamental_only: bool = False
    format: str = "json"


class UsageError(ValueError):
    pass


def _split_csv_line(line):
    return [cell.strip() for cell in line.split(",")]


def ingest_field_records(path):
    """Parse a field-record CSV; returns (records, delta = max |disc|).

    Header must be ``label,degree,disc,galois,class_number``; ``#`` lines
    are comments.  Row-level problems are reported with their line numbers;
    an empty dataset is an error because the discriminant maximum would be
    undefined (never silently zero).
    """
    try:
        with open(path, encoding="utf-8") as fh:
            raw = fh.readlines()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None
    rows = []
    for lineno, line in enumerate(raw, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        rows.append((lineno, text))
    if not rows:
        raise ValueError(f"{path}: empty dataset (no header)")
    header_line, header_text = rows[0]
    if _split_csv_line(header_text) != FIELD_CSV_HEADER:
        raise ValueError(
            f"{path}:{header_line}: missing or malformed header; expected "
            + ",".join(FIELD_CSV_HEADER)
        )
    records = []
    errors = []
    for lineno, text in rows[1:]:
        cells = _split_csv_line(text)
        if len(cells) != 5:
            errors.append(f"{path}:{lineno}: expected 5 fields, got {len(cells)}")
            continue
        label, degree_s, disc_s, galois, h_s = cells
        try:
            degree = int(degree_s)
            disc = int(disc_s)
            class_number = int(h_s) if h_s else None
            records.append(
                FieldRecord(
                    label=label,
                    degree=degree,
                    disc=disc,
                    galois=galois,
                    class_number=class_number,
                )
            )
        except ValueError as exc:
            errors.append(f"{path}:{lineno}: {exc}")
    if errors:
        raise ValueError("\n".join(errors))
    if not records:
        raise ValueError(f"{path}: empty dataset (header only)")
    delta = max(abs(r.disc) for r in records)
    return records, delta


def delta_table_from_records(records, g):
    """Per-dimension discriminant maxima {g': max |disc| at degree 2g'}."""
    table = {}
    for rec in records:
        gp = rec.g()
        table[gp] = max(table.get(gp, 0), abs(rec.disc))
    missing = [gp for gp in range(1, g + 1) if gp not in table]
    if missing:
        raise ValueError(
            f"dataset has no records of dimension g' in {missing}; "
            f"the chain needs a discriminant maximum for every g' <= {g}"
        )
    return table


def read_d_table(path):
    """Read a g -> D(g) cap table from a CSV with header ``g,d``."""
    try:
        with open(path, encoding="utf-8") as fh:
            raw = fh.readlines()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None
    rows = [
        (i, line.strip())
        for i, line in enumerate(raw, start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not rows or _split_csv_line(rows[0][1]) != ["g", "d"]:
        raise ValueError(f"{path}: expected header 'g,d'")
    table = {}
    for lineno, text in rows[1:]:
        cells = _split_csv_line(text)
        if len(cells) != 2:
            raise ValueError(f"{path}:{lineno}: expected 2 fields")
        try:
            table[int(cells[0])] = int(cells[1])
        except ValueError:
            raise ValueError(f"{path}:{lineno}: non-integer entry") from None
    if not table:
        raise ValueError(f"{path}: no cap entries")
    return table


def read_matrix(stream):
    """Matrix from text: first line ``rows cols``, then rows of integers."""
    lines = [ln.strip() for ln in stream.read().splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty matrix input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'rows cols'")
    rows, cols = int(head[0]), int(head[1])
    if len(lines) != rows + 1:
        raise ValueError(f"expected {rows} matrix rows, got {len(lines) - 1}")
    entries = []
    for ln in lines[1:]:
        vals = [int(tok) for tok in ln.split()]
        if len(vals) != cols:
            raise ValueError(f"row '{ln}' does not have {cols} entries")
        entries.extend(vals)
    return IntegerMatrix(rows, cols, entries)


def _emit(payload):
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _resolve_group(spec):
    if spec.startswith("@"):
        return load_group_table(spec[1:])
    return build_group(spec)


def _parse_indices(text):
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _field_from_config(cfg):
    if cfg.group_spec is None or cfg.subgroup_spec is None or cfg.conj_spec is None:
        raise UsageError("--group, --subgroup and --conj are required")
    group = _resolve_group(cfg.group_spec)
    subgroup = Subgroup(group, _parse_indices(cfg.subgroup_spec))
    return CMFieldSymbol(group, subgroup, int(cfg.conj_spec))


def _type_row(t):
    rd = reflex(t)
    return {
        "phi": sorted(t.phi),
        "g": t.field.g,
        "r": mt_rank(t),
        "f_order": component_group_order(t),
        "reflex_degree": rd.reflex_degree,
        "primitive": is_primitive(t),
    }


def cmd_bound(cfg):
    records, _ = ingest_field_records(cfg.delta_file)
    d_table = read_d_table(cfg.d_table_file)
    delta_table = delta_table_from_records(records, cfg.g)
    inputs = BoundInputs(n=cfg.n, g=cfg.g, d_table=d_table)
    report = chain_bounds(inputs, delta_table)
    _emit(report.to_json_dict())
    return 0


def cmd_cmtypes(cfg):
    field = _field_from_config(cfg)
    types = enumerate_cm_types(field)
    rows = [_type_row(t) for t in types]
    if cfg.format == "csv":
        sys.stdout.write("phi,g,r,f_order,reflex_degree,primitive\n")
        for row in rows:
            phi = " ".join(str(k) for k in row["phi"])
            sys.stdout.write(
                f"{phi},{row['g']},{row['r']},{row['f_order']},"
                f"{row['reflex_degree']},{int(row['primitive'])}\n"
            )
    else:
        _emit(
            {
                "group_order": field.group.order,
                "g": field.g,
                "conj": field.conj,
                "subgroup": list(field.field_subgroup.elements),
                "types": rows,
            }
        )
    return 0


def cmd_reflex(cfg):
    if cfg.descriptor is not None:
        t = parse_cm_descriptor(cfg.descriptor)
    else:
        field = _field_from_config(cfg)
        if cfg.phi_spec is None:
            raise UsageError("--phi (or --descriptor) is required")
        t = CMType(field, _parse_indices(cfg.phi_spec))
    rd = reflex(t)
    _emit(
        {
            "g": t.field.g,
            "r": mt_rank(t),
            "f_order": component_group_order(t),
            "reflex_degree": rd.reflex_degree,
            "primitive": is_primitive(t),
        }
    )
    return 0


def cmd_verify61(_cfg):
    report = verify61_report()
    _emit(report)
    return 0 if report["ok"] else 2


def cmd_classnumbers(cfg):
    result = discs_with_class_number_at_most(
        cfg.h_max, cfg.search_limit, fundamental_only=cfg.fundamental_only
    )
    if cfg.format == "csv":
        sys.stdout.write(f"# {result.note}\n")
        sys.stdout.write("d,h\n")
        for d, h in result.entries:
            sys.stdout.write(f"{d},{h}\n")
    else:
        _emit(
            {
                "h_max": result.h_max,
                "search_limit": result.search_limit,
                "fundamental_only": result.fundamental_only,
                "note": result.note,
                "entries": [list(pair) for pair in result.entries],
            }
        )
    return 0


def cmd_snf(_cfg):
    m = read_matrix(sys.stdin)
    result = smith_normal_form(m)
    _emit(
        {
            "rows": m.rows,
            "cols": m.cols,
            "divisors": list(result.divisors),
            "rank": result.rank,
            "torsion_order": result.torsion_order,
        }
    )
    return 0


_HANDLERS = {
    "bound": cmd_bound,
    "cmtypes": cmd_cmtypes,
    "reflex": cmd_reflex,
    "verify61": cmd_verify61,
    "classnumbers": cmd_classnumbers,
    "snf": cmd_snf,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = _Parser(
        prog="cmbounds",
        description="Exact CM-type, bound-chain and class-number computations.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_bound = sub.add_parser("bound", help="assemble the prime-bound chain")
    p_bound.add_argument("--n", type=int, required=True)
    p_bound.add_argument("--g", type=int, required=True)
    p_bound.add_argument("--delta-file", required=True, dest="delta_file")
    p_bound.add_argument("--d-table", required=True, dest="d_table_file")

    p_cm = sub.add_parser("cmtypes", help="enumerate CM types with invariants")
    p_cm.add_argument("--group", required=True, dest="group_spec")
    p_cm.add_argument("--subgroup", required=True, dest="subgroup_spec")
    p_cm.add_argument("--conj", required=True, dest="conj_spec")
    p_cm.add_argument("--format", choices=("json", "csv"), default="json")

    p_rx = sub.add_parser("reflex", help="reflex data for one CM type")
    p_rx.add_argument("--descriptor")
    p_rx.add_argument("--group", dest="group_spec")
    p_rx.add_argument("--subgroup", dest="subgroup_spec")
    p_rx.add_argument("--conj", dest="conj_spec")
    p_rx.add_argument("--phi", dest="phi_spec")

    sub.add_parser(
        "verify61", aliases=["verify-61"], help="run the 61-example verification suite"
    )

    p_cn = sub.add_parser("classnumbers", help="search small class numbers")
    p_cn.add_argument("--h-max", type=int, required=True, dest="h_max")
    p_cn.add_argument("--limit", type=int, required=True, dest="search_limit")
    p_cn.add_argument("--fundamental-only", action="store_true")
    p_cn.add_argument("--format", choices=("json", "csv"), default="json")

    sub.add_parser("snf", help="Smith normal form of a matrix from stdin")

    return parser


def config_from_args(args):
    sub = args.subcommand
    if sub == "verify-61":
        sub = "verify61"
    return RunConfig(
        subcommand=sub,
        n=getattr(args, "n", None),
        g=getattr(args, "g", None),
        delta_file=getattr(args, "delta_file", None),
        d_table_file=getattr(args, "d_table_file", None),
        group_spec=getattr(args, "group_spec", None),
        subgroup_spec=getattr(args, "subgroup_spec", None),
        conj_spec=getattr(args, "conj_spec", None),
        phi_spec=getattr(args, "phi_spec", None),
        descriptor=getattr(args, "descriptor", None),
        h_max=getattr(args, "h_max", None),
        search_limit=getattr(args, "search_limit", None),
        fundamental_only=getattr(args, "fundamental_only", False),
        format=getattr(args, "format", "json"),
    )


def run(config):
    """Dispatch a validated configuration; returns the process exit code."""
    handler = _HANDLERS.get(config.subcommand)
    if handler is None:
        raise UsageError(f"unknown subcommand {config.subcommand!r}")
    return handler(config)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return run(config_from_args(args))
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
