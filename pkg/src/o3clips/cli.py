"""Command line front end.

Subcommands: ``clips`` for a single product, ``table`` to regenerate
closed-form grid cells, ``verify`` to sweep the grid against brute
force, ``piez`` for the coupled-law catalog, ``info`` for one class,
``materialize`` to dump explicit matrices.

Exit codes: 0 on success, 1 on usage or parse errors, 2 when a
verification found a mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import re
import sys
from typing import Sequence

import numpy as np

from .engine import clips, verify_cells
from .groups import GroupError, generators, materialize
from .infinite import is_infinite, typeclass
from .labels import (
    ClassLabel,
    ClassSet,
    cyclic,
    cyclic_minus,
    dihedral,
    dihedral_d,
    dihedral_z,
    format_label,
    icosa,
    o2,
    o2_minus,
    octa,
    octa_minus,
    order_of,
    parse_label,
    proper_part,
    so2,
    strip_z2c,
    tetra,
    tilde_part,
    with_z2c,
)
from .piezo import diff_piez
from .rotations import axis_angle, random_rotation
from .tables import clips_type2_type3

__all__ = ["main"]

_FORMATS = ("text", "json", "csv", "markdown")


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; reserve 2 for mismatches."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# Prefixes of valid label spellings, used only to point at the first
# offending character when parsing fails.
_PREFIX_RE = re.compile(
    r"""^(?:
        1 | T | I
      | SO? | SO\( | SO\(2\)? | SO\(3\)?
      | O | O\( | O\(2\)? | O\(2\)\^-? | O\(3\)?
      | O\^-?
      | Z\d*(?:\^-?)?
      | D\d*(?:\^[zd]?)?
    )$""",
    re.VERBOSE,
)


def _parse_error_message(text: str) -> str:
    s = text.strip().replace(" ", "")
    core = s[: -len("+Z2c")] if s.endswith("+Z2c") else s
    pos = max(len(core), 1)
    for i in range(1, len(core) + 1):
        if not _PREFIX_RE.match(core[:i]):
            pos = i
            break
    return f"cannot parse class label {text!r} (near position {pos})"


def _parse(text: str) -> ClassLabel:
    try:
        return parse_label(text)
    except ValueError:
        raise ValueError(_parse_error_message(text)) from None


def _labels(cs: ClassSet) -> str:
    return " ".join(cs.labels())


def _print_json(obj) -> None:
    print(json.dumps(obj))


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


# ---------------------------------------------------------------- clips


def cmd_clips(args) -> int:
    a, b = _parse(args.lhs), _parse(args.rhs)
    lhs, rhs = format_label(a), format_label(b)
    if args.method != "both":
        result = clips(a, b, method=args.method)
        if args.format == "json":
            _print_json({"op": "clips", "lhs": lhs, "rhs": rhs,
                         "result": result.labels()})
        elif args.format == "csv":
            w = _csv_writer()
            w.writerow(["lhs", "rhs", "result"])
            w.writerow([lhs, rhs, _labels(result)])
        elif args.format == "markdown":
            print("| lhs | rhs | result |")
            print("| --- | --- | --- |")
            print(f"| {lhs} | {rhs} | {_labels(result)} |")
        else:
            print(_labels(result))
        return 0

    symbolic = clips(a, b, method="symbolic")
    finite_pair = not (is_infinite(a) or is_infinite(b))
    oracle = clips(a, b, method="oracle") if finite_pair else None
    match = None if oracle is None else symbolic == oracle
    if args.format == "json":
        _print_json({
            "op": "clips", "lhs": lhs, "rhs": rhs,
            "result": symbolic.labels(),
            "oracle": None if oracle is None else oracle.labels(),
            "match": match,
        })
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["method", "result"])
        w.writerow(["symbolic", _labels(symbolic)])
        if oracle is not None:
            w.writerow(["oracle", _labels(oracle)])
    elif args.format == "markdown":
        print("| method | result |")
        print("| --- | --- |")
        print(f"| symbolic | {_labels(symbolic)} |")
        if oracle is not None:
            print(f"| oracle | {_labels(oracle)} |")
    else:
        print(f"symbolic: {_labels(symbolic)}")
        if oracle is None:
            print("oracle: skipped (needs finite classes)")
        else:
            print(f"oracle: {_labels(oracle)}")
            print("MATCH" if match else "MISMATCH")
    return 2 if match is False else 0


# ---------------------------------------------------------------- table


_COLUMN_TOKENS = {
    "Z^-": "Z-", "Z-": "Z-",
    "D^z": "Dz", "Dz": "Dz",
    "D^d": "Dd", "Dd": "Dd",
    "O^-": "O-", "O-": "O-",
    "O(2)^-": "O2-", "O2-": "O2-", "O2^-": "O2-",
}
_ROW_TOKENS = {
    "Z": "Z", "D": "D", "T": "T", "O": "O", "I": "I",
    "SO(2)": "SO2", "SO2": "SO2", "O(2)": "O2", "O2": "O2",
}


def _parse_range(text: str) -> range:
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text)
    if not m:
        raise ValueError(f"bad range {text!r}; expected A..B")
    return range(int(m.group(1)), int(m.group(2)) + 1)


def _split_tokens(text: str, table: dict, what: str) -> list[str]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok not in table:
            allowed = ", ".join(sorted(set(table)))
            raise ValueError(f"unknown {what} {tok!r}; expected one of "
                             f"{allowed}")
        if table[tok] not in out:
            out.append(table[tok])
    return out


def _table_rows(kinds: Sequence[str], m_range: range) -> list[ClassLabel]:
    single = {"T": tetra(), "O": octa(), "I": icosa(),
              "SO2": so2(), "O2": o2()}
    out = []
    for kind in kinds:
        if kind == "Z":
            out += [with_z2c(cyclic(m)) for m in m_range if m >= 2]
        elif kind == "D":
            out += [with_z2c(dihedral(m)) for m in m_range if m >= 2]
        else:
            out.append(with_z2c(single[kind]))
    return out


def _table_cols(kinds: Sequence[str], n_range: range) -> list[ClassLabel]:
    out = []
    for kind in kinds:
        if kind == "Z-":
            out += [cyclic_minus(2 * n) for n in n_range if n >= 1]
        elif kind == "Dz":
            out += [dihedral_z(n) for n in n_range if n >= 2]
        elif kind == "Dd":
            out += [dihedral_d(2 * n) for n in n_range if n >= 1]
        elif kind == "O-":
            out.append(octa_minus())
        else:
            out.append(o2_minus())
    return out


def cmd_table(args) -> int:
    n_range = _parse_range(args.n_range)
    m_range = _parse_range(args.m_range)
    col_kinds = _split_tokens(args.columns, _COLUMN_TOKENS, "column")
    row_kinds = _split_tokens(args.rows, _ROW_TOKENS, "row")
    rows = _table_rows(row_kinds, m_range)
    cols = _table_cols(col_kinds, n_range)

    cells = []
    for row in rows:
        for col in cols:
            branch, cell = clips_type2_type3(row, col)
            cells.append((row, col, branch, cell))

    if args.format == "json":
        _print_json({"op": "table", "cells": [
            {"row": format_label(r), "col": format_label(c),
             "branch": branch, "result": cell.labels()}
            for r, c, branch, cell in cells
        ]})
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["row", "col", "branch", "result"])
        for r, c, branch, cell in cells:
            w.writerow([format_label(r), format_label(c), branch,
                        _labels(cell)])
    elif args.format == "markdown":
        header = [""] + [format_label(c) for c in cols]
        print("| " + " | ".join(header) + " |")
        print("|" + " --- |" * len(header))
        for row in rows:
            line = [format_label(row)]
            line += [_labels(cell) for r, c, branch, cell in cells
                     if r == row]
            print("| " + " | ".join(line) + " |")
    else:
        for r, c, branch, cell in cells:
            print(f"{format_label(r)} x {format_label(c)}: {_labels(cell)}")
    return 0


# --------------------------------------------------------------- verify


def cmd_verify(args) -> int:
    checked = mismatches = 0
    for cell in verify_cells(n_max=args.n_max, m_max=args.m_max,
                             seed=args.seed):
        checked += 1
        row, col = format_label(cell.row), format_label(cell.col)
        if cell.match:
            print(f"ok   {row} x {col}: {_labels(cell.symbolic)}")
        else:
            mismatches += 1
            print(f"FAIL {row} x {col}: symbolic {_labels(cell.symbolic)}"
                  f" != brute {_labels(cell.brute)}")
    print(f"{checked} cells checked, {checked - mismatches} ok, "
          f"{mismatches} mismatched")
    return 2 if mismatches else 0


# ----------------------------------------------------------------- piez


def cmd_piez(args) -> int:
    d = diff_piez()
    computed = d.computed.labels()

    if args.format == "json":
        _print_json(computed)
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["label"])
        for lbl in computed:
            w.writerow([lbl])
    elif args.format == "markdown":
        for lbl in computed:
            print(f"- `{lbl}`")
    else:
        print(f"computed isotropy classes ({len(computed)}):")
        print(_labels(d.computed))
        for printed, canon in d.collisions:
            print(f"note: the builtin list spells {canon} twice "
                  f"({printed} is the same class), "
                  f"{d.printed_count} entries name "
                  f"{d.canonical_count} classes")
        if d.match:
            print("computed catalog matches the builtin one")
        else:
            print("computed catalog differs from the builtin one:")
            for lbl in d.missing:
                print(f"  missing: {lbl}")
            for lbl in d.extra:
                pair = d.witnesses.get(lbl)
                where = (f" (from clips of {pair[0]} with {pair[1]})"
                         if pair else "")
                print(f"  extra: {lbl}{where}")
    return 0 if d.match else 2


# ----------------------------------------------------------------- info


_TYPE_NOTES = {
    "I": "rotations only",
    "II": "contains the central inversion",
    "III": "has improper elements but not the inversion",
}

_POLY_AXIS = {"T": 3, "O": 4, "I": 5, "O-": 4}


def _primary_axis_order(label: ClassLabel):
    if label.kind == "1":
        return 1
    if label.kind in ("Z", "D", "Z-", "Dz", "Dd"):
        return label.n
    return _POLY_AXIS.get(label.kind)


def _fraction_of_pi(angle: float) -> str:
    from fractions import Fraction

    frac = Fraction(angle / math.pi).limit_denominator(64)
    if frac == 0:
        return "0"
    if frac == 1:
        return "pi"
    if frac.numerator == 1:
        return f"pi/{frac.denominator}"
    return f"{frac.numerator}*pi/{frac.denominator}"


def _describe_generator(g: np.ndarray) -> str:
    if np.linalg.det(g) > 0:
        axis, angle = axis_angle(g)
        sign = ""
    else:
        if np.max(np.abs(g + np.eye(3))) < 1e-9:
            return "-Id"
        axis, angle = axis_angle(-g)
        sign = "-"
    coords = " ".join(f"{x:.3f}".rstrip("0").rstrip(".") for x in axis)
    return f"{sign}R([{coords}], {_fraction_of_pi(angle)})"


def cmd_info(args) -> int:
    label = _parse(args.label)
    canon = format_label(label)
    kind = typeclass(label)
    order = order_of(label)
    print(f"label: {canon}")
    print(f"type: {kind} ({_TYPE_NOTES[kind]})")
    print("order: " + ("infinite" if math.isinf(order) else str(order)))
    if kind == "II":
        print(f"rotation part: {format_label(strip_z2c(label))}")
    elif kind == "III":
        print(f"rotation part: {format_label(proper_part(label))}")
        print(f"rotation envelope: {format_label(tilde_part(label))}")
    primary = _primary_axis_order(label)
    if primary is not None and not is_infinite(label):
        print(f"primary axis order: {primary}")
    if not is_infinite(label):
        gens = generators(label)
        print("generators: " + "; ".join(_describe_generator(g)
                                         for g in gens))
    return 0


# ---------------------------------------------------------- materialize


def cmd_materialize(args) -> int:
    label = _parse(args.label)
    if is_infinite(label):
        print(f"error: {format_label(label)} is infinite; only finite "
              "classes can be dumped as matrices (use clips or info "
              "for symbolic queries)", file=sys.stderr)
        return 1
    orientation = None
    if args.seed:
        orientation = random_rotation(np.random.default_rng(args.seed))
    elems = materialize(label, orientation)
    print(f"# label={format_label(label)} order={len(elems)}")
    for g in elems:
        print(" ".join(f"{x:.17g}" for x in g.reshape(-1)))
    return 0


# ----------------------------------------------------------------- main


def build_parser() -> _Parser:
    parser = _Parser(prog="o3clips",
                     description="Clips products of symmetry classes of "
                                 "closed subgroups of O(3).")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("clips", help="clips product of two classes")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument("--method", choices=("symbolic", "oracle", "both"),
                   default="symbolic")
    p.add_argument("--format", choices=_FORMATS, default="text")
    p.set_defaults(func=cmd_clips)

    p = sub.add_parser("table", help="closed-form grid cells")
    p.add_argument("--n-range", default="2..6", metavar="A..B",
                   help="column parameter range (default 2..6)")
    p.add_argument("--m-range", default="2..6", metavar="A..B",
                   help="row parameter range (default 2..6)")
    p.add_argument("--columns", default="Z^-,D^z,D^d,O^-,O(2)^-",
                   help="comma separated column families")
    p.add_argument("--rows", default="Z,D,T,O,I,SO(2),O(2)",
                   help="comma separated row families")
    p.add_argument("--format", choices=_FORMATS, default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify",
                       help="sweep the grid against brute force")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--m-max", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("piez",
                       help="recompute the coupled-law catalog")
    p.add_argument("--format", choices=_FORMATS, default="text")
    p.set_defaults(func=cmd_piez)

    p = sub.add_parser("info", help="describe one class")
    p.add_argument("label")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("materialize",
                       help="dump the matrices of a finite class")
    p.add_argument("label")
    p.add_argument("--seed", type=int, default=0,
                   help="0 for the reference orientation, otherwise a "
                        "seeded random one")
    p.set_defaults(func=cmd_materialize)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, GroupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
