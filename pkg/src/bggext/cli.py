"""Command-line front end: ``bggext <command> ...``.

Exit codes: 0 success (tables may contain unknowns), 1 usage error,
2 invalid permutation or parabolic subset, 3 self-test failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field

from . import bruhat_base as bb
from . import cells
from .ext_o import GradedExtAnswer, Status, ext1_simple_to_verma, ext1_singular, m_degree, socle_coker_verma
from .ext_s import SCategoryContext, ext1_simple_to_proper_standard, ext1_simple_to_standard, socle_coker_proper_standard
from .parabolic import ParabolicSubset, coset_long_rep, coset_short_rep, parse_parabolic
from .selftest import run_selftest
from .symmetric_group import Permutation, all_permutations, identity, parse_permutation

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_SELFTEST = 0, 1, 2, 3
TARGETS = ("verma", "singular-verma", "proper-standard", "standard")


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


@dataclass
class TableCell:
    x: str
    y: str
    status: str
    dim: int | None
    degrees: list[int] | None


@dataclass
class ExtTable:
    n: int
    kind: str
    parabolic: str | None
    normalization: str
    cells: list[TableCell] = field(default_factory=list)

    @property
    def rows(self) -> list[str]:
        return list(dict.fromkeys(c.x for c in self.cells))

    @property
    def columns(self) -> list[str]:
        return list(dict.fromkeys(c.y for c in self.cells))

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ExtTable:
        data = json.loads(text)
        data["cells"] = [TableCell(**c) for c in data["cells"]]
        return cls(**data)


def _cell(x: Permutation, y: Permutation, answer: GradedExtAnswer, graded: bool) -> TableCell:
    degrees = list(answer.degrees) if graded and answer.degrees is not None else None
    return TableCell(str(x), str(y), answer.status.value, answer.dim, degrees)


def _render_cell(cell: TableCell, graded: bool) -> str:
    if cell.status == Status.UNKNOWN.value:
        return "?"
    if cell.status == Status.ZERO.value:
        return "-"
    if not graded or cell.degrees is None:
        return str(cell.dim)
    return f"({cell.dim}, {'/'.join(map(str, cell.degrees))})"


def render_text(table: ExtTable, graded: bool) -> str:
    rows, cols = table.rows, table.columns
    lookup = {(c.x, c.y): _render_cell(c, graded) for c in table.cells}
    grid = [["x \\ y", *cols]] + [[x, *(lookup[x, y] for y in cols)] for x in rows]
    widths = [max(len(r[k]) for r in grid) for k in range(len(grid[0]))]

    def line(items):
        return " | ".join(s.ljust(w) for s, w in zip(items, widths)).rstrip()

    header = f"# ext n={table.n} target={table.kind}"
    if table.parabolic is not None:
        role = "stabilizer" if table.kind == "singular-verma" else "parabolic"
        header += f" {role}={{{table.parabolic}}}"
    header += f" normalization={table.normalization}" if graded else " ungraded"
    out = [header, line(grid[0]), "-+-".join("-" * w for w in widths)]
    out.extend(line(r) for r in grid[1:])
    return "\n".join(out) + "\n"


def render_csv(table: ExtTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x", "y", "status", "dim", "degrees", "normalization"])
    for c in table.cells:
        degrees = "" if c.degrees is None else ";".join(map(str, c.degrees))
        writer.writerow([c.x, c.y, c.status, "" if c.dim is None else c.dim, degrees, table.normalization])
    return buf.getvalue()


def build_ext_table(n: int, target: str, subset: ParabolicSubset | None, graded: bool) -> ExtTable:
    if target == "verma":
        perms = all_permutations(n)
        answers = [(x, y, ext1_simple_to_verma(x, y)) for x in perms for y in perms]
        label = None
    elif target == "singular-verma":
        perms = all_permutations(n)
        xs = sorted({coset_long_rep(w, subset, "right") for w in perms})
        ys = sorted({coset_short_rep(w, subset, "right") for w in perms})
        answers = [(x, y, ext1_singular(x, y, subset)) for x in xs for y in ys]
        label = str(subset)
    else:
        ctx = SCategoryContext(subset)
        xl = sorted(ctx.xlong)
        fn = ext1_simple_to_proper_standard if target == "proper-standard" else ext1_simple_to_standard
        answers = [(x, y, fn(ctx, x, y)) for x in xl for y in xl]
        label = str(subset)
    normalization = answers[0][2].normalization
    return ExtTable(n, target, label, normalization, [_cell(x, y, a, graded) for x, y, a in answers])


def _perm(text: str, n: int) -> Permutation:
    try:
        w = parse_permutation(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if w.n != n:
        raise InputError(f"permutation {text!r} is not in S_{n}")
    return w


def _subset(text: str, n: int) -> ParabolicSubset:
    try:
        return parse_parabolic(text, n)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _require_n(n: int, low: int) -> None:
    if n < low:
        raise UsageError(f"--n must be at least {low}")


def cmd_ext(args) -> str:
    _require_n(args.n, 3)
    target = args.target
    if target == "verma" and args.stabilizer is not None:
        target = "singular-verma"
    subset = None
    if target in ("verma", "singular-verma") and args.parabolic is not None:
        raise UsageError("--parabolic applies to proper-standard and standard targets; use --stabilizer")
    if target in ("proper-standard", "standard") and args.stabilizer is not None:
        raise UsageError(f"--stabilizer does not apply to --target {target}")
    if target == "singular-verma":
        if args.stabilizer is None:
            raise UsageError("--target singular-verma requires --stabilizer")
        subset = _subset(args.stabilizer, args.n)
    elif target in ("proper-standard", "standard"):
        if args.parabolic is None:
            raise UsageError(f"--target {target} requires --parabolic")
        subset = _subset(args.parabolic, args.n)
    table = build_ext_table(args.n, target, subset, args.graded)
    if args.format == "json":
        return table.to_json()
    if args.format == "csv":
        return render_csv(table)
    return render_text(table, args.graded)


def _listing(args, records: list[dict], text_lines: list[str]) -> str:
    if args.format == "json":
        return json.dumps(records, indent=2) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        if records:
            writer = csv.DictWriter(buf, fieldnames=list(records[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(records)
        return buf.getvalue()
    return "".join(line + "\n" for line in text_lines)


def cmd_base(args) -> str:
    _require_n(args.n, 2)
    records, lines = [], []
    for b in bb.bigrassmannians(args.n):
        if args.coords:
            c = bb.coord_of(b)
            records.append({"perm": str(b), "i": c.i, "j": c.j, "k": c.k})
            lines.append(f"{b}  ({c.i},{c.j},{c.k})")
        else:
            records.append({"perm": str(b)})
            lines.append(str(b))
    if args.format == "json" and not args.coords:
        return json.dumps([r["perm"] for r in records], indent=2) + "\n"
    return _listing(args, records, lines)


def cmd_bm(args) -> str:
    _require_n(args.n, 2)
    w = _perm(args.perm, args.n)
    top = sorted(bb.bm(w))
    if args.format == "json":
        return json.dumps([str(b) for b in top], indent=2) + "\n"
    return _listing(args, [{"perm": str(b)} for b in top], [str(b) for b in top])


def cmd_cells(args) -> str:
    _require_n(args.n, 1)
    table = cells.two_sided_cells(args.n)
    shapes = sorted(table, reverse=True)
    if args.shape is not None:
        try:
            wanted = tuple(int(p) for p in args.shape.split(","))
        except ValueError:
            raise InputError(f"cannot parse shape {args.shape!r}") from None
        if wanted not in table:
            raise InputError(f"{args.shape!r} is not a partition of {args.n}")
        shapes = [wanted]
    records, lines = [], []
    for sh in shapes:
        members = sorted(table[sh])
        label = ",".join(map(str, sh))
        records.append({"shape": label, "elements": [str(w) for w in members]})
        lines.append(f"({label}): " + " ".join(str(w) for w in members))
    if args.format == "csv":
        flat = [{"shape": r["shape"], "perm": p} for r in records for p in r["elements"]]
        return _listing(args, flat, lines)
    return _listing(args, records, lines)


def cmd_phi(args) -> str:
    _require_n(args.n, 3)
    b = _perm(args.perm, args.n)
    if not bb.is_bigrassmannian(b):
        raise InputError(f"{b} is not bigrassmannian")
    c = bb.coord_of(b)
    record = {"perm": str(b), "phi": str(cells.phi(b)), "i": c.i, "j": c.j, "k": c.k, "m": m_degree(b)}
    line = f"{b}  ({c.i},{c.j},{c.k})  phi={record['phi']}  m={record['m']}"
    if args.format == "json":
        return json.dumps(record, indent=2) + "\n"
    return _listing(args, [record], [line])


def cmd_socle(args) -> str:
    _require_n(args.n, 3)
    w = _perm(args.perm, args.n)
    if args.parabolic is not None:
        ctx = SCategoryContext(_subset(args.parabolic, args.n))
        low = _perm(args.from_, args.n) if args.from_ else ctx.w0p
        try:
            entries = socle_coker_proper_standard(ctx, w, low)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        low = _perm(args.from_, args.n) if args.from_ else identity(args.n)
        try:
            entries = socle_coker_verma(low, w)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    entries = sorted(entries, key=lambda e: (e.m, e.x))
    records = [{"x": str(e.x), "m": e.m} for e in entries]
    return _listing(args, records, [f"{e.x}  m={e.m}" for e in entries])


def cmd_selftest(args) -> tuple[str, int]:
    if not 3 <= args.max_n <= 7:
        raise UsageError("--max-n must be between 3 and 7")
    lines: list[str] = []
    failures = run_selftest(args.max_n, out=lines.append)
    total = len(lines)
    lines.append(f"{total - failures}/{total} checks passed")
    return "\n".join(lines) + "\n", EXIT_OK if failures == 0 else EXIT_SELFTEST


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bggext", description="First extensions in type A category O and its S-subcategories.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, fmt=True):
        p.add_argument("--n", type=int, required=True, help="rank: the group is S_n")
        if fmt:
            p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.add_argument("--out", help="write to FILE instead of standard output")

    p = sub.add_parser("ext", help="table of dim ext^1(simple, target)")
    common(p)
    p.add_argument("--target", choices=TARGETS, required=True)
    p.add_argument("--parabolic", help='simple reflections of W^p, e.g. "1,2"')
    p.add_argument("--stabilizer", help="dot-stabilizer of a singular block")
    p.add_argument("--graded", action="store_true", help="report degree shifts")

    p = sub.add_parser("base", help="bigrassmannian permutations")
    common(p)
    p.add_argument("--coords", action="store_true", help="show (i,j,k) coordinates")

    p = sub.add_parser("bm", help="maximal bigrassmannians below a permutation")
    common(p)
    p.add_argument("--perm", required=True)

    p = sub.add_parser("cells", help="two-sided cells by Robinson-Schensted shape")
    common(p)
    p.add_argument("--shape", help='restrict to one shape, e.g. "2,1,1"')

    p = sub.add_parser("phi", help="penultimate-cell image and coordinates of a bigrassmannian")
    common(p)
    p.add_argument("--perm", required=True)

    p = sub.add_parser("socle", help="socle of a Verma (or proper standard) cokernel")
    common(p)
    p.add_argument("--perm", required=True, help="the larger index w")
    p.add_argument("--from", dest="from_", help="the smaller index v (default: dominant)")
    p.add_argument("--parabolic", help="work with proper standard objects of this S-subcategory")

    p = sub.add_parser("selftest", help="run the invariant battery")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--out")
    return parser


COMMANDS = {
    "ext": cmd_ext, "base": cmd_base, "bm": cmd_bm, "cells": cmd_cells,
    "phi": cmd_phi, "socle": cmd_socle,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # --help exits 0, parse errors exit EXIT_USAGE
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "selftest":
            text, code = cmd_selftest(args)
        else:
            text, code = COMMANDS[args.command](args), EXIT_OK
    except UsageError as exc:
        print(f"bggext: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"bggext: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
