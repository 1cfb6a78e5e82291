"""Command-line front end: ``parity <command> ...``.

Exit codes: 0 success, 1 usage, 2 unreadable input, 3 failed validation,
4 soundness alarm.  ``-`` reads stdin or writes stdout.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import axioms
from .cells import Cell, atom, enumerate_cells, enumerate_cells_bruteforce, is_relevant
from .document import (
    cell_to_data,
    parse_complex,
    read_tree,
    serialize_complex,
    serialize_reports,
    tree_to_data,
)
from .errors import CellError, DocumentError, PreconditionError, SoundnessAlarm, ValidationError
from .excision import ASSUME, CHECK, decompose, evaluate, excise
from .generators import FAMILIES, CapExceeded, generate

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_ALARM = 4

log = logging.getLogger("parity_complexes.cli")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for parse errors here
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e.strerror}") from None


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)


def split_ids(text):
    """``"0,01,12"`` or ``"{0, 01, 12}"`` -> ["0", "01", "12"]."""
    text = text.strip()
    if text[:1] in "{[(" and text[-1:] in "}])":
        text = text[1:-1]
    return [x.strip() for x in text.split(",") if x.strip()]


def _load(args, validate=True):
    return parse_complex(_read(args.file), validate=validate)


def _cell(C, pair):
    m_ids, p_ids = (split_ids(s) for s in pair)
    missing = [x for x in m_ids + p_ids if x not in C]
    if missing:
        raise DocumentError(f"unknown ids in --cell: {sorted(set(missing))}")
    return Cell.from_ids(C, m_ids, p_ids)


def _require_parity(C):
    for report in axioms.check(C, axioms.PARITY_AXIOMS):
        if not report.passed:
            raise ValidationError(report)


def _fmt_cell(c):
    return f"M = {c.M!r}  P = {c.P!r}"


# -- commands -----------------------------------------------------------------

def cmd_gen(args):
    _write(args.output, serialize_complex(generate(args.family, args.n, args.cap)))
    return EXIT_OK


def cmd_check(args):
    C = _load(args, validate=False)
    # accept the short aliases and the tags themselves (ax1, ax3b, ...)
    names = {**axioms.ALIASES, **{t.lower(): t for t in axioms.TAGS}}
    tags = []
    for name in args.axioms.split(","):
        name = name.strip().lower()
        if name not in names:
            raise UsageError(f"unknown axiom {name!r}; expected {','.join(axioms.ALIASES)}")
        tags.append(names[name])
    reports = axioms.check(C, tags)
    if args.json:
        _write("-", serialize_reports(reports))
    else:
        for r in reports:
            print(r)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VALIDATION


def cmd_atoms(args):
    C = _load(args)
    ids = [args.element] if args.element else list(C.ids)
    if args.element and args.element not in C:
        raise DocumentError(f"unknown element {args.element!r}")
    irrelevant = []
    for x in ids:
        if is_relevant(C, x):
            print(f"{x}: {_fmt_cell(atom(C, x))}")
        else:
            irrelevant.append(x)
            print(f"{x}: not relevant")
    if irrelevant and args.require_all:
        return EXIT_VALIDATION
    return EXIT_OK


def cmd_cells(args):
    C = _load(args)
    if args.brute_force:
        cells = enumerate_cells_bruteforce(C, args.max_universe)
    else:
        cells = enumerate_cells(C, args.max_universe)
    print(f"{len(cells)} cells")
    for c in cells:
        print(f"dim {c.dim}: {_fmt_cell(c)}")
    return EXIT_OK


def _tightness(args):
    return ASSUME if args.assume_tight else CHECK


def cmd_excise(args):
    C = _load(args)
    _require_parity(C)
    c = _cell(C, args.cell)
    step = excise(c, _tightness(args), alt_step1=args.alt_step1)
    if step is None:
        print("atomic: nothing to excise")
        return EXIT_OK
    if args.json:
        _write("-", json.dumps({
            "level": step.m, "case": step.case, "pivot": step.pivot, "order": step.order,
            "early": cell_to_data(step.early), "late": cell_to_data(step.late),
        }, indent=2, ensure_ascii=False) + "\n")
        return EXIT_OK
    print(f"level {step.m}")
    print(f"case {step.case}")
    print(f"pivot {step.pivot}")
    print(f"early {_fmt_cell(step.early)}")
    print(f"late {_fmt_cell(step.late)}")
    return EXIT_OK


def cmd_decompose(args):
    C = _load(args)
    _require_parity(C)
    c = _cell(C, args.cell)
    tree = decompose(c, _tightness(args), alt_step1=args.alt_step1)
    if args.verify and evaluate(tree, C) != c:
        raise SoundnessAlarm("the tree does not recompose to the input cell")
    if args.json:
        _write("-", json.dumps(tree_to_data(tree), indent=2, ensure_ascii=False) + "\n")
    else:
        print(tree)
    return EXIT_OK


def cmd_verify(args):
    C = _load(args)
    c = _cell(C, args.cell)
    tree = read_tree(_read(args.tree))
    got = evaluate(tree, C)
    if got is None:
        print("tree does not evaluate: a composition is undefined or a leaf is not an atom")
        return EXIT_VALIDATION
    if got != c:
        print(f"tree evaluates to {_fmt_cell(got)}, not the given cell")
        return EXIT_VALIDATION
    print("ok")
    return EXIT_OK


def _dot_quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def diagram_dot(C, c=None) -> str:
    """DOT for the 1-skeleton; 2-elements become labelled clusters."""
    m = c.M.mask if c else 0
    p = c.P.mask if c else 0

    def style(i):
        if not c:
            return ""
        b = 1 << i
        if m & p & b:
            return ", penwidth=2"
        if m & b:
            return ", color=blue"
        if p & b:
            return ", color=red"
        return ", color=gray"

    lines = ["digraph complex {", "  rankdir=LR;"]
    for i, x in enumerate(C.ids):
        if C.dims[i] == 0:
            lines.append(f"  {_dot_quote(x)} [shape=point, xlabel={_dot_quote(x)}{style(i)}];")
    for i, x in enumerate(C.ids):
        if C.dims[i] != 1:
            continue
        e = C[x]
        for a in sorted(e.minus):
            for b in sorted(e.plus):
                lines.append(f"  {_dot_quote(a)} -> {_dot_quote(b)} [label={_dot_quote(x)}{style(i)}];")
    k = 0
    for i, x in enumerate(C.ids):
        if C.dims[i] != 2:
            continue
        e = C[x]
        label = f"{x}: {', '.join(sorted(e.minus))} => {', '.join(sorted(e.plus))}"
        lines.append(f"  subgraph cluster_{k} {{ label={_dot_quote(label)}{style(i)};")
        lines.append(f"    {_dot_quote('cell ' + x)} [shape=plaintext, label={_dot_quote(x)}];")
        lines.append("  }")
        k += 1
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_diagram(args):
    C = _load(args)
    c = _cell(C, args.cell) if args.cell else None
    _write(args.output, diagram_dot(C, c))
    return EXIT_OK


# -- wiring -------------------------------------------------------------------

def build_parser():
    parser = _Parser(prog="parity", description="Parity complexes: checks, cells and excision.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_file(name, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="complex document, or - for stdin")
        return p

    def with_cell(p, required=True):
        p.add_argument("--cell", nargs=2, metavar=("M-IDS", "P-IDS"), required=required,
                       help="comma-separated ids, optionally in braces")

    p = sub.add_parser("gen", help="emit a generated complex")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--cap", type=int, default=None, help="override the size cap")
    p.set_defaults(func=cmd_gen)

    p = with_file("check", "run axiom checkers")
    p.add_argument("--axioms", default=",".join(axioms.ALIASES))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = with_file("atoms", "list relevant elements and their atoms")
    p.add_argument("--element")
    p.add_argument("--require-all", action="store_true")
    p.set_defaults(func=cmd_atoms)

    p = with_file("cells", "enumerate all cells")
    p.add_argument("--max-universe", type=int, default=16)
    p.add_argument("--brute-force", action="store_true", help="search all (M, P) pairs")
    p.set_defaults(func=cmd_cells)

    for name, func, help in (("excise", cmd_excise, "one excision step"),
                             ("decompose", cmd_decompose, "composition tree of atoms")):
        p = with_file(name, help)
        with_cell(p)
        p.add_argument("--assume-tight", action="store_true")
        p.add_argument("--alt-step1", action="store_true")
        p.add_argument("--json", action="store_true")
        if name == "decompose":
            p.add_argument("--verify", action="store_true")
        p.set_defaults(func=func)

    p = with_file("verify", "evaluate a tree and compare with a cell")
    p.add_argument("--tree", required=True)
    with_cell(p)
    p.set_defaults(func=cmd_verify)

    p = with_file("diagram", "DOT drawing of the low-dimensional part")
    with_cell(p, required=False)
    p.add_argument("--format", choices=["dot"], default="dot")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_diagram)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DocumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as e:
        print(f"validation failed:\n{e.report}", file=sys.stderr)
        return EXIT_VALIDATION
    except (CellError, PreconditionError) as e:
        print(f"validation failed: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except SoundnessAlarm as e:
        print(f"soundness alarm: {e}", file=sys.stderr)
        return EXIT_ALARM


if __name__ == "__main__":
    sys.exit(main())
