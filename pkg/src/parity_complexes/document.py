"""JSON documents for complexes, cells, reports and trees.

A complex document looks like::

    {"format": "parity-complex", "version": 1,
     "elements": [{"id": "0", "dim": 0, "minus": [], "plus": []}, ...]}

:func:`serialize_complex` writes the canonical form: elements sorted by
(dim, id), face lists sorted, two-space indent, trailing newline.  So
serialize(parse(text)) is byte-identical for canonical input.
"""

from __future__ import annotations

import json

from .axioms import AxiomReport, check_pre_parity
from .cells import Cell
from .core import Complex, Element, Subset
from .errors import ComplexError, DocumentError, ValidationError
from .excision import CompositionTree, Leaf, Node, parse_tree

FORMAT = "parity-complex"
VERSION = 1


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _load_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e.msg}", line=e.lineno, column=e.colno) from None


def _id_list(value, field):
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise DocumentError("expected a list of string ids", field=field)
    if len(set(value)) != len(value):
        raise DocumentError("repeated id in face list", field=field)
    return value


def complex_from_data(data, validate=True) -> Complex:
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    if data.get("format", FORMAT) != FORMAT:
        raise DocumentError(f"unknown format {data.get('format')!r}", field="format")
    if data.get("version", VERSION) != VERSION:
        raise DocumentError(f"unsupported version {data.get('version')!r}", field="version")
    records = data.get("elements")
    if not isinstance(records, list):
        raise DocumentError("missing element list", field="elements")

    elements = []
    for k, rec in enumerate(records):
        where = f"elements[{k}]"
        if not isinstance(rec, dict):
            raise DocumentError("element record must be an object", field=where)
        for key in ("id", "dim"):
            if key not in rec:
                raise DocumentError(f"missing {key!r}", field=where)
        x, d = rec["id"], rec["dim"]
        if not isinstance(x, str):
            raise DocumentError("id must be a string", field=f"{where}.id")
        if not isinstance(d, int) or isinstance(d, bool) or d < 0:
            raise DocumentError("dim must be a natural number", field=f"{where}.dim")
        minus = _id_list(rec.get("minus", []), f"{where}.minus")
        plus = _id_list(rec.get("plus", []), f"{where}.plus")
        elements.append(Element(x, d, minus, plus))

    known = set()
    for k, e in enumerate(elements):
        if e.id in known:
            raise DocumentError(f"duplicate id {e.id!r}", field=f"elements[{k}].id")
        known.add(e.id)
    for k, e in enumerate(elements):
        for sign, ids in (("minus", e.minus), ("plus", e.plus)):
            for y in sorted(ids):
                if y not in known:
                    raise DocumentError(
                        f"element {e.id!r} refers to missing id {y!r}", field=f"elements[{k}].{sign}"
                    )
    try:
        C = Complex(elements)
    except ComplexError as e:
        raise DocumentError(str(e)) from None
    if validate:
        report = check_pre_parity(C)
        if not report.passed:
            raise ValidationError(report)
    return C


def parse_complex(text: str, validate=True) -> Complex:
    """Read a complex document; with ``validate`` the pre-parity check must pass."""
    return complex_from_data(_load_json(text), validate)


def complex_to_data(C: Complex):
    return {
        "format": FORMAT,
        "version": VERSION,
        "elements": [
            {"id": e.id, "dim": e.dim, "minus": sorted(e.minus), "plus": sorted(e.plus)}
            for e in sorted(C, key=lambda e: (e.dim, e.id))
        ],
    }


def serialize_complex(C: Complex) -> str:
    return _dumps(complex_to_data(C))


def subset_to_data(S: Subset):
    return list(S)


def cell_to_data(c: Cell):
    return {"M": list(c.M), "P": list(c.P), "dim": c.dim}


def cell_from_data(C: Complex, data) -> Cell:
    if not isinstance(data, dict) or "M" not in data or "P" not in data:
        raise DocumentError("cell must be an object with M and P")
    m = _id_list(data["M"], "M")
    p = _id_list(data["P"], "P")
    for field, ids in (("M", m), ("P", p)):
        missing = [x for x in ids if x not in C]
        if missing:
            raise DocumentError(f"unknown ids {missing}", field=field)
    return Cell.from_ids(C, m, p)


def serialize_cell(c: Cell) -> str:
    return _dumps(cell_to_data(c))


def parse_cell(C: Complex, text: str) -> Cell:
    return cell_from_data(C, _load_json(text))


def serialize_reports(reports) -> str:
    return _dumps([r.to_dict() for r in reports])


def parse_reports(text: str) -> list[AxiomReport]:
    data = _load_json(text)
    if not isinstance(data, list):
        raise DocumentError("expected a list of reports")
    try:
        return [AxiomReport.from_dict(d) for d in data]
    except (KeyError, TypeError, ValueError) as e:
        raise DocumentError(f"bad report: {e}") from None


def tree_to_data(t: CompositionTree):
    if isinstance(t, Leaf):
        return {"leaf": t.element}
    return {"level": t.level, "early": tree_to_data(t.early), "late": tree_to_data(t.late)}


def tree_from_data(data) -> CompositionTree:
    if isinstance(data, dict) and isinstance(data.get("leaf"), str):
        return Leaf(data["leaf"])
    if isinstance(data, dict) and {"level", "early", "late"} <= data.keys():
        if not isinstance(data["level"], int) or data["level"] < 0:
            raise DocumentError("tree level must be a natural number", field="level")
        return Node(data["level"], tree_from_data(data["early"]), tree_from_data(data["late"]))
    raise DocumentError("tree node must be a leaf or a level with early and late")


def read_tree(text: str) -> CompositionTree:
    """A tree in either the nested text form or JSON."""
    stripped = text.strip()
    if stripped.startswith("("):
        try:
            return parse_tree(stripped)
        except ValueError as e:
            raise DocumentError(f"bad tree text: {e}") from None
    return tree_from_data(_load_json(text))

