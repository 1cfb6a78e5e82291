"""Checkers for the pre-parity conditions, Axioms 1-3 and (R1), (R2), (AS).

Every checker is total: it runs on any structurally valid complex and
returns an :class:`AxiomReport`.  A failing report carries witnesses that
:func:`replay` can re-verify from the definitions alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._kernels import bits
from .cells import mu, pi
from .core import MINUS, PLUS, Complex, lt, well_formed_mask

TAGS = ("PRE", "AX1", "AX2", "AX3A", "AX3B", "R1", "R2", "AS")

# command-line spellings
ALIASES = {
    "pre": "PRE",
    "1": "AX1",
    "2": "AX2",
    "3a": "AX3A",
    "3b": "AX3B",
    "r1": "R1",
    "r2": "R2",
    "as": "AS",
}


@dataclass(frozen=True)
class Witness:
    """Offending elements and both sides of the violated condition.

    ``lhs``/``rhs`` are the evaluated sides; for emptiness conditions
    ``rhs`` is empty and ``lhs`` is the non-empty set.
    """

    elements: tuple
    condition: str
    lhs: frozenset = frozenset()
    rhs: frozenset = frozenset()

    def to_dict(self):
        return {
            "elements": list(self.elements),
            "condition": self.condition,
            "lhs": sorted(self.lhs),
            "rhs": sorted(self.rhs),
        }

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(d["elements"]), d["condition"], frozenset(d["lhs"]), frozenset(d["rhs"]))


@dataclass(frozen=True)
class AxiomReport:
    tag: str
    passed: bool
    witnesses: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if not self.passed and not self.witnesses:
            raise ValueError("a failing report needs witnesses")

    def to_dict(self):
        return {
            "axiom": self.tag,
            "verdict": "pass" if self.passed else "fail",
            "witnesses": [w.to_dict() for w in self.witnesses],
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d["axiom"], d["verdict"] == "pass", tuple(Witness.from_dict(w) for w in d["witnesses"]))

    def __str__(self):
        head = f"{self.tag}: {'pass' if self.passed else 'FAIL'}"
        lines = [head]
        for w in self.witnesses:
            els = ", ".join(repr(e) for e in w.elements)
            lines.append(
                f"  [{w.condition}] at ({els}): lhs={sorted(w.lhs)} rhs={sorted(w.rhs)}"
            )
        return "\n".join(lines)


def _report(tag, witnesses):
    return AxiomReport(tag, not witnesses, tuple(witnesses))


def _ids(C, mask):
    return frozenset(C.ids_of(mask))


# -- the nine pre-parity conditions, one predicate per condition --------------

def _pre_conditions(C: Complex, i: int):
    """(name, lhs, rhs) for every failing pre-parity condition at i."""
    d = C.dims[i]
    out = []
    for name, table in (("plus", C.plus), ("minus", C.minus)):
        wrong = sum(1 << j for j in bits(table[i]) if C.dims[j] + 1 != d)
        if wrong:
            out.append((f"{name}_dim", _ids(C, wrong), frozenset()))
    # plus_Finite / minus_Finite hold by representation
    for name, table in (("plus", C.plus), ("minus", C.minus)):
        if d > 0 and not table[i]:
            out.append((f"{name}_inhabited", frozenset(), frozenset()))
        if d == 0 and table[i]:
            out.append((f"{name}_zero", _ids(C, table[i]), frozenset()))
    if C.plus[i] & C.minus[i]:
        out.append(("disjoint", _ids(C, C.plus[i]), _ids(C, C.minus[i])))
    return out


def check_pre_parity(C: Complex) -> AxiomReport:
    witnesses = []
    for i, x in enumerate(C.ids):
        for name, lhs, rhs in _pre_conditions(C, i):
            witnesses.append(Witness((x,), name, lhs, rhs))
    return _report("PRE", witnesses)


def _second_faces(C, i):
    xm, xp = C.minus[i], C.plus[i]
    return {
        "--": C.face_mask(xm, MINUS),
        "-+": C.face_mask(xm, PLUS),
        "+-": C.face_mask(xp, MINUS),
        "++": C.face_mask(xp, PLUS),
    }


def _axiom1_sides(C, i):
    f = _second_faces(C, i)
    return f["++"] | f["--"], f["-+"] | f["+-"]


def check_axiom1(C: Complex) -> AxiomReport:
    witnesses = []
    for i, x in enumerate(C.ids):
        lhs, rhs = _axiom1_sides(C, i)
        if lhs != rhs:
            witnesses.append(Witness((x,), "x++ ∪ x-- = x-+ ∪ x+-", _ids(C, lhs), _ids(C, rhs)))
    return _report("AX1", witnesses)


def check_axiom2(C: Complex) -> AxiomReport:
    witnesses = []
    for i, x in enumerate(C.ids):
        for sign, table in ((MINUS, C.minus), (PLUS, C.plus)):
            if not well_formed_mask(C, table[i]):
                witnesses.append(
                    Witness((x,), f"x{sign} well-formed", _ids(C, table[i]), frozenset())
                )
    return _report("AX2", witnesses)


def check_axiom3a(C: Complex) -> AxiomReport:
    reach = C.triangle_reach
    witnesses = []
    for i, x in enumerate(C.ids):
        for j in bits(reach[i]):
            if j > i and (reach[j] >> i) & 1:
                y = C.ids[j]
                witnesses.append(
                    Witness((x, y), "x ◁ y ◁ x implies x = y", frozenset({x}), frozenset({y}))
                )
    return _report("AX3A", witnesses)


def check_axiom3b(C: Complex) -> AxiomReport:
    reach = C.triangle_reach
    witnesses = []
    for k, z in enumerate(C.ids):
        zm, zp = C.minus[k], C.plus[k]
        # a path from z⁺ into z⁻, or from z⁻ into z⁺
        for start, end, label in ((zp, zm, "x ∈ z+, y ∈ z-"), (zm, zp, "x ∈ z-, y ∈ z+")):
            for i in bits(start):
                for j in bits(reach[i] & end):
                    witnesses.append(
                        Witness(
                            (C.ids[i], C.ids[j], z),
                            f"x ◁ y forbids {label}",
                            _ids(C, zm),
                            _ids(C, zp),
                        )
                    )
    return _report("AX3B", witnesses)


def _r1_sides(C, x):
    m, p = mu(C, x).mask, pi(C, x).mask
    mm, mp = C.face_mask(m, MINUS), C.face_mask(m, PLUS)
    pm, pp = C.face_mask(p, MINUS), C.face_mask(p, PLUS)
    return mm, mp, pm, pp


def check_R1(C: Complex) -> AxiomReport:
    witnesses = []
    for x in C.ids:
        mm, mp, pm, pp = _r1_sides(C, x)
        if mm | pp != mp | pm:
            witnesses.append(Witness((x,), "μ- ∪ π+ = μ+ ∪ π-", _ids(C, mm | pp), _ids(C, mp | pm)))
        if mm & pp:
            witnesses.append(Witness((x,), "μ- ∩ π+ = ∅", _ids(C, mm & pp)))
        if mp & pm:
            witnesses.append(Witness((x,), "μ+ ∩ π- = ∅", _ids(C, mp & pm)))
    return _report("R1", witnesses)


def check_R2(C: Complex) -> AxiomReport:
    witnesses = []
    for x in C.ids:
        for name, s in (("μ", mu(C, x)), ("π", pi(C, x))):
            if not well_formed_mask(C, s.mask):
                witnesses.append(Witness((x,), f"{name}(x) well-formed", s.members))
    return _report("R2", witnesses)


def check_AS(C: Complex) -> AxiomReport:
    reach = C.prec_reach
    witnesses = []
    for i, x in enumerate(C.ids):
        for j in bits(reach[i]):
            if j > i and (reach[j] >> i) & 1:
                y = C.ids[j]
                witnesses.append(
                    Witness((x, y), "x ◀ y ◀ x implies x = y", frozenset({x}), frozenset({y}))
                )
    return _report("AS", witnesses)


CHECKERS = {
    "PRE": check_pre_parity,
    "AX1": check_axiom1,
    "AX2": check_axiom2,
    "AX3A": check_axiom3a,
    "AX3B": check_axiom3b,
    "R1": check_R1,
    "R2": check_R2,
    "AS": check_AS,
}

PARITY_AXIOMS = ("PRE", "AX1", "AX2", "AX3A", "AX3B")


def check(C: Complex, tags=TAGS) -> list[AxiomReport]:
    return [CHECKERS[t](C) for t in tags]


def is_parity_complex(C: Complex, include_3b=True) -> bool:
    tags = PARITY_AXIOMS if include_3b else PARITY_AXIOMS[:-1]
    return all(r.passed for r in check(C, tags))


def prec_is_total(C: Complex) -> bool:
    reach = C.prec_reach
    full = C.full
    return all((reach[i] | _reached_by(reach, i)) == full for i in range(len(C)))


def _reached_by(reach, i):
    return sum(1 << j for j in range(len(reach)) if (reach[j] >> i) & 1)


def replay(C: Complex, tag: str, w: Witness) -> bool:
    """Re-derive the violation from the definitions; True if it is genuine."""
    x = w.elements[0]
    if x not in C:
        return False
    e = C[x]
    if tag == "PRE":
        d = e.dim
        if w.condition in ("plus_dim", "minus_dim"):
            faces = e.plus if w.condition == "plus_dim" else e.minus
            return any(C[y].dim + 1 != d for y in faces)
        if w.condition == "plus_inhabited":
            return d > 0 and not e.plus
        if w.condition == "minus_inhabited":
            return d > 0 and not e.minus
        if w.condition == "plus_zero":
            return d == 0 and bool(e.plus)
        if w.condition == "minus_zero":
            return d == 0 and bool(e.minus)
        if w.condition == "disjoint":
            return bool(e.plus & e.minus)
        return False
    if tag == "AX1":
        def second(first, sign):
            return set().union(*(C[y].faces(sign) for y in first)) if first else set()
        lhs = second(e.plus, PLUS) | second(e.minus, MINUS)
        rhs = second(e.minus, PLUS) | second(e.plus, MINUS)
        return lhs != rhs and lhs == set(w.lhs) and rhs == set(w.rhs)
    if tag == "AX2":
        faces = e.minus if w.condition.startswith("x-") else e.plus
        return not _well_formed_by_definition(C, faces)
    if tag in ("AX3A", "AS"):
        y = w.elements[1]
        related = _path_exists if tag == "AX3A" else _prec_path_exists
        return x != y and related(C, x, y) and related(C, y, x)
    if tag == "AX3B":
        a, b, z = w.elements
        if not _path_exists(C, a, b):
            return False
        zp, zm = C[z].plus, C[z].minus
        return (a in zp and b in zm) or (a in zm and b in zp)
    if tag == "R1":
        m = _mu_pi_by_definition(C, x, MINUS)
        p = _mu_pi_by_definition(C, x, PLUS)

        def fs(S, sign):
            return set().union(*(C[y].faces(sign) for y in S)) if S else set()

        mm, mp, pm, pp = fs(m, MINUS), fs(m, PLUS), fs(p, MINUS), fs(p, PLUS)
        if w.condition.startswith("μ- ∪"):
            return mm | pp != mp | pm
        if w.condition.startswith("μ- ∩"):
            return bool(mm & pp)
        return bool(mp & pm)
    if tag == "R2":
        S = _mu_pi_by_definition(C, x, MINUS if w.condition.startswith("μ") else PLUS)
        return not _well_formed_by_definition(C, S)
    raise ValueError(f"unknown axiom tag {tag!r}")


def _well_formed_by_definition(C, ids):
    ids = list(ids)
    if sum(1 for y in ids if C[y].dim == 0) > 1:
        return False
    for a in ids:
        for b in ids:
            if a < b and C[a].dim == C[b].dim and C[a].dim > 0:
                if C[a].minus & C[b].minus or C[a].plus & C[b].plus:
                    return False
    return True


def _path_exists(C, a, b):
    # plain BFS over <, independent of the cached closure
    seen, todo = {a}, [a]
    while todo:
        u = todo.pop()
        if u == b:
            return True
        for v in C.ids:
            if v not in seen and lt(C, u, v):
                seen.add(v)
                todo.append(v)
    return False


def _prec_path_exists(C, a, b):
    # y follows x when y ∈ x+ or x ∈ y-
    seen, todo = {a}, [a]
    while todo:
        u = todo.pop()
        if u == b:
            return True
        for v in C.ids:
            if v not in seen and (v in C[u].plus or u in C[v].minus):
                seen.add(v)
                todo.append(v)
    return False


def _mu_pi_by_definition(C, x, sign):
    other = PLUS if sign == MINUS else MINUS
    level, out = {x}, {x}
    while level:
        ours = set().union(*(C[y].faces(sign) for y in level))
        theirs = set().union(*(C[y].faces(other) for y in level))
        level = ours - theirs
        out |= level
    return out
