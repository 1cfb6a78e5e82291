"""Excision of extremals: split a non-atomic cell into two smaller ones,
and iterate to a composition tree of atoms.

All choices (u, w, x, y) take the least id, so trees are reproducible.
Anything that would be impossible for a complex meeting the hypotheses
raises :class:`SoundnessAlarm` rather than returning a wrong answer.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from ._kernels import bits
from .cells import UNION, Cell, atom, atomic_element, cell_violation_masks, compose, mu, pi, rank
from .core import Complex, Subset, maximal_mask, minimal_mask, segment_mask, tight_mask
from .errors import PreconditionError, SoundnessAlarm

CHECK = "check"
ASSUME = "assume"
CERTIFICATE = "certificate"

X_CASE = "x"
Y_CASE = "y"


@dataclass(frozen=True)
class Leaf:
    element: str

    def __str__(self):
        return f"(leaf {self.element})"


@dataclass(frozen=True)
class Node:
    level: int
    early: "CompositionTree"
    late: "CompositionTree"

    def __str__(self):
        return f"({self.level} {self.early} {self.late})"


CompositionTree = Union[Leaf, Node]


@dataclass(frozen=True)
class ExcisionStep:
    """One split: ``compose(m, early, late)`` is the input cell.

    ``order`` records which factor of the formulas came first:
    ``"NQ"`` when (N, Q) is the early factor, ``"LR"`` otherwise.
    """

    m: int
    case: str
    pivot: str
    early: Cell
    late: Cell
    order: str


def untight_elements(C: Complex, elements=None):
    """Elements z among ``elements`` (default: all) with μ(z) not tight."""
    cache = C._cache.setdefault("mu_tight", {})
    out = []
    for z in C.ids if elements is None else elements:
        if z not in cache:
            cache[z] = tight_mask(C, mu(C, z).mask)
        if not cache[z]:
            out.append(z)
    return out


def _check_tightness(c: Cell, tightness, certificate):
    if tightness == ASSUME:
        return
    C = c.complex
    elements = [z for z in C.ids_of(c.M.mask | c.P.mask)]
    if tightness == CERTIFICATE:
        if certificate is None:
            raise PreconditionError("certificate mode needs a set of certified elements")
        elements = [z for z in elements if z not in certificate]
    elif tightness != CHECK:
        raise ValueError(f"unknown tightness mode {tightness!r}")
    bad = untight_elements(C, elements)
    if bad:
        raise PreconditionError(f"μ(z) is not tight for z in {bad}")


def _split_level(C, m_mask, p_mask, n, u, alt_step1):
    if alt_step1:
        for m in range(n - 1, -1, -1):
            common = m_mask & p_mask & C.grade(m + 1)
            if (m + 1 == n and common.bit_count() > 1) or (m + 1 < n and common):
                return m
        return None
    mu_u, pi_u = mu(C, u).mask, pi(C, u).mask
    for m in range(n - 1, -1, -1):
        g = C.grade(m + 1)
        if m_mask & g != mu_u & g or p_mask & g != pi_u & g:
            return m
    return None


def _least(C, mask):
    return (mask & -mask).bit_length() - 1 if mask else None


def excise(c: Cell, tightness=CHECK, certificate=None, alt_step1=False) -> ExcisionStep | None:
    """Split a non-atomic cell as an m-composite of two cells of smaller rank.

    Returns None for atoms.  ``tightness`` is ``"check"`` (verify that
    μ(z) is tight for every z in M ∪ P), ``"assume"`` or ``"certificate"``
    (skip the elements listed in ``certificate``).  ``alt_step1`` selects
    the split level by the highest dimension where M and P overlap more
    than an atom would.
    """
    C = c.complex
    n = c.dim
    M, P = c.M.mask, c.P.mask
    top = M & C.grade(n)
    u = next((C.ids[i] for i in bits(top) if atom(C, C.ids[i]) != c), None)
    if u is None:
        return None
    _check_tightness(c, tightness, certificate)

    m = _split_level(C, M, P, n, u, alt_step1)
    if m is None:
        raise SoundnessAlarm("no split level found for a non-atomic cell")
    level = C.grade(m + 1)
    m_level = M & level
    common = m_level & P
    if not common:
        raise SoundnessAlarm(f"M_{m + 1} ∩ P_{m + 1} is empty at the split level")
    if tightness != ASSUME and not segment_mask(C, mu(C, u).mask & level, m_level):
        raise SoundnessAlarm(f"μ({u})_{m + 1} is not a segment of M_{m + 1}")

    w = _least(C, common)
    reach = C.reach_within(m_level)
    below_w = sum(1 << i for i in bits(m_level) if (reach[i] >> w) & 1)
    x = _least(C, minimal_mask(C, m_level) & below_w)
    y = _least(C, maximal_mask(C, m_level) & reach[w])
    if x is None or y is None:
        raise SoundnessAlarm("no extremal element found; ◁ has a cycle")

    lower = C.upto(m - 1)
    upto_m = C.upto(m)
    if (common >> x) & 1:
        case, pivot = X_CASE, x
        xb, xm, xp = 1 << x, C.minus[x], C.plus[x]
        N = (M & upto_m) | xb
        Q = (P & lower) | (((M & C.grade(m)) | xp) & ~xm) | xb
        L = ((M & ~xb) | xp) & ~xm
        R = P & ~xb
    elif (common >> y) & 1:
        case, pivot = Y_CASE, y
        yb, ym, yp = 1 << y, C.minus[y], C.plus[y]
        N = M & ~yb
        Q = ((P & ~yb) | ym) & ~yp
        L = (M & lower) | (((P & C.grade(m)) | ym) & ~yp) | yb
        R = (P & upto_m) | yb
    else:
        raise SoundnessAlarm("neither extremal lies in M ∩ P at the split level")

    factors = []
    for name, a, b in (("(N, Q)", N, Q), ("(L, R)", L, R)):
        problem = cell_violation_masks(C, a, b)
        if problem is not None:
            raise SoundnessAlarm(f"excision factor {name} is not a cell: {problem}")
        factors.append(Cell(Subset(C, a), Subset(C, b)))
    nq, lr = factors

    orders = []
    for label, early, late in (("NQ", nq, lr), ("LR", lr, nq)):
        if compose(m, early, late) == c:
            orders.append((label, early, late))
    if len(orders) != 1:
        raise SoundnessAlarm(f"{len(orders)} composition orders reproduce the cell")
    order, early, late = orders[0]

    if early.dim <= m or late.dim <= m:
        raise SoundnessAlarm("an excision factor has dimension <= m")
    r = measure(c)
    if measure(early) >= r or measure(late) >= r:
        raise SoundnessAlarm("excision did not decrease the (union, intersection) rank")
    return ExcisionStep(m, case, C.ids[pivot], early, late, order)


def measure(c: Cell):
    """Termination measure for :func:`decompose`, compared lexicographically.

    Neither rank alone is enough: |M ∩ P| stays put when a factor keeps a
    whisker (012 *1 023 in the 3-simplex), and |M ∪ P| stays put when the
    late factor is a side-by-side pair (024 then 012 beside 234 in the
    4-simplex).
    """
    return rank(c, UNION), rank(c)


def decompose(c: Cell, tightness=CHECK, certificate=None, alt_step1=False) -> CompositionTree:
    x = atomic_element(c)
    if x is not None:
        return Leaf(x)
    step = excise(c, tightness, certificate, alt_step1)
    if step is None:
        raise SoundnessAlarm("excise found no split for a non-atomic cell")
    return Node(
        step.m,
        decompose(step.early, tightness, certificate, alt_step1),
        decompose(step.late, tightness, certificate, alt_step1),
    )


def evaluate(tree: CompositionTree, C: Complex) -> Cell | None:
    """Rebuild the cell a tree denotes, or None if a node does not compose."""
    if isinstance(tree, Leaf):
        if tree.element not in C:
            return None
        return atom(C, tree.element)
    early = evaluate(tree.early, C)
    late = evaluate(tree.late, C)
    if early is None or late is None:
        return None
    return compose(tree.level, early, late)


def leaves(tree: CompositionTree) -> list[str]:
    if isinstance(tree, Leaf):
        return [tree.element]
    return leaves(tree.early) + leaves(tree.late)


def depth(tree: CompositionTree) -> int:
    if isinstance(tree, Leaf):
        return 0
    return 1 + max(depth(tree.early), depth(tree.late))


_TOKEN = re.compile(r"\s*(\(|\)|[^\s()]+)")


def parse_tree(text: str) -> CompositionTree:
    """Read the nested text form, e.g. ``(0 (leaf 01) (leaf 12))``."""
    tokens = _TOKEN.findall(text)
    if "".join(tokens) != re.sub(r"\s+", "", text):
        raise ValueError("unreadable characters in tree text")
    pos = 0

    def take():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of tree text")
        tok = tokens[pos]
        pos += 1
        return tok

    def node():
        if take() != "(":
            raise ValueError(f"expected '(' at token {pos}")
        head = take()
        if head == "leaf":
            element = take()
            if element in "()":
                raise ValueError("leaf needs an element id")
            out = Leaf(element)
        elif head.isdigit():
            out = Node(int(head), node(), node())
        else:
            raise ValueError(f"expected 'leaf' or a level, got {head!r}")
        if take() != ")":
            raise ValueError(f"expected ')' at token {pos}")
        return out

    tree = node()
    if pos != len(tokens):
        raise ValueError("trailing tokens after tree")
    return tree
