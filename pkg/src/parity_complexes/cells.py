"""Cells (M, P) of a complex and the operations of its ω-category.

Every :class:`Cell` is validated on construction, so a composite, a
source or an attached cell that comes back from this module is a cell.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from . import _kernels
from ._kernels import bits
from .core import (
    MINUS,
    PLUS,
    Complex,
    Subset,
    _conflict_table,
    faces,
    pure_faces,
    well_formed_mask,
)
from .errors import CellError, PreconditionError, SoundnessAlarm

log = logging.getLogger(__name__)

INTERSECTION = "intersection"
UNION = "union"
DEFAULT_MAX_UNIVERSE = 16


def cell_violation_masks(C: Complex, m: int, p: int):
    """First violated cell condition for the mask pair, or None."""
    if not m:
        return "M is empty"
    if not p:
        return "P is empty"
    if not well_formed_mask(C, m):
        return "M is not well-formed"
    if not well_formed_mask(C, p):
        return "P is not well-formed"
    for name, s in (("M", m), ("P", p)):
        s_minus = C.face_mask(s, MINUS)
        s_plus = C.face_mask(s, PLUS)
        if m != (p | s_minus) & ~s_plus or p != (m | s_plus) & ~s_minus:
            return f"{name} does not move M to P"
    return None


def cell_violation(M: Subset, P: Subset):
    M._same(P)
    return cell_violation_masks(M.complex, M.mask, P.mask)


def empty_levels(M: Subset, P: Subset):
    """Dimensions below the top at which M or P has no elements."""
    C = M.complex
    top = max(M.dim, P.dim)
    return [k for k in range(top) if not (M.mask & C.grade(k)) or not (P.mask & C.grade(k))]


class Cell:
    __slots__ = ("M", "P")

    def __init__(self, M: Subset, P: Subset):
        problem = cell_violation(M, P)
        if problem is not None:
            raise CellError(problem)
        self.M = M
        self.P = P

    @classmethod
    def from_ids(cls, C: Complex, m_ids, p_ids):
        return cls(C.subset(m_ids), C.subset(p_ids))

    @property
    def complex(self):
        return self.M.complex

    @property
    def dim(self):
        return max(self.M.dim, self.P.dim)

    def __eq__(self, other):
        if not isinstance(other, Cell):
            return NotImplemented
        return self.M == other.M and self.P == other.P

    def __hash__(self):
        return hash((self.M.mask, self.P.mask))

    def __repr__(self):
        return f"Cell({self.M!r}, {self.P!r})"

    def key(self):
        return (self.M.mask, self.P.mask)

    def in_complex(self, other: Complex) -> Cell:
        return Cell(self.M.in_complex(other), self.P.in_complex(other))

    def reversed(self) -> Cell:
        """The matching cell of the reversed complex: (P, M)."""
        rev = self.complex.reverse()
        return Cell(self.P.in_complex(rev), self.M.in_complex(rev))


def new_cell(M: Subset, P: Subset) -> Cell | None:
    problem = cell_violation(M, P)
    if problem is not None:
        log.debug("new_cell: %s", problem)
        return None
    return Cell(M, P)


def cell_dim(c: Cell) -> int:
    n = c.dim
    C = c.complex
    if c.M.mask & C.grade(n) != c.P.mask & C.grade(n):
        raise SoundnessAlarm("top dimensions of M and P differ")
    return n


def _boundary(n, c: Cell, use_target):
    C = c.complex
    below = C.upto(n - 1)
    top = (c.P.mask if use_target else c.M.mask) & C.grade(n)
    m = (c.M.mask & below) | top
    p = (c.P.mask & below) | top
    problem = cell_violation_masks(C, m, p)
    if problem is not None:
        raise SoundnessAlarm(f"{'target' if use_target else 'source'}({n}) is not a cell: {problem}")
    return Cell(Subset(C, m), Subset(C, p))


def source(n: int, c: Cell) -> Cell:
    return _boundary(n, c, False)


def target(n: int, c: Cell) -> Cell:
    return _boundary(n, c, True)


def composable(n: int, a: Cell, b: Cell) -> bool:
    """True when a's n-target is b's n-source (a comes first)."""
    return target(n, a) == source(n, b)


def composite_disjointness(n: int, a: Cell, b: Cell):
    """Dimensions k > n where (M_k ∪ P_k)⁻ meets (N_k ∪ Q_k)⁺."""
    C = a.complex
    bad = []
    for k in range(n + 1, max(a.dim, b.dim) + 1):
        g = C.grade(k)
        left = C.face_mask((a.M.mask | a.P.mask) & g, MINUS)
        right = C.face_mask((b.M.mask | b.P.mask) & g, PLUS)
        if left & right:
            bad.append(k)
    return bad


def compose(n: int, a: Cell, b: Cell) -> Cell | None:
    """The n-composite of a followed by b.

    With a = (M, P) and b = (N, Q) this is (M ∪ (N \\ N_n), (P \\ P_n) ∪ Q).
    """
    if not composable(n, a, b):
        log.debug("compose: cells are not %d-composable", n)
        return None
    C = a.complex
    g = C.grade(n)
    m = a.M.mask | (b.M.mask & ~g)
    p = (a.P.mask & ~g) | b.P.mask
    problem = cell_violation_masks(C, m, p)
    if problem is not None:
        raise SoundnessAlarm(f"composite is not a cell: {problem}")
    bad = composite_disjointness(n, a, b)
    if bad:
        raise SoundnessAlarm(f"composite faces overlap in dimensions {bad}")
    return Cell(Subset(C, m), Subset(C, p))


def receptive_mask(C: Complex, s: int) -> bool:
    for i in range(len(C.ids)):
        xm, xp = C.minus[i], C.plus[i]
        if not (xm or xp):
            continue
        mm = C.face_mask(xm, MINUS)
        mp = C.face_mask(xm, PLUS)
        pm = C.face_mask(xp, MINUS)
        pp = C.face_mask(xp, PLUS)
        if (mp & pp) & ~s == 0 and not s & mm and s & pm:
            return False
        if (pm & mm) & ~s == 0 and not s & pp and s & mp:
            return False
    return True


def is_receptive(S: Subset) -> bool:
    return receptive_mask(S.complex, S.mask)


def _mu_pi(C: Complex, x, sign):
    key = ("mu" if sign == MINUS else "pi", x)
    if key not in C._cache:
        i = C.index[x]
        level = 1 << i
        out = level
        for _ in range(C.dims[i]):
            level = C.face_mask(level, sign) & ~C.face_mask(level, PLUS if sign == MINUS else MINUS)
            out |= level
        C._cache[key] = out
    return Subset(C, C._cache[key])


def mu(C: Complex, x) -> Subset:
    return _mu_pi(C, x, MINUS)


def pi(C: Complex, x) -> Subset:
    return _mu_pi(C, x, PLUS)


def atom(C: Complex, x) -> Cell | None:
    """⟨x⟩ = (μ(x), π(x)) when it is a cell."""
    return new_cell(mu(C, x), pi(C, x))


def is_relevant(C: Complex, x) -> bool:
    return atom(C, x) is not None


def relevance_equations_hold(C: Complex, x) -> bool:
    """Direct check of the level equations an atom must satisfy."""
    p = C.dims[C.index[x]]
    m_set, p_set = mu(C, x), pi(C, x)
    for n in range(1, p):
        mu_n = Subset(C, m_set.mask & C.grade(n))
        pi_n = Subset(C, p_set.mask & C.grade(n))
        if m_set.mask & C.grade(n - 1) != pure_faces(pi_n, MINUS).mask:
            return False
        if p_set.mask & C.grade(n - 1) != pure_faces(mu_n, PLUS).mask:
            return False
    return True


def atomic_element(c: Cell):
    """The x with c = ⟨x⟩, or None."""
    C = c.complex
    top = c.M.mask & C.grade(c.dim)
    if top.bit_count() != 1:
        return None
    x = C.ids[top.bit_length() - 1]
    if mu(C, x) == c.M and pi(C, x) == c.P:
        return x
    return None


def is_atomic(c: Cell) -> bool:
    return atomic_element(c) is not None


def rank(c: Cell, mode=INTERSECTION) -> int:
    if mode == INTERSECTION:
        return (c.M.mask & c.P.mask).bit_count()
    if mode == UNION:
        return (c.M.mask | c.P.mask).bit_count()
    raise ValueError(f"unknown rank mode {mode!r}")


def attach(X: Subset, c: Cell) -> tuple[Cell, Cell] | None:
    """Glue a well-formed (n+1)-dimensional X onto the n-cell c.

    Requires X^± ⊆ M_n.  Returns the cell (M^{n-1} ∪ Y, P^{n-1} ∪ Y) and
    the (n+1)-cell (M^{n-1} ∪ Y ∪ X, P ∪ X) with target c, where
    Y = (M_n ∪ X⁻) \\ X⁺.
    """
    C = c.complex
    n = cell_dim(c)
    if not X:
        log.debug("attach: X is empty")
        return None
    if X.mask & ~C.grade(n + 1):
        log.debug("attach: X is not contained in dimension %d", n + 1)
        return None
    if not well_formed_mask(C, X.mask):
        log.debug("attach: X is not well-formed")
        return None
    m_top = c.M.mask & C.grade(n)
    if not pure_faces(X, PLUS).mask & ~m_top == 0:
        log.debug("attach: X^± is not contained in M_n")
        return None
    if not receptive_mask(C, c.M.mask) or not receptive_mask(C, c.P.mask):
        log.debug("attach: the cell is not receptive")
        return None
    x_minus = C.face_mask(X.mask, MINUS)
    x_plus = C.face_mask(X.mask, PLUS)
    if x_minus & m_top:
        raise SoundnessAlarm("attach: X⁻ meets M_n")
    y = (m_top | x_minus) & ~x_plus
    below = C.upto(n - 1)
    part_b = ((c.M.mask & below) | y, (c.P.mask & below) | y)
    part_c = ((c.M.mask & below) | y | X.mask, c.P.mask | X.mask)
    out = []
    for m, p in (part_b, part_c):
        problem = cell_violation_masks(C, m, p)
        if problem is not None:
            raise SoundnessAlarm(f"attach produced a non-cell: {problem}")
        out.append(Cell(Subset(C, m), Subset(C, p)))
    return out[0], out[1]


def co_attach(X: Subset, c: Cell) -> tuple[Cell, Cell] | None:
    """:func:`attach` in the reversed complex: X^∓ ⊆ P_n, c becomes the source."""
    C = c.complex
    rev = C.reverse()
    out = attach(X.in_complex(rev), c.reversed())
    if out is None:
        return None
    return out[0].reversed(), out[1].reversed()


def enumerate_cells(C: Complex, max_universe=DEFAULT_MAX_UNIVERSE) -> list[Cell]:
    """Every cell of C, by exhaustive search over well-formed M.

    A cell's P is forced by M (P = (M ∪ M⁺) \\ M⁻), so the search runs
    over the well-formed subsets only.  Sorted by (M, P) masks.
    """
    if len(C) > max_universe:
        raise PreconditionError(
            f"complex has {len(C)} elements; enumeration is capped at {max_universe}"
        )
    pairs = _kernels.enumerate_cells(list(C.minus), list(C.plus), _conflict_table(C))
    return [Cell(Subset(C, m), Subset(C, p)) for m, p in pairs]


def enumerate_cells_bruteforce(C: Complex, max_universe=10) -> list[Cell]:
    """All (M, P) pairs over the power set, filtered by the cell conditions."""
    if len(C) > max_universe:
        raise PreconditionError(f"brute force is capped at {max_universe} elements")
    out = []
    n = 1 << len(C)
    for m in range(1, n):
        for p in range(1, n):
            if cell_violation_masks(C, m, p) is None:
                out.append(Cell(Subset(C, m), Subset(C, p)))
    return out
