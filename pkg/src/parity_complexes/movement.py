"""Movement: when a set S moves M to P, and the constructions on movements.

None of this depends on the parity axioms, only on :mod:`core`.
Operations that can fail return ``None``; the failing hypothesis is
logged at DEBUG level on the ``parity_complexes.movement`` logger.
Dual constructions go through :func:`core.reverse`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .core import MINUS, PLUS, Subset, faces, perp, pure_faces
from .errors import SoundnessAlarm

log = logging.getLogger(__name__)


def moves(S: Subset, M: Subset, P: Subset) -> bool:
    S._same(M)
    S._same(P)
    C = S.complex
    s_minus = C.face_mask(S.mask, MINUS)
    s_plus = C.face_mask(S.mask, PLUS)
    return (
        M.mask == (P.mask | s_minus) & ~s_plus
        and P.mask == (M.mask | s_plus) & ~s_minus
    )


@dataclass(frozen=True)
class Movement:
    """S moves M to P.  Construction checks both defining equalities."""

    S: Subset
    M: Subset
    P: Subset

    def __post_init__(self):
        if not moves(self.S, self.M, self.P):
            raise ValueError(f"{self.S!r} does not move {self.M!r} to {self.P!r}")

    def reversed(self):
        """The same movement read in the reversed complex, P to M."""
        rev = self.S.complex.reverse()
        return Movement(self.S.in_complex(rev), self.P.in_complex(rev), self.M.in_complex(rev))


def advance_failures(S: Subset, M: Subset):
    """Names of the failing conjuncts of the existence criterion for P."""
    failed = []
    if not pure_faces(S, MINUS) <= M:
        failed.append("S^∓ ⊆ M")
    if not M.isdisjoint(faces(S, PLUS)):
        failed.append("M ∩ S⁺ = ∅")
    return failed


def advance(S: Subset, M: Subset) -> Subset | None:
    """The unique P with S moving M to P, if there is one."""
    failed = advance_failures(S, M)
    if failed:
        log.debug("advance: criterion fails: %s", ", ".join(failed))
        return None
    P = (M | faces(S, PLUS)) - faces(S, MINUS)
    if not moves(S, M, P):
        raise AssertionError("advance produced a non-movement")
    return P


def retreat(S: Subset, P: Subset) -> Subset | None:
    """The unique M with S moving M to P, if there is one."""
    C = S.complex
    rev = C.reverse()
    M = advance(S.in_complex(rev), P.in_complex(rev))
    return None if M is None else M.in_complex(C)


def union_movement(first: Movement, second: Movement) -> Movement | None:
    """Paste M -S-> P and P -T-> Q into M -(S ∪ T)-> Q."""
    if first.P != second.M:
        log.debug("union_movement: middle states differ")
        return None
    if not faces(first.S, MINUS).isdisjoint(faces(second.S, PLUS)):
        log.debug("union_movement: S⁻ ∩ T⁺ ≠ ∅")
        return None
    S = first.S | second.S
    if not moves(S, first.M, second.P):
        raise SoundnessAlarm("pasted movement does not verify")
    return Movement(S, first.M, second.P)


def split_movement(T: Subset, Z: Subset, M: Subset, P: Subset) -> Subset | None:
    """The middle state N with M -T-> N -Z-> P, given M -(T ∪ Z)-> P."""
    if not moves(T | Z, M, P):
        log.debug("split_movement: T ∪ Z does not move M to P")
        return None
    if not pure_faces(Z, PLUS) <= P:
        log.debug("split_movement: Z^± ⊄ P")
        return None
    if not perp(T, Z):
        log.debug("split_movement: T and Z are not perpendicular")
        return None
    N = advance(T, M)
    if N is None or not moves(Z, N, P):
        log.debug("split_movement: produced movements do not verify")
        return None
    return N


def split_movement_dual(T: Subset, Z: Subset, M: Subset, P: Subset) -> Subset | None:
    """Mirror of :func:`split_movement`: requires T^∓ ⊆ M instead."""
    C = T.complex
    rev = C.reverse()
    N = split_movement(Z.in_complex(rev), T.in_complex(rev), P.in_complex(rev), M.in_complex(rev))
    return None if N is None else N.in_complex(C)


def adjust_failures(m: Movement, X: Subset, Y: Subset):
    S = m.S
    failed = []
    if not X <= m.M:
        failed.append("X ⊆ M")
    if not pure_faces(S, MINUS).isdisjoint(X):
        failed.append("S^∓ ∩ X = ∅")
    if not Y.isdisjoint(faces(S, PLUS)):
        failed.append("Y ∩ S⁺ = ∅")
    if not Y.isdisjoint(faces(S, MINUS)):
        failed.append("Y ∩ S⁻ = ∅")
    return failed


def adjust_movement(m: Movement, X: Subset, Y: Subset) -> Movement | None:
    """Remove X from and add Y to both ends of a movement."""
    failed = adjust_failures(m, X, Y)
    if failed:
        log.debug("adjust_movement: hypotheses fail: %s", ", ".join(failed))
        return None
    return Movement(m.S, (m.M | Y) - X, (m.P | Y) - X)


def adjust_movement_dual(m: Movement, X: Subset, Y: Subset) -> Movement | None:
    """:func:`adjust_movement` applied in the reversed complex (X ⊆ P)."""
    C = m.S.complex
    rev = C.reverse()
    out = adjust_movement(m.reversed(), X.in_complex(rev), Y.in_complex(rev))
    if out is None:
        return None
    return Movement(out.S.in_complex(C), out.P.in_complex(C), out.M.in_complex(C))
