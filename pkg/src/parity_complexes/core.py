"""Elements, complexes, graded subsets and the orderings on them.

Subsets are stored as integer bitmasks over the complex's elements,
indexed in ``(dim, id)`` order, so set algebra is plain integer algebra.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import _kernels
from ._kernels import bits
from .errors import ComplexError

MINUS = "-"
PLUS = "+"
SIGNS = (MINUS, PLUS)


def flip(sign):
    return PLUS if sign == MINUS else MINUS


@dataclass(frozen=True)
class Element:
    id: str
    dim: int
    minus: frozenset = frozenset()
    plus: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "minus", frozenset(self.minus))
        object.__setattr__(self, "plus", frozenset(self.plus))

    def faces(self, sign):
        return self.minus if sign == MINUS else self.plus


class SegmentWarning(UserWarning):
    pass


class Complex:
    """A finite graded set with face maps.

    Construction only checks structure: ids are unique and every face id
    names an element.  The pre-parity conditions and the axioms are left to
    :mod:`parity_complexes.axioms` so that defective complexes can still be
    built and inspected.
    """

    def __init__(self, elements: Iterable[Element]):
        elements = list(elements)
        by_id = {}
        for e in elements:
            if not isinstance(e.id, str):
                raise ComplexError(f"element id must be a string, got {e.id!r}")
            if not isinstance(e.dim, int) or isinstance(e.dim, bool) or e.dim < 0:
                raise ComplexError(f"element {e.id!r}: dim must be a natural number")
            if e.id in by_id:
                raise ComplexError(f"duplicate element id {e.id!r}")
            by_id[e.id] = e
        for e in elements:
            for y in sorted(e.minus | e.plus):
                if y not in by_id:
                    raise ComplexError(f"element {e.id!r} refers to unknown face {y!r}")

        ordered = sorted(elements, key=lambda e: (e.dim, e.id))
        self._elements = {e.id: e for e in ordered}
        self.ids = tuple(e.id for e in ordered)
        self.index = {x: i for i, x in enumerate(self.ids)}
        self.dims = tuple(e.dim for e in ordered)
        self.minus = tuple(self._mask(e.minus) for e in ordered)
        self.plus = tuple(self._mask(e.plus) for e in ordered)
        self.full = (1 << len(ordered)) - 1
        top = max(self.dims, default=-1)
        self.grades = [0] * (top + 1)
        for i, d in enumerate(self.dims):
            self.grades[d] |= 1 << i
        self._cache = {}

    def _mask(self, ids):
        m = 0
        for x in ids:
            m |= 1 << self.index[x]
        return m

    # container protocol
    def __len__(self):
        return len(self.ids)

    def __iter__(self) -> Iterator[Element]:
        return iter(self._elements.values())

    def __contains__(self, x):
        return x in self._elements

    def __getitem__(self, x) -> Element:
        return self._elements[x]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Complex):
            return NotImplemented
        return self._elements == other._elements

    def __hash__(self):
        return hash(self.ids)

    def __repr__(self):
        return f"<Complex with {len(self)} elements, dim {self.dim}>"

    @property
    def dim(self):
        return len(self.grades) - 1

    def elements(self):
        return list(self._elements.values())

    # subsets
    def subset(self, ids=()) -> Subset:
        if isinstance(ids, str):
            raise TypeError("subset() takes an iterable of ids, not a string")
        try:
            return Subset(self, self._mask(ids))
        except KeyError as exc:
            raise ComplexError(f"unknown element id {exc.args[0]!r}") from None

    def all(self) -> Subset:
        return Subset(self, self.full)

    def empty(self) -> Subset:
        return Subset(self, 0)

    def grade(self, n):
        return self.grades[n] if 0 <= n < len(self.grades) else 0

    def upto(self, n):
        """Mask of all elements of dimension <= n."""
        m = 0
        for k in range(min(n, len(self.grades) - 1) + 1):
            m |= self.grades[k]
        return m

    def bit(self, x):
        return 1 << self.index[x]

    def face_mask(self, mask, sign):
        table = self.minus if sign == MINUS else self.plus
        out = 0
        for i in bits(mask):
            out |= table[i]
        return out

    def ids_of(self, mask):
        return [self.ids[i] for i in bits(mask)]

    # cached relations
    def _cofaces(self, sign):
        key = ("cofaces", sign)
        if key not in self._cache:
            table = self.minus if sign == MINUS else self.plus
            co = [0] * len(self.ids)
            for i, faces in enumerate(table):
                for j in bits(faces):
                    co[j] |= 1 << i
            self._cache[key] = co
        return self._cache[key]

    @property
    def lt_succ(self):
        """``lt_succ[i]``: elements y with x_i+ meeting y-."""
        if "lt" not in self._cache:
            co_minus = self._cofaces(MINUS)
            succ = []
            for i in range(len(self.ids)):
                s = 0
                for f in bits(self.plus[i]):
                    s |= co_minus[f]
                succ.append(s)
            self._cache["lt"] = succ
        return self._cache["lt"]

    @property
    def triangle_reach(self):
        if "tri" not in self._cache:
            self._cache["tri"] = _kernels.closure(self.lt_succ, self.full)
        return self._cache["tri"]

    @property
    def prec_reach(self):
        if "prec" not in self._cache:
            co_minus = self._cofaces(MINUS)
            succ = [self.plus[i] | co_minus[i] for i in range(len(self.ids))]
            self._cache["prec"] = _kernels.closure(succ, self.full)
        return self._cache["prec"]

    def reach_within(self, mask):
        """◁ restricted to the subset ``mask``, as a list of reach masks."""
        if mask == self.full:
            return self.triangle_reach
        cache = self._cache.setdefault("within", {})
        if mask not in cache:
            if len(cache) > 4096:
                cache.clear()
            cache[mask] = _kernels.closure(self.lt_succ, mask)
        return cache[mask]

    def reverse(self) -> Complex:
        if "reverse" not in self._cache:
            rev = Complex(Element(e.id, e.dim, e.plus, e.minus) for e in self)
            rev._cache["reverse"] = self
            self._cache["reverse"] = rev
        return self._cache["reverse"]


class Subset:
    """An immutable set of elements of one complex."""

    __slots__ = ("complex", "mask")

    def __init__(self, complex: Complex, mask: int = 0):
        self.complex = complex
        self.mask = mask

    def _same(self, other):
        if not isinstance(other, Subset):
            raise TypeError(f"expected Subset, got {type(other).__name__}")
        if other.complex is not self.complex and other.complex != self.complex:
            raise ValueError("subsets belong to different complexes")

    def __or__(self, other):
        self._same(other)
        return Subset(self.complex, self.mask | other.mask)

    def __and__(self, other):
        self._same(other)
        return Subset(self.complex, self.mask & other.mask)

    def __sub__(self, other):
        self._same(other)
        return Subset(self.complex, self.mask & ~other.mask)

    def __le__(self, other):
        self._same(other)
        return self.mask & ~other.mask == 0

    def __ge__(self, other):
        return other <= self

    def isdisjoint(self, other):
        self._same(other)
        return self.mask & other.mask == 0

    def __eq__(self, other):
        if not isinstance(other, Subset):
            return NotImplemented
        return self.mask == other.mask and (
            self.complex is other.complex or self.complex == other.complex
        )

    def __hash__(self):
        return hash(self.mask)

    def __bool__(self):
        return self.mask != 0

    def __len__(self):
        return self.mask.bit_count()

    def __iter__(self):
        ids = self.complex.ids
        return (ids[i] for i in bits(self.mask))

    def __contains__(self, x):
        i = self.complex.index.get(x)
        return i is not None and (self.mask >> i) & 1 == 1

    def __repr__(self):
        return "{" + ", ".join(self) + "}"

    @property
    def members(self):
        return frozenset(self)

    @property
    def dim(self):
        """Largest dimension present, -1 for the empty set."""
        if not self.mask:
            return -1
        return self.complex.dims[self.mask.bit_length() - 1]

    def in_complex(self, other: Complex) -> Subset:
        """The same members viewed in another complex with the same ids."""
        if other is self.complex:
            return self
        if other.ids != self.complex.ids:
            return other.subset(self)
        return Subset(other, self.mask)


def faces(S: Subset, sign) -> Subset:
    return Subset(S.complex, S.complex.face_mask(S.mask, sign))


def pure_faces(S: Subset, sign) -> Subset:
    """S^∓ (sign MINUS) or S^± (sign PLUS): faces of one sign only."""
    C = S.complex
    return Subset(C, C.face_mask(S.mask, sign) & ~C.face_mask(S.mask, flip(sign)))


def sub(S: Subset, n) -> Subset:
    return Subset(S.complex, S.mask & S.complex.grade(n))


def skeleton(S: Subset, n) -> Subset:
    return Subset(S.complex, S.mask & S.complex.upto(n))


def _conflict_table(C):
    """``table[i]``: elements that cannot sit beside ``i`` in a well-formed set."""
    if "conflict" not in C._cache:
        table = []
        for i in range(len(C.ids)):
            d = C.dims[i]
            same = C.grades[d] & ~(1 << i)
            if d == 0:
                table.append(same)
                continue
            c = 0
            for j in bits(same):
                if C.minus[i] & C.minus[j] or C.plus[i] & C.plus[j]:
                    c |= 1 << j
            table.append(c)
        C._cache["conflict"] = table
    return C._cache["conflict"]


def well_formed_mask(C, mask):
    table = _conflict_table(C)
    for i in bits(mask):
        if table[i] & mask:
            return False
    return True


def is_well_formed(S: Subset) -> bool:
    return well_formed_mask(S.complex, S.mask)


def perp(S: Subset, T: Subset) -> bool:
    S._same(T)
    C = S.complex
    return not (
        C.face_mask(S.mask, MINUS) & C.face_mask(T.mask, MINUS)
        or C.face_mask(S.mask, PLUS) & C.face_mask(T.mask, PLUS)
    )


def lt(C: Complex, x, y) -> bool:
    return bool(C.plus[C.index[x]] & C.minus[C.index[y]])


def triangle(S: Subset, x, y) -> bool:
    """x ◁_S y: a <-path from x to y through members of S."""
    C = S.complex
    i, j = C.index[x], C.index[y]
    if not (S.mask >> i) & 1 or not (S.mask >> j) & 1:
        return False
    return bool((C.reach_within(S.mask)[i] >> j) & 1)


def prec_closure(C: Complex, x, y) -> bool:
    """x ◀ y, the closure of: y is a positive face of x, or x a negative face of y."""
    return bool((C.prec_reach[C.index[x]] >> C.index[y]) & 1)


def segment_mask(C, r, t):
    reach = C.reach_within(t)
    inside = r & t
    for i in bits(inside):
        for j in bits(reach[i] & ~r):
            if reach[j] & inside:
                return False
    return True


def is_segment(R: Subset, T: Subset) -> bool:
    R._same(T)
    if not R <= T:
        warnings.warn(f"{R!r} is not contained in {T!r}", SegmentWarning, stacklevel=2)
    return segment_mask(R.complex, R.mask, T.mask)


def is_segment_ambient(R: Subset, T: Subset) -> bool:
    """Segment test using the unrestricted ◁ instead of ◁ within T."""
    C = R.complex
    reach = C.triangle_reach
    inside = R.mask & T.mask
    for i in bits(inside):
        for j in bits(reach[i] & T.mask & ~R.mask):
            if reach[j] & inside:
                return False
    return True


def tight_mask(C, r):
    pure_plus = C.face_mask(r, PLUS) & ~C.face_mask(r, MINUS)
    if not pure_plus:
        return True
    reach = C.triangle_reach
    for u in range(len(C.ids)):
        if reach[u] & r and C.minus[u] & pure_plus:
            return False
    return True


def is_tight(R: Subset) -> bool:
    return tight_mask(R.complex, R.mask)


def minimal_mask(C, s):
    reach = C.reach_within(s)
    below = 0
    for i in bits(s):
        below |= reach[i] & ~(1 << i)
    return s & ~below


def maximal_mask(C, s):
    reach = C.reach_within(s)
    return sum(1 << i for i in bits(s) if reach[i] & s == 1 << i)


def minimal_elements(S: Subset) -> Subset:
    return Subset(S.complex, minimal_mask(S.complex, S.mask))


def maximal_elements(S: Subset) -> Subset:
    return Subset(S.complex, maximal_mask(S.complex, S.mask))


def reverse(C: Complex) -> Complex:
    return C.reverse()
