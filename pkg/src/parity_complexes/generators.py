"""The three standard families: simplexes, cubes and globes.

Ids are plain strings so they survive JSON and the command line:

* simplex: the vertices as a digit string, ``"0"``, ``"01"``, ``"012"``;
* cube: words over ``m`` (⊖), ``o`` (⊙), ``p`` (⊕), e.g. ``"om"``;
  the 0-cube's single vertex is the empty word;
* glob: sign letter plus dimension, ``"m0"``, ``"p0"``, ``"m1"``, ...

With these spellings the string order of ids agrees with the natural
order of each family.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .core import Complex, Element

CAPS = {"simplex": 6, "cube": 4, "glob": 32}
FAMILIES = tuple(CAPS)


class CapExceeded(ValueError):
    pass


def _check(family, n, cap):
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"{family} size must be a natural number, got {n!r}")
    limit = CAPS[family] if cap is None else cap
    if n > limit:
        raise CapExceeded(f"{family}({n}) exceeds the size cap {limit}")


def simplex(n, cap=None) -> Complex:
    _check("simplex", n, cap)
    if n > 9:
        raise CapExceeded("simplex ids are digit strings; n must be at most 9")
    name = lambda t: "".join(map(str, t))
    elements = []
    for k in range(n + 1):
        for x in combinations(range(n + 1), k + 1):
            # x δ_i drops the i-th vertex; odd i are negative faces
            deltas = [x[:i] + x[i + 1:] for i in range(len(x))] if k else []
            elements.append(
                Element(
                    name(x),
                    k,
                    {name(d) for i, d in enumerate(deltas) if i % 2 == 1},
                    {name(d) for i, d in enumerate(deltas) if i % 2 == 0},
                )
            )
    return Complex(elements)


def _cube_delta(word, i, sign):
    # replace the i-th 'o' (1-based); minus gives m at odd i and p at even i
    positions = [j for j, ch in enumerate(word) if ch == "o"]
    j = positions[i - 1]
    odd = i % 2 == 1
    ch = ("m" if odd else "p") if sign == "-" else ("p" if odd else "m")
    return word[:j] + ch + word[j + 1:]


def cube(n, cap=None) -> Complex:
    _check("cube", n, cap)
    elements = []
    for letters in product("mop", repeat=n):
        word = "".join(letters)
        k = word.count("o")
        elements.append(
            Element(
                word,
                k,
                {_cube_delta(word, i, "-") for i in range(1, k + 1)},
                {_cube_delta(word, i, "+") for i in range(1, k + 1)},
            )
        )
    return Complex(elements)


def glob(n, cap=None) -> Complex:
    """The n-skeleton of the ω-glob: two elements in every dimension 0..n."""
    _check("glob", n, cap)
    elements = []
    for k in range(n + 1):
        for sign in "mp":
            faces = ({f"m{k - 1}"}, {f"p{k - 1}"}) if k else (set(), set())
            elements.append(Element(f"{sign}{k}", k, *faces))
    return Complex(elements)


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in CAPS:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"size must be a natural number, got {self.n!r}")

    def build(self, cap=None) -> Complex:
        return generate(self.family, self.n, cap)


def generate(family, n, cap=None) -> Complex:
    builders = {"simplex": simplex, "cube": cube, "glob": glob}
    if family not in builders:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return builders[family](n, cap)
