"""Parity complexes: axiom checkers, cells, and decomposition of cells into atoms."""

from ._kernels import BACKEND
from .axioms import AxiomReport, Witness, check, is_parity_complex
from .cells import (
    Cell,
    atom,
    compose,
    enumerate_cells,
    is_atomic,
    is_receptive,
    mu,
    pi,
    rank,
    source,
    target,
)
from .core import Complex, Element, Subset, reverse
from .errors import (
    CellError,
    ComplexError,
    DocumentError,
    PreconditionError,
    SoundnessAlarm,
    ValidationError,
)
from .excision import Leaf, Node, decompose, evaluate, excise, parse_tree
from .generators import cube, generate, glob, simplex
from .movement import Movement, advance, moves, retreat

__version__ = "0.1.0"
