import os

import pytest
from hypothesis import HealthCheck, settings

from parity_complexes import Cell, Complex, Element, glob, simplex

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=600, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def make(spec):
    """Complex from {id: (dim, minus, plus)}; faces as space-separated ids."""
    return Complex(
        Element(x, d, set(m.split()), set(p.split())) for x, (d, m, p) in spec.items()
    )


# two 2-cells a·e => f => g·h; passes Axioms 1-3, (R1), (R2) but ◀ has a cycle
AS_FAILING = {
    "s": (0, "", ""), "p": (0, "", ""), "t": (0, "", ""),
    "a": (1, "s", "p"), "g": (1, "s", "p"),
    "e": (1, "p", "t"), "h": (1, "p", "t"),
    "f": (1, "s", "t"),
    "X": (2, "a e", "f"), "Y": (2, "f", "g h"),
}

# a directed path 0 -> 1 -> 2 -> 3
PATH3 = {
    "0": (0, "", ""), "1": (0, "", ""), "2": (0, "", ""), "3": (0, "", ""),
    "01": (1, "0", "1"), "12": (1, "1", "2"), "23": (1, "2", "3"),
}


@pytest.fixture
def s2():
    return simplex(2)


@pytest.fixture
def g2():
    return glob(2)


@pytest.fixture
def as_failing():
    return make(AS_FAILING)


@pytest.fixture
def path3():
    return make(PATH3)


@pytest.fixture
def path_cell(s2):
    return Cell.from_ids(s2, ["0", "01", "12"], ["2", "01", "12"])
