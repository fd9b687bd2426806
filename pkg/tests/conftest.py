import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from trias.algebra import StructureConstants, Trialgebra, BasisChange, det
from trias.fields import QI, FieldDescriptor, FpElem, GaussRat

# algebra tables are 3*n^3 scalars, which trips the input-size health check
settings.register_profile(
    "trias", suppress_health_check=[HealthCheck.large_base_example, HealthCheck.too_slow]
)
settings.load_profile("trias")

small_frac = st.fractions(min_value=-6, max_value=6, max_denominator=6)
gauss = st.builds(GaussRat, small_frac, small_frac)
PRIMES = [2, 3, 5, 7, 65521]


@st.composite
def fp_elems(draw, p=None):
    p = p or draw(st.sampled_from(PRIMES))
    return FpElem(draw(st.integers(0, p - 1)), p)


@st.composite
def fp_triples(draw):
    p = draw(st.sampled_from(PRIMES))
    return tuple(FpElem(draw(st.integers(0, p - 1)), p) for _ in range(3))


def scalars(field: FieldDescriptor):
    if field.is_finite:
        return st.integers(0, field.p - 1).map(lambda v: FpElem(v, field.p))
    # small support keeps products readable
    return st.builds(GaussRat, st.integers(-2, 2).map(Fraction), st.integers(-1, 1).map(Fraction))


@st.composite
def algebras(draw, field: FieldDescriptor = QI, dim: int = 2):
    s = scalars(field)
    tables = tuple(
        tuple(tuple(tuple(draw(s) for _ in range(dim)) for _ in range(dim)) for _ in range(dim))
        for _ in range(3)
    )
    return Trialgebra(StructureConstants(dim, field, tables))


@st.composite
def basis_changes(draw, field: FieldDescriptor = QI, dim: int = 2):
    s = scalars(field)
    while True:
        rows = [[draw(s) for _ in range(dim)] for _ in range(dim)]
        g = BasisChange.from_rows(rows, field)
        if det(g):
            return g


@pytest.fixture
def f5():
    return FieldDescriptor("Fp", 5)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None:
        return
    lines = mod.summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
