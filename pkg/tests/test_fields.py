import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from trias.fields import (
    QI,
    FieldDescriptor,
    FieldMismatchError,
    FpElem,
    GaussRat,
    ScalarParseError,
    fp,
    parse_scalar,
    parse_scalar_literal,
    render_scalar,
    scalar_add,
    scalar_inv,
    scalar_mul,
)

from conftest import fp_elems, gauss


def test_gauss_arithmetic_matches_complex():
    a, b = GaussRat(Fraction(1, 2), 3), GaussRat(-2, Fraction(1, 3))
    z = complex(0.5, 3) * complex(-2, 1 / 3)
    w = a * b
    assert float(w.re) == pytest.approx(z.real) and float(w.im) == pytest.approx(z.imag)
    assert (a / b) * b == a


def test_i_squared():
    i = GaussRat(0, 1)
    assert i * i == -1
    assert i.inverse() == GaussRat(0, -1)


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        GaussRat(0, 0).inverse()
    with pytest.raises(ZeroDivisionError):
        scalar_inv(FpElem(0, 7))


def test_fp_reduction_and_inverse():
    assert FpElem(12, 5) == FpElem(2, 5)
    assert FpElem(3, 7).inverse() * FpElem(3, 7) == 1
    assert FpElem(-1, 65521).value == 65520


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        FpElem(1, 3) + FpElem(1, 5)
    with pytest.raises(FieldMismatchError):
        scalar_add(GaussRat(1), FpElem(1, 5))
    with pytest.raises(FieldMismatchError):
        scalar_mul(FpElem(1, 3), FpElem(2, 5))


@pytest.mark.parametrize("p", [0, 1, 4, 65536, 65537, 100])
def test_bad_modulus(p):
    with pytest.raises(ValueError):
        FieldDescriptor("Fp", p)


def test_largest_prime_ok():
    F = fp(65521)
    assert F.label == "Fp:65521"
    assert FieldDescriptor.from_label("Fp:65521") == F


def test_convert_into_fp():
    F = fp(7)
    assert F.convert(Fraction(1, 2)) == FpElem(4, 7)
    assert F.convert(GaussRat(3, 0)) == FpElem(3, 7)
    with pytest.raises(FieldMismatchError):
        F.convert(GaussRat(0, 1))
    with pytest.raises(FieldMismatchError):
        F.convert(Fraction(1, 7))


@pytest.mark.parametrize(
    "text,value",
    [
        ('["1/2","-3"]', GaussRat(Fraction(1, 2), -3)),
        ('["0","0"]', GaussRat(0)),
        ('["-7/3","1"]', GaussRat(Fraction(-7, 3), 1)),
    ],
)
def test_parse_qi(text, value):
    assert parse_scalar(text, QI) == value
    assert json.dumps(render_scalar(value), separators=(",", ":")) == text


def test_render_reduces():
    assert render_scalar(GaussRat(Fraction(4, 6), Fraction(-2, 1))) == ["2/3", "-2"]


@pytest.mark.parametrize(
    "text,pos",
    [('["1/0","0"]', 2), ('["1x","0"]', 1), ('["1"]', 0), ('["1", 2]', 1)],
)
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ScalarParseError) as info:
        parse_scalar(text, QI)
    assert info.value.position == pos


def test_parse_fp():
    F = fp(5)
    assert parse_scalar("3", F) == FpElem(3, 5)
    for bad in ("5", "-1", '"2"', "true", "[1, 0]"):
        with pytest.raises(ScalarParseError):
            parse_scalar(bad, F)


def test_literal_form():
    assert parse_scalar_literal("-1/2", QI) == GaussRat(Fraction(-1, 2))
    assert parse_scalar_literal('["0","1"]', QI) == GaussRat(0, 1)
    assert parse_scalar_literal("1/2", fp(5)) == FpElem(3, 5)


@given(gauss)
def test_qi_round_trip(z):
    assert parse_scalar(json.dumps(render_scalar(z)), QI) == z


@given(fp_elems())
def test_fp_round_trip(x):
    F = fp(x.p)
    assert parse_scalar(json.dumps(render_scalar(x)), F) == x


@given(gauss, gauss)
def test_hash_consistent(a, b):
    if a == b:
        assert hash(a) == hash(b)


@given(st.integers(-50, 50), st.integers(1, 50))
def test_int_embeds(n, d):
    assert GaussRat(Fraction(n, d)) == Fraction(n, d)
