import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from trias.algebra import (
    AlgebraFormatError,
    BasisChange,
    DimensionError,
    InvalidBasisChange,
    OpKind,
    algebra_from_json,
    algebra_to_json,
    det,
    dumps_algebra,
    evaluate,
    invert,
    loads_algebra,
    make_algebra,
    transport,
    zero_algebra,
)
from trias.fields import QI, FieldMismatchError, GaussRat, fp

from conftest import algebras, basis_changes, scalars


def test_sparse_rules():
    A = make_algebra(2, vdash={"xx": (1, 0), (0, 1): (0, 1)})
    x, y = (1, 0), (0, 1)
    assert evaluate(A, OpKind.VDASH, QI_vec(x), QI_vec(y)) == QI_vec(y)
    assert evaluate(A, OpKind.VDASH, QI_vec(y), QI_vec(x)) == QI_vec((0, 0))
    assert A.is_zero(OpKind.PERP) and not A.is_zero()


def QI_vec(v):
    return tuple(GaussRat(c) for c in v)


def test_bad_dimensions():
    with pytest.raises(DimensionError):
        make_algebra(5)
    with pytest.raises(DimensionError):
        make_algebra(2, vdash={"xx": (1,)})
    A = zero_algebra(2)
    with pytest.raises(DimensionError):
        evaluate(A, OpKind.VDASH, QI_vec((1,)), QI_vec((1, 0)))


def test_transport_by_swap():
    # x |- x = x pulled back along the swap becomes y |- y = y
    A = make_algebra(2, vdash={"xx": (1, 0)})
    g = BasisChange.from_rows([[0, 1], [1, 0]])
    B = transport(A, g)
    assert B.same_tables(make_algebra(2, vdash={"yy": (0, 1)}))


def test_transport_scaling_dim1():
    A = make_algebra(1, perp={"xx": (3,)})
    B = transport(A, BasisChange.from_rows([[Fraction(1, 3)]]))
    assert B.same_tables(make_algebra(1, perp={"xx": (1,)}))


def test_singular_basis_change():
    with pytest.raises(InvalidBasisChange):
        invert(BasisChange.from_rows([[1, 2], [2, 4]]))
    with pytest.raises(InvalidBasisChange):
        transport(zero_algebra(2), BasisChange.from_rows([[0, 0], [0, 1]]))


def test_transport_field_mismatch():
    with pytest.raises(FieldMismatchError):
        transport(zero_algebra(2), BasisChange.identity(2, fp(3)))


def test_inverse_3x3():
    g = BasisChange.from_rows([[2, 1, 0], [0, 1, 3], [1, 0, 1]])
    assert g @ invert(g) == BasisChange.identity(3)
    assert det(g) == 2 * 1 * 1 + 1 * 3 * 1


@settings(max_examples=40, deadline=None)
@given(algebras(), basis_changes(), basis_changes())
def test_transport_composes(A, g, h):
    assert transport(transport(A, g), h).same_tables(transport(A, g @ h))


@settings(max_examples=40, deadline=None)
@given(algebras(fp(5)), basis_changes(fp(5)))
def test_transport_inverse_round_trip(A, g):
    assert transport(transport(A, g), invert(g)).same_tables(A)


@settings(max_examples=40, deadline=None)
@given(algebras(), basis_changes())
def test_transport_is_pullback(A, g):
    gi = invert(g)
    B = transport(A, g)
    u, v = QI_vec((1, 2)), (GaussRat(0, 1), GaussRat(-1))
    for op in OpKind:
        lhs = g.apply(evaluate(B, op, u, v))
        rhs = evaluate(A, op, g.apply(u), g.apply(v))
        assert lhs == rhs
    assert transport(B, gi).same_tables(A)


@settings(max_examples=40, deadline=None)
@given(algebras(), st.data())
def test_bilinear(A, data):
    s = scalars(QI)
    u, v, w = (tuple(data.draw(s) for _ in range(2)) for _ in range(3))
    c = data.draw(s)
    for op in OpKind:
        uw = tuple(a + c * b for a, b in zip(u, w))
        lhs = evaluate(A, op, uw, v)
        rhs = tuple(a + c * b for a, b in zip(evaluate(A, op, u, v), evaluate(A, op, w, v)))
        assert lhs == rhs
        lhs = evaluate(A, op, v, uw)
        rhs = tuple(a + c * b for a, b in zip(evaluate(A, op, v, u), evaluate(A, op, v, w)))
        assert lhs == rhs


@settings(max_examples=30, deadline=None)
@given(st.one_of(algebras(), algebras(fp(7)), algebras(QI, 1)))
def test_json_round_trip(A):
    text = dumps_algebra(A)
    B = loads_algebra(text)
    assert B.same_tables(A)
    assert dumps_algebra(B) == text


def test_missing_ops_default_to_zero():
    A = algebra_from_json({"dim": 1, "field": {"kind": "Fp", "p": 3}, "ops": {"perp": [[[2]]]}})
    assert A.is_zero(OpKind.VDASH) and not A.is_zero(OpKind.PERP)
    assert set(algebra_to_json(A)["ops"]) == {"vdash", "dashv", "perp"}


@pytest.mark.parametrize(
    "obj,needle",
    [
        ({"dim": 3, "field": {"kind": "Qi"}, "colour": 1}, "unknown keys"),
        ({"dim": 9, "field": {"kind": "Qi"}}, "'dim'"),
        ({"dim": 1, "field": {"kind": "Fp", "p": 4}}, "prime"),
        ({"dim": 1, "field": {"kind": "Qi"}, "ops": {"star": []}}, "unknown operations"),
        ({"dim": 1, "field": {"kind": "Qi"}, "ops": {"vdash": [[["1", "0"]]]}}, "ops.vdash[0][0]"),
        ({"dim": 1, "field": {"kind": "Qi"}, "ops": {"vdash": [[[["1/0", "0"]]]]}}, "zero denominator"),
    ],
)
def test_format_errors(obj, needle):
    with pytest.raises(AlgebraFormatError) as info:
        algebra_from_json(obj, "a.json")
    assert needle in str(info.value)
    assert str(info.value).startswith("a.json")


def test_syntax_error_has_line_context():
    text = '{\n  "dim": 1,\n  "field": {"kind" "Qi"}\n}'
    with pytest.raises(AlgebraFormatError) as info:
        loads_algebra(text, "t.json")
    msg = str(info.value)
    assert msg.startswith("t.json:3:")
    assert '"field": {"kind" "Qi"}' in msg


def test_provenance_kept_but_not_compared():
    A = make_algebra(1, vdash={"xx": (1,)}, provenance={"class": "As_1^2"})
    obj = json.loads(dumps_algebra(A))
    assert obj["provenance"] == {"class": "As_1^2"}
    assert A == make_algebra(1, vdash={"xx": (1,)})
