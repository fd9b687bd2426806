import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from trias.algebra import BasisChange, make_algebra, transport
from trias.catalog import instantiate
from trias.fields import QI, FieldMismatchError, fp
from trias.isomorphism import (
    audit_pairwise,
    catalog_instances,
    from_array,
    gl_group,
    instance_label,
    invariants,
    iso_decide,
    iso_exhaustive,
    orbit_array,
    pick_evenly,
    to_array,
    verified,
)

from conftest import algebras, basis_changes


def _gl_order(n, p):
    out = 1
    for k in range(n):
        out *= p ** n - p ** k
    return out


@pytest.mark.parametrize("n,p", [(1, 2), (1, 5), (2, 2), (2, 3), (2, 5), (3, 2)])
def test_group_orders(n, p):
    G, Ginv = gl_group(n, p)
    assert len(G) == _gl_order(n, p)
    assert np.array_equal(G[0], np.eye(n, dtype=np.int64))
    prods = np.einsum("gij,gjk->gik", G, Ginv) % p
    assert (prods == np.eye(n, dtype=np.int64)).all()


def test_batched_orbit_matches_exact_transport():
    F = fp(3)
    A = instantiate("Trias_2^28", {"alpha": 1, "beta": 2}, F)
    G, _ = gl_group(2, 3)
    orb = orbit_array(to_array(A), 3)
    for g in range(0, len(G), 7):
        exact = transport(A, BasisChange.from_rows(G[g].tolist(), F))
        assert np.array_equal(orb[g], to_array(exact))


def test_swap_collision():
    F = fp(5)
    A = instantiate("Trias_2^2", {}, F)
    B = instantiate("Trias_2^13", {"alpha": 0}, F)
    res = iso_exhaustive(A, B)
    assert res.isomorphic
    assert verified(A, B, res.witness)
    assert res.witness.to_json() == [[0, 1], [1, 0]]


def test_exhaustive_negative():
    F = fp(5)
    res = iso_exhaustive(instantiate("Trias_2^25", {}, F), instantiate("Trias_2^26", {}, F))
    assert res.kind == "not_isomorphic" and "480" in res.detail


def test_exhaustive_needs_finite_field():
    A = make_algebra(1)
    with pytest.raises(FieldMismatchError):
        iso_exhaustive(A, A)


@settings(max_examples=30, deadline=None)
@given(algebras(fp(3)), basis_changes(fp(3)))
def test_exhaustive_recovers_a_transport(A, g):
    B = transport(A, g)
    res = iso_exhaustive(A, B)
    assert res.isomorphic and verified(A, B, res.witness)


@settings(max_examples=30, deadline=None)
@given(algebras(), basis_changes())
def test_invariants_unchanged_by_transport(A, g):
    assert invariants(A) == invariants(transport(A, g))


def test_qi_decisions():
    A = make_algebra(2, perp={"yy": (1, 0)})
    B = make_algebra(2, perp={"xx": (0, 1)})
    res = iso_decide(A, B)
    assert res.isomorphic and res.method == "witness-library"
    C = make_algebra(2, perp={"xx": (1, 0)})
    res = iso_decide(A, C)
    assert res.kind == "not_isomorphic" and res.method == "invariant"


def test_unknown_when_library_misses():
    # e -> e + f style witnesses are outside permutation-times-diagonal
    A = make_algebra(2, perp={"xx": (1, 0)})
    g = BasisChange.from_rows([[1, 1], [0, 1]])
    B = transport(A, g)
    res = iso_decide(A, B)
    assert res.kind in ("isomorphic", "unknown")
    if res.isomorphic:
        assert verified(A, B, res.witness)


def test_labels_and_sampling():
    A = instantiate("Trias_2^36", {"alpha": 1, "beta": 0, "gamma": 1}, fp(5))
    assert instance_label(A) == "Trias_2^36@alpha=1,beta=0,gamma=1"
    assert pick_evenly(list(range(10)), 3) == [0, 4, 9]
    assert pick_evenly([1, 2], 5) == [1, 2]
    with pytest.raises(ValueError):
        catalog_instances(2, fp(2), "some")


def test_array_round_trip():
    F = fp(7)
    A = instantiate("Trias_2^28", {"alpha": 3, "beta": 6}, F)
    assert from_array(to_array(A), F).same_tables(A)


def test_small_audit():
    rep = audit_pairwise(catalog_instances(1, fp(3)), fp(3))
    assert [r["label"] for r in rep["instances"]] == ["Trias_1^1", "Trias_1^2", "Trias_1^3"]
    assert all(p["result"] == "not_isomorphic" for p in rep["pairs"])
    assert rep["collisions"] == []


def test_audit_collision_carries_lift():
    insts = [instantiate("Trias_2^2", {}, fp(5)), instantiate("Trias_2^13", {"alpha": 0}, fp(5))]
    rep = audit_pairwise(insts, fp(5))
    (c,) = rep["collisions"]
    assert c["lift"] == "lifts" and c["witness"] == [[0, 1], [1, 0]]
    assert rep["cross_group"] == []
