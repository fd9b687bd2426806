import cmath
import random
from fractions import Fraction

import pytest

from trias.algebra import OpKind
from trias.catalog import (
    CatalogError,
    ConstraintError,
    ParameterArityError,
    ParameterDomainError,
    UnsupportedDimensionError,
    admissible_assignments,
    assoc_entries,
    entries_in_group,
    get_assoc,
    get_entry,
    instantiate,
    list_entries,
    sample_assignments,
    validate_assoc_catalog,
    validate_entry,
)
from trias.fields import QI, GaussRat, fp
from trias.identities import AXIOMS, associative_axioms, check_identity, check_pack, is_triassociative

GROUP_SIZES = {"As_2^1": 24, "As_2^2": 3, "As_2^3": 1, "As_2^4": 11, "As_2^5": 1, "As_2^6": 1, "As_2^7": 1}


def test_sizes_and_groups():
    assert [e.id for e in list_entries(1)] == ["Trias_1^1", "Trias_1^2", "Trias_1^3"]
    assert len(list_entries(2)) == 42
    assert len(assoc_entries()) == 9
    for g, n in GROUP_SIZES.items():
        assert len(entries_in_group(g)) == n
    ids = [e.id for g in GROUP_SIZES for e in entries_in_group(g)]
    assert ids == [f"Trias_2^{k}" for k in range(1, 43)]
    assert [e.id for e in entries_in_group("As_1^1")] == ["Trias_1^1", "Trias_1^2"]


def test_unsupported_dimension():
    with pytest.raises(UnsupportedDimensionError):
        list_entries(3)
    with pytest.raises(CatalogError):
        get_entry("Trias_3^1")


def test_corrected_as_2_6():
    e = get_assoc("As_2^6")
    assert e.table[0][0] == (1, 0) and e.table[0][1] == (0, 1) and e.table[1][0] == (0, 1)
    assert e.table[1][1] == (0, 0)
    A = e.as_algebra()
    assert check_pack(A, associative_axioms(OpKind.VDASH)).passed


def test_associative_catalog_over_both_fields():
    for field in (QI, fp(2), fp(3)):
        rep = validate_assoc_catalog(field)
        assert rep["passed"] == rep["total"] == 9


def test_instantiate_happy_path():
    A = instantiate("Trias_2^27", {"alpha": Fraction(1, 2)})
    assert A.provenance == {"class": "Trias_2^27", "params": {"alpha": ["1/2", "0"]}}
    assert is_triassociative(A)
    assert A.name == "Trias_2^27"


def test_instantiate_errors():
    with pytest.raises(ParameterArityError):
        instantiate("Trias_2^27", {})
    with pytest.raises(ParameterArityError):
        instantiate("Trias_2^27", {"alpha": 1, "beta": 2})
    with pytest.raises(ParameterDomainError):
        instantiate("Trias_2^4", {"alpha": 0})
    with pytest.raises(ConstraintError):
        instantiate("Trias_2^36", {"alpha": 1, "beta": 1, "gamma": 1})
    with pytest.raises(CatalogError):
        instantiate("Trias_2^99")


def test_admissible_points_respect_domains():
    F = fp(3)
    pts = list(admissible_assignments("Trias_2^36", F))
    assert pts
    for vals in pts:
        assert vals["alpha"]
        g, a, b = vals["gamma"], vals["alpha"], vals["beta"]
        assert g * g - g - a * b == 0
    # ordering is lexicographic in the declared parameter order
    keys = [tuple(v.value for v in vals.values()) for vals in pts]
    assert keys == sorted(keys)


def test_sampler_hits_constraints():
    for id in ("Trias_2^14", "Trias_2^16", "Trias_2^24", "Trias_2^36"):
        pts = sample_assignments(id, QI, 3)
        assert pts, id
        for vals in pts:
            instantiate(id, vals)  # raises on a constraint failure


# -- radical forms versus their polynomial recasts (float oracle) -----------------


def _cval(poly, values):
    total = 0j
    for mono, c in poly.terms.items():
        term = complex(float(c.re), float(c.im))
        for v, e in mono:
            term *= values[v] ** e
        total += term
    return total


def _cbrt(z):
    return z ** (1 / 3) if z else 0j


def _cardano(p, q):
    # root of t^3 + p t + q, cube roots paired so that u*v = -p/3
    s = cmath.sqrt((q / 2) ** 2 + (p / 3) ** 3)
    u = _cbrt(-q / 2 + s)
    if abs(u) < 1e-12:
        u = _cbrt(-q / 2 - s)
    return u - p / (3 * u) if u else 0j


def _rand(rng):
    return complex(rng.uniform(-2, 2), rng.uniform(-2, 2))


def _constraints_vanish(id, values, tol=1e-9):
    entry = get_entry(id)
    return all(abs(_cval(c, values)) < tol for c in entry.constraints)


@pytest.mark.parametrize("sign", [1, -1])
def test_quadratic_recasts(sign):
    rng = random.Random(7)
    for _ in range(50):
        a1, a2, b = _rand(rng), _rand(rng), _rand(rng)
        g = (a1 + sign * cmath.sqrt(a1 ** 2 + 4 * b * a2)) / 2
        assert _constraints_vanish("Trias_2^14", {"alpha1": a1, "alpha2": a2, "beta": b, "gamma": g})
        a, bb = _rand(rng), _rand(rng)
        g = (1 + sign * cmath.sqrt(1 + 4 * a * bb)) / 2
        assert _constraints_vanish("Trias_2^36", {"alpha": a, "beta": bb, "gamma": g})


def test_cubic_recast_class_16():
    rng = random.Random(11)
    for _ in range(50):
        a, b1, b2 = _rand(rng), _rand(rng), _rand(rng)
        g1 = _cardano(-a * b2, b1 * b2 ** 2)
        g2 = (a + cmath.sqrt(a ** 2 - 4 * b1 * g1)) / 2
        vals = {"alpha": a, "beta1": b1, "beta2": b2, "gamma1": g1, "gamma2": g2}
        assert _constraints_vanish("Trias_2^16", vals, 1e-8)


def test_cubic_recast_class_17():
    rng = random.Random(13)
    for _ in range(50):
        a, b1, b2, b3 = (_rand(rng) for _ in range(4))
        b, c, d = -a, -b1 * b3, b1 ** 2 * b2
        # shift t = s - b/3 reduces t^3 + b t^2 + c t + d to depressed form
        p = c - b ** 2 / 3
        q = 2 * b ** 3 / 27 - b * c / 3 + d
        g2 = _cardano(p, q) - b / 3
        g1 = (b3 + cmath.sqrt(b3 ** 2 + 4 * (g2 * b2 + a * b2))) / 2
        vals = {"alpha": a, "beta1": b1, "beta2": b2, "beta3": b3, "gamma1": g1, "gamma2": g2}
        assert _constraints_vanish("Trias_2^17", vals, 1e-8)


def test_cube_root_recast_class_24():
    rng = random.Random(17)
    for _ in range(50):
        a1, a2, b = _rand(rng), _rand(rng), _rand(rng)
        g1 = _cbrt(a1 ** 2 * a2)
        g2 = g1 ** 2 / a1  # the branch of cbrt(a1 a2^2) consistent with g1
        d1, d2 = g1 / a2 * b, g2 / a2 * b
        assert abs(g2 ** 3 - a1 * a2 ** 2) < 1e-9
        assert abs((d1 / b) ** 3 - a1 ** 2 / a2 ** 2) < 1e-9
        assert abs((d2 / b) ** 3 - a1 / a2) < 1e-9
        vals = {"alpha1": a1, "alpha2": a2, "beta": b, "gamma1": g1, "gamma2": g2,
                "delta1": d1, "delta2": d2, "eta": a1 * b / a2}
        assert _constraints_vanish("Trias_2^24", vals)


# -- entries that pass, and the ones whose printed form does not ---------------------


@pytest.mark.parametrize("id", ["Trias_1^1", "Trias_1^2", "Trias_1^3", "Trias_2^2", "Trias_2^14",
                                "Trias_2^24", "Trias_2^27", "Trias_2^36", "Trias_2^42"])
def test_sampled_instances_pass(id):
    row = validate_entry(id, QI, 3)
    assert row["ok"], row["failures"][:1]


def test_class_4_needs_alpha_one():
    # y _|_ x = x, y _|_ y = a y: A3 on (y, y, x) gives a x = x
    assert is_triassociative(instantiate("Trias_2^4", {"alpha": 1}))
    bad = instantiate("Trias_2^4", {"alpha": 2})
    assert check_identity(bad, AXIOMS["A3"])
    assert validate_entry("Trias_2^5", QI, 3)["failures"][0]["failed"] == ["A3"]


def test_lone_dashv_classes_violate_d2():
    # with |- = 0, D2 forces (a -| b) -| c = 0
    for id in ("Trias_2^18", "Trias_2^22", "Trias_2^23"):
        row = validate_entry(id, QI, 3)
        assert not row["ok"] and all("D2" in f["failed"] for f in row["failures"])
    assert validate_entry("Trias_2^21", QI, 3)["failures"][0]["failed"] == ["A2"]


def test_class_16_only_one_branch_associative():
    # branch gamma1*gamma2 = beta1*beta2 is fine, beta2*gamma2 = gamma1^2 is not
    ok = {"alpha": 2, "beta1": 1, "beta2": 1, "gamma1": 1, "gamma2": 1}
    assert is_triassociative(instantiate("Trias_2^16", ok))
    bad = {"alpha": 3, "beta1": 2, "beta2": 1, "gamma1": 1, "gamma2": 1}
    A = instantiate("Trias_2^16", bad)
    assert [n for n, i in AXIOMS.items() if check_identity(A, i)] == ["A3"]


def test_class_17_never_associative_at_samples():
    row = validate_entry("Trias_2^17", QI, 3)
    assert row["instances"] > 0 and len(row["failures"]) == row["instances"]
