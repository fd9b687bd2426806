"""Classification lists of low-dimensional associative and triassociative algebras.

Every triassociative class is a template: each structure constant is an
integer polynomial in the class parameters.  Parameters that the original
list defines through square or cube roots are kept as unknowns tied to the
others by the polynomial those roots satisfy, so any tuple satisfying the
constraints picks out one branch of the radical.  Both signs of a ``±``
branch satisfy the same constraint.

Two entries needed an encoding choice:

* ``Trias_2^17`` lists ``beta2 x + beta3 y`` without a left-hand side; it is
  encoded as ``y _|_ y``, the only product left unassigned.
* ``Trias_2^24`` has ``x _|_ x = delta1 x + (alpha1 beta / alpha2) y``; the
  quotient becomes the dependent parameter ``eta`` with
  ``alpha2 * eta = alpha1 * beta``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterator, Mapping

from .algebra import BASIS_NAMES, OPS, OpKind, StructureConstants, Trialgebra
from .fields import QI, FieldDescriptor, FieldMismatchError, GaussRat
from .identities import associative_axioms, builtin_axioms, check_pack
from .linalg import row_reduce
from .poly import Poly


class CatalogError(ValueError):
    pass


class UnsupportedDimensionError(CatalogError):
    pass


class ParameterDomainError(CatalogError):
    pass


class ConstraintError(CatalogError):
    pass


class ParameterArityError(CatalogError):
    pass


@dataclass(frozen=True)
class ParamSpec:
    name: str
    domain: str = "any"  # "any" | "nonzero"
    role: str = "free"  # "free" | "dependent"


@dataclass(frozen=True)
class AssocEntry:
    id: str
    dim: int
    table: tuple  # [i][j] -> coefficient tuple of ints

    def as_algebra(self, field: FieldDescriptor = QI, op: OpKind = OpKind.VDASH) -> Trialgebra:
        zero = field.zero()
        n = self.dim
        empty = tuple(tuple((zero,) * n for _ in range(n)) for _ in range(n))
        t = tuple(tuple(tuple(field.convert(s) for s in vec) for vec in row) for row in self.table)
        tables = tuple(t if o == op else empty for o in OPS)
        return Trialgebra(StructureConstants(n, field, tables), self.id)


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    dim: int
    params: tuple
    constraints: tuple
    tables: tuple  # [op][i][j] -> tuple of Poly
    group: str
    sample_solve: tuple = ()  # parameters solved linearly when sampling over Q(i)
    note: str = ""

    @property
    def index(self) -> int:
        return int(self.id.split("^")[1])

    @property
    def param_names(self) -> list[str]:
        return [p.name for p in self.params]

    def param(self, name: str) -> ParamSpec:
        for p in self.params:
            if p.name == name:
                return p
        raise KeyError(name)

    def describe(self) -> list[str]:
        lines = []
        for op in OPS:
            for i in range(self.dim):
                for j in range(self.dim):
                    vec = self.tables[op][i][j]
                    terms = []
                    for k, c in enumerate(vec):
                        if c.is_zero():
                            continue
                        name = BASIS_NAMES[k]
                        if c == 1:
                            terms.append(name)
                        elif len(c.terms) == 1:
                            terms.append(f"{c}*{name}")
                        else:
                            terms.append(f"({c})*{name}")
                    if terms:
                        lhs = f"{BASIS_NAMES[i]} {op.symbol} {BASIS_NAMES[j]}"
                        lines.append(f"{lhs} = {' + '.join(terms)}")
        return lines or ["abelian"]

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "dim": self.dim,
            "group": self.group,
            "params": [{"name": p.name, "domain": p.domain, "role": p.role} for p in self.params],
            "constraints": [f"{c} = 0" for c in self.constraints],
            "products": self.describe(),
            **({"note": self.note} if self.note else {}),
        }


# -- building the tables ------------------------------------------------------


def _p(x) -> Poly:
    return x if isinstance(x, Poly) else Poly.const(x)


def _table(dim: int, rules: Mapping[str, tuple] | None):
    zero = Poly.const(0)
    t = [[(zero,) * dim for _ in range(dim)] for _ in range(dim)]
    for key, vec in (rules or {}).items():
        i, j = BASIS_NAMES.index(key[0]), BASIS_NAMES.index(key[1])
        assert len(vec) == dim, key
        t[i][j] = tuple(_p(c) for c in vec)
    return tuple(tuple(r) for r in t)


def _entry(
    id: str,
    group: str,
    vdash=None,
    dashv=None,
    perp=None,
    *,
    params: str = "",
    nonzero: str = "",
    dependent: str = "",
    constraints=(),
    sample_solve: str = "",
    note: str = "",
) -> CatalogEntry:
    dim = int(id.split("_")[1][0])
    names = params.split()
    nz = set(nonzero.split())
    dep = set(dependent.split())
    specs = tuple(
        ParamSpec(n, "nonzero" if n in nz else "any", "dependent" if n in dep else "free")
        for n in names
    )
    tables = tuple(_table(dim, r) for r in (vdash, dashv, perp))
    entry = CatalogEntry(
        id, dim, specs, tuple(constraints), tables, group, tuple(sample_solve.split()), note
    )
    used = set()
    for t in tables:
        for row in t:
            for vec in row:
                for c in vec:
                    used |= c.variables()
    for c in entry.constraints:
        used |= c.variables()
    assert used <= set(names), (id, used - set(names))
    assert all(any(s.name in c.variables() for c in entry.constraints) for s in specs if s.role == "dependent")
    return entry


V = Poly.var
alpha, beta, gamma = V("alpha"), V("beta"), V("gamma")
alpha1, alpha2 = V("alpha1"), V("alpha2")
beta1, beta2, beta3 = V("beta1"), V("beta2"), V("beta3")
gamma1, gamma2 = V("gamma1"), V("gamma2")
delta1, delta2, eta = V("delta1"), V("delta2"), V("eta")

X1 = (1,)
X, Y = (1, 0), (0, 1)

ASSOC = {
    "As_1^1": {},
    "As_1^2": {"xx": X1},
    "As_2^1": {},
    "As_2^2": {"xx": X},
    "As_2^3": {"xx": Y},
    "As_2^4": {"xx": X, "xy": Y},
    "As_2^5": {"xx": X, "yx": Y},
    "As_2^6": {"xx": X, "xy": Y, "yx": Y},
    "As_2^7": {"xx": X, "yy": Y},
}


def _assoc_entry(id: str) -> AssocEntry:
    dim = int(id.split("_")[1][0])
    t = [[(0,) * dim for _ in range(dim)] for _ in range(dim)]
    for key, vec in ASSOC[id].items():
        t[BASIS_NAMES.index(key[0])][BASIS_NAMES.index(key[1])] = vec
    return AssocEntry(id, dim, tuple(tuple(r) for r in t))


ASSOC_ENTRIES = {k: _assoc_entry(k) for k in ASSOC}

A1, A2, A4, A5, A6, A7 = (ASSOC[f"As_2^{i}"] for i in (1, 2, 4, 5, 6, 7))
A3 = ASSOC["As_2^3"]

_DIM1 = [
    _entry("Trias_1^1", "As_1^1"),
    _entry("Trias_1^2", "As_1^1", perp={"xx": X1}),
    _entry("Trias_1^3", "As_1^2", vdash={"xx": X1}, dashv={"xx": X1}, perp={"xx": X1}),
]

_DIM2 = [
    _entry("Trias_2^1", "As_2^1"),
    _entry("Trias_2^2", "As_2^1", perp={"yy": X}),
    _entry("Trias_2^3", "As_2^1", perp={"yy": (alpha, 1)}, params="alpha"),
    _entry("Trias_2^4", "As_2^1", perp={"yx": X, "yy": (0, alpha)}, params="alpha", nonzero="alpha"),
    _entry("Trias_2^5", "As_2^1", perp={"xy": X, "yy": (0, alpha)}, params="alpha", nonzero="alpha"),
    _entry("Trias_2^6", "As_2^1", perp={"xy": X, "yx": X, "yy": (alpha, 1)}, params="alpha"),
    _entry("Trias_2^7", "As_2^1", perp={"xx": X, "yy": (0, alpha)}, params="alpha"),
    _entry("Trias_2^8", "As_2^1", perp={"xx": X, "yx": Y}),
    _entry(
        "Trias_2^9", "As_2^1",
        perp={"xx": X, "xy": Y, "yx": (alpha, 0), "yy": (0, alpha)}, params="alpha",
    ),
    _entry(
        "Trias_2^10", "As_2^1",
        perp={"xx": X, "xy": Y, "yx": Y, "yy": (alpha, beta)}, params="alpha beta",
    ),
    _entry(
        "Trias_2^11", "As_2^1",
        perp={"xx": X, "xy": (alpha, 0), "yx": (alpha, 0), "yy": (0, alpha)},
        params="alpha", nonzero="alpha",
    ),
    _entry(
        "Trias_2^12", "As_2^1",
        perp={"xx": X, "xy": (alpha, 0), "yx": Y, "yy": (0, alpha)},
        params="alpha", nonzero="alpha",
    ),
    _entry("Trias_2^13", "As_2^1", perp={"xx": (alpha, 1)}, params="alpha"),
    _entry(
        "Trias_2^14", "As_2^1",
        perp={"xx": (alpha1, beta), "xy": (0, gamma), "yx": (0, gamma), "yy": (0, alpha2)},
        params="alpha1 alpha2 beta gamma", nonzero="beta", dependent="gamma",
        constraints=[gamma**2 - alpha1 * gamma - beta * alpha2],
        sample_solve="alpha2",
    ),
    _entry(
        "Trias_2^15", "As_2^1",
        perp={"xx": (alpha, 1), "xy": (beta, 0), "yx": (beta, 0), "yy": (0, beta)},
        params="alpha beta", nonzero="beta",
    ),
    _entry(
        "Trias_2^16", "As_2^1",
        perp={"xx": (alpha, beta1), "xy": (gamma1, gamma2), "yx": (gamma1, gamma2), "yy": (beta2, 0)},
        params="alpha beta1 beta2 gamma1 gamma2", nonzero="beta1 beta2",
        dependent="gamma1 gamma2",
        constraints=[
            gamma1**3 - alpha * beta2 * gamma1 + beta1 * beta2**2,
            gamma2**2 - alpha * gamma2 + beta1 * gamma1,
        ],
        sample_solve="alpha beta1",
    ),
    _entry(
        "Trias_2^17", "As_2^1",
        perp={"xx": (alpha, beta1), "xy": (gamma1, gamma2), "yx": (gamma1, gamma2), "yy": (beta2, beta3)},
        params="alpha beta1 beta2 beta3 gamma1 gamma2", nonzero="beta1 beta2 beta3",
        dependent="gamma1 gamma2",
        constraints=[
            gamma2**3 - alpha * gamma2**2 - beta1 * beta3 * gamma2 + beta1**2 * beta2,
            gamma1**2 - beta3 * gamma1 - beta2 * (gamma2 + alpha),
        ],
        sample_solve="beta2 beta3",
        note="the product 'beta2 x + beta3 y' is printed without a left-hand side; encoded as y _|_ y",
    ),
    _entry("Trias_2^18", "As_2^1", dashv={"yy": Y}, perp={"xx": (alpha, 0)}, params="alpha"),
    _entry("Trias_2^19", "As_2^1", dashv={"yy": X}, perp={"yy": (alpha, 0)}, params="alpha"),
    _entry("Trias_2^20", "As_2^1", dashv={"xx": Y}, perp={"xx": (0, alpha)}, params="alpha"),
    _entry("Trias_2^21", "As_2^1", dashv={"yx": X}),
    _entry("Trias_2^22", "As_2^1", dashv={"xy": X, "yx": (alpha, 0)}, params="alpha"),
    _entry("Trias_2^23", "As_2^1", dashv={"xy": X}, perp={"yx": (alpha, 0)}, params="alpha"),
    _entry(
        "Trias_2^24", "As_2^1",
        dashv={
            "xx": (gamma1, alpha1), "xy": (-gamma2, -gamma1),
            "yx": (-gamma2, -gamma1), "yy": (alpha2, gamma2),
        },
        perp={
            "xx": (delta1, eta), "xy": (-delta2, -delta1),
            "yx": (-delta2, -delta1), "yy": (beta, delta2),
        },
        params="alpha1 alpha2 beta gamma1 gamma2 delta1 delta2 eta",
        nonzero="alpha1 alpha2", dependent="gamma1 gamma2 delta1 delta2 eta",
        constraints=[
            gamma1**3 - alpha1**2 * alpha2,
            alpha1 * gamma2 - gamma1**2,
            alpha2 * delta1 - gamma1 * beta,
            alpha2 * delta2 - gamma2 * beta,
            alpha2 * eta - alpha1 * beta,
        ],
        sample_solve="alpha2 gamma2 delta1 delta2 eta",
        note="x _|_ x has y-coefficient alpha1*beta/alpha2, carried as eta",
    ),
    _entry("Trias_2^25", "As_2^2", vdash=A2, dashv={"xx": X, "yx": Y}, perp={"xx": X, "yx": Y}),
    _entry("Trias_2^26", "As_2^2", vdash=A2, dashv={"xx": X, "yx": Y}, perp={"xx": X}),
    _entry(
        "Trias_2^27", "As_2^2",
        vdash=A2, dashv={"xx": X}, perp={"xx": X, "yy": (0, alpha)}, params="alpha",
    ),
    _entry(
        "Trias_2^28", "As_2^3",
        vdash=A3, dashv={"xx": (0, alpha)}, perp={"xx": (0, beta)}, params="alpha beta",
    ),
    _entry("Trias_2^29", "As_2^4", vdash=A4, dashv={"xx": X}, perp={"xx": X}),
    _entry("Trias_2^30", "As_2^4", vdash=A4, dashv={"xx": X}, perp={"xx": X, "xy": Y}),
    _entry(
        "Trias_2^31", "As_2^4",
        vdash=A4, dashv={"xx": X, "yx": Y}, perp={"xx": X, "yy": (0, alpha)}, params="alpha",
    ),
    _entry("Trias_2^32", "As_2^4", vdash=A4, dashv={"xx": X, "yx": Y}, perp={"xx": X, "yx": Y}),
    _entry("Trias_2^33", "As_2^4", vdash=A4, dashv={"xx": X, "yx": Y}, perp={"xx": X, "xy": Y}),
    _entry(
        "Trias_2^34", "As_2^4",
        vdash=A4, dashv={"xx": X, "yx": Y},
        perp={"xx": X, "xy": Y, "yx": Y, "yy": (0, alpha)}, params="alpha",
    ),
    _entry(
        "Trias_2^35", "As_2^4",
        vdash=A4, dashv={"xx": X, "yx": Y}, perp={"xx": (1, alpha)},
        params="alpha", nonzero="alpha",
    ),
    _entry(
        "Trias_2^36", "As_2^4",
        vdash=A4, dashv={"xx": X, "yx": Y},
        perp={"xx": (1, alpha), "xy": (0, gamma), "yx": (0, gamma), "yy": (0, beta)},
        params="alpha beta gamma", nonzero="alpha", dependent="gamma",
        constraints=[gamma**2 - gamma - alpha * beta],
        sample_solve="beta",
    ),
    _entry("Trias_2^37", "As_2^4", vdash=A4, dashv={"xx": X, "xy": Y}, perp={"xx": X, "xy": Y}),
    _entry(
        "Trias_2^38", "As_2^4",
        vdash=A4, dashv={"xx": (1, alpha)}, perp={"xx": (1, alpha)},
        params="alpha", nonzero="alpha",
    ),
    _entry(
        "Trias_2^39", "As_2^4",
        vdash=A4, dashv={"xx": (1, alpha)}, perp={"xx": X, "xy": Y},
        params="alpha", nonzero="alpha",
    ),
    _entry("Trias_2^40", "As_2^5", vdash=A5, dashv=A5, perp=A5),
    _entry("Trias_2^41", "As_2^6", vdash=A6, dashv=A6, perp=A6),
    _entry("Trias_2^42", "As_2^7", vdash=A7, dashv=A7, perp=A7),
]

ENTRIES: dict[str, CatalogEntry] = {e.id: e for e in _DIM1 + _DIM2}


def list_entries(dim: int) -> list[CatalogEntry]:
    if dim == 1:
        return list(_DIM1)
    if dim == 2:
        return list(_DIM2)
    raise UnsupportedDimensionError(f"the catalog covers dimensions 1 and 2, not {dim}")


def get_entry(id: str) -> CatalogEntry:
    try:
        return ENTRIES[id]
    except KeyError:
        raise CatalogError(f"unknown catalog class {id!r}") from None


def assoc_entries(dim: int | None = None) -> list[AssocEntry]:
    return [e for e in ASSOC_ENTRIES.values() if dim is None or e.dim == dim]


def get_assoc(id: str) -> AssocEntry:
    try:
        return ASSOC_ENTRIES[id]
    except KeyError:
        raise CatalogError(f"unknown associative class {id!r}") from None


def entries_in_group(group: str) -> list[CatalogEntry]:
    return [e for e in ENTRIES.values() if e.group == group]


# -- instantiation --------------------------------------------------------------


def _check_assignment(entry: CatalogEntry, values: Mapping, field: FieldDescriptor) -> dict:
    names = set(entry.param_names)
    missing = names - set(values)
    extra = set(values) - names
    if missing or extra:
        raise ParameterArityError(
            f"{entry.id} takes parameters {entry.param_names}; "
            f"missing {sorted(missing)}, unexpected {sorted(extra)}"
        )
    vals = {k: field.convert(v) for k, v in values.items()}
    for spec in entry.params:
        if spec.domain == "nonzero" and not vals[spec.name]:
            raise ParameterDomainError(f"{entry.id}: {spec.name} must be nonzero")
    for c in entry.constraints:
        if c.evaluate(vals, field):
            raise ConstraintError(f"{entry.id}: constraint {c} = 0 fails at {_fmt(vals)}")
    return vals


def _fmt(vals: Mapping) -> str:
    return ", ".join(f"{k}={v}" for k, v in vals.items())


def instantiate(id: str, assignment: Mapping | None = None, field: FieldDescriptor = QI) -> Trialgebra:
    entry = get_entry(id)
    vals = _check_assignment(entry, assignment or {}, field)
    tables = tuple(
        tuple(tuple(tuple(c.evaluate(vals, field) for c in vec) for vec in row) for row in t)
        for t in entry.tables
    )
    prov = {
        "class": entry.id,
        "params": {k: field.render(vals[k]) for k in entry.param_names},
    }
    return Trialgebra(StructureConstants(entry.dim, field, tables), entry.id, prov)


def admissible_assignments(id: str, field: FieldDescriptor) -> Iterator[dict]:
    """Every point of F_p^params meeting the domain exclusions and constraints.

    Order is lexicographic in parameter order; constraints are tested as soon
    as all their variables carry values.
    """
    if not field.is_finite:
        raise CatalogError("exhaustive sweeps need a finite field")
    entry = get_entry(id)
    names = entry.param_names
    ready = [[] for _ in names]  # constraints completed at each depth
    for c in entry.constraints:
        depth = max(names.index(v) for v in c.variables())
        ready[depth].append(c)
    domains = [
        [x for x in field.elements() if x or spec.domain == "any"] for spec in entry.params
    ]
    vals: dict = {}

    def rec(depth):
        if depth == len(names):
            yield dict(vals)
            return
        for x in domains[depth]:
            vals[names[depth]] = x
            if all(not c.evaluate(vals, field) for c in ready[depth]):
                yield from rec(depth + 1)
        vals.pop(names[depth], None)

    yield from rec(0)


_EXTRA_POINTS = [2, -1, Fraction(1, 2), 3, GaussRat(0, 1), GaussRat(1, 1), -2, Fraction(-1, 3)]


def sample_points(domain: str, k: int, field: FieldDescriptor) -> list:
    """0 (when admissible), 1, then ``k - 2`` further distinct points."""
    base = ([0] if domain == "any" else []) + [1]
    out = []
    for x in base:
        out.append(field.convert(x))
    extra = []
    for x in _EXTRA_POINTS:
        if len(extra) >= max(k - 2, 0):
            break
        try:
            y = field.convert(x)
        except FieldMismatchError:
            continue
        if y in out or y in extra or (domain == "nonzero" and not y):
            continue
        extra.append(y)
    return out + extra


def sample_assignments(id: str, field: FieldDescriptor = QI, k: int = 3) -> list[dict]:
    """Representative admissible assignments for spot checks.

    Parameters outside ``sample_solve`` range over :func:`sample_points`;
    the rest are solved from the constraints, which are linear in them once
    the others are fixed (solved round by round).  Points where that system
    is singular or lands on an excluded value are skipped.
    """
    entry = get_entry(id)
    sampled = [s for s in entry.params if s.name not in entry.sample_solve]
    grids = [sample_points(s.domain, k, field) for s in sampled]
    out: list[dict] = []
    seen = set()
    for combo in itertools.product(*grids):
        vals = dict(zip((s.name for s in sampled), combo))
        candidates = _solve_rest(entry, vals, field, k) if entry.sample_solve else [vals]
        for cand in candidates:
            try:
                _check_assignment(entry, cand, field)
            except CatalogError:
                continue
            key = tuple((n, cand[n]) for n in entry.param_names)
            if key not in seen:
                seen.add(key)
                out.append({n: cand[n] for n in entry.param_names})
    return out


def _solve_rest(entry: CatalogEntry, vals: dict, field: FieldDescriptor, k: int) -> Iterator[dict]:
    unknown = [n for n in entry.sample_solve if n not in vals]
    if not unknown:
        yield vals
        return
    zero = field.zero()
    consts = {n: Poly.const(v, field) for n, v in vals.items()}
    linear = []
    for c in entry.constraints:
        r = c.convert(field).substitute(consts)
        if r.variables() <= set(unknown) and r.degree() == 1:
            linear.append(r)
    involved = sorted({v for r in linear for v in r.variables()}, key=unknown.index)
    if not involved:
        return
    aug = [[r.terms.get(((v, 1),), zero) for v in involved] + [-r.constant_term()] for r in linear]
    red, pivots = row_reduce(aug, zero)
    if len(involved) in pivots:
        return  # inconsistent
    free = [v for i, v in enumerate(involved) if i not in pivots]
    grids = [sample_points(entry.param(v).domain, k, field) for v in free]
    for combo in itertools.product(*grids):
        fixed = dict(zip(free, combo))
        nxt = dict(vals)
        nxt.update(fixed)
        for row, col in zip(red, pivots):
            s = row[-1]
            for i, v in enumerate(involved):
                if v in fixed and row[i]:
                    s = s - row[i] * fixed[v]
            nxt[involved[col]] = s
        yield from _solve_rest(entry, nxt, field, k)


# -- validation -------------------------------------------------------------------


def validate_assoc_catalog(field: FieldDescriptor = QI, dims=(1, 2)) -> dict:
    rows = []
    for e in (e for d in dims for e in assoc_entries(d)):
        rep = check_pack(e.as_algebra(field), associative_axioms(OpKind.VDASH))
        rows.append({"id": e.id, "ok": rep.passed, **({} if rep.passed else {"report": rep.to_json(field)})})
    return {"total": len(rows), "passed": sum(r["ok"] for r in rows), "entries": rows}


def validate_entry(id: str, field: FieldDescriptor, k: int) -> dict:
    entry = get_entry(id)
    if field.is_finite and not entry.params:
        assignments = [{}]
    else:
        assignments = sample_assignments(id, field, k)
    pack = builtin_axioms()
    failures = []
    for vals in assignments:
        A = instantiate(id, vals, field)
        rep = check_pack(A, pack)
        if not rep.passed:
            first = rep.violations()[0]
            failures.append(
                {
                    "params": {n: field.render(v) for n, v in vals.items()},
                    "failed": rep.failures(),
                    "violation": first.to_json(field),
                }
            )
    return {
        "id": id,
        "instances": len(assignments),
        "ok": bool(assignments) and not failures,
        "failures": failures,
    }


def validate_catalog(field: FieldDescriptor = QI, samples: int = 3, dims=(1, 2), jobs: int = 1) -> dict:
    """Instantiate every class at sample points and check all eleven axioms."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    ids = [e.id for d in dims for e in list_entries(d)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(validate_entry, ids, [field] * len(ids), [samples] * len(ids)))
    else:
        rows = [validate_entry(i, field, samples) for i in ids]
    return {
        "field": field.label,
        "samples": samples,
        "total": len(rows),
        "passed": sum(r["ok"] for r in rows),
        "entries": rows,
        "associative": validate_assoc_catalog(field, dims),
    }
