"""Structure-constant presentation of algebras with three bilinear products.

Basis convention: ``e_0 = x``, ``e_1 = y`` (then ``z``, ``w`` up to the
dimension cap of 4).  ``c[op][i][j][k]`` is the coefficient of ``e_k`` in
``e_i op e_j``.

Transport is a pullback: for a basis change ``g`` (column ``j`` is the image
of ``e_j``) the transported algebra ``B`` has ``u *_B v = g^-1(g u *_A g v)``.
Composition follows ``transport(transport(A, g), h) == transport(A, g @ h)``.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Mapping, Sequence

from .fields import QI, FieldDescriptor, FieldMismatchError, ScalarParseError

MAX_DIM = 4
BASIS_NAMES = "xyzw"


class DimensionError(ValueError):
    pass


class InvalidBasisChange(ValueError):
    pass


class AlgebraFormatError(ValueError):
    pass


class OpKind(enum.IntEnum):
    VDASH = 0
    DASHV = 1
    PERP = 2

    @property
    def key(self) -> str:
        return ("vdash", "dashv", "perp")[self]

    @property
    def symbol(self) -> str:
        return ("|-", "-|", "_|_")[self]

    @classmethod
    def from_key(cls, key: str) -> "OpKind":
        return {"vdash": cls.VDASH, "dashv": cls.DASHV, "perp": cls.PERP}[key]


OPS = tuple(OpKind)


def _check_dim(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_DIM:
        raise DimensionError(f"dimension must be in 1..{MAX_DIM}, got {n!r}")


@dataclass(frozen=True)
class StructureConstants:
    dim: int
    field: FieldDescriptor
    c: tuple  # [op][i][j] -> tuple of n scalars

    def __post_init__(self):
        _check_dim(self.dim)
        n = self.dim
        if len(self.c) != 3:
            raise DimensionError("need three product tables")
        for table in self.c:
            if len(table) != n or any(len(row) != n for row in table):
                raise DimensionError("table shape does not match dimension")
            for row in table:
                for vec in row:
                    if len(vec) != n:
                        raise DimensionError("coefficient vector has wrong length")
                    for s in vec:
                        if not self.field.contains(s):
                            raise FieldMismatchError(f"{s!r} is not in {self.field.label}")

    def row(self, op: OpKind, i: int, j: int) -> tuple:
        return self.c[op][i][j]


@dataclass(frozen=True)
class Trialgebra:
    """A candidate trialgebra; axiom compliance is checked, never assumed."""

    constants: StructureConstants
    name: str | None = None
    provenance: dict | None = dc_field(default=None, compare=False, hash=False)

    @property
    def dim(self) -> int:
        return self.constants.dim

    @property
    def field(self) -> FieldDescriptor:
        return self.constants.field

    def table(self, op: OpKind):
        return self.constants.c[op]

    def same_tables(self, other: "Trialgebra") -> bool:
        return self.constants == other.constants

    def renamed(self, name: str | None, provenance: dict | None = None) -> "Trialgebra":
        return Trialgebra(self.constants, name, provenance)

    def is_zero(self, op: OpKind | None = None) -> bool:
        ops = OPS if op is None else (op,)
        return all(not s for o in ops for row in self.constants.c[o] for vec in row for s in vec)


def make_algebra(
    dim: int,
    field: FieldDescriptor = QI,
    *,
    vdash: Mapping | None = None,
    dashv: Mapping | None = None,
    perp: Mapping | None = None,
    name: str | None = None,
    provenance: dict | None = None,
) -> Trialgebra:
    """Build an algebra from sparse rules.

    Each rule map sends ``(i, j)`` (or a basis-name string like ``"xy"``) to a
    coefficient vector of ints or field scalars.  Unspecified products are 0.
    """
    _check_dim(dim)
    zero = field.zero()
    tables = []
    for rules in (vdash, dashv, perp):
        t = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
        for key, vec in (rules or {}).items():
            if isinstance(key, str):
                i, j = BASIS_NAMES.index(key[0]), BASIS_NAMES.index(key[1])
            else:
                i, j = key
            if len(vec) != dim:
                raise DimensionError(f"vector for {key!r} has length {len(vec)}")
            t[i][j] = [field.convert(s) for s in vec]
        tables.append(tuple(tuple(tuple(v) for v in row) for row in t))
    return Trialgebra(StructureConstants(dim, field, tuple(tables)), name, provenance)


def zero_algebra(dim: int, field: FieldDescriptor = QI) -> Trialgebra:
    return make_algebra(dim, field)


def basis_vector(dim: int, i: int, field: FieldDescriptor) -> tuple:
    return tuple(field.one() if k == i else field.zero() for k in range(dim))


def product(table, u: Sequence, v: Sequence, zero):
    """Bilinear extension of one structure-constant table."""
    n = len(u)
    out = [zero] * n
    for i in range(n):
        ui = u[i]
        if not ui:
            continue
        for j in range(n):
            vj = v[j]
            if not vj:
                continue
            w = ui * vj
            for k, c in enumerate(table[i][j]):
                if c:
                    out[k] = out[k] + w * c
    return tuple(out)


def evaluate(A: Trialgebra, op: OpKind, u: Sequence, v: Sequence) -> tuple:
    n = A.dim
    if len(u) != n or len(v) != n:
        raise DimensionError(f"vectors must have length {n}")
    for s in itertools.chain(u, v):
        if not A.field.contains(s):
            raise DimensionError(f"{s!r} is not in {A.field.label}")
    return product(A.constants.c[op], u, v, A.field.zero())


# -- basis changes ------------------------------------------------------------


@dataclass(frozen=True)
class BasisChange:
    dim: int
    field: FieldDescriptor
    matrix: tuple  # rows; column j is the image of e_j

    def __post_init__(self):
        _check_dim(self.dim)
        if len(self.matrix) != self.dim or any(len(r) != self.dim for r in self.matrix):
            raise DimensionError("matrix shape does not match dimension")

    @classmethod
    def from_rows(cls, rows, field: FieldDescriptor = QI) -> "BasisChange":
        return cls(len(rows), field, tuple(tuple(field.convert(s) for s in r) for r in rows))

    @classmethod
    def identity(cls, dim: int, field: FieldDescriptor = QI) -> "BasisChange":
        return cls(dim, field, tuple(basis_vector(dim, i, field) for i in range(dim)))

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.matrix)

    def apply(self, u: Sequence) -> tuple:
        zero = self.field.zero()
        return tuple(sum((r[j] * u[j] for j in range(self.dim)), zero) for r in self.matrix)

    def __matmul__(self, other: "BasisChange") -> "BasisChange":
        n = self.dim
        zero = self.field.zero()
        rows = tuple(
            tuple(
                sum((self.matrix[i][k] * other.matrix[k][j] for k in range(n)), zero)
                for j in range(n)
            )
            for i in range(n)
        )
        return BasisChange(n, self.field, rows)

    def to_json(self):
        return [[self.field.render(s) for s in r] for r in self.matrix]


def _det(m, zero):
    n = len(m)
    if n == 1:
        return m[0][0]
    total = zero
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [r[:j] + r[j + 1:] for r in m[1:]]
        term = m[0][j] * _det(minor, zero)
        total = total + term if j % 2 == 0 else total - term
    return total


def det(g: BasisChange):
    return _det([list(r) for r in g.matrix], g.field.zero())


def invert(g: BasisChange) -> BasisChange:
    """Inverse via the adjugate (cofactor formula; n <= 4)."""
    n = g.dim
    zero = g.field.zero()
    d = det(g)
    if not d:
        raise InvalidBasisChange("singular basis change (det = 0)")
    if n == 1:
        return BasisChange(1, g.field, ((d.inverse(),),))
    dinv = d.inverse()
    m = [list(r) for r in g.matrix]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            # adj[i][j] = (-1)^(i+j) * minor(j, i)
            minor = [r[:i] + r[i + 1:] for k, r in enumerate(m) if k != j]
            cof = _det(minor, zero)
            if (i + j) % 2:
                cof = -cof
            row.append(cof * dinv)
        rows.append(tuple(row))
    return BasisChange(n, g.field, tuple(rows))


def transport(A: Trialgebra, g: BasisChange, ginv: BasisChange | None = None) -> Trialgebra:
    if g.dim != A.dim:
        raise DimensionError("basis change and algebra dimensions differ")
    if g.field != A.field:
        raise FieldMismatchError("basis change and algebra fields differ")
    if ginv is None:
        ginv = invert(g)
    n = A.dim
    zero = A.field.zero()
    cols = [g.column(j) for j in range(n)]
    tables = []
    for op in OPS:
        t = A.constants.c[op]
        tables.append(
            tuple(
                tuple(ginv.apply(product(t, cols[i], cols[j], zero)) for j in range(n))
                for i in range(n)
            )
        )
    return Trialgebra(StructureConstants(n, A.field, tuple(tables)))


# -- JSON file format -----------------------------------------------------------


def algebra_to_json(A: Trialgebra) -> dict:
    f = A.field
    obj: dict = {"dim": A.dim, "field": f.to_json()}
    if A.name is not None:
        obj["name"] = A.name
    obj["ops"] = {
        op.key: [[[f.render(s) for s in vec] for vec in row] for row in A.constants.c[op]]
        for op in OPS
    }
    if A.provenance is not None:
        obj["provenance"] = A.provenance
    return obj


def dumps_algebra(A: Trialgebra, compact: bool = False) -> str:
    if compact:
        return json.dumps(algebra_to_json(A), separators=(",", ":"))
    return json.dumps(algebra_to_json(A))


def algebra_from_json(obj, source: str = "<algebra>") -> Trialgebra:
    def fail(msg):
        raise AlgebraFormatError(f"{source}: {msg}")

    if not isinstance(obj, dict):
        fail("top level must be an object")
    unknown = set(obj) - {"dim", "field", "ops", "name", "provenance"}
    if unknown:
        fail(f"unknown keys {sorted(unknown)}")
    n = obj.get("dim")
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_DIM:
        fail(f"'dim' must be an integer in 1..{MAX_DIM}")
    try:
        field = FieldDescriptor.from_json(obj.get("field"))
    except ValueError as exc:
        fail(str(exc))
    ops = obj.get("ops", {})
    if not isinstance(ops, dict):
        fail("'ops' must be an object")
    bad = set(ops) - {"vdash", "dashv", "perp"}
    if bad:
        fail(f"unknown operations {sorted(bad)}")
    zero = field.zero()
    tables = []
    for op in OPS:
        if op.key not in ops:
            tables.append(tuple(tuple((zero,) * n for _ in range(n)) for _ in range(n)))
            continue
        raw = ops[op.key]
        if not isinstance(raw, list) or len(raw) != n:
            fail(f"ops.{op.key} must be a {n}x{n} array")
        rows = []
        for i, row in enumerate(raw):
            if not isinstance(row, list) or len(row) != n:
                fail(f"ops.{op.key}[{i}] must have {n} entries")
            vecs = []
            for j, vec in enumerate(row):
                if not isinstance(vec, list) or len(vec) != n:
                    fail(f"ops.{op.key}[{i}][{j}] must be a length-{n} vector")
                try:
                    vecs.append(tuple(field.parse(s) for s in vec))
                except ScalarParseError as exc:
                    fail(f"ops.{op.key}[{i}][{j}]: {exc}")
            rows.append(tuple(vecs))
        tables.append(tuple(rows))
    prov = obj.get("provenance")
    return Trialgebra(StructureConstants(n, field, tuple(tables)), obj.get("name"), prov)


def loads_algebra(text: str, source: str = "<algebra>") -> Trialgebra:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        lines = text.splitlines()
        line = lines[exc.lineno - 1] if exc.lineno <= len(lines) else "<end of input>"
        raise AlgebraFormatError(
            f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}\n    {line}"
        ) from None
    return algebra_from_json(obj, source)


def load_algebra(path) -> Trialgebra:
    path = Path(path)
    return loads_algebra(path.read_text(), str(path))


def describe(A: Trialgebra) -> str:
    """Human-readable nonzero products, e.g. ``x_|_x = x; y-|x = y``."""
    parts = []
    names = BASIS_NAMES
    for op in OPS:
        for i in range(A.dim):
            for j in range(A.dim):
                vec = A.constants.c[op][i][j]
                terms = []
                for k, s in enumerate(vec):
                    if not s:
                        continue
                    if s == 1:
                        terms.append(names[k])
                    else:
                        terms.append(f"{s}{names[k]}")
                if terms:
                    parts.append(f"{names[i]}{op.symbol}{names[j]} = {' + '.join(terms)}")
    return "; ".join(parts) if parts else "abelian"
