"""Isomorphism evidence: invariants, exhaustive GL_n(F_p) search, pairwise audits.

Over F_p the whole orbit of an algebra under ``GL_n(F_p)`` is computed in one
numpy contraction, so deciding isomorphism is a table lookup.  Over Q(i) the
answer is three-valued: invariants give trustworthy negatives, a small
library of candidate witnesses gives verified positives, and everything else
is ``unknown``.

The left annihilator of an operation is ``{u : u o v = 0 for all v}``, the
kernel of ``u -> (u o e_j)_j``; its dimension is ``n - rank`` of the
``n x n^2`` matrix ``M[i, (j, k)] = c[i][j][k]``.  The right annihilator uses
``M[j, (i, k)]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra import (
    OPS,
    BasisChange,
    OpKind,
    StructureConstants,
    Trialgebra,
    basis_vector,
    det,
    invert,
    product,
    transport,
)
from .catalog import (
    ENTRIES,
    CatalogError,
    admissible_assignments,
    instantiate,
    list_entries,
    sample_assignments,
)
from .fields import QI, FieldDescriptor, FieldMismatchError, FpElem
from .identities import is_triassociative
from .linalg import rank

MAX_GL_CANDIDATES = 1 << 20


@dataclass(frozen=True)
class OpInvariants:
    commutative: bool
    square_dim: int
    left_annihilator_dim: int
    right_annihilator_dim: int
    left_cube_dim: int  # span of (a o b) o c
    right_cube_dim: int  # span of a o (b o c)


@dataclass(frozen=True)
class InvariantVector:
    per_op: tuple  # OpInvariants for vdash, dashv, perp
    vdash_eq_dashv: bool
    vdash_eq_perp: bool
    dashv_eq_perp: bool

    def to_json(self) -> dict:
        out = {
            op.key: {
                "commutative": inv.commutative,
                "square_dim": inv.square_dim,
                "left_annihilator_dim": inv.left_annihilator_dim,
                "right_annihilator_dim": inv.right_annihilator_dim,
                "left_cube_dim": inv.left_cube_dim,
                "right_cube_dim": inv.right_cube_dim,
            }
            for op, inv in zip(OPS, self.per_op)
        }
        out["equal"] = {
            "vdash=dashv": self.vdash_eq_dashv,
            "vdash=perp": self.vdash_eq_perp,
            "dashv=perp": self.dashv_eq_perp,
        }
        return out

    def differences(self, other: "InvariantVector") -> list[str]:
        diffs = []
        for op, a, b in zip(OPS, self.per_op, other.per_op):
            for name in _OP_FIELDS:
                va, vb = getattr(a, name), getattr(b, name)
                if va != vb:
                    diffs.append(f"{op.key}.{name}: {va} vs {vb}")
        for name in ("vdash_eq_dashv", "vdash_eq_perp", "dashv_eq_perp"):
            va, vb = getattr(self, name), getattr(other, name)
            if va != vb:
                diffs.append(f"{name}: {va} vs {vb}")
        return diffs


_OP_FIELDS = ("commutative", "square_dim", "left_annihilator_dim", "right_annihilator_dim",
              "left_cube_dim", "right_cube_dim")


def invariants(A: Trialgebra) -> InvariantVector:
    n = A.dim
    zero = A.field.zero()
    basis = [basis_vector(n, i, A.field) for i in range(n)]
    cube = list(itertools.product(range(n), repeat=3))
    per_op = []
    for op in OPS:
        c = A.constants.c[op]
        comm = all(c[i][j] == c[j][i] for i in range(n) for j in range(n))
        square = [list(c[i][j]) for i in range(n) for j in range(n)]
        left = [[c[i][j][k] for j in range(n) for k in range(n)] for i in range(n)]
        right = [[c[i][j][k] for i in range(n) for k in range(n)] for j in range(n)]
        per_op.append(
            OpInvariants(
                comm, rank(square, zero), n - rank(left, zero), n - rank(right, zero),
                rank([list(product(c, c[i][j], basis[k], zero)) for i, j, k in cube], zero),
                rank([list(product(c, basis[i], c[j][k], zero)) for i, j, k in cube], zero),
            )
        )
    t = A.constants.c
    return InvariantVector(tuple(per_op), t[0] == t[1], t[0] == t[2], t[1] == t[2])


@dataclass(frozen=True)
class IsoResult:
    kind: str  # "isomorphic" | "not_isomorphic" | "unknown"
    witness: BasisChange | None = None
    method: str = ""
    detail: str = ""

    @property
    def isomorphic(self) -> bool:
        return self.kind == "isomorphic"

    def to_json(self) -> dict:
        out = {"result": self.kind, "method": self.method}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.detail:
            out["detail"] = self.detail
        return out


# -- finite fields --------------------------------------------------------------


def to_array(A: Trialgebra) -> np.ndarray:
    if not A.field.is_finite:
        raise FieldMismatchError("array form needs a finite field")
    return np.array(
        [[[[s.value for s in vec] for vec in row] for row in A.constants.c[op]] for op in OPS],
        dtype=np.int64,
    )


def from_array(arr, field: FieldDescriptor, name=None, provenance=None) -> Trialgebra:
    p = field.p
    n = arr.shape[1]
    tables = tuple(
        tuple(
            tuple(tuple(FpElem(int(arr[o, i, j, k]), p) for k in range(n)) for j in range(n))
            for i in range(n)
        )
        for o in range(3)
    )
    return Trialgebra(StructureConstants(n, field, tables), name, provenance)


def _det_mod(m, p: int) -> int:
    n = len(m)
    if n == 1:
        return m[0][0] % p
    return sum(
        (-1) ** j * m[0][j] * _det_mod([r[:j] + r[j + 1:] for r in m[1:]], p)
        for j in range(n)
    ) % p


@lru_cache(maxsize=None)
def gl_group(n: int, p: int):
    """All invertible n x n matrices mod p (identity first, then lexicographic)
    together with their inverses, as ``(M, n, n)`` int arrays."""
    if p ** (n * n) > MAX_GL_CANDIDATES:
        raise ValueError(f"GL_{n}(F_{p}) is too large for exhaustive search")
    field = FieldDescriptor("Fp", p)
    eye = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    mats = [eye]
    for entries in itertools.product(range(p), repeat=n * n):
        m = tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))
        if m != eye and _det_mod([list(r) for r in m], p):
            mats.append(m)
    invs = []
    for m in mats:
        g = BasisChange.from_rows(m, field)
        invs.append([[s.value for s in r] for r in invert(g).matrix])
    G = np.array(mats, dtype=np.int64)
    G.setflags(write=False)
    Ginv = np.array(invs, dtype=np.int64)
    Ginv.setflags(write=False)
    return G, Ginv


def orbit_array(arr: np.ndarray, p: int) -> np.ndarray:
    """``out[g] = transport(arr, G[g])`` for every g in GL_n(F_p)."""
    n = arr.shape[1]
    G, Ginv = gl_group(n, p)
    out = np.einsum("gai,gbj,oabm,gkm->goijk", G, G, arr, Ginv, optimize=True)
    return out % p


def orbit_index(arr: np.ndarray, p: int) -> dict:
    """Map each orbit member's bytes to the first g index producing it."""
    orb = orbit_array(arr, p).reshape(len(gl_group(arr.shape[1], p)[0]), -1)
    index: dict = {}
    for g, row in enumerate(orb):
        index.setdefault(row.astype(np.uint16).tobytes(), g)
    return index


def array_key(arr: np.ndarray) -> bytes:
    return arr.reshape(-1).astype(np.uint16).tobytes()


def witness_matrix(n: int, p: int, g: int) -> BasisChange:
    G, _ = gl_group(n, p)
    return BasisChange.from_rows(G[g].tolist(), FieldDescriptor("Fp", p))


def _same_setting(A: Trialgebra, B: Trialgebra) -> None:
    if A.field != B.field:
        raise FieldMismatchError(f"{A.field.label} vs {B.field.label}")
    if A.dim != B.dim:
        raise ValueError(f"dimension mismatch: {A.dim} vs {B.dim}")


def verified(A: Trialgebra, B: Trialgebra, g: BasisChange) -> bool:
    return transport(A, g).same_tables(B)


def iso_exhaustive(A: Trialgebra, B: Trialgebra) -> IsoResult:
    """Try every invertible matrix over F_p; never returns ``unknown``."""
    _same_setting(A, B)
    if not A.field.is_finite:
        raise FieldMismatchError("exhaustive search needs a finite field")
    p, n = A.field.p, A.dim
    target = to_array(B).reshape(-1)
    orb = orbit_array(to_array(A), p).reshape(-1, target.size)
    hits = np.flatnonzero((orb == target).all(axis=1))
    if hits.size == 0:
        G, _ = gl_group(n, p)
        return IsoResult("not_isomorphic", method="exhaustive", detail=f"{len(G)} matrices tried")
    g = witness_matrix(n, p, int(hits[0]))
    if not verified(A, B, g):  # pragma: no cover - guards the numpy path
        raise AssertionError("batched transport disagrees with exact transport")
    return IsoResult("isomorphic", g, "exhaustive")


# -- Q(i) -----------------------------------------------------------------------


def _coefficients(A: Trialgebra) -> set:
    return {s for op in OPS for row in A.constants.c[op] for vec in row for s in vec if s}


def witness_library(A: Trialgebra, B: Trialgebra, max_scalars: int = 24):
    """Permutation matrices composed with diagonal scalings."""
    field = A.field
    n = A.dim
    scalars = [field.one(), -field.one()]
    for s in sorted(_coefficients(A) | _coefficients(B), key=str):
        for t in (s, s.inverse()):
            if t not in scalars:
                scalars.append(t)
    scalars = scalars[:max_scalars]
    zero = field.zero()
    for perm in itertools.permutations(range(n)):
        for diag in itertools.product(scalars, repeat=n):
            rows = [[zero] * n for _ in range(n)]
            for j, i in enumerate(perm):
                rows[i][j] = diag[j]
            yield BasisChange(n, field, tuple(tuple(r) for r in rows))


def iso_decide(A: Trialgebra, B: Trialgebra) -> IsoResult:
    _same_setting(A, B)
    if A.field.is_finite:
        return iso_exhaustive(A, B)
    diffs = invariants(A).differences(invariants(B))
    if diffs:
        return IsoResult("not_isomorphic", method="invariant", detail="; ".join(diffs))
    for g in witness_library(A, B):
        if verified(A, B, g):
            return IsoResult("isomorphic", g, "witness-library")
    return IsoResult("unknown", method="witness-library", detail="invariants agree; no witness found")


# -- audit ----------------------------------------------------------------------


def instance_label(A: Trialgebra) -> str:
    prov = A.provenance or {}
    cls = prov.get("class", A.name or "?")
    params = prov.get("params") or {}
    if not params:
        return cls
    def show(v):
        if isinstance(v, list):
            return v[0] if v[1] == "0" else f"{v[0]}+{v[1]}i"
        return str(v)
    return cls + "@" + ",".join(f"{k}={show(v)}" for k, v in params.items())


def _lift_int(v: int, p: int) -> int:
    return v if v <= p // 2 else v - p


def lift_to_qi(A: Trialgebra, B: Trialgebra, g: BasisChange) -> str:
    """Re-run an F_p witness over Q(i) using symmetric integer lifts."""
    p = A.field.p
    lifted = []
    for X in (A, B):
        prov = X.provenance or {}
        if "class" not in prov:
            return "not attempted: no catalog provenance"
        params = {k: _lift_int(v, p) for k, v in prov["params"].items()}
        try:
            lifted.append(instantiate(prov["class"], params, QI))
        except CatalogError as exc:
            return f"not attempted: parameters do not lift ({exc})"
    gq = BasisChange.from_rows([[_lift_int(s.value, p) for s in r] for r in g.matrix], QI)
    if not det(gq):
        return "fails: lifted witness is singular over Q(i)"
    return "lifts" if verified(lifted[0], lifted[1], gq) else "fails: witness does not lift to Q(i)"


def _group_of(A: Trialgebra):
    cls = (A.provenance or {}).get("class")
    return ENTRIES[cls].group if cls in ENTRIES else None


def _orbit_job(args):
    arr, p = args
    return orbit_index(arr, p)


def audit_pairwise(instances: list[Trialgebra], field: FieldDescriptor, jobs: int = 1) -> dict:
    """Pairwise isomorphism matrix with collisions and unknowns pulled out."""
    if not instances:
        return {"field": field.label, "instances": [], "pairs": [], "collisions": [],
                "unknown": [], "cross_group": []}
    for A in instances:
        if A.field != field or A.dim != instances[0].dim:
            raise ValueError("audit instances must share field and dimension")
    labels = [instance_label(A) for A in instances]
    pairs, collisions, unknown, cross = [], [], [], []
    if field.is_finite:
        p = field.p
        arrays = [to_array(A) for A in instances]
        if jobs > 1:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(jobs) as pool:
                orbits = list(pool.map(_orbit_job, [(a, p) for a in arrays]))
        else:
            orbits = [orbit_index(a, p) for a in arrays]
        keys = [array_key(a) for a in arrays]
        n = instances[0].dim
        total = len(gl_group(n, p)[0])

        def decide(i, j):
            g = orbits[i].get(keys[j])
            if g is None:
                return IsoResult("not_isomorphic", method="exhaustive", detail=f"{total} matrices tried")
            w = witness_matrix(n, p, g)
            if not verified(instances[i], instances[j], w):  # pragma: no cover
                raise AssertionError("witness failed exact re-verification")
            return IsoResult("isomorphic", w, "exhaustive")
    else:
        def decide(i, j):
            return iso_decide(instances[i], instances[j])

    for i, j in itertools.combinations(range(len(instances)), 2):
        res = decide(i, j)
        row = {"a": labels[i], "b": labels[j], **res.to_json()}
        pairs.append(row)
        A, B = instances[i], instances[j]
        ca = (A.provenance or {}).get("class", A.name)
        cb = (B.provenance or {}).get("class", B.name)
        if res.isomorphic:
            if ca != cb:
                finding = dict(row)
                if field.is_finite:
                    finding["epistemic"] = f"collision over F_{field.p}; verify witness lifts to Q(i)"
                    finding["lift"] = lift_to_qi(A, B, res.witness)
                collisions.append(finding)
            ga, gb = _group_of(A), _group_of(B)
            if ga and gb and ga != gb:
                cross.append(dict(row, groups=[ga, gb]))
        elif res.kind == "unknown":
            unknown.append(row)
    return {
        "field": field.label,
        "instances": [
            {"label": l, "triassociative": is_triassociative(A)} for l, A in zip(labels, instances)
        ],
        "pairs": pairs,
        "collisions": collisions,
        "unknown": unknown,
        "cross_group": cross,
    }


def catalog_instances(dim: int, field: FieldDescriptor, params: str = "all") -> list[Trialgebra]:
    """Instances of every catalog class: ``all`` admissible points over F_p, or
    ``sample:k`` (k evenly spaced admissible points, first and last included;
    over Q(i) the k-point sampler)."""
    mode, _, arg = params.partition(":")
    if mode not in ("all", "sample") or (mode == "sample" and not arg.isdigit()):
        raise ValueError(f"--params must be 'all' or 'sample:k', got {params!r}")
    k = int(arg) if arg else 0
    out = []
    for entry in list_entries(dim):
        if field.is_finite:
            pts = list(admissible_assignments(entry.id, field))
            if mode == "sample":
                pts = pick_evenly(pts, k)
        else:
            pts = sample_assignments(entry.id, field, max(k, 3))
            if mode == "sample":
                pts = pick_evenly(pts, k)
        out.extend(instantiate(entry.id, a, field) for a in pts)
    return out


def pick_evenly(items: list, k: int) -> list:
    if k <= 0 or len(items) <= k:
        return list(items)
    if k == 1:
        return [items[0]]
    idx = sorted({round(i * (len(items) - 1) / (k - 1)) for i in range(k)})
    return [items[i] for i in idx]
