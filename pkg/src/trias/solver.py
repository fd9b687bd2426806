"""Replay of the constraint-based classification for a fixed |- structure.

Unknown structure constants are named ``a1..a{n^3}`` for -| and ``b1..`` for
_|_, slot ``(i, j, k)`` (coefficient of ``e_k`` in ``e_i o e_j``) getting
index ``(i*n + j)*n + k + 1``.  In dimension 2 that is::

    x -| x = a1 x + a2 y    x -| y = a3 x + a4 y
    y -| x = a5 x + a6 y    y -| y = a7 x + a8 y

Simplification only uses two moves:

* substitution from an equation ``c*v + r`` where ``r`` avoids ``v`` and has
  degree <= 1 in each variable (``c*v^k`` gives ``v = 0``);
* case splits on ``v*(v - c)``.

Anything else stays in the residual.  :func:`enumerate_fp` is the independent
brute-force oracle over small prime fields.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterator

import numpy as np

from .algebra import OPS, OpKind, StructureConstants, Trialgebra, basis_vector, product
from .catalog import (
    AssocEntry,
    admissible_assignments,
    entries_in_group,
    get_assoc,
    instantiate,
)
from .fields import QI, FieldDescriptor
from .identities import (
    AxiomPack,
    builtin_axioms,
    diassociative_axioms,
    eval_term,
    is_triassociative,
)
from .isomorphism import array_key, gl_group, instance_label, orbit_array, to_array, from_array, verified
from .algebra import BasisChange
from .poly import Poly, mono_key

SUPPORTED_PRIMES = (2, 3, 5)
PRUNE_LIMIT = 40  # residual size above which redundancy pruning is skipped


def unknown_names(dim: int) -> tuple[list[str], list[str]]:
    m = dim ** 3
    return [f"a{i}" for i in range(1, m + 1)], [f"b{i}" for i in range(1, m + 1)]


def _slot(i: int, j: int, k: int, n: int) -> int:
    return (i * n + j) * n + k


def _fixed_table(vdash, field: FieldDescriptor):
    table = vdash.table if isinstance(vdash, AssocEntry) else vdash
    return tuple(tuple(tuple(field.convert(s) for s in vec) for vec in row) for row in table)


def symbolic_tables(vdash, field: FieldDescriptor = QI):
    """``(vdash, dashv, perp)`` tables with Poly entries: |- fixed, the others unknown."""
    fixed = _fixed_table(vdash, field)
    n = len(fixed)
    a, b = unknown_names(n)
    const = [[tuple(Poly.const(s, field) for s in vec) for vec in row] for row in fixed]

    def unknown_table(names):
        return tuple(
            tuple(
                tuple(Poly.var(names[_slot(i, j, k, n)], field) for k in range(n))
                for j in range(n)
            )
            for i in range(n)
        )

    return (tuple(tuple(r) for r in const), unknown_table(a), unknown_table(b))


@dataclass
class ConstraintSystem:
    dim: int
    field: FieldDescriptor
    vdash: tuple
    equations: list = dc_field(default_factory=list)  # monic Polys, deduplicated
    provenance: list = dc_field(default_factory=list)  # per equation: list of (identity, assignment, component)

    def equations_from(self, identity: str) -> list[Poly]:
        return [e for e, prov in zip(self.equations, self.provenance) if any(p[0] == identity for p in prov)]

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "field": self.field.label,
            "equations": [
                {"poly": str(e), "sources": [f"{i}[{a}].{c}" for i, a, c in prov]}
                for e, prov in zip(self.equations, self.provenance)
            ],
        }


def generate_constraints(
    vdash, pack: AxiomPack | None = None, field: FieldDescriptor = QI, skip_vdash_only: bool = True
) -> ConstraintSystem:
    """One polynomial per identity, basis assignment and output component."""
    pack = pack or builtin_axioms()
    tables = symbolic_tables(vdash, field)
    n = len(tables[0])
    zero = Poly({}, field)
    basis = [tuple(Poly.const(int(i == k), field) for k in range(n)) for i in range(n)]

    def prod(op, u, v):
        return product(tables[op], u, v, zero)

    system = ConstraintSystem(n, field, tables[0])
    index: dict = {}
    names = "xyzw"
    for identity in pack:
        if skip_vdash_only and identity.ops <= {OpKind.VDASH}:
            continue
        vs = identity.variables
        for combo in itertools.product(range(n), repeat=len(vs)):
            env = {v: basis[i] for v, i in zip(vs, combo)}
            lhs = eval_term(identity.lhs, prod, env)
            rhs = eval_term(identity.rhs, prod, env)
            word = "".join(names[i] for i in combo)
            for k in range(n):
                d = lhs[k] - rhs[k]
                if d.is_zero():
                    continue
                d = d.monic()
                src = (identity.name, word, k)
                if d in index:
                    system.provenance[index[d]].append(src)
                else:
                    index[d] = len(system.equations)
                    system.equations.append(d)
                    system.provenance.append([src])
    return system


# -- simplification -------------------------------------------------------------


@dataclass
class SolutionFamily:
    assignment: dict  # var -> Poly in the free variables
    residual: list
    case_path: list  # (equation, var, root)
    resolved: bool
    note: str = ""

    def free_variables(self, all_vars: list[str]) -> list[str]:
        return [v for v in all_vars if v not in self.assignment]

    def value_of(self, var: str, field: FieldDescriptor) -> Poly:
        return self.assignment.get(var, Poly.var(var, field))

    def to_json(self, all_vars: list[str]) -> dict:
        return {
            "assignment": {v: str(self.assignment[v]) for v in all_vars if v in self.assignment},
            "free": self.free_variables(all_vars),
            "residual": [str(r) for r in self.residual],
            "case_path": [{"split": str(e), "var": v, "root": str(r)} for e, v, r in self.case_path],
            "resolved": self.resolved,
            **({"note": self.note} if self.note else {}),
        }


@dataclass
class SimplifyResult:
    system: ConstraintSystem
    variables: list
    checkpoint: dict  # state at the first substitution fixpoint
    families: list

    def tables(self, family: SolutionFamily):
        """Family's (vdash, dashv, perp) templates in its free variables."""
        tables = symbolic_tables_for(self.system)
        return tuple(
            tuple(tuple(tuple(c.substitute(family.assignment) for c in vec) for vec in row) for row in t)
            for t in tables
        )

    def to_json(self) -> dict:
        return {
            "field": self.system.field.label,
            "equations": len(self.system.equations),
            "checkpoint": {
                "assignment": {
                    v: str(self.checkpoint["assignment"][v])
                    for v in self.variables
                    if v in self.checkpoint["assignment"]
                },
                "residual": [str(r) for r in self.checkpoint["residual"]],
            },
            "families": [f.to_json(self.variables) for f in self.families],
        }


def symbolic_tables_for(system: ConstraintSystem):
    vdash = tuple(tuple(tuple(c.constant_term() for c in vec) for vec in row) for row in system.vdash)
    return symbolic_tables(vdash, system.field)


def _normalize(polys, assignment) -> list | None:
    out = {}
    for p in polys:
        q = p.substitute(assignment)
        if q.is_zero():
            continue
        if q.is_constant():
            return None
        q = q.monic()
        out.setdefault(q, None)
    return sorted(out, key=lambda q: (q.sort_key(), str(q)))


def _reduce(g: Poly, pivots: dict) -> Poly:
    while True:
        hit = [m for m in g.terms if m in pivots]
        if not hit:
            return g
        m = max(hit, key=mono_key)
        g = g - pivots[m].scale(g.terms[m])


def _in_span(target: Poly, gens: list[Poly]) -> bool:
    """Whether ``target`` is a linear combination of ``gens``."""
    pivots: dict = {}
    for g in gens:
        g = _reduce(g, pivots)
        if g:
            g = g.monic()
            pivots[g.leading()[0]] = g
    return _reduce(target, pivots).is_zero()


def _prune(eqs: list[Poly]) -> list[Poly]:
    """Drop relations implied by the others with multipliers of degree <= 1.

    Sound for the solution set: a dropped relation vanishes wherever the
    kept ones do.
    """
    kept = list(eqs)
    for q in sorted(eqs, key=lambda q: (q.sort_key(), str(q)), reverse=True):
        others = [r for r in kept if r != q]
        if len(others) == len(kept):
            continue
        field = q.field
        vs = q.sorted_variables()
        gens = list(others) + [r * Poly.var(v, field) for r in others for v in vs]
        if gens and _in_span(q, gens):
            kept = others
    return kept


def _substitution(eq: Poly):
    """A (var, value) rule read off ``eq``, or None."""
    vs = eq.sorted_variables()
    if len(eq.terms) == 1 and len(vs) == 1:
        return vs[0], Poly({}, eq.field)
    for v in reversed(vs):
        lin = eq.linear_in(v)
        if lin is None:
            continue
        c, rest = lin
        if all(rest.degree(w) <= 1 for w in rest.variables()):
            return v, rest.scale(-c.inverse())
    return None


def _split(eq: Poly):
    """Roots when ``eq`` is ``v*(v - c)`` with c a nonzero constant."""
    vs = eq.sorted_variables()
    if len(vs) != 1:
        return None
    coeffs = eq.univariate_coeffs(vs[0])
    if len(coeffs) == 3 and not coeffs[0] and coeffs[1] and coeffs[2]:
        c = -coeffs[1] / coeffs[2]
        return vs[0], [eq.field.zero(), c]
    return None


def simplify(system: ConstraintSystem, max_splits: int = 16) -> SimplifyResult:
    if max_splits < 0:
        raise ValueError("max_splits must be >= 0")
    field = system.field
    a, b = unknown_names(system.dim)
    variables = a + b
    families: list[SolutionFamily] = []
    checkpoint: dict = {}
    stack = [({}, list(system.equations), [], 0)]
    while stack:
        assignment, eqs, path, used = stack.pop()
        eqs = _normalize(eqs, assignment)
        while eqs is not None:
            rule = next((r for r in map(_substitution, eqs) if r), None)
            if rule is None:
                break
            v, value = rule
            assignment = {w: p.substitute({v: value}) for w, p in assignment.items()}
            assignment[v] = value
            eqs = _normalize(eqs, {v: value})
        if eqs is None:
            continue  # inconsistent branch
        if len(eqs) <= PRUNE_LIMIT:
            eqs = _prune(eqs)
        if not path and not checkpoint:
            checkpoint = {"assignment": dict(assignment), "residual": list(eqs)}
        if not eqs:
            families.append(SolutionFamily(assignment, [], path, True))
            continue
        split = next((s for s in map(_split, eqs) if s), None)
        if split is None:
            families.append(SolutionFamily(assignment, eqs, path, False, "no splittable equation"))
            continue
        if used >= max_splits:
            families.append(SolutionFamily(assignment, eqs, path, False, "split budget exhausted"))
            continue
        v, roots = split
        eq = next(e for e in eqs if _split(e) == split)
        # push in reverse so roots are explored in order
        for r in reversed(roots):
            const = Poly.const(r, field)
            new_assign = {w: p.substitute({v: const}) for w, p in assignment.items()}
            new_assign[v] = const
            stack.append((new_assign, eqs, path + [(eq, v, r)], used + 1))
    return SimplifyResult(system, variables, checkpoint, families)


def solve(vdash_id: str, field: FieldDescriptor = QI, max_splits: int = 16) -> SimplifyResult:
    return simplify(generate_constraints(get_assoc(vdash_id), field=field), max_splits)


def family_points(result: SimplifyResult, family: SolutionFamily) -> Iterator[dict]:
    """Every F_p point of a family: free variables swept, residuals enforced."""
    field = result.system.field
    if not field.is_finite:
        raise ValueError("points can only be swept over a finite field")
    free = family.free_variables(result.variables)
    ready = [[] for _ in free]
    for r in family.residual:
        ready[max(free.index(v) for v in r.variables())].append(r)
    elems = list(field.elements())
    vals: dict = {}

    def rec(d):
        if d == len(free):
            point = {v: (family.assignment[v].evaluate(vals, field) if v in family.assignment else vals[v])
                     for v in result.variables}
            yield point
            return
        for x in elems:
            vals[free[d]] = x
            if all(not r.evaluate(vals, field) for r in ready[d]):
                yield from rec(d + 1)
        vals.pop(free[d], None)

    yield from rec(0)


def point_algebra(vdash, point: dict, field: FieldDescriptor) -> Trialgebra:
    fixed = _fixed_table(vdash, field)
    n = len(fixed)
    a, b = unknown_names(n)

    def table(names):
        return tuple(
            tuple(tuple(point[names[_slot(i, j, k, n)]] for k in range(n)) for j in range(n))
            for i in range(n)
        )

    return Trialgebra(StructureConstants(n, field, (fixed, table(a), table(b))))


# -- brute force over F_p -------------------------------------------------------


def _candidates(p: int, m: int) -> np.ndarray:
    """All of F_p^m, first coordinate most significant."""
    idx = np.arange(p ** m, dtype=np.int64)
    powers = p ** np.arange(m - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % p


def _batch_term(term, tables, n: int, p: int, N: int):
    """Term value for every basis assignment: array (N, n, n, n, n) over (x, y, z, out)."""
    from .identities import Var

    if isinstance(term, Var):
        axis = "xyz".index(term.name)
        shape = [1, 1, 1, 1, n]
        shape[1 + axis] = n
        eye = np.eye(n, dtype=np.int64).reshape(shape)
        return np.broadcast_to(eye, (N, n, n, n, n))
    u = _batch_term(term.left, tables, n, p, N)
    v = _batch_term(term.right, tables, n, p, N)
    t = tables[term.op]
    return np.einsum("Nxyzi,Nxyzj,Nijm->Nxyzm", u, v, t, optimize=True) % p


def _batch_filter(identities, tables, n: int, p: int, N: int) -> np.ndarray:
    ok = np.ones(N, dtype=bool)
    for identity in identities:
        lhs = _batch_term(identity.lhs, tables, n, p, N)
        rhs = _batch_term(identity.rhs, tables, n, p, N)
        ok &= (lhs == rhs).reshape(N, -1).all(axis=1)
    return ok


def _staged(identities, fixed: dict, free_op: OpKind, n: int, p: int, chunk: int = 1 << 15):
    """Indices of free-op tables passing ``identities`` given the fixed tables."""
    m = n ** 3
    cands = _candidates(p, m).reshape(-1, n, n, n)
    keep = []
    for start in range(0, len(cands), chunk):
        block = cands[start:start + chunk]
        N = len(block)
        tables = {op: np.broadcast_to(t, (N, n, n, n)) for op, t in fixed.items()}
        tables[free_op] = block
        keep.append(block[_batch_filter(identities, tables, n, p, N)])
    return np.concatenate(keep) if keep else np.zeros((0, n, n, n), dtype=np.int64)


def enumerate_fp(vdash, p: int) -> Iterator[Trialgebra]:
    """Every triassociative algebra over F_p with the given |- table.

    Stage one keeps the -| tables satisfying the diassociative identities;
    stage two sweeps _|_ tables against the remaining six.  Every emitted
    algebra is re-checked with the generic checker.
    """
    if p not in SUPPORTED_PRIMES:
        raise ValueError(f"enumeration supports p in {SUPPORTED_PRIMES}, got {p}")
    field = FieldDescriptor("Fp", p)
    fixed = _fixed_table(vdash, field)
    n = len(fixed)
    if n > 2:
        raise ValueError("enumeration is limited to dimension <= 2")
    V = np.array([[[s.value for s in vec] for vec in row] for row in fixed], dtype=np.int64)
    pack = builtin_axioms()
    stage1 = [i for i in diassociative_axioms() if not i.ops <= {OpKind.VDASH}]
    stage2 = [i for i in pack if OpKind.PERP in i.ops]
    dashvs = _staged(stage1, {OpKind.VDASH: V}, OpKind.DASHV, n, p)
    for D in dashvs:
        perps = _staged(stage2, {OpKind.VDASH: V, OpKind.DASHV: D}, OpKind.PERP, n, p)
        for P in perps:
            A = from_array(np.stack([V, D, P]), field)
            if not is_triassociative(A):
                raise AssertionError("staged filter admitted a non-triassociative table")
            yield A


# -- completeness cross-check --------------------------------------------------------


def cross_check(vdash_id: str, p: int) -> dict:
    """Match every enumerated algebra to a catalog instance of its group."""
    field = FieldDescriptor("Fp", p)
    vdash = get_assoc(vdash_id)
    entries = entries_in_group(vdash_id)
    n = vdash.dim
    G, Ginv = gl_group(n, p)
    instances = []
    lookup: dict = {}
    for entry in entries:
        for vals in admissible_assignments(entry.id, field):
            A = instantiate(entry.id, vals, field)
            idx = len(instances)
            instances.append(A)
            orb = orbit_array(to_array(A), p)
            for g in range(len(G)):
                bucket = lookup.setdefault(array_key(orb[g]), {})
                bucket.setdefault(idx, g)
    hits = [0] * len(instances)
    per_class: dict = {e.id: 0 for e in entries}
    unmatched = []
    overlaps: dict = {}
    total = 0
    for B in enumerate_fp(vdash, p):
        total += 1
        found = lookup.get(array_key(to_array(B)))
        if not found:
            unmatched.append(B)
            continue
        for idx, g in found.items():
            w = BasisChange.from_rows(Ginv[g].tolist(), field)
            if not verified(B, instances[idx], w):  # pragma: no cover
                raise AssertionError("cross-check witness failed exact re-verification")
            hits[idx] += 1
        first = instances[next(iter(found))]
        per_class[first.provenance["class"]] += 1
        classes = sorted({instances[i].provenance["class"] for i in found})
        if len(classes) > 1:
            overlaps.setdefault(" ~ ".join(classes), 0)
            overlaps[" ~ ".join(classes)] += 1
    from .algebra import algebra_to_json, describe

    never = [instance_label(A) for A, h in zip(instances, hits) if not h]
    return {
        "vdash": vdash_id,
        "field": field.label,
        "group": [e.id for e in entries],
        "enumerated": total,
        "matched": total - len(unmatched),
        "unmatched": [
            {"products": describe(B), "algebra": algebra_to_json(B)} for B in unmatched
        ],
        "matches_per_class": per_class,
        "class_overlaps": overlaps,
        "catalog_instances": len(instances),
        "instances_never_hit": never,
    }


def match_family(result: SimplifyResult, family: SolutionFamily, entries=None) -> dict | None:
    """Catalog entry whose template equals the family's tables after renaming
    free variables to parameters, or None.  Only resolved families qualify."""
    if not family.resolved:
        return None
    field = result.system.field
    tables = result.tables(family)
    free = [v for v in family.free_variables(result.variables)
            if any(v in c.variables() for t in tables for row in t for vec in row for c in vec)]
    n = result.system.dim
    if entries is None:
        from .catalog import list_entries

        entries = list_entries(n)
    for entry in entries:
        if entry.constraints or len(entry.params) != len(free):
            continue
        for perm in itertools.permutations(entry.param_names):
            rename = {v: Poly.var(q, field) for v, q in zip(free, perm)}
            if all(
                tables[op][i][j][k].substitute(rename) == entry.tables[op][i][j][k].convert(field)
                for op in OPS for i in range(n) for j in range(n) for k in range(n)
            ):
                return {"entry": entry.id, "rename": {v: q for v, q in zip(free, perm)}}
    return None
