"""Identities in three variables: ASTs, a small parser, and basis checking.

Concrete syntax::

    identity := side "=" side
    side     := term | term OP term        (outer parentheses optional)
    term     := var | "(" term OP term ")"
    OP       := "|-" | "-|" | "_|_"
    var      := "x" | "y" | "z"

Checking an identity on every assignment of basis vectors to its variables
decides it on the whole space, since both sides are multilinear in their
variables when every variable occurs once per side.  Identities that repeat a
variable are still evaluated on basis tuples only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Callable, Iterable, Sequence, Union

from .algebra import OPS, OpKind, Trialgebra, basis_vector, product

VARIABLES = ("x", "y", "z")


class IdentityParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}" + (f": {text!r}" if text else ""))
        self.position = position


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Prod:
    op: OpKind
    left: "Term"
    right: "Term"

    def __str__(self):
        return f"({self.left} {self.op.symbol} {self.right})"


Term = Union[Var, Prod]


def variables_of(t: Term) -> list[str]:
    if isinstance(t, Var):
        return [t.name]
    return variables_of(t.left) + variables_of(t.right)


def ops_of(t: Term) -> set[OpKind]:
    if isinstance(t, Var):
        return set()
    return {t.op} | ops_of(t.left) | ops_of(t.right)


def render_term(t: Term, outer: bool = True) -> str:
    if isinstance(t, Var):
        return t.name
    inner = f"{render_term(t.left, False)} {t.op.symbol} {render_term(t.right, False)}"
    return inner if outer else f"({inner})"


@dataclass(frozen=True)
class Identity:
    name: str
    lhs: Term
    rhs: Term

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(sorted(set(variables_of(self.lhs))))

    @property
    def arity(self) -> int:
        return len(self.variables)

    @property
    def ops(self) -> set[OpKind]:
        return ops_of(self.lhs) | ops_of(self.rhs)

    def render(self) -> str:
        return f"{render_term(self.lhs)} = {render_term(self.rhs)}"

    def __str__(self):
        return f"{self.name}: {self.render()}"

    def same_relation(self, other: "Identity") -> bool:
        """Equal as an unordered pair of sides (names ignored)."""
        return {self.lhs, self.rhs} == {other.lhs, other.rhs}


@dataclass(frozen=True)
class AxiomPack:
    name: str
    identities: tuple[Identity, ...]

    def __iter__(self):
        return iter(self.identities)

    def __len__(self):
        return len(self.identities)

    def names(self) -> list[str]:
        return [i.name for i in self.identities]

    def restrict(self, ops: Iterable[OpKind], name: str | None = None) -> "AxiomPack":
        """Identities that only involve products from ``ops``."""
        allowed = set(ops)
        kept = tuple(i for i in self.identities if i.ops <= allowed)
        return AxiomPack(name or f"{self.name}|{','.join(o.key for o in sorted(allowed))}", kept)


# -- parser -------------------------------------------------------------------

_OPSYMS = [("_|_", OpKind.PERP), ("|-", OpKind.VDASH), ("-|", OpKind.DASHV)]


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "()=":
            tokens.append((ch, ch, i))
            i += 1
            continue
        for sym, op in _OPSYMS:
            if text.startswith(sym, i):
                tokens.append(("op", op, i))
                i += len(sym)
                break
        else:
            if ch in VARIABLES:
                tokens.append(("var", ch, i))
                i += 1
            else:
                raise IdentityParseError(f"unknown symbol {ch!r}", i, text)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind: str):
        tok = self.tokens[self.pos]
        if tok[0] != kind:
            want = {"var": "a variable", "op": "an operation symbol", "end": "end of input"}.get(
                kind, repr(kind)
            )
            got = "end of input" if tok[0] == "end" else repr(self.text[tok[2]:tok[2] + 3])
            raise IdentityParseError(f"expected {want}, found {got}", tok[2], self.text)
        self.pos += 1
        return tok

    def term(self) -> Term:
        tok = self.peek()
        if tok[0] == "var":
            self.pos += 1
            return Var(tok[1])
        if tok[0] == "(":
            self.pos += 1
            left = self.term()
            op = self.take("op")[1]
            right = self.term()
            self.take(")")
            return Prod(op, left, right)
        raise IdentityParseError("expected a variable or '('", tok[2], self.text)

    def side(self) -> Term:
        left = self.term()
        if self.peek()[0] == "op":
            op = self.take("op")[1]
            right = self.term()
            return Prod(op, left, right)
        return left


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.side()
    p.take("end")
    return t


def parse_identity(text: str, name: str | None = None) -> Identity:
    """Parse ``lhs = rhs``; both sides must use the same variable multiset."""
    p = _Parser(text)
    lhs = p.side()
    p.take("=")
    rhs = p.side()
    p.take("end")
    if sorted(variables_of(lhs)) != sorted(variables_of(rhs)):
        raise IdentityParseError(
            "variable multisets of the two sides differ", text.index("="), text
        )
    return Identity(name or text.strip(), lhs, rhs)


def load_identity_file(path) -> list[Identity]:
    """One identity per line; ``#`` starts a comment; optional ``NAME:`` prefix."""
    out = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name = f"L{lineno}"
        if ":" in line:
            head, rest = line.split(":", 1)
            if head.strip().isidentifier():
                name, line = head.strip(), rest.strip()
        try:
            out.append(parse_identity(line, name))
        except IdentityParseError as exc:
            raise IdentityParseError(f"{path}:{lineno}: {exc}", exc.position) from None
    return out


# -- built-in axioms ----------------------------------------------------------

_AXIOM_TEXT = [
    ("A1", "(x |- y) |- z = x |- (y |- z)"),
    ("A2", "(x -| y) -| z = x -| (y -| z)"),
    ("D1", "(x -| y) |- z = x |- (y |- z)"),
    ("D2", "(x -| y) -| z = x -| (y |- z)"),
    ("S1", "(x |- y) -| z = x |- (y -| z)"),
    ("T1", "(x _|_ y) |- z = x |- (y |- z)"),
    ("T2", "(x -| y) -| z = x -| (y _|_ z)"),
    ("T3", "(x |- y) _|_ z = x |- (y _|_ z)"),
    ("T4", "(x _|_ y) -| z = x _|_ (y -| z)"),
    ("S2", "(x -| y) _|_ z = x _|_ (y |- z)"),
    ("A3", "(x _|_ y) _|_ z = x _|_ (y _|_ z)"),
]

AXIOMS: dict[str, Identity] = {n: parse_identity(t, n) for n, t in _AXIOM_TEXT}


def builtin_axioms() -> AxiomPack:
    """The eleven triassociative identities."""
    return AxiomPack("triassociative", tuple(AXIOMS.values()))


def diassociative_axioms() -> AxiomPack:
    return AxiomPack("diassociative", tuple(AXIOMS[n] for n in ("A1", "A2", "D1", "D2", "S1")))


def associative_axioms(op: OpKind) -> AxiomPack:
    name = {OpKind.VDASH: "A1", OpKind.DASHV: "A2", OpKind.PERP: "A3"}[op]
    return AxiomPack(f"associative({op.key})", (AXIOMS[name],))


def pack_by_name(name: str) -> AxiomPack:
    """``trias``, ``dias``, ``assoc-<op>``, or a single axiom label such as ``T2``."""
    if name in ("trias", "triassociative"):
        return builtin_axioms()
    if name in ("dias", "diassociative"):
        return diassociative_axioms()
    if name.startswith("assoc-"):
        return associative_axioms(OpKind.from_key(name[len("assoc-"):]))
    if name in AXIOMS:
        return AxiomPack(name, (AXIOMS[name],))
    raise KeyError(f"unknown axiom pack {name!r}")


# -- column symmetry ------------------------------------------------------------

_SWAP = {OpKind.VDASH: OpKind.DASHV, OpKind.DASHV: OpKind.VDASH, OpKind.PERP: OpKind.PERP}


def _mirror_term(t: Term, rename: dict) -> Term:
    if isinstance(t, Var):
        return Var(rename[t.name])
    return Prod(_SWAP[t.op], _mirror_term(t.right, rename), _mirror_term(t.left, rename))


def mirror(identity: Identity) -> Identity:
    """Reverse every product's operands and swap |- with -|.

    Variables are renamed by reversing their order (x<->z for three
    variables) so the mirrored identity reads left to right again.
    """
    vs = identity.variables
    rename = dict(zip(vs, reversed(vs)))
    return Identity(
        f"mirror({identity.name})",
        _mirror_term(identity.lhs, rename),
        _mirror_term(identity.rhs, rename),
    )


# -- checking -----------------------------------------------------------------


def eval_term(t: Term, prod: Callable, env: dict):
    """Evaluate with ``prod(op, u, v)`` and variable values from ``env``."""
    if isinstance(t, Var):
        return env[t.name]
    return prod(t.op, eval_term(t.left, prod, env), eval_term(t.right, prod, env))


@dataclass(frozen=True)
class Violation:
    identity: str
    assignment: dict
    lhs: tuple
    rhs: tuple

    def to_json(self, field) -> dict:
        return {
            "identity": self.identity,
            "assignment": {v: "xyzw"[i] for v, i in self.assignment.items()},
            "lhs": [field.render(s) for s in self.lhs],
            "rhs": [field.render(s) for s in self.rhs],
        }


def basis_assignments(identity: Identity, dim: int):
    vs = identity.variables
    for combo in itertools.product(range(dim), repeat=len(vs)):
        yield dict(zip(vs, combo))


def check_identity(A: Trialgebra, identity: Identity) -> list[Violation]:
    field = A.field
    zero = field.zero()
    tables = A.constants.c
    basis = [basis_vector(A.dim, i, field) for i in range(A.dim)]

    def prod(op, u, v):
        return product(tables[op], u, v, zero)

    out = []
    for assignment in basis_assignments(identity, A.dim):
        env = {v: basis[i] for v, i in assignment.items()}
        lhs = eval_term(identity.lhs, prod, env)
        rhs = eval_term(identity.rhs, prod, env)
        if lhs != rhs:
            out.append(Violation(identity.name, assignment, lhs, rhs))
    return out


@dataclass
class PackReport:
    pack: str
    rows: list = dc_field(default_factory=list)  # (identity name, [Violation])

    @property
    def passed(self) -> bool:
        return all(not v for _, v in self.rows)

    @property
    def n_passed(self) -> int:
        return sum(1 for _, v in self.rows if not v)

    def failures(self) -> list[str]:
        return [name for name, v in self.rows if v]

    def violations(self) -> list[Violation]:
        return [x for _, v in self.rows for x in v]

    def to_json(self, field) -> dict:
        return {
            "pack": self.pack,
            "passed": self.n_passed,
            "total": len(self.rows),
            "results": [
                {"identity": name, "ok": not v, "violations": [x.to_json(field) for x in v]}
                for name, v in self.rows
            ],
        }


def check_pack(A: Trialgebra, pack: AxiomPack | Sequence[Identity]) -> PackReport:
    name = pack.name if isinstance(pack, AxiomPack) else "custom"
    report = PackReport(name)
    for identity in pack:
        report.rows.append((identity.name, check_identity(A, identity)))
    return report


def is_triassociative(A: Trialgebra) -> bool:
    return all(not check_identity(A, i) for i in AXIOMS.values())


__all__ = [
    "Var",
    "Prod",
    "Term",
    "Identity",
    "AxiomPack",
    "Violation",
    "PackReport",
    "IdentityParseError",
    "AXIOMS",
    "OPS",
    "parse_identity",
    "parse_term",
    "render_term",
    "load_identity_file",
    "builtin_axioms",
    "diassociative_axioms",
    "associative_axioms",
    "pack_by_name",
    "mirror",
    "eval_term",
    "check_identity",
    "check_pack",
    "is_triassociative",
]
