"""Sparse multivariate polynomials with coefficients in a fixed exact field.

Variables are named strings ordered by ``var_key`` (alphabetic prefix, then
numeric suffix), so ``a1 < a2 < ... < a8 < b1 < ... < b8``.  Monomials are
compared degree-lexicographically with the largest variable most significant.
"""

from __future__ import annotations

import re
from functools import total_ordering
from typing import Iterable, Mapping

from .fields import QI, FieldDescriptor

_VAR_RE = re.compile(r"([^\d]*)(\d*)")


def var_key(name: str):
    m = _VAR_RE.fullmatch(name)
    prefix, digits = m.group(1), m.group(2)
    return (prefix, int(digits) if digits else -1)


def _mono_mul(m1: tuple, m2: tuple) -> tuple:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda ve: var_key(ve[0])))


def mono_key(m: tuple):
    """Sort key realizing degree-lex order (larger key = larger monomial)."""
    deg = sum(e for _, e in m)
    # largest variable first; exponent vectors compared lexicographically
    vec = tuple((var_key(v), e) for v, e in reversed(m))
    return (deg, _LexVec(vec))


@total_ordering
class _LexVec:
    __slots__ = ("vec",)

    def __init__(self, vec):
        self.vec = vec

    def __eq__(self, other):
        return self.vec == other.vec

    def __lt__(self, other):
        # compare exponent of the largest variable present in either
        a, b = list(self.vec), list(other.vec)
        while a and b:
            (va, ea), (vb, eb) = a[0], b[0]
            if va != vb:
                return va < vb
            if ea != eb:
                return ea < eb
            a.pop(0)
            b.pop(0)
        return bool(b)


def _mono_str(m: tuple) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)


class Poly:
    __slots__ = ("field", "terms", "_hash")

    def __init__(self, terms: Mapping | None = None, field: FieldDescriptor = QI):
        self.field = field
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    # -- construction
    @classmethod
    def var(cls, name: str, field: FieldDescriptor = QI) -> "Poly":
        return cls({((name, 1),): field.one()}, field)

    @classmethod
    def const(cls, c, field: FieldDescriptor = QI) -> "Poly":
        return cls({(): field.convert(c)}, field)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other if other.field == self.field else other.convert(self.field)
        return Poly.const(other, self.field)

    def convert(self, field: FieldDescriptor) -> "Poly":
        return Poly({m: field.convert(c) for m, c in self.terms.items()}, field)

    # -- arithmetic
    def __add__(self, other):
        o = self._coerce(other)
        t = dict(self.terms)
        for m, c in o.terms.items():
            t[m] = t[m] + c if m in t else c
        return Poly(t, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                c = c1 * c2
                t[m] = t[m] + c if m in t else c
        return Poly(t, self.field)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly.const(1, self.field)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c) -> "Poly":
        c = self.field.convert(c)
        return Poly({m: c * v for m, v in self.terms.items()}, self.field)

    # -- inspection
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {()}

    def constant_term(self):
        return self.terms.get((), self.field.zero())

    def variables(self) -> set[str]:
        return {v for m in self.terms for v, _ in m}

    def sorted_variables(self) -> list[str]:
        return sorted(self.variables(), key=var_key)

    def degree(self, var: str | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e for _, e in m) for m in self.terms)
        return max((e for m in self.terms for v, e in m if v == var), default=0)

    def monomials(self) -> list[tuple]:
        """Monomials, largest first."""
        return sorted(self.terms, key=mono_key, reverse=True)

    def leading(self):
        m = self.monomials()[0]
        return m, self.terms[m]

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        _, c = self.leading()
        if c == 1:
            return self
        return self.scale(c.inverse())

    def linear_in(self, var: str):
        """Return ``(c, rest)`` with ``self == c*var + rest`` when ``c`` is a
        nonzero constant and ``rest`` does not involve ``var``; else None."""
        c = None
        rest = {}
        for m, coeff in self.terms.items():
            e = dict(m).get(var, 0)
            if e == 0:
                rest[m] = coeff
            elif e == 1 and m == ((var, 1),):
                c = coeff
            else:
                return None
        if c is None:
            return None
        return c, Poly(rest, self.field)

    def univariate_coeffs(self, var: str) -> list | None:
        """Coefficients (low to high) if the polynomial involves only ``var``."""
        if self.variables() - {var}:
            return None
        coeffs = [self.field.zero()] * (self.degree() + 1)
        for m, c in self.terms.items():
            coeffs[dict(m).get(var, 0)] = c
        return coeffs

    # -- substitution
    def substitute(self, mapping: Mapping[str, "Poly"]) -> "Poly":
        if not mapping or not (self.variables() & set(mapping)):
            return self
        result = Poly({}, self.field)
        cache: dict = {}
        for m, c in self.terms.items():
            term = Poly({(): c}, self.field)
            keep = []
            for v, e in m:
                if v in mapping:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = self._coerce(mapping[v]) ** e
                    term = term * cache[key]
                else:
                    keep.append((v, e))
            if keep:
                term = term * Poly({tuple(keep): self.field.one()}, self.field)
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, object], field: FieldDescriptor | None = None):
        """Evaluate at scalar values; coefficients are mapped into ``field``."""
        field = field or self.field
        total = field.zero()
        for m, c in self.terms.items():
            term = field.convert(c)
            for v, e in m:
                if v not in values:
                    raise KeyError(f"no value for {v}")
                term = term * values[v] ** e
            total = total + term
        return total

    # -- comparison / printing
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if not self.terms:
            return other == 0
        return self.is_constant() and self.terms[()] == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def sort_key(self):
        return tuple(mono_key(m) for m in self.monomials())

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for m in self.monomials():
            c = self.terms[m]
            neg = False
            if self.field.kind == "Qi" and not c.im and c.re < 0:
                neg, c = True, -c
            mono = _mono_str(m)
            if not m:
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = f"{c}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)


def poly_vars(names: Iterable[str], field: FieldDescriptor = QI) -> list[Poly]:
    return [Poly.var(n, field) for n in names]
