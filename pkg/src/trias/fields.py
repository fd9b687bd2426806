"""Exact scalars: Gaussian rationals Q(i) and prime-field residues F_p.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  A :class:`FieldDescriptor` fixes the representation for a
whole algebra; arithmetic between scalars of different fields raises
:class:`FieldMismatchError`.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

__all__ = [
    "FieldMismatchError",
    "ScalarParseError",
    "GaussRat",
    "FpElem",
    "FieldDescriptor",
    "QI",
    "fp",
    "scalar_add",
    "scalar_mul",
    "scalar_neg",
    "scalar_inv",
    "parse_scalar",
    "render_scalar",
]

P_MAX = 1 << 16


class FieldMismatchError(TypeError):
    """Operands belong to different coefficient fields."""


class ScalarParseError(ValueError):
    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _frac(x) -> Fraction:
    if type(x) is Fraction:
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Fraction(x)
    raise FieldMismatchError(f"cannot use {x!r} as a rational")


class GaussRat:
    """Element re + im*i of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @staticmethod
    def _raw(re: Fraction, im: Fraction) -> "GaussRat":
        z = object.__new__(GaussRat)
        z.re = re
        z.im = im
        return z

    def _coerce(self, other) -> "GaussRat":
        if type(other) is GaussRat:
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return GaussRat._raw(Fraction(other), _ZERO)
        raise FieldMismatchError(f"cannot combine Q(i) scalar with {other!r}")

    def __add__(self, other):
        o = self._coerce(other)
        return GaussRat._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return GaussRat._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return GaussRat._raw(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if not self.im and not o.im:
            return GaussRat._raw(self.re * o.re, _ZERO)
        return GaussRat._raw(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussRat":
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("zero has no inverse in Q(i)")
        return GaussRat._raw(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = GaussRat._raw(_ONE, _ZERO)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "GaussRat":
        return GaussRat._raw(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if type(other) is GaussRat:
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    def __repr__(self):
        return f"GaussRat({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{_imag_str(self.im)}"
        sign = "-" if self.im < 0 else "+"
        return f"({self.re}{sign}{_imag_str(abs(self.im))})"


def _imag_str(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}*i"


_ZERO = Fraction(0)
_ONE = Fraction(1)


class FpElem:
    """Residue class value mod a prime p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = value % p

    def _coerce(self, other) -> "FpElem":
        if type(other) is FpElem:
            if other.p != self.p:
                raise FieldMismatchError(f"F_{self.p} and F_{other.p} operands")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return FpElem(other, self.p)
        raise FieldMismatchError(f"cannot combine F_{self.p} scalar with {other!r}")

    def __add__(self, other):
        return FpElem(self.value + self._coerce(other).value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FpElem(self.value - self._coerce(other).value, self.p)

    def __rsub__(self, other):
        return FpElem(self._coerce(other).value - self.value, self.p)

    def __neg__(self):
        return FpElem(-self.value, self.p)

    def __mul__(self, other):
        return FpElem(self.value * self._coerce(other).value, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "FpElem":
        if not self.value:
            raise ZeroDivisionError(f"zero has no inverse in F_{self.p}")
        return FpElem(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return FpElem(pow(self.value, k, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if type(other) is FpElem:
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FpElem({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[GaussRat, FpElem]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    """Coefficient field of an algebra: ``Qi`` or ``Fp`` with prime ``p``."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Qi":
            if self.p is not None:
                raise ValueError("Qi takes no modulus")
        elif self.kind == "Fp":
            if not isinstance(self.p, int) or not (2 <= self.p < P_MAX) or not _is_prime(self.p):
                raise ValueError(f"modulus must be a prime below 2^16, got {self.p!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == "Fp"

    @property
    def label(self) -> str:
        return "Qi" if self.kind == "Qi" else f"Fp:{self.p}"

    @classmethod
    def from_label(cls, text: str) -> "FieldDescriptor":
        if text == "Qi":
            return QI
        m = re.fullmatch(r"Fp:(\d+)", text)
        if not m:
            raise ValueError(f"field must be 'Qi' or 'Fp:<p>', got {text!r}")
        return cls("Fp", int(m.group(1)))

    def to_json(self) -> dict:
        return {"kind": "Qi"} if self.kind == "Qi" else {"kind": "Fp", "p": self.p}

    @classmethod
    def from_json(cls, obj) -> "FieldDescriptor":
        if not isinstance(obj, dict) or "kind" not in obj:
            raise ValueError(f"bad field descriptor {obj!r}")
        if obj["kind"] == "Qi":
            return QI
        return cls("Fp", obj.get("p"))

    def zero(self) -> Scalar:
        return self.from_int(0)

    def one(self) -> Scalar:
        return self.from_int(1)

    def from_int(self, n: int) -> Scalar:
        if self.kind == "Qi":
            return GaussRat._raw(Fraction(n), _ZERO)
        return FpElem(n, self.p)

    def contains(self, x) -> bool:
        if self.kind == "Qi":
            return type(x) is GaussRat
        return type(x) is FpElem and x.p == self.p

    def convert(self, x) -> Scalar:
        """Map ``x`` into this field.

        Rationals reduce mod p when the denominator is invertible; the
        imaginary unit has no image in F_p.
        """
        if self.contains(x):
            return x
        if isinstance(x, bool):
            raise FieldMismatchError(f"cannot convert {x!r}")
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction):
            x = GaussRat(x)
        if type(x) is GaussRat:
            if self.kind == "Qi":
                return x
            if x.im:
                raise FieldMismatchError(f"{x} has an imaginary part; no image in F_{self.p}")
            if x.re.denominator % self.p == 0:
                raise FieldMismatchError(f"denominator of {x} vanishes mod {self.p}")
            return FpElem(x.re.numerator, self.p) / FpElem(x.re.denominator, self.p)
        raise FieldMismatchError(f"cannot convert {x!r} into {self.label}")

    def elements(self) -> Iterator[FpElem]:
        if self.kind != "Fp":
            raise ValueError("Q(i) is infinite")
        for v in range(self.p):
            yield FpElem(v, self.p)

    def render(self, x) -> object:
        return render_scalar(x, self)

    def parse(self, obj) -> Scalar:
        return parse_scalar_value(obj, self)


QI = FieldDescriptor("Qi")


def fp(p: int) -> FieldDescriptor:
    return FieldDescriptor("Fp", p)


def _check_same(a, b):
    if type(a) is not type(b) or (type(a) is FpElem and a.p != b.p):
        raise FieldMismatchError(f"mixed-field operands {a!r}, {b!r}")


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    _check_same(a, b)
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    _check_same(a, b)
    return a * b


def scalar_neg(a: Scalar) -> Scalar:
    return -a


def scalar_inv(a: Scalar) -> Scalar:
    return a.inverse()


# -- text grammar -----------------------------------------------------------

_RAT = re.compile(r"-?\d+(?:/\d+)?")


def _parse_component(text, offset: int) -> Fraction:
    if not isinstance(text, str):
        raise ScalarParseError(f"component must be a string, got {text!r}", offset)
    if not _RAT.fullmatch(text):
        m = _RAT.match(text)
        bad = m.end() if m else 0
        raise ScalarParseError(f"malformed rational {text!r}", offset + bad)
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ScalarParseError(f"zero denominator in {text!r}", offset + len(num) + 1)
    return Fraction(int(num), int(den) if den else 1)


def parse_scalar_value(obj, field: FieldDescriptor) -> Scalar:
    """Read an already JSON-decoded scalar."""
    if field.kind == "Qi":
        if not isinstance(obj, list) or len(obj) != 2:
            raise ScalarParseError(f"Q(i) scalar must be [re, im], got {obj!r}", 0)
        return GaussRat._raw(_parse_component(obj[0], 0), _parse_component(obj[1], 1))
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise ScalarParseError(f"F_{field.p} scalar must be an integer, got {obj!r}", 0)
    if not 0 <= obj < field.p:
        raise ScalarParseError(f"{obj} is outside [0, {field.p})", 0)
    return FpElem(obj, field.p)


def parse_scalar(text, field: FieldDescriptor) -> Scalar:
    """Parse a scalar from its JSON text (or decoded JSON value)."""
    if isinstance(text, str):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ScalarParseError(exc.msg, exc.pos) from None
    else:
        obj = text
    return parse_scalar_value(obj, field)


def _render_frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def render_scalar(x: Scalar, field: FieldDescriptor | None = None):
    """Canonical JSON value for ``x``: ``[re, im]`` strings, or a bare int."""
    if field is not None and not field.contains(x):
        raise FieldMismatchError(f"{x!r} is not in {field.label}")
    if type(x) is GaussRat:
        return [_render_frac(x.re), _render_frac(x.im)]
    if type(x) is FpElem:
        return x.value
    raise FieldMismatchError(f"not a scalar: {x!r}")


def parse_scalar_literal(text: str, field: FieldDescriptor) -> Scalar:
    """Lenient command-line form: JSON scalar, or a bare rational like ``-1/2``."""
    text = text.strip()
    if text.startswith("["):
        return parse_scalar(text, field)
    q = _parse_component(text, 0)
    if field.kind == "Qi":
        return GaussRat._raw(q, _ZERO)
    return field.convert(q)
