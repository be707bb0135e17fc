"""Exact ground fields: the rationals, prime fields GF(p) with p > 3, and
quadratic extensions Q(sqrt d).

Rationals are plain :class:`fractions.Fraction` values.  Prime-field and
quadratic elements get small immutable classes so that generic code can use
the ordinary arithmetic operators.  Elements of different fields never mix:
any such attempt raises :class:`FieldMismatch`.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import FieldMismatch, ParseError

_RATIONAL = r"\d+(?:/\d+)?"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _parse_rational(token: str) -> Fraction:
    if not re.fullmatch(r"[+-]?" + _RATIONAL, token):
        raise ParseError(f"bad rational {token!r}")
    return Fraction(token)


class Mod:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _other(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other
        raise FieldMismatch(f"cannot combine GF({self.p}) with {type(other).__name__}")

    def __add__(self, other):
        return Mod(self.value + self._other(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Mod(self.value - self._other(other), self.p)

    def __rsub__(self, other):
        return Mod(self._other(other) - self.value, self.p)

    def __mul__(self, other):
        return Mod(self.value * self._other(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.value, self.p)

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse in GF(%d)" % self.p)
        return Mod(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * Mod(self._other(other), self.p).inverse()

    def __rtruediv__(self, other):
        return Mod(self._other(other), self.p) * self.inverse()

    def __eq__(self, other):
        try:
            return (self.value - self._other(other)) % self.p == 0
        except FieldMismatch:
            return NotImplemented

    def __hash__(self):
        return hash(("Mod", self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Mod({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class QuadNumber:
    """``a + b*w`` with rational ``a, b`` and ``w*w = d``."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    def _other(self, other):
        if isinstance(other, QuadNumber):
            if other.d != self.d:
                raise FieldMismatch(f"Q(sqrt {self.d}) vs Q(sqrt {other.d})")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        raise FieldMismatch(f"cannot combine Q(sqrt {self.d}) with {type(other).__name__}")

    def __add__(self, other):
        a, b = self._other(other)
        return QuadNumber(self.a + a, self.b + b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._other(other)
        return QuadNumber(self.a - a, self.b - b, self.d)

    def __rsub__(self, other):
        a, b = self._other(other)
        return QuadNumber(a - self.a, b - self.b, self.d)

    def __mul__(self, other):
        a, b = self._other(other)
        return QuadNumber(self.a * a + self.d * self.b * b, self.a * b + self.b * a, self.d)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadNumber(-self.a, -self.b, self.d)

    def conjugate(self):
        return QuadNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("0 has no inverse")
        return QuadNumber(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        a, b = self._other(other)
        return self * QuadNumber(a, b, self.d).inverse()

    def __rtruediv__(self, other):
        a, b = self._other(other)
        return QuadNumber(a, b, self.d) * self.inverse()

    def __eq__(self, other):
        try:
            a, b = self._other(other)
        except FieldMismatch:
            return NotImplemented
        return self.a == a and self.b == b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash(("Quad", self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __repr__(self):
        return f"QuadNumber({self.a}, {self.b}, {self.d})"


class Field:
    """Descriptor for a ground field; calling it coerces a value into it."""

    char = 0
    key: tuple = ()

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def parse(self, token: str):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def random(self, rng, bound: int = 3):
        raise NotImplementedError

    def check(self, x):
        """Return ``x`` coerced, raising FieldMismatch on foreign elements."""
        return self(x)


class Rationals(Field):
    char = 0
    key = ("Q",)

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise FieldMismatch(f"{x!r} is not an element of Q")

    def parse(self, token):
        return _parse_rational(token)

    def format(self, x):
        return _format_rational(x)

    def random(self, rng, bound=3):
        num = rng.randint(-bound, bound)
        den = rng.choice((1, 1, 1, 2, 3))
        return Fraction(num, den)

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p) or p <= 3:
            raise ValueError(f"GF(p) needs a prime p > 3, got {p}")
        self.p = p
        self.char = p
        self.key = ("F", p)

    def __call__(self, x):
        if isinstance(x, Mod):
            if x.p != self.p:
                raise FieldMismatch(f"GF({x.p}) element used in GF({self.p})")
            return x
        if isinstance(x, int):
            return Mod(x, self.p)
        if isinstance(x, Fraction):
            return Mod(x.numerator, self.p) / Mod(x.denominator, self.p)
        raise FieldMismatch(f"{x!r} is not an element of GF({self.p})")

    def parse(self, token):
        return self(_parse_rational(token))

    def format(self, x):
        return str(x.value)

    def random(self, rng, bound=3):
        return Mod(rng.randrange(self.p), self.p)

    def __repr__(self):
        return f"GF({self.p})"


class QuadraticField(Field):
    """Q(w) with w*w = d for a non-square integer d."""

    _PLAIN = re.compile(r"(?P<a>[+-]?" + _RATIONAL + r")(?:(?P<sign>[+-])(?P<b>" + _RATIONAL + r")?w)?")
    _PURE = re.compile(r"(?P<sign>[+-]?)(?P<b>" + _RATIONAL + r")?w")

    def __init__(self, d: int):
        if d >= 0 and math.isqrt(d) ** 2 == d:
            raise ValueError(f"Q(sqrt d) needs a non-square d, got {d}")
        self.d = d
        self.key = ("Qsqrt", d)

    def __call__(self, x):
        if isinstance(x, QuadNumber):
            if x.d != self.d:
                raise FieldMismatch(f"Q(sqrt {x.d}) element used in Q(sqrt {self.d})")
            return x
        if isinstance(x, (int, Fraction)):
            return QuadNumber(x, 0, self.d)
        raise FieldMismatch(f"{x!r} is not an element of Q(sqrt {self.d})")

    @property
    def w(self):
        return QuadNumber(0, 1, self.d)

    def parse(self, token):
        m = self._PURE.fullmatch(token)
        if m:
            b = Fraction(m["b"]) if m["b"] else Fraction(1)
            return QuadNumber(0, -b if m["sign"] == "-" else b, self.d)
        m = self._PLAIN.fullmatch(token)
        if m is None:
            raise ParseError(f"bad Q(sqrt {self.d}) scalar {token!r}")
        b = Fraction(0)
        if m["sign"]:
            b = Fraction(m["b"]) if m["b"] else Fraction(1)
            if m["sign"] == "-":
                b = -b
        return QuadNumber(Fraction(m["a"]), b, self.d)

    def format(self, x):
        a, b = x.a, x.b
        if b == 0:
            return _format_rational(a)
        if b == 1:
            bs = "w"
        elif b == -1:
            bs = "-w"
        else:
            bs = _format_rational(b) + "w"
        if a == 0:
            return bs
        if not bs.startswith("-"):
            bs = "+" + bs
        return _format_rational(a) + bs

    def random(self, rng, bound=3):
        return QuadNumber(rng.randint(-bound, bound), rng.randint(-bound, bound), self.d)

    def __repr__(self):
        return f"Q(sqrt {self.d})"


Q = Rationals()


def field_from_spec(kind: str, arg=None) -> Field:
    """Build a field from the file-format declaration (``Q``, ``F p``, ``Qsqrt d``)."""
    if kind == "Q":
        return Q
    if kind == "F":
        return PrimeField(int(arg))
    if kind == "Qsqrt":
        return QuadraticField(int(arg))
    raise ValueError(f"unknown field kind {kind!r}")


def field_spec(field: Field) -> str:
    if field.key[0] == "Q":
        return "Q"
    return f"{field.key[0]} {field.key[1]}"
