"""Exact Gaussian rationals a + b*i.

Rational parts are ``gmpy2.mpq`` when gmpy2 is importable and
``fractions.Fraction`` otherwise. Both keep values in lowest terms with a
positive denominator, so structural equality is value equality.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction

try:  # pragma: no cover - exercised implicitly
    from gmpy2 import mpq as Q
    RATIONAL_BACKEND = "gmpy2"
except ImportError:  # pragma: no cover
    Q = Fraction
    RATIONAL_BACKEND = "fractions"

_ZERO = Q(0)
_ONE = Q(1)


class ScalarDivisionByZero(ZeroDivisionError):
    """Raised on division by the zero Gaussian rational."""


def _rat(x):
    if isinstance(x, str):
        return Q(Fraction(x.strip()))
    if isinstance(x, Fraction):
        return Q(x.numerator, x.denominator)
    return Q(x)


class GaussScalar:
    """Immutable element of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussScalar):
            object.__setattr__(self, "re", re.re)
            object.__setattr__(self, "im", re.im)
            return
        object.__setattr__(self, "re", _rat(re))
        object.__setattr__(self, "im", _rat(im))

    @classmethod
    def _raw(cls, re, im):
        s = object.__new__(cls)
        object.__setattr__(s, "re", re)
        object.__setattr__(s, "im", im)
        return s

    def __setattr__(self, name, value):
        raise AttributeError("GaussScalar is immutable")

    def __reduce__(self):
        return (GaussScalar, (Fraction(int(self.re.numerator), int(self.re.denominator)),
                              Fraction(int(self.im.numerator), int(self.im.denominator))))

    # coercion -------------------------------------------------------------
    @staticmethod
    def coerce(x) -> "GaussScalar":
        if isinstance(x, GaussScalar):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex numbers are not exact")
        if isinstance(x, float):
            raise TypeError("floats are not exact")
        return GaussScalar._raw(_rat(x), _ZERO)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, GaussScalar):
            try:
                other = GaussScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussScalar._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussScalar):
            try:
                other = GaussScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussScalar._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussScalar.coerce(other) - self

    def __neg__(self):
        return GaussScalar._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, GaussScalar):
            if isinstance(other, int):
                return GaussScalar._raw(self.re * other, self.im * other)
            try:
                other = GaussScalar.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussScalar._raw(a * c, _ZERO)
        return GaussScalar._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussScalar":
        a, b = self.re, self.im
        norm = a * a + b * b
        if not norm:
            raise ScalarDivisionByZero("division by zero in Q(i)")
        return GaussScalar._raw(a / norm, -b / norm)

    def __truediv__(self, other):
        if not isinstance(other, GaussScalar):
            try:
                other = GaussScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussScalar.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussScalar":
        return GaussScalar._raw(self.re, -self.im)

    # comparison -----------------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussScalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)) or type(other) is type(_ZERO):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(Fraction(int(self.re.numerator), int(self.re.denominator)))
        return hash((int(self.re.numerator), int(self.re.denominator),
                     int(self.im.numerator), int(self.im.denominator)))

    def is_real(self) -> bool:
        return not self.im

    def is_rational_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    def as_fraction(self) -> Fraction:
        if self.im:
            raise ValueError("not a real number")
        return Fraction(int(self.re.numerator), int(self.re.denominator))

    # text -----------------------------------------------------------------
    def __repr__(self):
        return f"GaussScalar({self})"

    def __str__(self):
        if not self.im:
            return _rat_str(self.re)
        if not self.re:
            return _imag_str(self.im)
        im = _imag_str(self.im)
        if im.startswith("-"):
            return f"{_rat_str(self.re)}{im}"
        return f"{_rat_str(self.re)}+{im}"

    def to_json(self) -> list:
        return [_rat_str(self.re), _rat_str(self.im)]

    @staticmethod
    def from_json(obj) -> "GaussScalar":
        if isinstance(obj, (list, tuple)) and len(obj) == 2:
            return GaussScalar(str(obj[0]), str(obj[1]))
        raise ValueError(f"bad scalar encoding: {obj!r}")


def _rat_str(q) -> str:
    if q.denominator == 1:
        return str(int(q.numerator))
    return f"{int(q.numerator)}/{int(q.denominator)}"


def _imag_str(q) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return f"{_rat_str(q)}i"


ZERO = GaussScalar._raw(_ZERO, _ZERO)
ONE = GaussScalar._raw(_ONE, _ZERO)
I = GaussScalar._raw(_ZERO, _ONE)


def arith(a, b, op: str) -> GaussScalar:
    """Apply ``op`` in {"add", "sub", "mul", "div"} to two scalars."""
    a = GaussScalar.coerce(a)
    b = GaussScalar.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def normalize(x) -> GaussScalar:
    """Canonical representative of ``x`` (a fresh, reduced GaussScalar)."""
    x = GaussScalar.coerce(x)
    return GaussScalar(Q(x.re), Q(x.im))


_RAT = r"[0-9]+(?:/[0-9]+)?"
_SCALAR_RE = _re.compile(
    rf"^\s*(?:(?P<re>[+-]?{_RAT})(?=$|\s*[+-]))?\s*"
    rf"(?:(?P<isign>[+-])?\s*(?P<im>{_RAT})?\s*\*?\s*i)?\s*$"
)


def parse_scalar(text: str) -> GaussScalar:
    """Parse forms such as ``3``, ``-1/2``, ``i``, ``2i``, ``1/2-3/4i``.

    A two-element JSON-style list ``["p/q", "r/s"]`` is also accepted.
    """
    if isinstance(text, (list, tuple)):
        return GaussScalar.from_json(text)
    s = text.strip()
    if not s:
        raise ValueError("empty scalar")
    m = _SCALAR_RE.match(s)
    if not m or (m.group("re") is None and not s.rstrip().endswith("i")):
        raise ValueError(f"cannot parse scalar {text!r}")
    re_part = Q(Fraction(m.group("re"))) if m.group("re") else _ZERO
    im_part = _ZERO
    if s.rstrip().endswith("i"):
        mag = Q(Fraction(m.group("im"))) if m.group("im") else _ONE
        im_part = -mag if m.group("isign") == "-" else mag
    return GaussScalar._raw(re_part, im_part)
