"""Grassmann algebra on n odd generators xi_1..xi_n.

A monomial xi_I is stored as a bit mask (bit i-1 set iff i in I) and always
means the product in increasing index order. Signs are computed on the fly.
``derive`` is the left derivative: to differentiate xi_I by xi_i, move xi_i to
the front (one sign per smaller index in I) and drop it.
"""

from __future__ import annotations

from typing import Iterable

from .kernels import mono_mul_sign, derive_sign, popcount
from .scalar import ONE, GaussScalar
from .sparse import acc


class RankMismatch(ValueError):
    """Operands live in Grassmann algebras of different rank."""


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def indices_of(mask: int) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def full_mask(n: int) -> int:
    return (1 << n) - 1


def epsilon(i: int, I) -> int:
    """#{j in I : j < i}; ``I`` may be a mask or an iterable of indices."""
    mask = I if isinstance(I, int) else mask_of(I)
    return popcount(mask & ((1 << (i - 1)) - 1))


def hodge_mask(mask: int, n: int) -> tuple[int, int]:
    """Return (sign, mask') with sign * xi_{mask'} * xi_mask = xi_1...xi_n."""
    comp = full_mask(n) & ~mask
    return mono_mul_sign(comp, mask), comp


def monomials(n: int) -> list[int]:
    """All masks ordered by (degree, mask)."""
    return sorted(range(1 << n), key=lambda m: (popcount(m), m))


def parse_monomial(text: str, n: int | None = None) -> int:
    """Parse ``"x1 x3 x4"`` (or ``"1"`` for the empty monomial) into a mask.

    The indices must be listed in strictly increasing order.
    """
    s = text.strip()
    if s in ("1", ""):
        return 0
    idx = []
    for tok in s.replace(",", " ").split():
        if not tok.startswith("x") or not tok[1:].isdigit():
            raise ValueError(f"bad monomial token {tok!r}")
        idx.append(int(tok[1:]))
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise ValueError("monomial indices must be strictly increasing")
    if idx and idx[0] < 1:
        raise ValueError("indices are 1-based")
    if n is not None and idx and idx[-1] > n:
        raise ValueError(f"index {idx[-1]} exceeds n={n}")
    return mask_of(idx)


def format_monomial(mask: int) -> str:
    if not mask:
        return "1"
    return " ".join(f"x{i}" for i in indices_of(mask))


class GrassmannElement:
    """Finite combination of monomials with GaussScalar coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        self.terms = {}
        if terms:
            top = full_mask(n)
            for m, c in terms.items():
                if m & ~top:
                    raise ValueError(f"monomial {m:b} outside rank {n}")
                acc(self.terms, m, GaussScalar.coerce(c))

    @classmethod
    def monomial(cls, n: int, indices: Iterable[int] | int, coeff=ONE):
        mask = indices if isinstance(indices, int) else mask_of(indices)
        return cls(n, {mask: coeff})

    @classmethod
    def parse(cls, text: str, n: int):
        return cls(n, {parse_monomial(text, n): ONE})

    def _check(self, other):
        if self.n != other.n:
            raise RankMismatch(f"rank {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc(out, m, c)
        return GrassmannElement._wrap(self.n, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return GrassmannElement._wrap(self.n, {m: -c for m, c in self.terms.items()})

    def scale(self, c):
        c = GaussScalar.coerce(c)
        if not c:
            return GrassmannElement(self.n)
        return GrassmannElement._wrap(self.n, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GrassmannElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"GrassmannElement(n={self.n}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (popcount(m), m)):
            parts.append(f"({self.terms[m]})*[{format_monomial(m)}]")
        return " + ".join(parts)

    @staticmethod
    def _wrap(n, terms):
        e = GrassmannElement.__new__(GrassmannElement)
        e.n = n
        e.terms = terms
        return e

    def degree(self) -> int:
        """|f| for a homogeneous element (raises otherwise)."""
        degs = {popcount(m) for m in self.terms}
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop() if degs else 0

    def parity(self) -> int:
        ps = {popcount(m) & 1 for m in self.terms}
        if len(ps) > 1:
            raise ValueError("element has mixed parity")
        return ps.pop() if ps else 0


def mul(f: GrassmannElement, g: GrassmannElement) -> GrassmannElement:
    f._check(g)
    out: dict = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            s = mono_mul_sign(a, b)
            if s:
                acc(out, a | b, ca * cb if s > 0 else -(ca * cb))
    return GrassmannElement._wrap(f.n, out)


def derive(i: int, f: GrassmannElement) -> GrassmannElement:
    if not 1 <= i <= f.n:
        raise IndexError(f"derivative index {i} out of range 1..{f.n}")
    bit = 1 << (i - 1)
    out: dict = {}
    for m, c in f.terms.items():
        if m & bit:
            s = derive_sign(i, m)
            acc(out, m ^ bit, c if s > 0 else -c)
    return GrassmannElement._wrap(f.n, out)


def derive_multi(L, f: GrassmannElement) -> GrassmannElement:
    """Apply d_{l_1} d_{l_2} ... d_{l_s} (the last index acts first)."""
    for i in reversed(list(L)):
        f = derive(i, f)
    return f


def hodge(f: GrassmannElement) -> GrassmannElement:
    out: dict = {}
    for m, c in f.terms.items():
        s, comp = hodge_mask(m, f.n)
        acc(out, comp, c if s > 0 else -c)
    return GrassmannElement._wrap(f.n, out)


# mask-level helpers used by the hot paths -------------------------------

def mono_derive(i: int, mask: int) -> tuple[int, int]:
    """(sign, mask') for d_i xi_mask; sign 0 if i is absent."""
    bit = 1 << (i - 1)
    if not mask & bit:
        return 0, 0
    return derive_sign(i, mask), mask ^ bit


def mono_derive_by(L: int, mask: int) -> tuple[int, int]:
    """(sign, mask') for d_L xi_mask where L is a mask listed increasingly."""
    if L & ~mask:
        return 0, 0
    sign = 1
    for i in reversed(indices_of(L)):
        s, mask = mono_derive(i, mask)
        sign *= s
    return sign, mask


__all__ = [
    "GrassmannElement", "RankMismatch", "mul", "derive", "derive_multi", "hodge",
    "epsilon", "mask_of", "indices_of", "full_mask", "hodge_mask", "monomials",
    "parse_monomial", "format_monomial", "mono_mul_sign", "derive_sign",
    "mono_derive", "mono_derive_by", "popcount",
]
