# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot kernels; same API as ``_kernels_py``.

Masks that fit in 63 bits take the C path; anything larger falls back to the
Python implementation.
"""

from math import gcd

from . import _kernels_py as _py

IMPLEMENTATION = "cython"

cdef unsigned long long _LIMIT = 1ULL << 62


cdef inline int _pc(unsigned long long x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


def popcount(x):
    if 0 <= x < _LIMIT:
        return _pc(<unsigned long long>x)
    return _py.popcount(x)


cdef int _mul_sign(unsigned long long a, unsigned long long b) nogil:
    cdef int swaps = 0
    cdef int p = 0
    if a & b:
        return 0
    while b:
        if b & 1:
            swaps += _pc(a >> (p + 1))
        b >>= 1
        p += 1
    return -1 if swaps & 1 else 1


def mono_mul_sign(a, b):
    """Sign of xi_a * xi_b relative to xi_{a|b}; 0 when they overlap."""
    if 0 <= a < _LIMIT and 0 <= b < _LIMIT:
        return _mul_sign(<unsigned long long>a, <unsigned long long>b)
    return _py.mono_mul_sign(a, b)


def derive_sign(int i, mask):
    if 0 <= mask < _LIMIT and 0 < i < 63:
        return -1 if _pc((<unsigned long long>mask) & ((1ULL << (i - 1)) - 1)) & 1 else 1
    return _py.derive_sign(i, mask)


cdef object _content(dict row):
    cdef object g = 0
    for a, b in row.values():
        g = gcd(g, a, b)
        if g == 1:
            return 1
    return g


def reduce_row(row, pivots):
    """Reduce ``row`` against echelon ``pivots``; integer content is removed."""
    cdef dict cur = dict(row)
    cdef dict new
    cdef dict prow
    cdef object hit, p, ra, rb, a, b, sa, sb, na, nb, g
    while cur:
        hit = None
        for c in sorted(cur):
            if c in pivots:
                hit = c
                break
        if hit is None:
            break
        prow = pivots[hit]
        p = prow[hit][0]
        ra, rb = cur[hit]
        new = {}
        for j, ab in cur.items():
            new[j] = (ab[0] * p, ab[1] * p)
        for j, ab in prow.items():
            a = ab[0]
            b = ab[1]
            sa = ra * a - rb * b
            sb = ra * b + rb * a
            if j in new:
                na, nb = new[j]
                na = na - sa
                nb = nb - sb
                if na or nb:
                    new[j] = (na, nb)
                else:
                    del new[j]
            else:
                new[j] = (-sa, -sb)
        if new:
            g = _content(new)
            if g != 1:
                new = {j: (ab[0] // g, ab[1] // g) for j, ab in new.items()}
        cur = new
    return cur


def echelon(rows, pivots=None):
    """Insert ``rows`` into an echelon structure; returns the pivot dict."""
    if pivots is None:
        pivots = {}
    for row in rows:
        r = reduce_row(row, pivots)
        if r:
            c = min(r)
            pivots[c] = _py._make_pivot_real(r, c)
    return pivots
