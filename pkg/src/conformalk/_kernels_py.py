"""Pure-Python versions of the hot kernels (reference implementation).

Gaussian integers are pairs ``(a, b)`` of Python ints meaning a + b*i.
A sparse row is a dict ``column -> (a, b)`` with no zero entries.
"""

from math import gcd

IMPLEMENTATION = "python"


def popcount(x):
    return bin(x).count("1")


def mono_mul_sign(a, b):
    """Sign of xi_a * xi_b relative to xi_{a|b}; 0 when they overlap."""
    if a & b:
        return 0
    swaps = 0
    p = 0
    while b:
        if b & 1:
            swaps += bin(a >> (p + 1)).count("1")
        b >>= 1
        p += 1
    return -1 if swaps & 1 else 1


def derive_sign(i, mask):
    return -1 if bin(mask & ((1 << (i - 1)) - 1)).count("1") & 1 else 1


def _content(row):
    g = 0
    for a, b in row.values():
        g = gcd(g, a, b)
        if g == 1:
            return 1
    return g


def _make_pivot_real(row, col):
    """Scale so that row[col] is a positive rational integer, then remove content."""
    pa, pb = row[col]
    if pb:
        ca, cb = pa, -pb  # multiply by the conjugate
        row = {j: (a * ca - b * cb, a * cb + b * ca) for j, (a, b) in row.items()}
    g = _content(row)
    if row[col][0] < 0:
        g = -g
    if g != 1:
        row = {j: (a // g, b // g) for j, (a, b) in row.items()}
    return row


def reduce_row(row, pivots):
    """Reduce ``row`` against echelon ``pivots`` (col -> row with real pivot).

    Returns the reduced row (possibly empty). Integer content is removed.
    """
    row = dict(row)
    while row:
        hit = None
        for c in sorted(row):
            if c in pivots:
                hit = c
                break
        if hit is None:
            break
        prow = pivots[hit]
        p = prow[hit][0]
        ra, rb = row[hit]
        new = {}
        for j, (a, b) in row.items():
            new[j] = (a * p, b * p)
        for j, (a, b) in prow.items():
            # subtract (ra + rb i) * (a + b i)
            sa = ra * a - rb * b
            sb = ra * b + rb * a
            if j in new:
                na, nb = new[j]
                na -= sa
                nb -= sb
                if na or nb:
                    new[j] = (na, nb)
                else:
                    del new[j]
            else:
                new[j] = (-sa, -sb)
        if new:
            g = _content(new)
            if g != 1:
                new = {j: (a // g, b // g) for j, (a, b) in new.items()}
        row = new
    return row


def echelon(rows, pivots=None):
    """Insert ``rows`` into an echelon structure; returns the pivot dict."""
    if pivots is None:
        pivots = {}
    for row in rows:
        r = reduce_row(row, pivots)
        if r:
            c = min(r)
            pivots[c] = _make_pivot_real(r, c)
    return pivots
