"""Exact sparse linear algebra over Q(i).

Rows are dicts ``column -> GaussScalar``. Internally each row is scaled to
Gaussian-integer entries and reduced fraction-free (see ``kernels``); pivots
are chosen as the smallest surviving column, so results are deterministic.
"""

from __future__ import annotations

from math import lcm

from .kernels import echelon, reduce_row
from .scalar import GaussScalar, Q, ZERO


def to_int_row(row: dict) -> dict:
    den = 1
    for c in row.values():
        den = lcm(den, int(c.re.denominator), int(c.im.denominator))
    out = {}
    for j, c in row.items():
        if c:
            out[j] = (int(c.re * den), int(c.im * den))
    return out


def _gs(pair) -> GaussScalar:
    return GaussScalar._raw(Q(pair[0]), Q(pair[1]))


class Echelon:
    """Incrementally built row-echelon form."""

    def __init__(self):
        self.pivots: dict = {}

    def add(self, row: dict) -> bool:
        """Insert a row; True when it was independent of the previous ones."""
        before = len(self.pivots)
        echelon([to_int_row(row)], self.pivots)
        return len(self.pivots) > before

    def add_int(self, row: dict) -> bool:
        before = len(self.pivots)
        echelon([row], self.pivots)
        return len(self.pivots) > before

    def contains(self, row: dict) -> bool:
        return not reduce_row(to_int_row(row), self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def back_substitute(self, free_values: dict) -> dict:
        """Solution of the homogeneous system with given free-variable values."""
        x = {j: GaussScalar.coerce(v) for j, v in free_values.items() if v}
        for c in sorted(self.pivots, reverse=True):
            prow = self.pivots[c]
            s = ZERO
            for j, pair in prow.items():
                if j != c and j in x:
                    s = s + _gs(pair) * x[j]
            if s:
                x[c] = -s / _gs(prow[c])
        return x


def rank(rows) -> int:
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.rank


def nullspace(rows, ncols: int) -> list[dict]:
    """Basis of {x : row . x = 0 for all rows} in Q(i)^ncols.

    One basis vector per free column (in increasing order), with that free
    coordinate equal to 1 and the other free coordinates 0.
    """
    e = Echelon()
    for r in rows:
        if r:
            e.add(r)
    out = []
    for f in range(ncols):
        if f in e.pivots:
            continue
        out.append(e.back_substitute({f: 1}))
    return out


def solve(columns: list[dict], target: dict):
    """Coefficients x with sum_j x_j columns[j] = target, or None.

    Columns and target are sparse vectors keyed by arbitrary hashable keys.
    When the columns are dependent, free coefficients are set to zero.
    """
    keys = {}
    for col in columns:
        for k in col:
            keys.setdefault(k, len(keys))
    for k in target:
        if k not in keys:
            return None
    rows: dict = {}
    rhs = len(columns)
    for j, col in enumerate(columns):
        for k, v in col.items():
            rows.setdefault(k, {})[j] = v
    for k, v in target.items():
        rows.setdefault(k, {})[rhs] = v
    e = Echelon()
    for r in rows.values():
        e.add(r)
    if rhs in e.pivots:
        return None
    x = e.back_substitute({rhs: -1})
    x.pop(rhs, None)
    return [x.get(j, ZERO) for j in range(len(columns))]


def normalize_first(vec: dict, order_key=None) -> dict:
    """Scale so that the coefficient of the first key (in sorted order) is 1."""
    if not vec:
        return vec
    first = min(vec, key=order_key) if order_key else min(vec)
    c = vec[first]
    return {k: v / c for k, v in vec.items()}


def proportional(a: dict, b: dict):
    """Scalar c with a = c*b, or None. Zero vectors are proportional only to zero."""
    if not a and not b:
        return ZERO
    if a.keys() != b.keys() or not a:
        return None
    k0 = next(iter(a))
    c = a[k0] / b[k0]
    for k, v in a.items():
        if v != c * b[k]:
            return None
    return c


class Subspace:
    """Span of sparse vectors with exact normal forms (pivot entries are 1).

    Pivot of a row is its smallest column; callers choose column numbering so
    that the columns they want eliminated come first.
    """

    def __init__(self, rows=()):
        self.rows: dict = {}
        for r in rows:
            self.add(r)

    def reduce(self, vec: dict) -> dict:
        v = {k: c for k, c in vec.items() if c}
        # rows are fully reduced, so subtracting one never creates another pivot
        for p in [k for k in v if k in self.rows]:
            c = v.pop(p)
            for k, x in self.rows[p].items():
                if k == p:
                    continue
                nv = v.get(k, ZERO) - c * x
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return v

    def add(self, vec: dict) -> bool:
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        inv = v[p].inverse()
        v = {k: c * inv for k, c in v.items()}
        # keep rows fully reduced against each other
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                for k, x in v.items():
                    nv = row.get(k, ZERO) - c * x
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        self.rows[p] = v
        return True

    def __contains__(self, vec: dict) -> bool:
        return not self.reduce(vec)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> set:
        return set(self.rows)
