"""The conformal superalgebra K_n = C[d] (x) Lambda(n) and its annihilation algebra.

Conventions
-----------
* A ConformalElement is a dict ``(k, mask) -> scalar`` for d^k (x) xi_mask.
* A lambda-polynomial over K_n is flattened to ``(j, k, mask) -> scalar``
  meaning lambda^j d^k xi_mask; two-variable ones use ``(i, j, k, mask)``.
* An element of C[t] (x) Lambda(n) is a dict ``(m, mask) -> scalar`` for
  t^m xi_mask. The same dicts serve as coefficient functions of vector fields.

The bracket of two annihilation monomials is computed three ways: from the
lambda-bracket by t-expansion, from the explicit contact bracket, and from the
commutator of the associated vector fields. The checkers compare all three.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

from .grassmann import (GrassmannElement, RankMismatch, full_mask, indices_of,
                        mono_derive, monomials)
from .kernels import mono_mul_sign, popcount
from .scalar import ONE, GaussScalar, Q
from .sparse import acc


def _iacc(d: dict, key, c: int) -> None:
    if not c:
        return
    v = d.get(key, 0) + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


# ---------------------------------------------------------------------------
# lambda-bracket on monomials
# ---------------------------------------------------------------------------

def _bracket_formula(f: int, g: int, *, mutate: bool = False) -> dict:
    r = popcount(f)
    s = popcount(g)
    out: dict = {}
    sg = mono_mul_sign(f, g)
    if sg:
        _iacc(out, (0, 1, f | g), (r - 2) * sg)
        _iacc(out, (1, 0, f | g), (r + s - 4) * sg)
    sign_r = -1 if r & 1 else 1
    if mutate:
        sign_r = -sign_r if r == 1 else sign_r
    common = f & g
    for i in indices_of(common):
        s1, f1 = mono_derive(i, f)
        s2, g1 = mono_derive(i, g)
        s3 = mono_mul_sign(f1, g1)
        if s3:
            _iacc(out, (0, 0, f1 | g1), sign_r * s1 * s2 * s3)
    return out


@lru_cache(maxsize=None)
def _cached_bracket(f: int, g: int) -> tuple:
    return tuple(sorted(_bracket_formula(f, g).items()))


def mono_bracket(f: int, g: int) -> dict:
    """[xi_f lambda xi_g] as ``(j, k, mask) -> int``."""
    return dict(_cached_bracket(f, g))


def mutated_mono_bracket(f: int, g: int) -> dict:
    """A deliberately wrong bracket (sign flip for odd f); used to test the checkers."""
    return _bracket_formula(f, g, mutate=True)


def _sesqui(lp: dict, a: int, b: int) -> dict:
    """Multiply a lambda-polynomial by (-lambda)^a (lambda + d)^b."""
    if b:
        out: dict = {}
        for (j, k, m), c in lp.items():
            for u in range(b + 1):
                _iacc(out, (j + u, k + b - u, m), c * comb(b, u))
        lp = out
    if a:
        sg = -1 if a & 1 else 1
        lp = {(j + a, k, m): c * sg for (j, k, m), c in lp.items()}
    return lp


# ---------------------------------------------------------------------------
# element types
# ---------------------------------------------------------------------------

class ConformalElement:
    """Element of K_n: terms ``(k, mask) -> GaussScalar`` for d^k (x) xi_mask."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        self.terms = {}
        top = full_mask(n)
        for (k, m), c in (terms or {}).items():
            if k < 0 or m & ~top:
                raise ValueError("bad term")
            acc(self.terms, (k, m), GaussScalar.coerce(c))

    @classmethod
    def from_grassmann(cls, f: GrassmannElement, dpow: int = 0):
        return cls(f.n, {(dpow, m): c for m, c in f.terms.items()})

    @classmethod
    def monomial(cls, n: int, mask: int, dpow: int = 0, coeff=ONE):
        return cls(n, {(dpow, mask): coeff})

    def __add__(self, other):
        _same(self, other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            acc(out, key, c)
        return ConformalElement(self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = GaussScalar.coerce(c)
        return ConformalElement(self.n, {k: v * c for k, v in self.terms.items()})

    def d(self, times: int = 1):
        """Multiply by d^times."""
        return ConformalElement(self.n, {(k + times, m): c for (k, m), c in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, ConformalElement) and self.n == other.n
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"ConformalElement(n={self.n}, {format_conformal(self.terms)})"


def format_conformal(terms: dict) -> str:
    from .grassmann import format_monomial
    if not terms:
        return "0"
    parts = []
    for (k, m) in sorted(terms, key=lambda km: (km[0], popcount(km[1]), km[1])):
        dp = "" if k == 0 else ("d " if k == 1 else f"d^{k} ")
        parts.append(f"({terms[(k, m)]}) {dp}[{format_monomial(m)}]")
    return " + ".join(parts)


class LambdaPoly:
    """Polynomial in lambda with coefficients in some sparse vector space.

    ``coeffs`` maps lambda-exponent -> dict of terms (the coefficient vector).
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: dict | None = None):
        self.n = n
        self.coeffs = {j: dict(v) for j, v in (coeffs or {}).items() if v}

    @classmethod
    def from_flat(cls, n: int, flat: dict):
        coeffs: dict = {}
        for key, c in flat.items():
            j, rest = key[0], key[1:]
            acc(coeffs.setdefault(j, {}), rest, GaussScalar.coerce(c))
        return cls(n, coeffs)

    def to_flat(self) -> dict:
        return {(j,) + key: c for j, v in self.coeffs.items() for key, c in v.items()}

    def degree(self) -> int:
        return max(self.coeffs) if self.coeffs else -1

    def coeff(self, j: int) -> dict:
        return self.coeffs.get(j, {})

    def __eq__(self, other):
        return isinstance(other, LambdaPoly) and self.to_flat() == other.to_flat()

    def __repr__(self):
        return f"LambdaPoly({self.coeffs})"


def _same(a, b):
    if a.n != b.n:
        raise RankMismatch(f"rank {a.n} vs {b.n}")


def lambda_bracket(a: ConformalElement, b: ConformalElement) -> LambdaPoly:
    """[a_lambda b] for arbitrary elements, extended sesquilinearly."""
    _same(a, b)
    flat: dict = {}
    for (ka, fa), ca in a.terms.items():
        for (kb, fb), cb in b.terms.items():
            lp = _sesqui(mono_bracket(fa, fb), ka, kb)
            cc = ca * cb
            for key, c in lp.items():
                acc(flat, key, cc * c)
    return LambdaPoly.from_flat(a.n, flat)


def nth_product(a: ConformalElement, j: int, b: ConformalElement) -> ConformalElement:
    """a_(j) b = j! times the lambda^j coefficient of [a_lambda b]."""
    lp = lambda_bracket(a, b)
    return ConformalElement(a.n, {key: c * factorial(j) for key, c in lp.coeff(j).items()})


def subst_neg(p: LambdaPoly) -> LambdaPoly:
    """Substitute lambda -> -lambda - d (d multiplying the K_n coefficient)."""
    flat: dict = {}
    for (j, k, m), c in p.to_flat().items():
        for u in range(j + 1):
            coef = comb(j, u) * (-1 if j & 1 else 1)
            acc(flat, (u, k + j - u, m), c * coef)
    return LambdaPoly.from_flat(p.n, flat)


def _subst_neg_int(lp: dict) -> dict:
    out: dict = {}
    for (j, k, m), c in lp.items():
        sg = -1 if j & 1 else 1
        for u in range(j + 1):
            _iacc(out, (u, k + j - u, m), c * comb(j, u) * sg)
    return out


# ---------------------------------------------------------------------------
# annihilation algebra C[t] (x) Lambda(n)
# ---------------------------------------------------------------------------

class AnnihilationElement:
    """Element of C[t] (x) Lambda(n): terms ``(m, mask) -> GaussScalar``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        self.terms = {}
        for (m, mask), c in (terms or {}).items():
            acc(self.terms, (m, mask), GaussScalar.coerce(c))

    @classmethod
    def monomial(cls, n: int, tpow: int, mask: int, coeff=ONE):
        return cls(n, {(tpow, mask): coeff})

    def __add__(self, other):
        _same(self, other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            acc(out, key, c)
        return AnnihilationElement(self.n, out)

    def scale(self, c):
        c = GaussScalar.coerce(c)
        return AnnihilationElement(self.n, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, AnnihilationElement) and self.n == other.n
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"AnnihilationElement(n={self.n}, {self.terms})"


def grading(tpow: int, mask: int) -> int:
    """deg(t^m xi_I) = 2m + |I| - 2."""
    return 2 * tpow + popcount(mask) - 2


# plain polynomial helpers on dicts (m, mask) -> scalar -----------------------

def poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for (a, f), ca in p.items():
        for (b, g), cb in q.items():
            s = mono_mul_sign(f, g)
            if s:
                c = ca * cb
                acc(out, (a + b, f | g), c if s > 0 else -c)
    return out


def poly_dt(p: dict) -> dict:
    out: dict = {}
    for (a, f), c in p.items():
        if a:
            acc(out, (a - 1, f), c * a)
    return out


def poly_di(i: int, p: dict) -> dict:
    out: dict = {}
    for (a, f), c in p.items():
        s, f1 = mono_derive(i, f)
        if s:
            acc(out, (a, f1), c if s > 0 else -c)
    return out


def poly_add(p: dict, q: dict, c=1) -> dict:
    out = dict(p)
    for key, v in q.items():
        acc(out, key, v * c)
    return out


def _int_contact_monomials(a: int, f: int, b: int, g: int) -> dict:
    """Contact bracket of t^a xi_f and t^b xi_g with integer coefficients."""
    out: dict = {}
    r, s = popcount(f), popcount(g)
    sg = mono_mul_sign(f, g)
    if sg and (a or b) and a + b >= 1:
        _iacc(out, (a + b - 1, f | g), sg * ((2 - r) * b - a * (2 - s)))
    sign_r = -1 if r & 1 else 1
    for i in indices_of(f & g):
        s1, f1 = mono_derive(i, f)
        s2, g1 = mono_derive(i, g)
        s3 = mono_mul_sign(f1, g1)
        if s3:
            _iacc(out, (a + b, f1 | g1), sign_r * s1 * s2 * s3)
    return out


def contact_bracket(f, g):
    """[f, g] = (2f - E f) d_t g - (d_t f)(2g - E g) + (-1)^{p(f)} sum_i (d_i f)(d_i g).

    Accepts AnnihilationElement or raw ``(m, mask) -> scalar`` dicts; E is the
    Euler operator sum_i xi_i d_i.
    """
    fd = f.terms if isinstance(f, AnnihilationElement) else f
    gd = g.terms if isinstance(g, AnnihilationElement) else g
    out: dict = {}
    for (a, fm), cf in fd.items():
        for (b, gm), cg in gd.items():
            cc = cf * cg
            for key, c in _int_contact_monomials(a, fm, b, gm).items():
                acc(out, key, cc * c)
    if isinstance(f, AnnihilationElement):
        return AnnihilationElement(f.n, out)
    return out


def _d_to_t(k: int, q: int) -> int:
    """Coefficient of t^{q-k} when d^k acts on t^q (d = -d/dt)."""
    if k > q:
        return 0
    return (-1 if k & 1 else 1) * factorial(q) // factorial(q - k)


def ann_bracket_monomials(p: int, f: int, m: int, g: int, bracket=mono_bracket) -> dict:
    """[xi_f t^p, xi_g t^m] via the t-expansion of the lambda-bracket.

    The binomial weight is taken on the first argument's t-power,
    sum_j C(p, j) (xi_f _(j) xi_g) t^{p+m-j}, which is the ordering under which
    the result matches the contact bracket (checked exhaustively in the tests).
    """
    out: dict = {}
    lp = bracket(f, g)
    for (j, k, mask), c in lp.items():
        if j > p:
            continue
        q = p + m - j
        coef = _d_to_t(k, q)
        if coef:
            _iacc(out, (q - k, mask), c * factorial(j) * comb(p, j) * coef)
    return out


def ann_bracket(x: AnnihilationElement, y: AnnihilationElement) -> AnnihilationElement:
    _same(x, y)
    out: dict = {}
    for (p, f), cx in x.terms.items():
        for (m, g), cy in y.terms.items():
            cc = cx * cy
            for key, c in ann_bracket_monomials(p, f, m, g).items():
                acc(out, key, cc * c)
    return AnnihilationElement(x.n, out)


D_ELEMENT_COEFF = GaussScalar(Q(-1, 2))  # d := -1/2 * 1 inside the annihilation algebra


def d_element(n: int) -> AnnihilationElement:
    return AnnihilationElement(n, {(0, 0): D_ELEMENT_COEFF})


# ---------------------------------------------------------------------------
# vector fields
# ---------------------------------------------------------------------------

class VectorField:
    """a d_t + sum_i a_i d_i with coefficients in C[t] (x) Lambda(n).

    ``coeffs[0]`` is a (the d_t coefficient), ``coeffs[i]`` is a_i.
    """

    __slots__ = ("n", "parity", "coeffs")

    def __init__(self, n: int, parity: int, coeffs: list):
        self.n = n
        self.parity = parity
        self.coeffs = [dict(c) for c in coeffs]

    def apply(self, h: dict) -> dict:
        out = poly_mul(self.coeffs[0], poly_dt(h))
        for i in range(1, self.n + 1):
            if self.coeffs[i]:
                out = poly_add(out, poly_mul(self.coeffs[i], poly_di(i, h)))
        return out

    def __eq__(self, other):
        return (isinstance(other, VectorField) and self.n == other.n
                and all(a == b for a, b in zip(self.coeffs, other.coeffs)))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        return f"VectorField(n={self.n}, p={self.parity}, {self.coeffs})"


def vf_commutator(X: VectorField, Y: VectorField) -> VectorField:
    sg = -1 if (X.parity & Y.parity) else 1
    coeffs = []
    for k in range(X.n + 1):
        coeffs.append(poly_add(X.apply(Y.coeffs[k]), Y.apply(X.coeffs[k]), -sg))
    return VectorField(X.n, (X.parity + Y.parity) & 1, coeffs)


def to_vector_field(x) -> VectorField:
    """f -> 2f d_t + (-1)^{p(f)} sum_i (xi_i d_t f + d_i f)(xi_i d_t + d_i).

    ``x`` must have homogeneous parity (an AnnihilationElement or a raw dict).
    """
    if isinstance(x, AnnihilationElement):
        n, terms = x.n, x.terms
    else:
        raise TypeError("expected AnnihilationElement")
    pars = {popcount(m) & 1 for (_, m) in terms}
    if len(pars) > 1:
        raise ValueError("element has mixed parity")
    p = pars.pop() if pars else 0
    sg = -1 if p else 1
    coeffs = [dict() for _ in range(n + 1)]
    coeffs[0] = {k: v * 2 for k, v in terms.items()}
    dt = poly_dt(terms)
    for i in range(1, n + 1):
        xi = {(0, 1 << (i - 1)): ONE}
        h = poly_add(poly_mul(xi, dt), poly_di(i, terms))
        if not h:
            continue
        coeffs[i] = {k: v * sg for k, v in h.items()}
        coeffs[0] = poly_add(coeffs[0], poly_mul(h, xi), sg)
    return VectorField(n, p, coeffs)


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------

def _lp_equal(a: dict, b: dict) -> bool:
    return a == b


def _jacobi_terms(a: int, b: int, c: int, bracket) -> dict:
    """[a_l [b_m c]] - [[a_l b]_{l+m} c] - (-1)^{p(a)p(b)} [b_m [a_l c]]."""
    out: dict = {}
    # [a_l [b_m c]]
    for (jm, k, m), cf in bracket(b, c).items():
        for (jl, k2, m2), cf2 in bracket(a, m).items():
            for u in range(k + 1):
                _iacc(out, (jl + u, jm, k2 + k - u, m2), cf * cf2 * comb(k, u))
    # - [[a_l b]_{l+m} c]
    for (jl, k, m), cf in bracket(a, b).items():
        sg = -1 if k & 1 else 1
        for (q, k2, m2), cf2 in bracket(m, c).items():
            N = k + q
            for u in range(N + 1):
                _iacc(out, (jl + u, N - u, k2, m2), -cf * cf2 * sg * comb(N, u))
    # - (-1)^{p(a)p(b)} [b_m [a_l c]]
    sab = -1 if (popcount(a) & popcount(b) & 1) else 1
    for (jl, k, m), cf in bracket(a, c).items():
        for (q, k2, m2), cf2 in bracket(b, m).items():
            for u in range(k + 1):
                _iacc(out, (jl, q + u, k2 + k - u, m2), -sab * cf * cf2 * comb(k, u))
    return out


def _skew_terms(a: int, b: int, bracket) -> dict:
    """[a_l b] + (-1)^{p(a)p(b)} [b_{-l-d} a]."""
    out = dict(bracket(a, b))
    sab = -1 if (popcount(a) & popcount(b) & 1) else 1
    for key, c in _subst_neg_int(bracket(b, a)).items():
        _iacc(out, key, sab * c)
    return out


def check_jacobi(n: int, bracket=mono_bracket) -> dict:
    ms = monomials(n)
    count = 0
    for a in ms:
        for b in ms:
            for c in ms:
                count += 1
                bad = _jacobi_terms(a, b, c, bracket)
                if bad:
                    return {"name": "jacobi", "passed": False, "count": count,
                            "counterexample": {"a": a, "b": b, "c": c,
                                               "residual": _flat_repr(bad)}}
    return {"name": "jacobi", "passed": True, "count": count}


def check_skew(n: int, bracket=mono_bracket) -> dict:
    ms = monomials(n)
    count = 0
    for a in ms:
        for b in ms:
            count += 1
            bad = _skew_terms(a, b, bracket)
            if bad:
                return {"name": "skew-symmetry", "passed": False, "count": count,
                        "counterexample": {"a": a, "b": b, "residual": _flat_repr(bad)}}
    return {"name": "skew-symmetry", "passed": True, "count": count}


def check_sesquilinearity(n: int, max_d: int = 2) -> dict:
    """[d a_l b] = -l [a_l b] and [a_l d b] = (l + d)[a_l b] on elements d^k xi."""
    ms = monomials(n)
    count = 0
    for fa in ms:
        for fb in ms:
            for ka in range(max_d + 1):
                for kb in range(max_d + 1):
                    count += 1
                    A = ConformalElement.monomial(n, fa, ka)
                    B = ConformalElement.monomial(n, fb, kb)
                    base = lambda_bracket(A, B).to_flat()
                    left = lambda_bracket(A.d(), B).to_flat()
                    want_left = {(j + 1, k, m): -c for (j, k, m), c in base.items()}
                    right = lambda_bracket(A, B.d()).to_flat()
                    want_right: dict = {}
                    for (j, k, m), c in base.items():
                        acc(want_right, (j + 1, k, m), c)
                        acc(want_right, (j, k + 1, m), c)
                    if left != want_left or right != want_right:
                        return {"name": "sesquilinearity", "passed": False, "count": count,
                                "counterexample": {"a": [ka, fa], "b": [kb, fb]}}
    return {"name": "sesquilinearity", "passed": True, "count": count}


def check_lambda_degree(n: int) -> dict:
    ms = monomials(n)
    worst = 0
    for a in ms:
        for b in ms:
            for (j, _, _) in mono_bracket(a, b):
                worst = max(worst, j)
    return {"name": "lambda-degree<=1", "passed": worst <= 1, "max_degree": worst}


def _vf_of_monomial(n: int, tp: int, mask: int) -> VectorField:
    return to_vector_field(AnnihilationElement.monomial(n, tp, mask))


def check_three_way(n: int, tmax: int = 3) -> dict:
    """t-expansion bracket == contact bracket == vector-field commutator."""
    mons = [(p, m) for p in range(tmax + 1) for m in monomials(n)]
    vfs = {x: _vf_of_monomial(n, *x) for x in mons}
    count = 0
    for (p, f) in mons:
        for (q, g) in mons:
            count += 1
            via_lambda = ann_bracket_monomials(p, f, q, g)
            via_contact = _int_contact_monomials(p, f, q, g)
            if via_lambda != via_contact:
                return {"name": "three-way bracket", "passed": False, "count": count,
                        "counterexample": {"x": [p, f], "y": [q, g], "route": "t-expansion"}}
            comm = vf_commutator(vfs[(p, f)], vfs[(q, g)])
            target = to_vector_field(AnnihilationElement(n, via_contact))
            if not _vf_equal(comm, target):
                return {"name": "three-way bracket", "passed": False, "count": count,
                        "counterexample": {"x": [p, f], "y": [q, g], "route": "vector field"}}
    return {"name": "three-way bracket", "passed": True, "count": count}


def _vf_equal(X: VectorField, Y: VectorField) -> bool:
    return all(a == b for a, b in zip(X.coeffs, Y.coeffs))


def check_grading(n: int, tmax: int = 3) -> dict:
    mons = [(p, m) for p in range(tmax + 1) for m in monomials(n)]
    for (p, f) in mons:
        for (q, g) in mons:
            want = grading(p, f) + grading(q, g)
            for (r, h) in _int_contact_monomials(p, f, q, g):
                if grading(r, h) != want:
                    return {"name": "grading", "passed": False,
                            "counterexample": {"x": [p, f], "y": [q, g]}}
    return {"name": "grading", "passed": True}


def check_d_element(n: int) -> dict:
    """d = -1/2 * 1 satisfies [x, d] = d_t x, hence maps g_i onto g_{i-2} for i = 0, 1, 2."""
    dd = {(0, 0): D_ELEMENT_COEFF}
    ok = True
    for i in (0, 1, 2):
        for p in range(3):
            for m in monomials(n):
                if grading(p, m) != i:
                    continue
                x = {(p, m): ONE}
                if contact_bracket(x, dd) != poly_dt(x):
                    ok = False
    depth = min(grading(0, m) for m in monomials(n))
    return {"name": "d-element and depth", "passed": ok and depth == -2, "depth": depth}


def check_axioms(n: int, tmax: int | None = None, bracket=mono_bracket,
                 include_vector_fields: bool | None = None) -> dict:
    """Exhaustive axiom report for K_n on monomials.

    ``bracket`` can be replaced by a corrupted one to confirm that the checker
    notices. Vector-field and t-expansion comparisons run when
    ``include_vector_fields`` is true (default: n <= 4).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    checks = [check_lambda_degree(n), check_skew(n, bracket), check_jacobi(n, bracket)]
    if bracket is mono_bracket:
        checks.append(check_sesquilinearity(n, max_d=1))
    if include_vector_fields is None:
        include_vector_fields = n <= 4
    if include_vector_fields and bracket is mono_bracket:
        t = 3 if tmax is None else tmax
        checks.append(check_three_way(n, t))
        checks.append(check_grading(n, t))
        checks.append(check_d_element(n))
    failed = [c for c in checks if not c["passed"]]
    report = {"n": n, "passed": not failed, "checks": checks}
    if failed:
        report["counterexample"] = failed[0].get("counterexample")
    return report


def _flat_repr(d: dict) -> list:
    return [[list(k), str(v)] for k, v in sorted(d.items())]


__all__ = [
    "ConformalElement", "LambdaPoly", "AnnihilationElement", "VectorField",
    "lambda_bracket", "nth_product", "subst_neg", "ann_bracket", "contact_bracket",
    "grading", "to_vector_field", "vf_commutator", "check_axioms", "mono_bracket",
    "mutated_mono_bracket", "ann_bracket_monomials", "poly_mul", "poly_dt", "poly_di",
    "d_element", "check_jacobi", "check_skew", "check_three_way",
]
