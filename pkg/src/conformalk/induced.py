"""The induced module Ind(F) = C[d] (x) Lambda(n) (x) F and its lambda-action.

A vector is a dict ``(k, mask, b) -> scalar`` for d^k xi_mask (x) v_b, tagged
with the basis it is written in:

* ``natural``: xi_mask is the ordered product in U(g_{<0}); grade -2k-|mask|.
* ``dual``: the label of the Hodge-dual basis vector; the natural vector
  T^{-1}(xi_mask (x) v) has grade -2k-(n-|mask|).

Three independent routes compute f_lambda on a vector:

* ``lambda_action_natural``: closed formula in the natural basis.
* ``lambda_action_dual``: closed formula in the Hodge-dual basis.
* ``direct_action``: the induced-module action computed from scratch by
  commuting an annihilation-algebra monomial through the PBW word
  d^k xi_{j1} ... xi_{jr} (x) v until it hits F, where g_0 acts through the
  representation matrices and g_{>0} acts by zero.
"""

from __future__ import annotations

from math import comb, factorial

from .grassmann import full_mask, hodge_mask, indices_of, mono_derive, mono_derive_by, monomials
from .kernels import mono_mul_sign, popcount
from .kn_algebra import _int_contact_monomials, mono_bracket
from .scalar import I, ONE, ZERO, GaussScalar
from .so_rep import SoRep, Weight, H, NOT_A_WEIGHT_VECTOR
from .sparse import acc

NATURAL = "natural"
DUAL = "dual"


class BasisMismatch(ValueError):
    """Vector is written in the wrong basis for the requested operation."""


class InducedVector:
    __slots__ = ("rep", "basis", "terms")

    def __init__(self, rep: SoRep, terms: dict | None = None, basis: str = NATURAL):
        if basis not in (NATURAL, DUAL):
            raise ValueError(f"unknown basis {basis!r}")
        self.rep = rep
        self.basis = basis
        self.terms = {}
        for key, c in (terms or {}).items():
            acc(self.terms, key, GaussScalar.coerce(c))

    @property
    def n(self) -> int:
        return self.rep.n

    def _wrap(self, terms):
        v = InducedVector.__new__(InducedVector)
        v.rep, v.basis, v.terms = self.rep, self.basis, terms
        return v

    def __add__(self, other):
        _same_basis(self, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc(out, k, c)
        return self._wrap(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = GaussScalar.coerce(c)
        if not c:
            return self._wrap({})
        return self._wrap({k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, InducedVector) and self.basis == other.basis
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"InducedVector({self.basis}, {format_terms(self.terms)})"

    def to_json(self) -> dict:
        rows = []
        for key in sorted(self.terms, key=term_order):
            k, mask, b = key
            rows.append({"dpow": k, "xi": indices_of(mask), "vecIndex": b,
                         "coeff": self.terms[key].to_json()})
        return {"n": self.n, "mu": self.rep.weight.to_json(), "basis": self.basis,
                "terms": rows}


def term_order(key):
    """Deterministic order on basis terms: d-power, then degree, mask, F-index."""
    k, mask, b = key
    return (k, popcount(mask), mask, b)


def format_terms(terms: dict) -> str:
    from .grassmann import format_monomial
    if not terms:
        return "0"
    parts = []
    for key in sorted(terms, key=term_order):
        k, mask, b = key
        dp = "" if k == 0 else ("d " if k == 1 else f"d^{k} ")
        parts.append(f"({terms[key]}) {dp}[{format_monomial(mask)}](x)v{b}")
    return " + ".join(parts)


def _same_basis(a, b):
    if a.basis != b.basis:
        raise BasisMismatch(f"{a.basis} vs {b.basis}")


class LambdaAction:
    """Polynomial in lambda with InducedVector-valued coefficients."""

    __slots__ = ("rep", "basis", "coeffs")

    def __init__(self, rep: SoRep, basis: str, coeffs: dict):
        self.rep = rep
        self.basis = basis
        self.coeffs = {j: dict(v) for j, v in coeffs.items() if v}

    @classmethod
    def from_flat(cls, rep, basis, flat: dict):
        coeffs: dict = {}
        for (j, k, m, b), c in flat.items():
            acc(coeffs.setdefault(j, {}), (k, m, b), c)
        return cls(rep, basis, coeffs)

    def to_flat(self) -> dict:
        return {(j,) + key: c for j, v in self.coeffs.items() for key, c in v.items()}

    def degree(self) -> int:
        return max(self.coeffs) if self.coeffs else -1

    def coeff(self, j: int) -> InducedVector:
        return InducedVector(self.rep, self.coeffs.get(j, {}), self.basis)

    def __eq__(self, other):
        return (isinstance(other, LambdaAction) and self.basis == other.basis
                and self.to_flat() == other.to_flat())

    def __repr__(self):
        return f"LambdaAction({self.basis}, {self.coeffs})"

    def format(self) -> str:
        if not self.coeffs:
            return "0"
        lines = []
        for j in sorted(self.coeffs):
            lam = "" if j == 0 else ("lambda * " if j == 1 else f"lambda^{j} * ")
            lines.append(f"{lam}[{format_terms(self.coeffs[j])}]")
        return "\n+ ".join(lines)

    def to_json(self) -> dict:
        return {str(j): InducedVector(self.rep, v, self.basis).to_json()["terms"]
                for j, v in sorted(self.coeffs.items())}


# ---------------------------------------------------------------------------
# helpers on flat dicts (j, k, mask, b) -> scalar
# ---------------------------------------------------------------------------

def _put(out: dict, key, c) -> None:
    acc(out, key, c)


def _apply_F(rep: SoRep, i: int, j: int, b: int) -> dict:
    return rep.Fop(i, j).get(b, {})


def _sesqui_vec(flat: dict, k: int) -> dict:
    """Multiply a lambda-action of a d-free vector by (lambda + d)^k."""
    if not k:
        return flat
    out: dict = {}
    for (j, kk, m, b), c in flat.items():
        for u in range(k + 1):
            acc(out, (j + u, kk + k - u, m, b), c * comb(k, u))
    return out


# ---------------------------------------------------------------------------
# natural-basis closed formula
# ---------------------------------------------------------------------------

def _natural_mono(rep: SoRep, f: int, g: int, b: int) -> dict:
    """f_lambda (xi_g (x) v_b) in the natural basis; f, g are masks."""
    out: dict = {}
    nf = popcount(f)
    pf = nf & 1
    pg = popcount(g) & 1
    sf = -1 if pf else 1
    mu0 = rep.mu0
    fidx = indices_of(f)
    gidx = indices_of(g)
    # lambda^0 ------------------------------------------------------------
    if nf != 2:
        s, h = mono_derive_by(f, g)
        if s:
            _put(out, (0, 1, h, b), GaussScalar.coerce(sf * (nf - 2) * s))
    for i in fidx:
        s1, f1 = mono_derive(i, f)
        bit = 1 << (i - 1)
        s2 = mono_mul_sign(bit, g)
        if not s2:
            continue
        s3, h = mono_derive_by(f1, g | bit)
        if s3:
            _put(out, (0, 0, h, b), GaussScalar.coerce(s1 * s2 * s3))
    for ai, r in enumerate(fidx):
        for s_ in fidx[ai + 1:]:
            s1, f1 = mono_derive(s_, f)
            s2, f2 = mono_derive(r, f1)
            s3, h = mono_derive_by(f2, g)
            c = sf * s1 * s2 * s3
            if c:
                for row, x in _apply_F(rep, r, s_, b).items():
                    _put(out, (0, 0, h, row), x * c)
    # lambda^1 ------------------------------------------------------------
    s, h = mono_derive_by(f, g)
    if s and mu0:
        _put(out, (1, 0, h, b), mu0 * (sf * s))
    sfg = -1 if (pf ^ pg) else 1
    for i in gidx:
        s1, g1 = mono_derive(i, g)
        s2, h = mono_derive_by(f, g1)
        if not s2:
            continue
        s3 = mono_mul_sign(h, 1 << (i - 1))
        if s3:
            _put(out, (1, 0, h | (1 << (i - 1)), b), GaussScalar.coerce(sfg * s1 * s2 * s3))
    for i in fidx:
        s1, f1 = mono_derive(i, f)
        for j in gidx:
            if i == j:
                continue
            s2, g1 = mono_derive(j, g)
            s3, h = mono_derive_by(f1, g1)
            c = s1 * s2 * s3
            if c:
                for row, x in _apply_F(rep, i, j, b).items():
                    _put(out, (1, 0, h, row), x * c)
    # lambda^2 ------------------------------------------------------------
    for ai, i in enumerate(gidx):
        for j in gidx[ai + 1:]:
            s1, g1 = mono_derive(j, g)
            s2, g2 = mono_derive(i, g1)
            s3, h = mono_derive_by(f, g2)
            c = sf * s1 * s2 * s3
            if c:
                for row, x in _apply_F(rep, i, j, b).items():
                    _put(out, (2, 0, h, row), x * c)
    return out


# ---------------------------------------------------------------------------
# Hodge-dual closed formula
# ---------------------------------------------------------------------------

def _dual_mono(rep: SoRep, f: int, g: int, b: int, *, mutate: bool = False) -> dict:
    """f_lambda (xi_g (x) v_b) with xi_g a Hodge-dual basis label."""
    out: dict = {}
    nf = popcount(f)
    ng = popcount(g)
    pf = nf & 1
    sf = -1 if pf else 1
    e = nf * (nf + 1) // 2 + nf * ng
    pre = -1 if e & 1 else 1
    mu0 = rep.mu0
    fidx = indices_of(f)
    n = rep.n
    sfg = mono_mul_sign(f, g)
    # lambda^0
    if sfg and nf != 2:
        _put(out, (0, 1, f | g, b), GaussScalar.coerce(pre * (nf - 2) * sfg))
    for i in indices_of(f & g):
        s1, f1 = mono_derive(i, f)
        s2, g1 = mono_derive(i, g)
        s3 = mono_mul_sign(f1, g1)
        if s3:
            _put(out, (0, 0, f1 | g1, b), GaussScalar.coerce(-pre * sf * s1 * s2 * s3))
    for ai, r in enumerate(fidx):
        for s_ in fidx[ai + 1:]:
            s1, f1 = mono_derive(s_, f)
            s2, f2 = mono_derive(r, f1)
            s3 = mono_mul_sign(f2, g)
            c = -pre * s1 * s2 * s3
            if c:
                for row, x in _apply_F(rep, r, s_, b).items():
                    _put(out, (0, 0, f2 | g, row), x * c)
    # lambda^1
    if sfg and mu0:
        _put(out, (1, 0, f | g, b), mu0 * (pre * sfg))
    for i in range(1, n + 1):
        bit = 1 << (i - 1)
        s1 = mono_mul_sign(bit, g)
        if not s1:
            continue
        s2 = mono_mul_sign(f, bit | g)
        if not s2:
            continue
        s3, h = mono_derive(i, f | bit | g)
        c = -pre * sf * s1 * s2 * s3
        if c:
            _put(out, (1, 0, h, b), GaussScalar.coerce(c))
    for i in fidx:
        s1, f1 = mono_derive(i, f)
        for j in range(1, n + 1):
            if j == i:
                continue
            bit = 1 << (j - 1)
            s2 = mono_mul_sign(bit, g)
            if not s2:
                continue
            s3 = mono_mul_sign(f1, bit | g)
            c = pre * sf * s1 * s2 * s3
            if c:
                for row, x in _apply_F(rep, i, j, b).items():
                    _put(out, (1, 0, f1 | bit | g, row), x * c)
    # lambda^2
    lam2 = 1 if mutate else -1
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            bij = (1 << (i - 1)) | (1 << (j - 1))
            s1 = mono_mul_sign(1 << (j - 1), g)
            if not s1:
                continue
            s2 = mono_mul_sign(1 << (i - 1), (1 << (j - 1)) | g)
            if not s2:
                continue
            s3 = mono_mul_sign(f, bij | g)
            c = lam2 * pre * s1 * s2 * s3
            if c:
                for row, x in _apply_F(rep, i, j, b).items():
                    _put(out, (2, 0, f | bij | g, row), x * c)
    return out


# ---------------------------------------------------------------------------
# direct computation in the induced module
# ---------------------------------------------------------------------------

class DirectAction:
    """g acting on Ind(F), computed from the definition of the induced module.

    ``act(m, I, key)`` returns x . (d^k xi_J (x) v_b) for x = t^m xi_I as a
    natural-basis dict, where ``key = (k, J, b)``.
    """

    def __init__(self, rep: SoRep):
        self.rep = rep
        self.memo: dict = {}

    def act(self, m: int, Imask: int, key) -> dict:
        mk = (m, Imask) + tuple(key)
        hit = self.memo.get(mk)
        if hit is not None:
            return hit
        res = self._compute(m, Imask, *key)
        self.memo[mk] = res
        return res

    def _compute(self, m, Imask, k, J, b) -> dict:
        rep = self.rep
        out: dict = {}
        if k > 0:
            # x . d u = [x, d] u + d (x . u), and [x, d] = d_t x
            for (kk, JJ, bb), c in self.act(m, Imask, (k - 1, J, b)).items():
                acc(out, (kk + 1, JJ, bb), c)
            if m > 0:
                for key2, c in self.act(m - 1, Imask, (k - 1, J, b)).items():
                    acc(out, key2, c * m)
            return out
        if J:
            j = (J & -J).bit_length()
            rest = J & (J - 1)
            for (m2, I2), c in _int_contact_monomials(m, Imask, 0, 1 << (j - 1)).items():
                for key2, v in self.act(m2, I2, (0, rest, b)).items():
                    acc(out, key2, v * c)
            sx = -1 if popcount(Imask) & 1 else 1
            for key2, v in _left_xi(j, self.act(m, Imask, (0, rest, b))).items():
                acc(out, key2, v * sx)
            return out
        deg = 2 * m + popcount(Imask) - 2
        if deg > 0:
            return out
        if deg == 0:
            if m == 1:
                if rep.mu0:
                    out[(0, 0, b)] = rep.mu0
                return out
            a, c_ = indices_of(Imask)
            # xi_a xi_c = -F_ac
            for row, x in rep.F[(a, c_)].get(b, {}).items():
                acc(out, (0, 0, row), -x)
            return out
        if Imask == 0:
            out[(1, 0, b)] = GaussScalar.coerce(-2)  # 1 = -2 d
            return out
        out[(0, Imask, b)] = ONE
        return out

    def lambda_action(self, f: int, key) -> dict:
        """Flat lambda-action f_lambda(d^k xi_J (x) v_b) = sum_j lambda^j/j! (t^j f).w"""
        k, J, b = key
        grade = 2 * k + popcount(J)
        out: dict = {}
        j = 0
        while 2 * j + popcount(f) - 2 <= grade:
            res = self.act(j, f, key)
            if res:
                inv = GaussScalar.coerce(1) / factorial(j)
                for (kk, JJ, bb), c in res.items():
                    acc(out, (j, kk, JJ, bb), c * inv)
            j += 1
        return out


def _left_xi(j: int, vec: dict) -> dict:
    """Left multiplication by xi_j in U(g_{<0}), where xi_j xi_j = d."""
    out: dict = {}
    bit = 1 << (j - 1)
    for (k, J, b), c in vec.items():
        eps = popcount(J & (bit - 1))
        s = -1 if eps & 1 else 1
        if J & bit:
            acc(out, (k + 1, J ^ bit, b), c * s)
        else:
            acc(out, (k, J | bit, b), c * s)
    return out


# ---------------------------------------------------------------------------
# public action API
# ---------------------------------------------------------------------------

class ActionEngine:
    """Caches closed-formula actions of monomials on d-free basis vectors."""

    def __init__(self, rep: SoRep, basis: str = NATURAL, *, mutate: bool = False):
        self.rep = rep
        self.basis = basis
        self.mutate = mutate
        self.memo: dict = {}

    def mono(self, f: int, g: int, b: int) -> dict:
        key = (f, g, b)
        hit = self.memo.get(key)
        if hit is None:
            if self.basis == NATURAL:
                hit = _natural_mono(self.rep, f, g, b)
            else:
                hit = _dual_mono(self.rep, f, g, b, mutate=self.mutate)
            self.memo[key] = hit
        return hit

    def act_flat(self, f: int, vec: dict) -> dict:
        """Flat (j, k, mask, b) lambda-action of xi_f on a vector dict."""
        out: dict = {}
        for (k, g, b), c in vec.items():
            base = self.mono(f, g, b)
            if k:
                base = _sesqui_vec(base, k)
            for key, x in base.items():
                acc(out, key, x * c)
        return out

    def act(self, f, w: InducedVector) -> LambdaAction:
        if w.basis != self.basis:
            raise BasisMismatch(f"vector is in the {w.basis} basis")
        out: dict = {}
        for fm, fc in _grassmann_terms(f):
            for key, x in self.act_flat(fm, w.terms).items():
                acc(out, key, x * fc)
        return LambdaAction.from_flat(self.rep, self.basis, out)


def _grassmann_terms(f):
    from .grassmann import GrassmannElement
    if isinstance(f, int):
        return [(f, ONE)]
    if isinstance(f, GrassmannElement):
        return list(f.terms.items())
    raise TypeError("f must be a mask or GrassmannElement")


def lambda_action_natural(f, w: InducedVector) -> LambdaAction:
    return ActionEngine(w.rep, NATURAL).act(f, w)


def lambda_action_dual(f, w: InducedVector) -> LambdaAction:
    return ActionEngine(w.rep, DUAL).act(f, w)


def direct_lambda_action(f, w: InducedVector, engine: DirectAction | None = None) -> LambdaAction:
    """Lambda-action computed inside the induced module itself (natural basis)."""
    if w.basis != NATURAL:
        raise BasisMismatch("direct action works in the natural basis")
    engine = engine or DirectAction(w.rep)
    out: dict = {}
    for fm, fc in _grassmann_terms(f):
        for key, c in w.terms.items():
            for k2, x in engine.lambda_action(fm, key).items():
                acc(out, k2, x * c * fc)
    return LambdaAction.from_flat(w.rep, NATURAL, out)


# ---------------------------------------------------------------------------
# Hodge transport and the alpha twist
# ---------------------------------------------------------------------------

def _T_terms(terms: dict, n: int) -> dict:
    out: dict = {}
    for (k, m, b), c in terms.items():
        s, comp = hodge_mask(m, n)
        acc(out, (k, comp, b), c if s > 0 else -c)
    return out


def _Tinv_terms(terms: dict, n: int) -> dict:
    out: dict = {}
    top = full_mask(n)
    for (k, m, b), c in terms.items():
        comp = top & ~m
        s, _ = hodge_mask(comp, n)
        acc(out, (k, comp, b), c if s > 0 else -c)
    return out


def hodge_transport(w: InducedVector) -> InducedVector:
    """T(g (x) v) = hodge(g) (x) v, natural -> dual; on a dual vector applies T^{-1}."""
    if w.basis == NATURAL:
        return InducedVector(w.rep, _T_terms(w.terms, w.n), DUAL)
    return InducedVector(w.rep, _Tinv_terms(w.terms, w.n), NATURAL)


def hodge_apply_raw(w: InducedVector) -> InducedVector:
    """T applied to the coefficients without changing the basis tag (for T(T(w)))."""
    return InducedVector(w.rep, _T_terms(w.terms, w.n), w.basis)


def transport_action(act: LambdaAction) -> LambdaAction:
    """Map a natural-basis lambda-action result to the dual basis by T."""
    if act.basis != NATURAL:
        raise BasisMismatch("expected natural-basis action")
    n = act.rep.n
    return LambdaAction(act.rep, DUAL, {j: _T_terms(v, n) for j, v in act.coeffs.items()})


def twist_alpha(act: LambdaAction, alpha) -> LambdaAction:
    """Replace d by d + alpha in every coefficient."""
    alpha = GaussScalar.coerce(alpha)
    if not alpha:
        return LambdaAction(act.rep, act.basis, act.coeffs)
    coeffs = {}
    for j, vec in act.coeffs.items():
        out: dict = {}
        for (k, m, b), c in vec.items():
            for u in range(k + 1):
                acc(out, (u, m, b), c * comb(k, u) * alpha ** (k - u))
        coeffs[j] = out
    return LambdaAction(act.rep, act.basis, coeffs)


def twist_vector(w: InducedVector, alpha) -> InducedVector:
    """d^k -> (d + alpha)^k on a vector (the basis change behind the twist)."""
    alpha = GaussScalar.coerce(alpha)
    out: dict = {}
    for (k, m, b), c in w.terms.items():
        for u in range(k + 1):
            acc(out, (u, m, b), c * comb(k, u) * alpha ** (k - u))
    return InducedVector(w.rep, out, w.basis)


# ---------------------------------------------------------------------------
# module axioms
# ---------------------------------------------------------------------------

def _two_var(engine: ActionEngine, a: int, b: int, w: dict) -> dict:
    """a_lambda (b_mu w) as (i, j, k, mask, idx) with lambda^i mu^j."""
    out: dict = {}
    inner = engine.act_flat(b, w)
    by_mu: dict = {}
    for (j, k, m, bb), c in inner.items():
        by_mu.setdefault(j, {})[(k, m, bb)] = c
    for j, vec in by_mu.items():
        for (i, k, m, bb), c in engine.act_flat(a, vec).items():
            acc(out, (i, j, k, m, bb), c)
    return out


def _bracket_action(engine: ActionEngine, a: int, b: int, w: dict) -> dict:
    """[a_lambda b]_{lambda+mu} w with d-powers in [a_lambda b] acting as -(lambda+mu)."""
    out: dict = {}
    for (j, k, m), c in mono_bracket(a, b).items():
        sg = -1 if k & 1 else 1
        for (q, kk, mm, bb), x in engine.act_flat(m, w).items():
            N = k + q
            for u in range(N + 1):
                acc(out, (j + u, N - u, kk, mm, bb), x * (c * sg * comb(N, u)))
    return out


def check_module_axioms(rep: SoRep, n: int | None = None, basis: str = NATURAL,
                        max_d: int = 2, engine: ActionEngine | None = None,
                        pairs=None) -> dict:
    """(M1) and (M2) as exact polynomial identities in lambda and mu."""
    n = rep.n if n is None else n
    engine = engine or ActionEngine(rep, basis)
    ms = monomials(n)
    vecs = [(k, g, b) for k in range(max_d + 1) for g in ms for b in range(rep.dim)]
    count = 0
    # (M1): d(a_lambda w) - a_lambda(d w) = -lambda a_lambda w
    for a in ms:
        for key in vecs:
            base = engine.act_flat(a, {key: ONE})
            dw = engine.act_flat(a, {(key[0] + 1,) + key[1:]: ONE})
            lhs: dict = {}
            for (j, k, m, b), c in base.items():
                acc(lhs, (j, k + 1, m, b), c)
                acc(lhs, (j + 1, k, m, b), c)
            if lhs != dw:
                return {"passed": False, "axiom": "M1", "counterexample":
                        {"a": a, "vector": list(key)}}
    # (M2)
    if pairs is None:
        pairs = [(a, b) for a in ms for b in ms]
    for key in vecs:
        w = {key: ONE}
        for a, b in pairs:
            count += 1
            lhs = _two_var(engine, a, b, w)
            sab = -1 if (popcount(a) & popcount(b) & 1) else 1
            for (j, i, k, m, bb), c in _two_var(engine, b, a, w).items():
                acc(lhs, (i, j, k, m, bb), -sab * c)
            rhs = _bracket_action(engine, a, b, w)
            if lhs != rhs:
                return {"passed": False, "axiom": "M2", "count": count,
                        "counterexample": {"a": a, "b": b, "vector": list(key)}}
    return {"passed": True, "count": count, "vectors": len(vecs)}


# ---------------------------------------------------------------------------
# weights and grades
# ---------------------------------------------------------------------------

def grade_of(key, n: int, basis: str) -> int:
    k, m, _ = key
    size = popcount(m) if basis == NATURAL else n - popcount(m)
    return -2 * k - size


def e00_action(w: InducedVector, engine: ActionEngine | None = None) -> InducedVector:
    """E_00 = t acting on w: the lambda^1 coefficient of 1_lambda w."""
    engine = engine or ActionEngine(w.rep, w.basis)
    flat = engine.act_flat(0, w.terms)
    return InducedVector(w.rep, {(k, m, b): c for (j, k, m, b), c in flat.items() if j == 1},
                         w.basis)


def so_action(el: dict, w: InducedVector, engine: ActionEngine | None = None) -> InducedVector:
    """An so(n) element (combination of F_ab = -xi_a xi_b) acting on w."""
    engine = engine or ActionEngine(w.rep, w.basis)
    out: dict = {}
    for (a, b), c in el.items():
        mask = (1 << (a - 1)) | (1 << (b - 1))
        for (j, k, m, bb), x in engine.act_flat(mask, w.terms).items():
            if j == 0:
                acc(out, (k, m, bb), -x * c)
    return InducedVector(w.rep, out, w.basis)


def weight_and_grade(w: InducedVector, engine: ActionEngine | None = None):
    """((E_00; H) weight or NOT_A_WEIGHT_VECTOR, grade or None if mixed)."""
    if not w:
        raise ValueError("zero vector")
    engine = engine or ActionEngine(w.rep, w.basis)
    grades = {grade_of(key, w.n, w.basis) for key in w.terms}
    grade = grades.pop() if len(grades) == 1 else None
    e = _eigen(w.terms, e00_action(w, engine).terms)
    if e is None:
        return NOT_A_WEIGHT_VECTOR, grade
    mu = []
    for j in range(1, w.n // 2 + 1):
        lam = _eigen(w.terms, so_action(H(j), w, engine).terms)
        if lam is None or lam.im:
            return NOT_A_WEIGHT_VECTOR, grade
        mu.append(lam.as_fraction())
    return Weight(e, tuple(mu)), grade


def _eigen(v: dict, hv: dict):
    k0 = next(iter(v))
    lam = hv.get(k0, ZERO) / v[k0]
    for k in set(v) | set(hv):
        if hv.get(k, ZERO) != lam * v.get(k, ZERO):
            return None
    return lam


__all__ = [
    "InducedVector", "LambdaAction", "ActionEngine", "DirectAction", "NATURAL", "DUAL",
    "lambda_action_natural", "lambda_action_dual", "direct_lambda_action",
    "hodge_transport", "transport_action", "twist_alpha", "twist_vector",
    "check_module_axioms", "weight_and_grade", "grade_of", "e00_action", "so_action",
    "BasisMismatch", "term_order", "format_terms",
]
