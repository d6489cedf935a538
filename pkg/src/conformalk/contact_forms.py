"""Super differential forms over C[t, t^-1] (x) Lambda(n) and the contact complex.

A form monomial is ``(a, mask, e, c)``: t^a xi_mask dt^e dxi_1^c_1 ... dxi_n^c_n,
written in that order. Parities: t even, xi odd, dt odd, dxi even.

Every monomial is an eigenvector of E_00 = 2t d_t + sum xi_i d_i (extended to
forms so that it commutes with d) with eigenvalue 2a + |I| + 2e + |c|. The
weight and the form degree split each side into finite-dimensional pieces,
and d preserves weight, so every rank computation is done on complete pieces.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb

from .grassmann import full_mask, indices_of, mono_derive, monomials
from .kernels import mono_mul_sign, popcount
from .kn_algebra import AnnihilationElement, VectorField, ann_bracket, grading, to_vector_field
from .linalg import Echelon, Subspace
from .scalar import I, ONE, ZERO, GaussScalar
from .so_rep import H, Weight, borel_basis, root_vector, weyl_dim
from .sparse import acc

PLUS = "plus"
MINUS = "minus"


class TruncationError(ValueError):
    """A requested component falls outside the computed range."""


class FormElement:
    __slots__ = ("n", "side", "terms")

    def __init__(self, n: int, terms: dict | None = None, side: str = PLUS):
        if side not in (PLUS, MINUS):
            raise ValueError(f"unknown side {side!r}")
        self.n = n
        self.side = side
        self.terms = {}
        for key, c in (terms or {}).items():
            if not _on_side(key[0], side):
                raise ValueError(f"t-power {key[0]} does not belong to the {side} side")
            acc(self.terms, _norm_key(key, n), GaussScalar.coerce(c))

    @classmethod
    def _wrap(cls, n, terms, side):
        f = cls.__new__(cls)
        f.n, f.side, f.terms = n, side, terms
        return f

    @classmethod
    def monomial(cls, n, a=0, xi=(), dt=0, dxi=None, side=PLUS, coeff=ONE):
        mask = xi if isinstance(xi, int) else sum(1 << (i - 1) for i in xi)
        c = tuple(dxi) if dxi is not None else (0,) * n
        return cls(n, {(a, mask, dt, c): coeff}, side)

    def __add__(self, other):
        _check(self, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc(out, k, c)
        return FormElement._wrap(self.n, out, self.side)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = GaussScalar.coerce(c)
        if not c:
            return FormElement._wrap(self.n, {}, self.side)
        return FormElement._wrap(self.n, {k: v * c for k, v in self.terms.items()}, self.side)

    def __eq__(self, other):
        return (isinstance(other, FormElement) and self.n == other.n
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"FormElement({self.side}, {format_form(self.terms)})"

    def degree_set(self) -> set:
        return {e + sum(c) for (_, _, e, c) in self.terms}


def _norm_key(key, n):
    a, mask, e, c = key
    c = tuple(c)
    if len(c) != n:
        raise ValueError("dxi exponent vector has wrong length")
    if e not in (0, 1) or any(x < 0 for x in c):
        raise ValueError("bad form monomial")
    return (a, mask, e, c)


def _on_side(a: int, side: str) -> bool:
    return a >= 0 if side == PLUS else a <= -1


def _check(a, b):
    if a.n != b.n:
        raise ValueError("rank mismatch")
    if a.side != b.side:
        raise ValueError("side mismatch")


def format_form(terms: dict) -> str:
    if not terms:
        return "0"
    parts = []
    for (a, mask, e, c), v in sorted(terms.items(), key=lambda kv: _order_key(kv[0])):
        fac = []
        if a:
            fac.append(f"t^{a}" if a != 1 else "t")
        fac.extend(f"x{i}" for i in indices_of(mask))
        if e:
            fac.append("dt")
        for i, x in enumerate(c, 1):
            if x:
                fac.append(f"dx{i}" + (f"^{x}" if x > 1 else ""))
        parts.append(f"({v}) " + (" ".join(fac) or "1"))
    return " + ".join(parts)


def weight_of_monomial(key) -> int:
    a, mask, e, c = key
    return 2 * a + popcount(mask) + 2 * e + sum(c)


def form_degree(key) -> int:
    return key[2] + sum(key[3])


# ---------------------------------------------------------------------------
# products and d
# ---------------------------------------------------------------------------

def _mono_wedge(x, y):
    a1, I1, e1, c1 = x
    a2, I2, e2, c2 = y
    if e1 and e2:
        return 0, None
    s = mono_mul_sign(I1, I2)
    if not s:
        return 0, None
    if e1 and popcount(I2) & 1:
        s = -s
    return s, (a1 + a2, I1 | I2, e1 + e2, tuple(p + q for p, q in zip(c1, c2)))


def wedge_terms(x: dict, y: dict) -> dict:
    out: dict = {}
    for k1, v1 in x.items():
        for k2, v2 in y.items():
            s, k = _mono_wedge(k1, k2)
            if s:
                c = v1 * v2
                acc(out, k, c if s > 0 else -c)
    return out


def wedge(a: FormElement, b: FormElement) -> FormElement:
    if a.n != b.n:
        raise ValueError("rank mismatch")
    out = wedge_terms(a.terms, b.terms)
    side = MINUS if MINUS in (a.side, b.side) else PLUS
    for (t, _, _, _) in out:
        if not _on_side(t, side):
            raise TruncationError("product leaves the minus side")
    return FormElement._wrap(a.n, out, side)


def d_terms(x: dict, n: int) -> dict:
    out: dict = {}
    for (a, mask, e, c), v in x.items():
        if a and not e:
            s = -1 if popcount(mask) & 1 else 1
            acc(out, (a - 1, mask, 1, c), v * (a * s))
        for j in indices_of(mask):
            s, rest = mono_derive(j, mask)
            c2 = list(c)
            c2[j - 1] += 1
            acc(out, (a, rest, e, tuple(c2)), v if s > 0 else -v)
    return out


def d(a: FormElement) -> FormElement:
    return FormElement._wrap(a.n, d_terms(a.terms, a.n), a.side)


def omega_terms(n: int) -> dict:
    """omega = dt - sum_i xi_i dxi_i."""
    z = (0,) * n
    out = {(0, 0, 1, z): ONE}
    for i in range(1, n + 1):
        c = list(z)
        c[i - 1] = 1
        out[(0, 1 << (i - 1), 0, tuple(c))] = -ONE
    return out


def omega(n: int, side: str = PLUS) -> FormElement:
    return FormElement._wrap(n, omega_terms(n), PLUS)


# ---------------------------------------------------------------------------
# Lie derivative
# ---------------------------------------------------------------------------

def _fun_apply(X: VectorField, a: int, mask: int) -> dict:
    """X applied to the function t^a xi_mask, as a dict (a, mask) -> scalar."""
    return X.apply({(a, mask): ONE})


def _fun_to_form(f: dict, n: int) -> dict:
    z = (0,) * n
    return {(a, m, 0, z): c for (a, m), c in f.items()}


def lie_terms(X: VectorField, x: dict, n: int) -> dict:
    """The derivation X on forms, extended so that it supercommutes with d."""
    p = X.parity
    sp = -1 if p else 1
    z = (0,) * n
    # X(dt) = (-1)^p d(X t), X(dxi_j) = (-1)^p d(X xi_j)
    d_of = {}
    out: dict = {}
    for key, v in x.items():
        a, mask, e, c = key
        fpart = {(a, mask, 0, z): ONE}
        rest = {(0, 0, e, c): ONE}
        t1 = wedge_terms(_fun_to_form(_fun_apply(X, a, mask), n), rest)
        for k2, x2 in t1.items():
            acc(out, k2, x2 * v)
        sg = -1 if (p and popcount(mask) & 1) else 1
        drest: dict = {}
        if e:
            if 0 not in d_of:
                d_of[0] = {k: w * sp for k, w in d_terms(_fun_to_form(X.coeffs[0], n), n).items()}
            for k2, x2 in wedge_terms(d_of[0], {(0, 0, 0, c): ONE}).items():
                acc(drest, k2, x2)
        se = -1 if (p and e) else 1
        for j in range(1, n + 1):
            if not c[j - 1]:
                continue
            if j not in d_of:
                d_of[j] = {k: w * sp for k, w in
                           d_terms(_fun_to_form(_fun_apply(X, 0, 1 << (j - 1)), n), n).items()}
            c2 = list(c)
            c2[j - 1] -= 1
            piece = wedge_terms({(0, 0, e, z): ONE}, wedge_terms(d_of[j], {(0, 0, 0, tuple(c2)): ONE}))
            for k2, x2 in piece.items():
                acc(drest, k2, x2 * (se * c[j - 1]))
        for k2, x2 in wedge_terms(fpart, drest).items():
            acc(out, k2, x2 * (v * sg))
    return out


def lie_derivative(D, a: FormElement) -> FormElement:
    """L_D a for D an AnnihilationElement (or a VectorField); minus side is projected."""
    X = D if isinstance(D, VectorField) else to_vector_field(D)
    out = lie_terms(X, a.terms, a.n)
    if a.side == MINUS:
        out = {k: v for k, v in out.items() if k[0] <= -1}
    return FormElement._wrap(a.n, out, a.side)


# ---------------------------------------------------------------------------
# graded pieces, ideals and the quotient complex
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _compositions(total: int, parts: int) -> tuple:
    if parts == 0:
        return ((),) if total == 0 else ()
    out = []
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


def _order_key(key):
    """Elimination order: dt first, then dxi_1 .. dxi_n, then xi_1 .. xi_n, then t."""
    a, mask, e, c = key
    return (-e, tuple(-x for x in c), tuple(-((mask >> i) & 1) for i in range(len(c))), -a)


@lru_cache(maxsize=None)
def component_basis(n: int, k: int, w: int, side: str) -> tuple:
    """Monomials of form degree k and weight w, in elimination order."""
    if k < 0:
        return ()
    out = []
    for e in (0, 1):
        if e > k:
            continue
        for c in _compositions(k - e, n):
            for mask in monomials(n):
                rem = w - popcount(mask) - 2 * e - (k - e)
                if rem % 2:
                    continue
                a = rem // 2
                if _on_side(a, side):
                    out.append((a, mask, e, c))
    out.sort(key=_order_key)
    return tuple(out)


def _index(basis) -> dict:
    return {m: i for i, m in enumerate(basis)}


def _project(terms: dict, side: str) -> dict:
    if side == PLUS:
        return terms
    return {k: v for k, v in terms.items() if k[0] <= -1}


def ideal_generators(n: int, k: int, w: int, side: str) -> list[dict]:
    """omega ^ Omega^{k-1} + d omega ^ Omega^{k-2} in the (k, w) piece."""
    if k <= 0:
        return []
    om = omega_terms(n)
    dom = d_terms(om, n)
    gens = []
    for m in component_basis(n, k - 1, w - 2, side):
        g = _project(wedge_terms(om, {m: ONE}), side)
        if g:
            gens.append(g)
    for m in component_basis(n, k - 2, w - 2, side):
        g = _project(wedge_terms(dom, {m: ONE}), side)
        if g:
            gens.append(g)
    return gens


@lru_cache(maxsize=None)
def ideal_component(n: int, k: int, w: int, side: str) -> Subspace:
    """Row-reduced span of I^k at weight w (columns indexed by component_basis)."""
    idx = _index(component_basis(n, k, w, side))
    sub = Subspace()
    for g in ideal_generators(n, k, w, side):
        sub.add({idx[m]: c for m, c in g.items()})
    return sub


class QuotientComplex:
    """Omega^k / I^k on one side, for k in [0, kmax] and weights in ``weights``."""

    def __init__(self, n: int, side: str, kmax: int, weights):
        self.n = n
        self.side = side
        self.kmax = kmax
        self.weights = sorted(weights)
        self.basis: dict = {}
        self.dmat: dict = {}
        for w in self.weights:
            for k in range(kmax + 1):
                full = component_basis(n, k, w, side)
                piv = ideal_component(n, k, w, side).pivots
                self.basis[(k, w)] = [m for i, m in enumerate(full) if i not in piv]
        for w in self.weights:
            for k in range(kmax):
                self.dmat[(k, w)] = self._d_matrix(k, w)

    def _d_matrix(self, k, w) -> list[dict]:
        """Columns: d of each quotient basis vector, in quotient coordinates of level k+1."""
        n, side = self.n, self.side
        tgt_full = component_basis(n, k + 1, w, side)
        idx = _index(tgt_full)
        sub = ideal_component(n, k + 1, w, side)
        pos = {m: i for i, m in enumerate(self.basis[(k + 1, w)])}
        cols = []
        for m in self.basis[(k, w)]:
            img = d_terms({m: ONE}, n)
            vec = sub.reduce({idx[x]: c for x, c in img.items()})
            cols.append({pos[tgt_full[i]]: c for i, c in vec.items()})
        return cols

    def dim(self, k, w) -> int:
        return len(self.basis[(k, w)])

    def rank(self, k, w) -> int:
        if k < 0 or k >= self.kmax:
            return 0
        cols = self.dmat[(k, w)]
        e = Echelon()
        for c in cols:
            if c:
                e.add(c)
        return e.rank

    def dd_zero(self) -> bool:
        for w in self.weights:
            for k in range(self.kmax - 1):
                A, B = self.dmat[(k, w)], self.dmat[(k + 1, w)]
                for col in A:
                    out: dict = {}
                    for j, c in col.items():
                        for i, x in B[j].items():
                            acc(out, i, c * x)
                    if out:
                        return False
        return True

    def graded_dims(self) -> dict:
        return {f"{k},{w}": self.dim(k, w) for w in self.weights for k in range(self.kmax + 1)}


def quotient_complex(n: int, side: str = PLUS, kmax: int = 4, tmax: int = 4) -> QuotientComplex:
    return QuotientComplex(n, side, kmax, default_weights(n, side, kmax, tmax))


def default_weights(n: int, side: str, kmax: int, tmax: int) -> list:
    """Weights whose pieces at every level <= kmax only involve |t-power| <= tmax."""
    if side == PLUS:
        return list(range(0, 2 * tmax + 1))
    top = n + kmax - 1
    return list(range(-2 * tmax, top + 1))


def exactness_check(cx: QuotientComplex) -> dict:
    """Cohomology dimension of the quotient complex per level, summed over weights."""
    levels = {}
    per_weight = {}
    for k in range(cx.kmax):
        total = 0
        for w in cx.weights:
            ker = cx.dim(k, w) - cx.rank(k, w)
            im = cx.rank(k - 1, w) if k > 0 else 0
            defect = ker - im
            if defect:
                per_weight.setdefault(k, {})[w] = defect
            total += defect
        levels[k] = total
    return {"n": cx.n, "side": cx.side, "defects": levels, "defectWeights": per_weight,
            "clipped": [], "weights": cx.weights}


def check_dd_zero(n: int, side: str, kmax: int, weights) -> bool:
    for w in weights:
        for k in range(kmax + 1):
            for m in component_basis(n, k, w, side):
                if d_terms(d_terms({m: ONE}, n), n):
                    return False
    return True


def check_ideal_closure(n: int, side: str, kmax: int, weights, max_grade: int = 2) -> dict:
    """d(I^k) in I^{k+1} and L_D(I^k) in I^k for monomials D of grade <= max_grade."""
    gens = [(m, mask) for mask in monomials(n) for m in range(0, 3)
            if -2 <= grading(m, mask) <= max_grade]
    fields = {g: to_vector_field(AnnihilationElement.monomial(n, g[0], g[1])) for g in gens}
    for w in weights:
        for k in range(1, kmax):
            for gen in ideal_generators(n, k, w, side):
                img = d_terms(gen, n)
                sub = ideal_component(n, k + 1, w, side)
                idx = _index(component_basis(n, k + 1, w, side))
                if sub.reduce({idx[x]: c for x, c in img.items()}):
                    return {"passed": False, "what": "d", "k": k, "w": w}
                for g, X in fields.items():
                    img = _project(lie_terms(X, gen, n), side)
                    by_w: dict = {}
                    for x, c in img.items():
                        by_w.setdefault(weight_of_monomial(x), {})[x] = c
                    for w2, part in by_w.items():
                        sub2 = ideal_component(n, k, w2, side)
                        idx2 = _index(component_basis(n, k, w2, side))
                        if sub2.reduce({idx2[x]: c for x, c in part.items()}):
                            return {"passed": False, "what": "lie", "D": g, "k": k, "w": w}
    return {"passed": True}


# ---------------------------------------------------------------------------
# the homotopy of the de Rham complex on Omega_+
# ---------------------------------------------------------------------------

def homotopy_K(x: dict, n: int) -> dict:
    """K(dxi_n nu) = xi_n nu; K(nu) = 0 when nu has no dxi_n."""
    out: dict = {}
    bit = 1 << (n - 1)
    z = (0,) * n
    for (a, mask, e, c), v in x.items():
        if not c[n - 1]:
            continue
        c2 = list(c)
        c2[n - 1] -= 1
        for k, x2 in wedge_terms({(0, bit, 0, z): ONE}, {(a, mask, e, tuple(c2)): ONE}).items():
            acc(out, k, x2 * v)
    return out


def homotopy_eps(x: dict, n: int) -> dict:
    bit = 1 << (n - 1)
    return {k: v for k, v in x.items() if not (k[1] & bit) and not k[3][n - 1]}


def homotopy_check(n: int, tmax: int = 3, cmax: int = 3) -> dict:
    """K d + d K = Id - eps on every monomial with t^a (a <= tmax) and |c| <= cmax."""
    count = 0
    for a in range(tmax + 1):
        for mask in monomials(n):
            for e in (0, 1):
                for tot in range(cmax + 1):
                    for c in _compositions(tot, n):
                        key = (a, mask, e, c)
                        x = {key: ONE}
                        lhs = homotopy_K(d_terms(x, n), n)
                        for k2, v in d_terms(homotopy_K(x, n), n).items():
                            acc(lhs, k2, v)
                        rhs = dict(x)
                        for k2, v in homotopy_eps(x, n).items():
                            acc(rhs, k2, -v)
                        count += 1
                        if lhs != rhs:
                            return {"passed": False, "monomial": list(key[:3]) + [list(c)],
                                    "count": count}
    return {"passed": True, "count": count}


# ---------------------------------------------------------------------------
# cso(n)-weights of the generating pieces
# ---------------------------------------------------------------------------

def _so_field(n: int, el: dict) -> VectorField:
    """Vector field of an so(n) element written in F_ab, with F_ab = -xi_a xi_b."""
    terms: dict = {}
    for (a, b), c in el.items():
        acc(terms, (0, (1 << (a - 1)) | (1 << (b - 1))), -c)
    return to_vector_field(AnnihilationElement(n, terms))


def _e00_field(n: int) -> VectorField:
    return to_vector_field(AnnihilationElement.monomial(n, 1, 0))


def _eig(x: dict, y: dict):
    if not x:
        return None
    k0 = next(iter(x))
    lam = y.get(k0, ZERO) / x[k0]
    for k in set(x) | set(y):
        if y.get(k, ZERO) != lam * x.get(k, ZERO):
            return None
    return lam


def _dxi_power(n: int, l: int, sign) -> dict:
    """(dxi_1 + sign * i dxi_2)^l, expanded."""
    out: dict = {}
    for r in range(l + 1):
        c = [0] * n
        c[0] = l - r
        if r:
            c[1] = r
        acc(out, (0, 0, 0, tuple(c)), GaussScalar.coerce(comb(l, r)) * (I * sign) ** r)
    return out


def gamma_vector(n: int, k: int, side: str) -> dict:
    """Plus: lowest-weight vector (dxi_1 + i dxi_2)^k of Gamma^k.
    Minus: highest-weight vector t^-1 xi_* (dxi_1 - i dxi_2)^k of Gamma^k_-."""
    if n < 2 and k:
        base = {(0, 0, 0, (k,) * n): ONE} if n == 1 else {}
    else:
        base = _dxi_power(n, k, 1 if side == PLUS else -1) if k else {(0, 0, 0, (0,) * n): ONE}
    if side == PLUS:
        return base
    return wedge_terms({(-1, full_mask(n), 0, (0,) * n): ONE}, base)


def gamma_weights(n: int, k: int, side: str) -> dict:
    """Weight of the Gamma generator; for the plus side also the weight of T^k = dual."""
    vec = gamma_vector(n, k, side)
    e = _eig(vec, _project(lie_terms(_e00_field(n), vec, n), side))
    mu = []
    for j in range(1, n // 2 + 1):
        lam = _eig(vec, _project(lie_terms(_so_field(n, H(j)), vec, n), side))
        mu.append(lam)
    if e is None or any(x is None for x in mu):
        raise ArithmeticError("generator is not a weight vector")
    weight = Weight(e, tuple(x.as_fraction() for x in mu))
    m = n // 2
    if side == PLUS:
        # lowest weight: killed by the lowering root vectors
        ext = True
        for name, el in borel_basis(n):
            low = _lowering(n, name)
            img = _project(lie_terms(_so_field(n, low), vec, n), side)
            ext = ext and not img
        dual = Weight(-weight.mu0, tuple(-x for x in weight.mu))
        return {"side": side, "k": k, "vectorWeight": weight, "extremal": ext,
                "dualWeight": dual, "weight": dual}
    ext = True
    for name, el in borel_basis(n):
        img = _project(lie_terms(_so_field(n, el), vec, n), side)
        ext = ext and not img
    pos_killed = True
    for mask in monomials(n):
        for tp in range(0, 3):
            g = grading(tp, mask)
            if 0 < g <= 2:
                X = to_vector_field(AnnihilationElement.monomial(n, tp, mask))
                if not _in_ideal(_project(lie_terms(X, vec, n), side), n, side):
                    pos_killed = False
    return {"side": side, "k": k, "vectorWeight": weight, "extremal": ext and pos_killed,
            "positiveKills": pos_killed, "weight": weight}


def _in_ideal(x: dict, n: int, side: str) -> bool:
    """Whether a form lies in the contact ideal (checked piece by piece)."""
    pieces: dict = {}
    for key, c in x.items():
        pieces.setdefault((form_degree(key), weight_of_monomial(key)), {})[key] = c
    for (k, w), part in pieces.items():
        idx = _index(component_basis(n, k, w, side))
        if ideal_component(n, k, w, side).reduce({idx[m]: c for m, c in part.items()}):
            return False
    return True


def _lowering(n: int, name: str) -> dict:
    """The negative counterpart of a raising Borel element (conjugate coefficients)."""
    for nm, el in borel_basis(n):
        if nm == name:
            return {key: c.conjugate() for key, c in el.items()}
    raise KeyError(name)


def harmonic_dim(n: int, k: int) -> int:
    if k < 0:
        return 0
    return comb(n + k - 1, k) - (comb(n + k - 3, k - 2) if k >= 2 else 0)


def induced_graded_dim(n: int, dimF: int, j: int) -> int:
    """dim of the grade -j piece of C[d] (x) Lambda(n) (x) F."""
    return sum(comb(n, j - 2 * a) * dimF for a in range(j // 2 + 1) if 0 <= j - 2 * a <= n)


def _quotient_dim(n, k, w, side):
    return len(component_basis(n, k, w, side)) - ideal_component(n, k, w, side).dim


def graded_character_compare(n: int, l: int, depth: int = 6) -> dict:
    """dim (Omega^l_+/I^l_+) at weight l+j versus dim Ind(T^l) at grade -j, j = 0..depth."""
    dimT = harmonic_dim(n, l)
    rows = []
    ok = True
    for j in range(depth + 1):
        q = _quotient_dim(n, l, l + j, PLUS)
        ind = induced_graded_dim(n, dimT, j)
        rows.append({"grade": -j, "quotient": q, "induced": ind})
        ok = ok and q == ind
    return {"n": n, "l": l, "dimT": dimT, "weylDim": weyl_dim(n, [l] + [0] * (n // 2 - 1)) if n >= 2 else dimT,
            "rows": rows, "passed": ok and (n < 2 or dimT == weyl_dim(n, [l] + [0] * (n // 2 - 1)))}


def minus_freeness_compare(n: int, k: int, depth: int = 6) -> dict:
    """dim (Omega^k_-/I^k_-) at weight n+k-2-j versus dim Ind(Gamma^k_-) at grade -j."""
    dimG = harmonic_dim(n, k)
    rows = []
    ok = True
    top = n + k - 2
    for j in range(depth + 1):
        q = _quotient_dim(n, k, top - j, MINUS)
        ind = induced_graded_dim(n, dimG, j)
        rows.append({"grade": -j, "quotient": q, "induced": ind})
        ok = ok and q == ind
    above = [_quotient_dim(n, k, top + s, MINUS) for s in (1, 2, 3)]
    ok = ok and not any(above)
    return {"n": n, "k": k, "dimGamma": dimG, "rows": rows, "emptyAbove": not any(above),
            "passed": ok}


def check_lie_bracket(n: int, pairs, forms: list[dict]) -> bool:
    """L_{[D1,D2]} = [L_D1, L_D2] on the given forms (plus side)."""
    for (m1, f1), (m2, f2) in pairs:
        A = AnnihilationElement.monomial(n, m1, f1)
        B = AnnihilationElement.monomial(n, m2, f2)
        XA, XB = to_vector_field(A), to_vector_field(B)
        C = ann_bracket(A, B)
        XC = to_vector_field(C) if C else None
        s = -1 if (XA.parity & XB.parity) else 1
        for x in forms:
            lhs = lie_terms(XA, lie_terms(XB, x, n), n)
            for k, v in lie_terms(XB, lie_terms(XA, x, n), n).items():
                acc(lhs, k, -s * v)
            rhs = lie_terms(XC, x, n) if XC else {}
            if lhs != rhs:
                return False
    return True


def check_commutes_with_d(n: int, fields, forms: list[dict]) -> bool:
    for X in fields:
        s = -1 if X.parity else 1
        for x in forms:
            lhs = lie_terms(X, d_terms(x, n), n)
            rhs = d_terms(lie_terms(X, x, n), n)
            diff = dict(lhs)
            for k, v in rhs.items():
                acc(diff, k, -s * v)
            if diff:
                return False
    return True


__all__ = [
    "FormElement", "PLUS", "MINUS", "TruncationError", "wedge", "d", "omega", "lie_derivative",
    "ideal_component", "ideal_generators", "component_basis", "QuotientComplex",
    "quotient_complex", "exactness_check", "homotopy_check", "gamma_weights", "gamma_vector",
    "graded_character_compare", "minus_freeness_compare", "harmonic_dim", "check_dd_zero",
    "check_ideal_closure", "check_lie_bracket", "check_commutes_with_d", "format_form",
    "weight_of_monomial", "d_terms", "wedge_terms", "lie_terms", "default_weights",
]
