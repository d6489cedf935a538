"""Finite-dimensional irreducible cso(n)-modules from a highest weight.

Conventions: F_ij (i < j) acts as E_ij - E_ji on C^n, H_j = i F_{2j-1,2j},
and the root vectors are the explicit combinations below. A weight is
(mu_0; mu_1, ..., mu_m) with m = n // 2, where mu_0 is the E_00 eigenvalue.

Construction: start from a highest weight vector and apply simple lowering
operators level by level. A new vector at positive level is zero in the
irreducible quotient exactly when every simple raising operator kills it (it
would span a proper submodule otherwise), which is the radical of the
contravariant form. So candidates are kept or discarded by testing linear
independence of their images under the raising operators. The remaining
operators F_ij are then obtained from nested commutators of the simple root
vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .linalg import Echelon, solve
from .scalar import I, ONE, ZERO, GaussScalar
from .sparse import acc


class WeightError(ValueError):
    """Weight is not dominant or not (half-)integral."""


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Weight:
    mu0: GaussScalar
    mu: tuple  # tuple of Fractions, length m

    def __str__(self):
        return f"({self.mu0};{','.join(_frac_str(x) for x in self.mu)})"

    def to_json(self) -> list:
        return [str(self.mu0)] + [_frac_str(x) for x in self.mu]

    def shifted(self, d0) -> "Weight":
        return Weight(self.mu0 + d0, self.mu)


def _frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_weight(text: str, n: int | None = None) -> Weight:
    """Parse ``'m0;m1,m2,...'`` (half-integers as ``1/2``)."""
    from .scalar import parse_scalar
    if not isinstance(text, str) or ";" not in text:
        raise ValueError(f"weight must look like 'm0;m1,...', got {text!r}")
    head, tail = text.split(";", 1)
    mu0 = parse_scalar(head)
    parts = [p for p in tail.split(",") if p.strip() != ""]
    try:
        mu = tuple(Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad weight component in {text!r}") from exc
    if n is not None and len(mu) != n // 2:
        raise ValueError(f"n={n} needs {n // 2} so(n) components, got {len(mu)}")
    return Weight(mu0, mu)


def make_weight(mu0, *mu) -> Weight:
    return Weight(GaussScalar.coerce(Fraction(mu0) if isinstance(mu0, str) else mu0),
                  tuple(Fraction(x) for x in mu))


def check_weight(n: int, w: Weight) -> None:
    m = n // 2
    mu = w.mu
    if len(mu) != m:
        raise WeightError(f"n={n} needs {m} components, got {len(mu)}")
    if m == 0:
        return
    if any(Fraction(2 * x).denominator != 1 for x in mu):
        raise WeightError("weight components must be integers or half-integers")
    if len({(2 * x) % 2 for x in mu}) > 1:
        raise WeightError("components must be all integers or all half-odd-integers")
    if n == 2:
        return
    if n % 2:
        ok = all(mu[i] >= mu[i + 1] for i in range(m - 1)) and mu[-1] >= 0
    else:
        ok = all(mu[i] >= mu[i + 1] for i in range(m - 2)) and mu[m - 2] >= abs(mu[m - 1])
    if not ok:
        raise WeightError(f"weight {w} is not dominant for so({n})")


def positive_roots(n: int) -> list[tuple]:
    m = n // 2
    out = []
    for l in range(m):
        for j in range(l + 1, m):
            v = [0] * m
            v[l], v[j] = 1, -1
            out.append(tuple(v))
            v = [0] * m
            v[l], v[j] = 1, 1
            out.append(tuple(v))
    if n % 2:
        for k in range(m):
            v = [0] * m
            v[k] = 1
            out.append(tuple(v))
    return out


def simple_roots(n: int) -> list[tuple]:
    m = n // 2
    out = []
    for l in range(m - 1):
        v = [0] * m
        v[l], v[l + 1] = 1, -1
        out.append(tuple(v))
    if n % 2 and m >= 1:
        v = [0] * m
        v[m - 1] = 1
        out.append(tuple(v))
    elif n % 2 == 0 and m >= 2:
        v = [0] * m
        v[m - 2], v[m - 1] = 1, 1
        out.append(tuple(v))
    return out


def weyl_dim(n: int, w) -> int:
    """Weyl dimension formula with rho in epsilon coordinates."""
    if not isinstance(w, Weight):
        w = Weight(ZERO, tuple(Fraction(x) for x in w))
    check_weight(n, w)
    m = n // 2
    if n % 2:
        rho = [Fraction(2 * (m - i) - 1, 2) for i in range(m)]
    else:
        rho = [Fraction(m - 1 - i) for i in range(m)]
    num = Fraction(1)
    for a in positive_roots(n):
        top = sum((w.mu[i] + rho[i]) * a[i] for i in range(m))
        bot = sum(rho[i] * a[i] for i in range(m))
        num *= top / bot
    if num.denominator != 1 or num <= 0:
        raise WeightError(f"weight {w} does not give a finite-dimensional module")
    return int(num)


# ---------------------------------------------------------------------------
# so(n) elements as combinations of F_ij
# ---------------------------------------------------------------------------

def F(i: int, j: int, c=ONE) -> dict:
    """The element c*F_ij as a dict {(a, b): coeff} with a < b."""
    if i == j:
        return {}
    if i < j:
        return {(i, j): GaussScalar.coerce(c)}
    return {(j, i): -GaussScalar.coerce(c)}


def lin(*pairs) -> dict:
    """Sum of c * element for (c, element) pairs."""
    out: dict = {}
    for c, el in pairs:
        for k, v in el.items():
            acc(out, k, v * c)
    return out


def H(j: int) -> dict:
    return F(2 * j - 1, 2 * j, I)


def root_vector(n: int, alpha) -> dict:
    """E_alpha for a root given as an epsilon-coordinate tuple or a label.

    Labels: ``"e1-e2"``, ``"e1+e2"``, ``"-(e1-e2)"``, ``"-(e1+e2)"``, ``"e1"``, ``"-e1"``.
    """
    m = n // 2
    if isinstance(alpha, str):
        alpha = parse_root(alpha, m)
    alpha = tuple(alpha)
    if len(alpha) != m:
        raise ValueError("root has wrong length")
    nz = [(i, c) for i, c in enumerate(alpha) if c]
    if len(nz) == 2 and all(abs(c) == 1 for _, c in nz):
        (l, a), (j, b) = nz
        l, j = l + 1, j + 1
        A, B, C, D = F(2*l-1, 2*j-1), F(2*l, 2*j), F(2*l-1, 2*j), F(2*l, 2*j-1)
        if (a, b) == (1, -1):
            return lin((ONE, A), (ONE, B), (I, C), (-I, D))
        if (a, b) == (1, 1):
            return lin((ONE, A), (-ONE, B), (-I, C), (-I, D))
        if (a, b) == (-1, 1):
            return lin((ONE, A), (ONE, B), (-I, C), (I, D))
        return lin((ONE, A), (-ONE, B), (I, C), (I, D))
    if len(nz) == 1 and n % 2 and abs(nz[0][1]) == 1:
        k = nz[0][0] + 1
        sgn = nz[0][1]
        return lin((ONE, F(2*k-1, 2*m+1)), (-I * sgn, F(2*k, 2*m+1)))
    raise ValueError(f"{alpha} is not a root of so({n})")


def parse_root(label: str, m: int) -> tuple:
    s = label.replace(" ", "")
    neg = False
    if s.startswith("-(") and s.endswith(")"):
        neg, s = True, s[2:-1]
    elif s.startswith("-"):
        neg, s = True, s[1:]
    v = [0] * m
    import re
    toks = re.findall(r"([+-]?)e(\d+)", s)
    if not toks or "".join(f"{a}e{b}" for a, b in toks) != s:
        raise ValueError(f"bad root label {label!r}")
    for sgn, idx in toks:
        k = int(idx) - 1
        if not 0 <= k < m:
            raise ValueError(f"bad root label {label!r}")
        v[k] += -1 if sgn == "-" else 1
    if neg:
        v = [-x for x in v]
    return tuple(v)


def alpha_lj(l: int, j: int) -> dict:
    return lin((ONE, F(2*l-1, 2*j-1)), (-I, F(2*l, 2*j-1)))


def beta_lj(l: int, j: int) -> dict:
    return lin((ONE, F(2*l, 2*j)), (I, F(2*l-1, 2*j)))


def borel_basis(n: int) -> list[tuple[str, dict]]:
    """Raising part of the Borel subalgebra: alpha_lj, beta_lj (l < j) and gamma_k (n odd)."""
    m = n // 2
    out = []
    for l in range(1, m + 1):
        for j in range(l + 1, m + 1):
            out.append((f"alpha_{l}{j}", alpha_lj(l, j)))
            out.append((f"beta_{l}{j}", beta_lj(l, j)))
    if n % 2:
        for k in range(1, m + 1):
            v = [0] * m
            v[k - 1] = 1
            out.append((f"gamma_{k}", root_vector(n, v)))
    return out


# defining-representation matrices: dict (row, col) -> scalar ------------------

def def_matrix(n: int, el: dict) -> dict:
    M: dict = {}
    for (a, b), c in el.items():
        acc(M, (a - 1, b - 1), c)
        acc(M, (b - 1, a - 1), -c)
    return M


def mat_mul(A: dict, B: dict) -> dict:
    rows: dict = {}
    for (k, c), v in B.items():
        rows.setdefault(k, []).append((c, v))
    out: dict = {}
    for (r, k), a in A.items():
        for (c, b) in rows.get(k, ()):
            acc(out, (r, c), a * b)
    return out


def mat_comm(A: dict, B: dict) -> dict:
    out = mat_mul(A, B)
    for k, v in mat_mul(B, A).items():
        acc(out, k, -v)
    return out


def element_bracket(n: int, x: dict, y: dict) -> dict:
    """[x, y] in so(n), returned as a combination of F_ij."""
    M = mat_comm(def_matrix(n, x), def_matrix(n, y))
    out: dict = {}
    for (r, c), v in M.items():
        if r < c:
            out[(r + 1, c + 1)] = v
    return out


def root_value(alpha: tuple, hcoef: list) -> GaussScalar:
    return sum((hcoef[j] * alpha[j] for j in range(len(alpha))), ZERO)


# ---------------------------------------------------------------------------
# sparse operators on the module: dict col -> {row: coeff}
# ---------------------------------------------------------------------------

def op_apply(M: dict, v: dict) -> dict:
    out: dict = {}
    for col, c in v.items():
        for row, a in M.get(col, {}).items():
            acc(out, row, a * c)
    return out


def op_mul(A: dict, B: dict) -> dict:
    return {col: r for col, vec in B.items() if (r := op_apply(A, vec))}


def op_add(A: dict, B: dict, c=ONE) -> dict:
    out = {col: dict(vec) for col, vec in A.items()}
    for col, vec in B.items():
        tgt = out.setdefault(col, {})
        for row, v in vec.items():
            acc(tgt, row, v * c)
        if not tgt:
            del out[col]
    return out


def op_comm(A: dict, B: dict) -> dict:
    return op_add(op_mul(A, B), op_mul(B, A), -ONE)


def op_scale(A: dict, c) -> dict:
    if not c:
        return {}
    return {col: {r: v * c for r, v in vec.items()} for col, vec in A.items()}


# ---------------------------------------------------------------------------
# the representation
# ---------------------------------------------------------------------------

@dataclass
class SoRep:
    n: int
    weight: Weight
    dim: int
    basisLabels: list
    basisWeights: list
    F: dict  # (i, j) with i < j -> sparse operator (col -> {row: coeff})
    hwIndex: int = 0
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def mu0(self) -> GaussScalar:
        return self.weight.mu0

    def act(self, el: dict, v: dict) -> dict:
        """Apply an so(n) element (combination of F_ij) to a vector."""
        out: dict = {}
        for (a, b), c in el.items():
            for row, x in op_apply(self.F[(a, b)], v).items():
                acc(out, row, x * c)
        return out

    def Fop(self, i: int, j: int) -> dict:
        """Operator of F_ij for any i != j."""
        if i < j:
            return self.F[(i, j)]
        key = ("neg", j, i)
        if key not in self._cache:
            self._cache[key] = op_scale(self.F[(j, i)], -ONE)
        return self._cache[key]

    def operator(self, el: dict) -> dict:
        out: dict = {}
        for (a, b), c in el.items():
            out = op_add(out, self.F[(a, b)], c)
        return out

    def hw_vector(self) -> dict:
        return {self.hwIndex: ONE}

    def with_mu0(self, mu0) -> "SoRep":
        """Same so(n)-module, different E_00 eigenvalue."""
        w = Weight(GaussScalar.coerce(mu0), self.weight.mu)
        return SoRep(self.n, w, self.dim, self.basisLabels,
                     [Weight(w.mu0, bw.mu) for bw in self.basisWeights], self.F, self.hwIndex)

    def to_json(self) -> dict:
        mats = {}
        for (a, b), M in sorted(self.F.items()):
            entries = []
            for col in sorted(M):
                for row in sorted(M[col]):
                    entries.append([row, col, M[col][row].to_json()])
            mats[f"{a},{b}"] = entries
        return {
            "n": self.n,
            "weight": self.weight.to_json(),
            "dim": self.dim,
            "hwIndex": self.hwIndex,
            "basisLabels": [_label_json(lab) for lab in self.basisLabels],
            "basisWeights": [w.to_json() for w in self.basisWeights],
            "F": mats,
        }


def _label_json(lab):
    if isinstance(lab, (tuple, list)):
        return [_label_json(x) for x in lab]
    return lab if isinstance(lab, int) else str(lab)


def _cartan_coords(n: int, el: dict) -> list:
    """Coefficients c_j with el = sum_j c_j H_j (el must lie in the Cartan)."""
    m = n // 2
    cols = [H(j) for j in range(1, m + 1)]
    x = solve(cols, el)
    if x is None:
        raise RuntimeError("element is not in the Cartan subalgebra")
    return x


def _mu_on(nu: tuple, hcoef: list) -> GaussScalar:
    return sum((hcoef[j] * GaussScalar.coerce(nu[j]) for j in range(len(nu))), ZERO)


def build_irrep(n: int, w: Weight, max_dim: int = 20000) -> SoRep:
    """Irreducible cso(n)-module with highest weight ``w``."""
    check_weight(n, w)
    m = n // 2
    target = weyl_dim(n, w)
    if target > max_dim:
        raise WeightError(f"dimension {target} exceeds limit {max_dim}")
    npairs = n * (n - 1) // 2
    if n == 2:
        # so(2) is abelian: F_12 = -i H_1 acts by -i mu_1.
        return SoRep(n, w, 1, [()], [w], {(1, 2): {0: {0: -I * w.mu[0]}}})
    if n < 2:
        return SoRep(n, w, 1, [()], [w], {})
    sroots = simple_roots(n)
    E = [root_vector(n, a) for a in sroots]
    Fm = [root_vector(n, tuple(-x for x in a)) for a in sroots]
    hcoefs = [_cartan_coords(n, element_bracket(n, e, f)) for e, f in zip(E, Fm)]
    r = len(sroots)

    weights = [tuple(w.mu)]
    labels = [()]
    level_of = [0]
    e_act = [dict() for _ in range(r)]  # e_act[i][b] = vector
    f_act = [dict() for _ in range(r)]
    levels = [[0]]
    while True:
        cur = levels[-1]
        groups: dict = {}
        for b in cur:
            for i in range(r):
                nu = tuple(weights[b][k] - sroots[i][k] for k in range(m))
                groups.setdefault(nu, []).append((b, i))
        new_level = []
        for nu in sorted(groups, key=lambda t: tuple(-x for x in t)):
            cands = groups[nu]
            images = []
            for (b, i) in cands:
                img: dict = {}
                for j in range(r):
                    # e_j f_i b = f_i e_j b + delta_ij h_i b
                    vec = {}
                    for x, cx in e_act[j].get(b, {}).items():
                        for y, cy in f_act[i].get(x, {}).items():
                            acc(vec, y, cx * cy)
                    if i == j:
                        acc(vec, b, _mu_on(weights[b], hcoefs[i]))
                    for y, c in vec.items():
                        img[(j, y)] = c
                images.append(img)
            ech = Echelon()
            kept = []  # (candidate index, new basis index)
            for ci, img in enumerate(images):
                if img and ech.add(img):
                    idx = len(weights)
                    weights.append(nu)
                    b, i = cands[ci]
                    labels.append(labels[b] + (i,))
                    level_of.append(len(levels))
                    for j in range(r):
                        vec = {y: c for (jj, y), c in img.items() if jj == j}
                        if vec:
                            e_act[j][idx] = vec
                    kept.append((ci, idx))
                    new_level.append(idx)
            kept_cols = [images[ci] for ci, _ in kept]
            for ci, (b, i) in enumerate(cands):
                if not images[ci]:
                    continue
                hit = [idx for c2, idx in kept if c2 == ci]
                if hit:
                    f_act[i][b] = {hit[0]: ONE}
                    continue
                x = solve(kept_cols, images[ci])
                if x is None:
                    raise RuntimeError("inconsistent lowering data")
                f_act[i][b] = {kept[k][1]: x[k] for k in range(len(kept)) if x[k]}
        if not new_level:
            break
        levels.append(new_level)
        if len(weights) > target:
            raise RuntimeError("construction exceeded the Weyl dimension")
    dim = len(weights)
    if dim != target:
        raise RuntimeError(f"built dimension {dim} differs from Weyl dimension {target}")

    # operators of the simple root vectors and Cartan
    def as_op(act_list_entry):
        return {col: dict(vec) for col, vec in act_list_entry.items()}

    e_ops = [as_op(e_act[i]) for i in range(r)]
    f_ops = [as_op(f_act[i]) for i in range(r)]
    h_ops = []
    for j in range(1, m + 1):
        h_ops.append({b: {b: GaussScalar.coerce(weights[b][j - 1])} for b in range(dim)
                      if weights[b][j - 1]})

    # span so(n) by H_j, simple root vectors and nested commutators
    gens = [(H(j + 1), h_ops[j]) for j in range(m)]
    gens += [(E[i], e_ops[i]) for i in range(r)] + [(Fm[i], f_ops[i]) for i in range(r)]
    basis = []
    ech = Echelon()
    for el, op in gens:
        if ech.add(el):
            basis.append((el, op))
    frontier = list(basis)
    simple = [(E[i], e_ops[i]) for i in range(r)] + [(Fm[i], f_ops[i]) for i in range(r)]
    while len(basis) < npairs and frontier:
        nxt = []
        for el, op in frontier:
            for sel, sop in simple:
                br = element_bracket(n, sel, el)
                if br and ech.add(br):
                    item = (br, op_comm(sop, op))
                    basis.append(item)
                    nxt.append(item)
        frontier = nxt
    if len(basis) != npairs:
        raise RuntimeError("failed to span so(n)")
    Fops = {}
    cols = [el for el, _ in basis]
    for a, b in combinations(range(1, n + 1), 2):
        x = solve(cols, F(a, b))
        op: dict = {}
        for k, c in enumerate(x):
            if c:
                op = op_add(op, basis[k][1], c)
        Fops[(a, b)] = op
    bw = [Weight(w.mu0, nu) for nu in weights]
    return SoRep(n, w, dim, labels, bw, Fops, 0)


# ---------------------------------------------------------------------------
# queries and checks
# ---------------------------------------------------------------------------

NOT_A_WEIGHT_VECTOR = "not a weight vector"


def weight_of(rep: SoRep, v: dict):
    """Simultaneous (E_00; H_1..H_m) eigenvalues of v, or NOT_A_WEIGHT_VECTOR."""
    if not v:
        raise ValueError("zero vector has no weight")
    m = rep.n // 2
    mu = []
    for j in range(1, m + 1):
        hv = rep.act(H(j), v)
        lam = _eigen(v, hv)
        if lam is None:
            return NOT_A_WEIGHT_VECTOR
        if lam.im:
            return NOT_A_WEIGHT_VECTOR
        mu.append(lam.as_fraction())
    return Weight(rep.mu0, tuple(mu))


def _eigen(v: dict, hv: dict):
    k0 = next(iter(v))
    lam = hv.get(k0, ZERO) / v[k0]
    for k in set(v) | set(hv):
        if hv.get(k, ZERO) != lam * v.get(k, ZERO):
            return None
    return lam


def check_bracket_fidelity(rep: SoRep) -> bool:
    n = rep.n
    pairs = list(combinations(range(1, n + 1), 2))
    for (i, j) in pairs:
        for (k, l) in pairs:
            lhs = op_comm(rep.F[(i, j)], rep.F[(k, l)])
            rhs: dict = {}
            d = lambda a, b: 1 if a == b else 0
            for c, (p, q) in ((d(j, k), (i, l)), (-d(i, k), (j, l)),
                              (-d(j, l), (i, k)), (d(i, l), (j, k))):
                if c and p != q:
                    rhs = op_add(rhs, rep.Fop(p, q), GaussScalar.coerce(c))
            if not _op_equal(lhs, rhs):
                return False
    return True


def _op_equal(A: dict, B: dict) -> bool:
    keys = set(A) | set(B)
    return all(A.get(k, {}) == B.get(k, {}) for k in keys)


def check_hw(rep: SoRep) -> bool:
    v = rep.hw_vector()
    for _, el in borel_basis(rep.n):
        if rep.act(el, v):
            return False
    w = weight_of(rep, v)
    return w == rep.weight


# harmonic-polynomial cross-check ----------------------------------------------

def _monomials_deg(n: int, k: int) -> list[tuple]:
    if n == 0:
        return [()] if k == 0 else []
    out = []
    for a in range(k, -1, -1):
        for rest in _monomials_deg(n - 1, k - a):
            out.append((a,) + rest)
    return out


def polynomial_operator(n: int, k: int, el: dict) -> tuple[list, dict]:
    """Matrix of sum c_ij (x_i d_j - x_j d_i) on degree-k polynomials."""
    mons = _monomials_deg(n, k)
    index = {mm: t for t, mm in enumerate(mons)}
    M: dict = {}
    for col, mm in enumerate(mons):
        vec: dict = {}
        for (i, j), c in el.items():
            for (p, q, s) in ((i, j, 1), (j, i, -1)):
                e = list(mm)
                if e[q - 1] == 0:
                    continue
                coef = e[q - 1]
                e[q - 1] -= 1
                e[p - 1] += 1
                acc(vec, index[tuple(e)], c * (coef * s))
        if vec:
            M[col] = vec
    return mons, M


def _trace(M: dict) -> GaussScalar:
    return sum((vec.get(col, ZERO) for col, vec in M.items()), ZERO)


def _power_traces(M: dict, dim: int, pmax: int) -> list:
    out = [GaussScalar.coerce(dim)]
    P = {c: {c: ONE} for c in range(dim)}
    for _ in range(pmax):
        P = op_mul(M, P)
        out.append(_trace(P))
    return out


def harmonic_cross_check(n: int, k: int, pmax: int | None = None) -> dict:
    """Compare the built irrep (.; k, 0, ..) with degree-k polynomials modulo r^2.

    Traces on the quotient are traces on degree k minus traces on degree k-2
    (multiplication by r^2 is an injective module map), so no quotient basis
    is needed. Compared: dimension, power traces of a generic Cartan element,
    and the Casimir trace.
    """
    m = n // 2
    w = Weight(ZERO, tuple([Fraction(k)] + [Fraction(0)] * (m - 1)))
    rep = build_irrep(n, w)
    cart = lin(*[(GaussScalar.coerce(3 ** j + j), H(j + 1)) for j in range(m)])
    pmax = rep.dim if pmax is None else pmax

    def poly_traces(el, power):
        mons, M = polynomial_operator(n, k, el)
        t = _power_traces(M, len(mons), power)
        if k >= 2:
            mons2, M2 = polynomial_operator(n, k - 2, el)
            t2 = _power_traces(M2, len(mons2), power)
            t = [a - b for a, b in zip(t, t2)]
        return t

    rep_traces = _power_traces(rep.operator(cart), rep.dim, pmax)
    harm_traces = poly_traces(cart, pmax)
    # Casimir sum_{i<j} F_ij^2
    cas_rep = ZERO
    cas_poly = ZERO
    for a, b in combinations(range(1, n + 1), 2):
        op = rep.F[(a, b)]
        cas_rep = cas_rep + _trace(op_mul(op, op))
        cas_poly = cas_poly + poly_traces(F(a, b), 2)[2]
    # highest weight vector (x_1 - i x_2)^k in the polynomial model
    hw_ok = True
    if k >= 1:
        mons, _ = polynomial_operator(n, k, {})
        index = {mm: t for t, mm in enumerate(mons)}
        from math import comb
        vec: dict = {}
        for a in range(k + 1):
            e = [0] * n
            e[0], e[1] = k - a, a
            acc(vec, index[tuple(e)], GaussScalar.coerce(comb(k, a)) * ((-I) ** a))
        for _, el in borel_basis(n):
            _, M = polynomial_operator(n, k, el)
            if op_apply(M, vec):
                hw_ok = False
        _, Mh = polynomial_operator(n, k, H(1))
        if op_apply(Mh, vec) != {c: v * k for c, v in vec.items()}:
            hw_ok = False
    return {
        "n": n, "k": k, "dim": rep.dim,
        "dim_match": rep_traces[0] == harm_traces[0],
        "traces_match": rep_traces == harm_traces,
        "casimir_match": cas_rep == cas_poly,
        "hw_match": hw_ok,
        "passed": rep_traces == harm_traces and cas_rep == cas_poly and hw_ok,
    }


__all__ = [
    "Weight", "WeightError", "SoRep", "parse_weight", "make_weight", "check_weight",
    "weyl_dim", "build_irrep", "weight_of", "root_vector", "alpha_lj", "beta_lj",
    "borel_basis", "H", "F", "lin", "element_bracket", "positive_roots", "simple_roots",
    "check_bracket_fidelity", "check_hw", "harmonic_cross_check", "NOT_A_WEIGHT_VECTOR",
    "op_apply", "op_mul", "op_add", "op_comm", "op_scale",
]
