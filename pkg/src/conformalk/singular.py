"""Non-trivial singular vectors in Ind(F).

The solver works in the Hodge-dual basis and imposes, for every monomial f,

* every lambda^j coefficient with j >= 2 of f_lambda m vanishes,
* the lambda^1 coefficient vanishes when |f| >= 1,
* the lambda^0 coefficient vanishes when |f| >= 3 or f is a raising element of so(n).

Each coefficient is grade-homogeneous, so the system splits into one block per
grade. The grade-0 block (1 (x) F) holds only trivial vectors and is skipped.

Independent of that encoding, ``verify_direct`` re-checks a vector by acting
with positive-degree annihilation monomials inside the induced module, and
``brute_force`` solves the annihilation conditions from scratch in the
natural basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .grassmann import full_mask, monomials
from .induced import (DUAL, NATURAL, ActionEngine, DirectAction, InducedVector,
                      hodge_transport, term_order, weight_and_grade)
from .kernels import popcount
from .linalg import nullspace, proportional
from .scalar import I, ONE, ZERO, GaussScalar
from .so_rep import (SoRep, Weight, borel_basis, build_irrep, check_weight,
                     op_apply, root_vector)
from .sparse import acc

FAMILY_A = "A"
FAMILY_B = "B"
FAMILY_C3 = "C3"
UNKNOWN_TRIVIAL = "unknown-trivial"
UNKNOWN = "unknown"


# ---------------------------------------------------------------------------
# constraint system
# ---------------------------------------------------------------------------

def dual_grade(n: int, k: int, mask: int) -> int:
    return 2 * k + n - popcount(mask)


def grade_basis(n: int, dim: int, grade: int, dmax: int, basis: str = DUAL) -> list:
    """Basis triples (k, mask, b) of the given (positive) grade, sorted by term_order."""
    out = []
    for k in range(min(dmax, grade // 2) + 1):
        size = grade - 2 * k
        if not 0 <= size <= n:
            continue
        for m in monomials(n):
            if popcount(m) == (n - size if basis == DUAL else size):
                out.extend((k, m, b) for b in range(dim))
    out.sort(key=term_order)
    return out


def _borel_generators(n: int) -> list:
    """Raising so(n) elements as Grassmann combinations, via F_ab = -xi_a xi_b."""
    gens = []
    for name, el in borel_basis(n):
        terms: dict = {}
        for (a, b), c in el.items():
            acc(terms, (1 << (a - 1)) | (1 << (b - 1)), -c)
        gens.append((name, terms))
    return gens


@dataclass
class SingularCandidateSpace:
    n: int
    rep: SoRep
    dmax: int
    blocks: dict  # grade -> (basis list, rows dict)
    nrows: int = 0

    @property
    def basis(self) -> list:
        return [t for g in sorted(self.blocks) for t in self.blocks[g][0]]


def build_constraints(n: int, rep: SoRep, dmax: int, engine: ActionEngine | None = None,
                      grades=None) -> SingularCandidateSpace:
    if dmax < 0:
        raise ValueError("dmax must be >= 0")
    engine = engine or ActionEngine(rep, DUAL)
    ms = monomials(n)
    borel = _borel_generators(n)
    blocks = {}
    total = 0
    grades = range(1, 2 * dmax + n + 1) if grades is None else grades
    for G in grades:
        basis = grade_basis(n, rep.dim, G, dmax)
        if not basis:
            continue
        rows: dict = {}
        for col, key in enumerate(basis):
            w = {key: ONE}
            for f in ms:
                deg = popcount(f)
                for (j, k, m, b), c in engine.act_flat(f, w).items():
                    if j >= 2 or (j == 1 and deg >= 1) or (j == 0 and deg >= 3):
                        rows.setdefault((f, j, k, m, b), {})[col] = c
            for name, terms in borel:
                for f, fc in terms.items():
                    for (j, k, m, b), c in engine.act_flat(f, w).items():
                        if j == 0:
                            acc(rows.setdefault((name, k, m, b), {}), col, c * fc)
        blocks[G] = (basis, rows)
        total += len(rows)
    return SingularCandidateSpace(n, rep, dmax, blocks, total)


def normalize_vector(terms: dict) -> dict:
    """Scale so the first basis term (in term_order) has coefficient 1."""
    if not terms:
        return {}
    first = min(terms, key=term_order)
    c = terms[first]
    return {k: v / c for k, v in terms.items()}


def block_nullspace(basis: list, rows: dict) -> list[dict]:
    out = []
    for vec in nullspace(list(rows.values()), len(basis)):
        terms = {basis[j]: c for j, c in vec.items() if c}
        if terms:
            out.append(normalize_vector(terms))
    return out


# ---------------------------------------------------------------------------
# solve / report
# ---------------------------------------------------------------------------

@dataclass
class SingularVectorReport:
    n: int
    weight: Weight
    dmax: int
    rep: SoRep
    vectors: list = field(default_factory=list)  # InducedVector, dual basis
    details: list = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "mu": self.weight.to_json(),
            "dmax": self.dmax,
            "dimension": self.dimension,
            "vectors": [dict(v.to_json(), **d) for v, d in zip(self.vectors, self.details)],
        }


def solve(n: int, w: Weight, dmax: int = 3, rep: SoRep | None = None) -> SingularVectorReport:
    check_weight(n, w)
    rep = rep or build_irrep(n, w)
    space = build_constraints(n, rep, dmax)
    report = SingularVectorReport(n, w, dmax, rep)
    engine = ActionEngine(rep, DUAL)
    for G in sorted(space.blocks):
        basis, rows = space.blocks[G]
        for terms in block_nullspace(basis, rows):
            v = InducedVector(rep, terms, DUAL)
            wt, grade = weight_and_grade(v, engine)
            report.vectors.append(v)
            report.details.append({
                "weight": wt.to_json() if isinstance(wt, Weight) else wt,
                "grade": -G,
                "family": classify(v, n, w),
                "maxDpow": max(k for k, _, _ in terms),
            })
    return report


# ---------------------------------------------------------------------------
# predicted vectors
# ---------------------------------------------------------------------------

def _co(n: int, *idx) -> int:
    m = full_mask(n)
    for i in idx:
        m &= ~(1 << (i - 1))
    return m


def _root(m: int, pairs) -> tuple:
    v = [0] * m
    for i, c in pairs:
        v[i - 1] += c
    return tuple(v)


def _apply_root(rep: SoRep, alpha: tuple, v: dict) -> dict:
    return rep.act(root_vector(rep.n, alpha), v)


def _sc(v: dict, c) -> dict:
    c = GaussScalar.coerce(c)
    return {k: x * c for k, x in v.items() if x * c}


def _add(*vs) -> dict:
    out: dict = {}
    for v in vs:
        for k, x in v.items():
            acc(out, k, x)
    return out


def family_b_components(rep: SoRep) -> dict:
    """w_l, wbar_l (1 <= l <= m) and, for odd n, w_{m+1}, determined by w_1 = v_mu."""
    n = rep.n
    m = n // 2
    mu1 = rep.weight.mu[0] if m else Fraction(0)
    if mu1 == 0:
        raise ValueError("family (b) formulas need mu_1 != 0")
    if n == 3 and mu1 == Fraction(1, 2):
        raise ValueError("family (b) does not exist for n = 3, k = 1/2")
    odd = n % 2
    w1 = rep.hw_vector()
    inv = GaussScalar.coerce(Fraction(1) / mu1)
    comps = {("w", 1): w1}
    for k in range(2, m + 1):
        comps[("w", k)] = _sc(_apply_root(rep, _root(m, [(1, -1), (k, 1)]), w1), -inv / 2)
        comps[("wbar", k)] = _sc(_apply_root(rep, _root(m, [(1, -1), (k, -1)]), w1), inv / 2)
    acc_bar: dict = {}
    for l in range(2, m + 1):
        inner = _apply_root(rep, _root(m, [(1, -1), (l, 1)]), w1)
        acc_bar = _add(acc_bar, _apply_root(rep, _root(m, [(1, -1), (l, -1)]), inner))
    if odd:
        e1 = _root(m, [(1, -1)])
        comps[("w", m + 1)] = _sc(_apply_root(rep, e1, w1), -inv)
        acc_bar = _add(acc_bar, _apply_root(rep, e1, _apply_root(rep, e1, w1)))
    C = Fraction(1) / (2 * mu1 * (n - 4 + 2 * mu1))
    comps[("wbar", 1)] = _sc(acc_bar, C)
    return comps


def assemble_family_b(rep: SoRep, comps: dict) -> InducedVector:
    n = rep.n
    m = n // 2
    terms: dict = {}

    def put(mask, vec, c):
        for b, x in vec.items():
            acc(terms, (0, mask, b), x * c)

    for l in range(1, m + 1):
        even, odd_ = _co(n, 2 * l), _co(n, 2 * l - 1)
        w, wb = comps.get(("w", l), {}), comps.get(("wbar", l), {})
        put(even, w, ONE)
        put(odd_, w, I)
        put(even, wb, ONE)
        put(odd_, wb, -I)
    if n % 2:
        # coordinate relation v_{2m+1} = i w_{m+1}
        put(_co(n, 2 * m + 1), comps.get(("w", m + 1), {}), I)
    return InducedVector(rep, terms, DUAL)


def predicted_family_b(n: int, w: Weight, rep: SoRep | None = None) -> InducedVector:
    """The family (b) vector assembled from w_1 = v_mu by the closed formulas."""
    rep = rep or build_irrep(n, w)
    return assemble_family_b(rep, family_b_components(rep))


def predicted_family_a(rep: SoRep) -> InducedVector:
    n = rep.n
    hw = rep.hwIndex
    return InducedVector(rep, {(0, _co(n, 2), hw): ONE, (0, _co(n, 1), hw): -I}, DUAL)


def predicted_family_c3(rep: SoRep) -> InducedVector:
    """The n = 3 vector with a d-component."""
    if rep.n != 3:
        raise ValueError("defined for n = 3 only")
    hw = rep.hw_vector()
    terms: dict = {}
    for b, x in hw.items():
        acc(terms, (1, full_mask(3), b), x)
        acc(terms, (0, _co(3, 1, 2), b), x * I)
    for b, x in op_apply(rep.Fop(2, 3), hw).items():
        acc(terms, (0, _co(3, 2, 3), b), x * -2)
    for b, x in op_apply(rep.Fop(1, 3), hw).items():
        acc(terms, (0, _co(3, 1, 3), b), x * 2)
    return InducedVector(rep, terms, DUAL)


def _is_family_a_weight(n, w: Weight) -> bool:
    mu = w.mu
    if not mu or any(mu[1:]):
        return False
    k = mu[0]
    return k > 0 and w.mu0 == -k and (n == 3 or k.denominator == 1)


def _is_family_b_weight(n, w: Weight) -> bool:
    mu = w.mu
    if not mu or any(mu[1:]):
        return False
    k = mu[0]
    if n == 3 and k == Fraction(1, 2):
        return False
    return k >= 0 and w.mu0 == n + k - 2 and (n == 3 or k.denominator == 1)


def classify(v: InducedVector, n: int, w: Weight) -> str:
    rep = v.rep
    if not v:
        return UNKNOWN
    top = full_mask(n)
    if all(k == 0 and m == top for k, m, _ in v.terms):
        return UNKNOWN_TRIVIAL
    if _is_family_a_weight(n, w) and proportional(v.terms, predicted_family_a(rep).terms) is not None:
        return FAMILY_A
    if _is_family_b_weight(n, w):
        if w.mu[0] != 0:
            if proportional(v.terms, predicted_family_b(n, w, rep).terms) is not None:
                return FAMILY_B
        else:
            allowed = {_co(n, i) for i in range(1, n + 1)}
            if all(k == 0 and m in allowed for k, m, _ in v.terms):
                return FAMILY_B
    if (n == 3 and w.mu0 == Fraction(3, 2) and w.mu == (Fraction(1, 2),)
            and proportional(v.terms, predicted_family_c3(rep).terms) is not None):
        return FAMILY_C3
    return UNKNOWN


def predicted_reducible(n: int, w: Weight) -> bool:
    """Reducibility list for n >= 4: (-l; l, 0..) with l >= 0, (n+k-2; k, 0..) with k >= 1."""
    mu = w.mu
    if any(mu[1:]):
        return False
    k = mu[0]
    if k.denominator != 1 or k < 0:
        return False
    return w.mu0 == -k or (k >= 1 and w.mu0 == n + k - 2)


def predicted_singular(n: int, w: Weight) -> bool:
    """Whether the classification of singular vectors lists a vector at this weight."""
    if n == 3 and w.mu0 == Fraction(3, 2) and w.mu == (Fraction(1, 2),):
        return True
    return _is_family_a_weight(n, w) or _is_family_b_weight(n, w)


# ---------------------------------------------------------------------------
# the w / wbar relations satisfied by a family (b) vector
# ---------------------------------------------------------------------------

def family_b_relations_check(v: InducedVector) -> dict:
    """Check the E_00 relation, the cubic-monomial relation and the Borel relations.

    ``v`` must be supported on (0, {i}^c, b). Its components v_i are converted to
    w_l = (v_{2l} - i v_{2l-1})/2, wbar_l = (v_{2l} + i v_{2l-1})/2, w_{m+1} = -i v_{2m+1}.
    """
    rep = v.rep
    n = rep.n
    m = n // 2
    comp = {i: {} for i in range(1, n + 1)}
    shape_ok = True
    idx = {_co(n, i): i for i in range(1, n + 1)}
    for (k, mask, b), c in v.terms.items():
        if k or mask not in idx:
            shape_ok = False
            continue
        acc(comp[idx[mask]], b, c)
    results = []

    def record(label, lhs, rhs):
        results.append({"relation": label, "holds": _add(lhs, _sc(rhs, -1)) == {}})

    def Fv(a, b, vec):
        return op_apply(rep.Fop(a, b), vec)

    sgn = lambda a: -1 if a % 2 else 1
    mu0 = rep.mu0
    for a in range(1, n + 1):
        lhs = _sc(comp[a], mu0 * sgn(a))
        for k in range(1, n + 1):
            if k != a:
                lhs = _add(lhs, _sc(Fv(a, k, comp[k]), -sgn(k)))
        record(f"(-1)^a E00 v_a = sum_k (-1)^k F_ak v_k, a={a}", lhs, {})
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            for c in range(b + 1, n + 1):
                lhs = _add(_sc(Fv(a, b, comp[c]), sgn(c)), _sc(Fv(a, c, comp[b]), -sgn(b)),
                           _sc(Fv(b, c, comp[a]), sgn(a)))
                record(f"cubic relation a,b,c={a},{b},{c}", lhs, {})
    half = GaussScalar.coerce(Fraction(1, 2))
    w = {}
    wb = {}
    for l in range(1, m + 1):
        w[l] = _sc(_add(comp[2 * l], _sc(comp[2 * l - 1], -I)), half)
        wb[l] = _sc(_add(comp[2 * l], _sc(comp[2 * l - 1], I)), half)
    if n % 2:
        w[m + 1] = _sc(comp[n], -I)
    for name, el in borel_basis(n):
        op = lambda vec: rep.act(el, vec)
        kind, rest = name.split("_")
        if kind in ("alpha", "beta"):
            i, j = int(rest[0]), int(rest[1])
            record(f"{kind}_{i}{j}(w_{i}) = 0", op(w[i]), {})
            if kind == "alpha":
                record(f"alpha_{i}{j}(wbar_{i}) = w_{j} - wbar_{j}", op(wb[i]), _add(w[j], _sc(wb[j], -1)))
                record(f"alpha_{i}{j}(w_{j}) = w_{i}", op(w[j]), w[i])
                record(f"alpha_{i}{j}(wbar_{j}) = -w_{i}", op(wb[j]), _sc(w[i], -1))
            else:
                record(f"beta_{i}{j}(wbar_{i}) = -(w_{j} + wbar_{j})", op(wb[i]), _sc(_add(w[j], wb[j]), -1))
                record(f"beta_{i}{j}(w_{j}) = w_{i}", op(w[j]), w[i])
                record(f"beta_{i}{j}(wbar_{j}) = w_{i}", op(wb[j]), w[i])
            for k in range(1, m + 1):
                if k not in (i, j):
                    record(f"{kind}_{i}{j}(w_{k}) = 0", op(w[k]), {})
                    record(f"{kind}_{i}{j}(wbar_{k}) = 0", op(wb[k]), {})
        else:
            k = int(rest)
            record(f"gamma_{k}(w_{k}) = 0", op(w[k]), {})
            record(f"gamma_{k}(wbar_{k}) = w_{m + 1}", op(wb[k]), w[m + 1])
            record(f"gamma_{k}(w_{m + 1}) = 2 w_{k}", op(w[m + 1]), _sc(w[k], 2))
            for l in range(1, m + 1):
                if l != k:
                    record(f"gamma_{k}(w_{l}) = 0", op(w[l]), {})
                    record(f"gamma_{k}(wbar_{l}) = 0", op(wb[l]), {})
    passed = shape_ok and all(r["holds"] for r in results)
    return {"passed": passed, "shape": shape_ok, "relations": results}


# ---------------------------------------------------------------------------
# independent checks
# ---------------------------------------------------------------------------

def positive_monomials(n: int, max_degree: int) -> list[tuple[int, int]]:
    """Annihilation monomials t^m xi_I with 0 < 2m + |I| - 2 <= max_degree."""
    out = []
    for mask in monomials(n):
        m = 0
        while 2 * m + popcount(mask) - 2 <= max_degree:
            if 2 * m + popcount(mask) - 2 > 0:
                out.append((m, mask))
            m += 1
    return out


def verify_direct(v: InducedVector, dmax: int = 3, direct: DirectAction | None = None) -> dict:
    """g_{>0} v = 0 and raising so(n) elements kill v, computed in the induced module."""
    rep = v.rep
    n = rep.n
    nat = hodge_transport(v) if v.basis == DUAL else v
    direct = direct or DirectAction(rep)
    checked = 0
    for m, mask in positive_monomials(n, 2 * dmax + n):
        out: dict = {}
        for key, c in nat.terms.items():
            for k2, x in direct.act(m, mask, key).items():
                acc(out, k2, x * c)
        checked += 1
        if out:
            return {"passed": False, "failed": {"t": m, "xi": mask}, "checked": checked}
    for name, terms in _borel_generators(n):
        out = {}
        for f, fc in terms.items():
            for key, c in nat.terms.items():
                for k2, x in direct.act(0, f, key).items():
                    acc(out, k2, x * c * fc)
        checked += 1
        if out:
            return {"passed": False, "failed": name, "checked": checked}
    return {"passed": True, "checked": checked}


def _direct_rows(rep: SoRep, basis: list, grade: int, direct: DirectAction) -> dict:
    n = rep.n
    rows: dict = {}
    for col, key in enumerate(basis):
        for m, mask in positive_monomials(n, grade):
            for k2, x in direct.act(m, mask, key).items():
                rows.setdefault((m, mask) + k2, {})[col] = x
        for name, terms in _borel_generators(n):
            for f, fc in terms.items():
                for k2, x in direct.act(0, f, key).items():
                    acc(rows.setdefault((name,) + k2, {}), col, x * fc)
    return rows


def brute_force(n: int, rep: SoRep, mu0_values, dmax: int = 3) -> dict:
    """Highest-weight singular vectors from the direct annihilation conditions.

    The conditions are affine in mu_0, so rows are built at mu_0 = 0 and 1 and
    interpolated. Returns mu_0 -> list of dual-basis InducedVectors.
    """
    r0, r1 = rep.with_mu0(0), rep.with_mu0(1)
    d0, d1 = DirectAction(r0), DirectAction(r1)
    blocks = []
    for G in range(1, 2 * dmax + n + 1):
        basis = grade_basis(n, rep.dim, G, dmax, basis=NATURAL)
        if not basis:
            continue
        a = _direct_rows(r0, basis, G, d0)
        b = _direct_rows(r1, basis, G, d1)
        slope = {}
        for key in set(a) | set(b):
            ra, rb = a.get(key, {}), b.get(key, {})
            s = {}
            for col in set(ra) | set(rb):
                c = rb.get(col, ZERO) - ra.get(col, ZERO)
                if c:
                    s[col] = c
            slope[key] = s
        blocks.append((G, basis, a, slope))
    out = {}
    for mu0 in mu0_values:
        mu0 = GaussScalar.coerce(mu0)
        rep_mu = rep.with_mu0(mu0)
        found = []
        for G, basis, a, slope in blocks:
            rows = []
            for key in set(a) | set(slope):
                row = dict(a.get(key, {}))
                for col, c in slope.get(key, {}).items():
                    acc(row, col, c * mu0)
                if row:
                    rows.append(row)
            for vec in nullspace(rows, len(basis)):
                terms = {basis[j]: c for j, c in vec.items() if c}
                if terms:
                    nat = InducedVector(rep_mu, terms, NATURAL)
                    dual = hodge_transport(nat)
                    found.append(InducedVector(rep_mu, normalize_vector(dual.terms), DUAL))
        out[mu0] = found
    return out


def support_ok(v: InducedVector) -> bool:
    """Dual-basis support in {d xi_*} together with {xi_I : |I| >= n-2}."""
    n = v.rep.n
    top = full_mask(n)
    for k, m, _ in v.terms:
        if k == 1 and m == top:
            continue
        if k == 0 and popcount(m) >= n - 2:
            continue
        return False
    return True


def same_span(vs: list, ws: list) -> bool:
    from .linalg import rank
    keys = {}
    for v in vs + ws:
        for k in v.terms:
            keys.setdefault(k, len(keys))
    rows_v = [{keys[k]: c for k, c in v.terms.items()} for v in vs]
    rows_w = [{keys[k]: c for k, c in w.terms.items()} for w in ws]
    rv, rw = rank(rows_v), rank(rows_w)
    return rv == rw == rank(rows_v + rows_w)


def scan(n: int, weights, dmax: int = 3) -> list[dict]:
    table = []
    for w in weights:
        check_weight(n, w)
        rep = build_irrep(n, w)
        rep_ = solve(n, w, dmax, rep)
        reducible = rep_.dimension > 0
        row = {
            "mu": w.to_json(),
            "reducible": reducible,
            "singularDimension": rep_.dimension,
            "families": [d["family"] for d in rep_.details],
            "listedSingular": predicted_singular(n, w),
        }
        if n >= 4:
            row["listedReducible"] = predicted_reducible(n, w)
        table.append(row)
    return table


__all__ = [
    "SingularCandidateSpace", "SingularVectorReport", "build_constraints", "solve",
    "predicted_family_a", "predicted_family_b", "predicted_family_c3", "classify",
    "family_b_relations_check", "family_b_components", "assemble_family_b",
    "verify_direct", "brute_force", "support_ok", "same_span", "scan",
    "predicted_reducible", "predicted_singular", "positive_monomials", "grade_basis",
    "normalize_vector", "FAMILY_A", "FAMILY_B", "FAMILY_C3", "UNKNOWN", "UNKNOWN_TRIVIAL",
]
