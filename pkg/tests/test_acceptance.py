"""Acceptance gate: twelve criteria, one summary line each.

Each test records its outcome in ``RESULTS``; ``conftest.py`` prints the
lines at the end of the run, whether the criterion passed or not.
"""

import time
from fractions import Fraction

import pytest

from conformalk.contact_forms import (MINUS, PLUS, check_dd_zero, exactness_check,
                                      gamma_weights, graded_character_compare,
                                      homotopy_check, quotient_complex)
from conformalk.grassmann import monomials
from conformalk.induced import (DUAL, NATURAL, ActionEngine, InducedVector,
                                check_module_axioms, hodge_transport, transport_action)
from conformalk.kn_algebra import check_jacobi, check_skew, check_three_way
from conformalk.linalg import proportional
from conformalk.scalar import I, ONE
from conformalk.singular import (FAMILY_A, FAMILY_B, FAMILY_C3, brute_force,
                                 family_b_relations_check, predicted_family_a,
                                 predicted_family_b, predicted_family_c3, predicted_singular,
                                 solve, verify_direct)
from conformalk.so_rep import (build_irrep, check_bracket_fidelity, make_weight,
                               parse_weight, weyl_dim)

RESULTS = {}

h = Fraction(1, 2)


def record(num, title, passed, detail=""):
    RESULTS[num] = (title, bool(passed), detail)
    assert passed, f"criterion {num} ({title}) failed: {detail}"


def co(n, *idx):
    m = (1 << n) - 1
    for i in idx:
        m &= ~(1 << (i - 1))
    return m


def test_criterion_01_conformal_axioms():
    t0 = time.perf_counter()
    bad = []
    for n in range(6):
        for chk in (check_skew(n), check_jacobi(n)):
            if not chk["passed"]:
                bad.append((n, chk["name"]))
    dt = time.perf_counter() - t0
    record(1, "skew-symmetry and Jacobi, n = 0..5", not bad and dt < 120,
           f"{dt:.1f}s, failures={bad}")


def test_criterion_02_bracket_consistency():
    t0 = time.perf_counter()
    bad = [n for n in range(5) if not check_three_way(n, 3)["passed"]]
    dt = time.perf_counter() - t0
    record(2, "lambda-bracket, t-expansion, contact and vector-field brackets agree",
           not bad and dt < 60, f"{dt:.1f}s, failures at n={bad}")


def _small_reps():
    out = []
    for n, mus in [(1, [()]), (2, [(0,), (h,), (1,)]),
                   (3, [(0,), (h,), (1,), (3 * h,), (2,)]),
                   (4, [(0, 0), (h, h), (h, -h), (1, 0), (1, 1), (1, -1), (3 * h, 3 * h),
                        (3 * h, -3 * h), (2, 2), (2, -2)]),
                   (5, [(0, 0), (h, h), (1, 0)])]:
        for mu in mus:
            w = make_weight(Fraction(7, 3), *mu)
            if weyl_dim(n, w) <= 5:
                out.append(build_irrep(n, w))
    return out


def test_criterion_03_lambda_degree_bound():
    t0 = time.perf_counter()
    worst = 0
    reps = _small_reps()
    for rep in reps:
        n = rep.n
        for basis in (NATURAL, DUAL):
            eng = ActionEngine(rep, basis)
            for f in monomials(n):
                for g in monomials(n):
                    for b in range(rep.dim):
                        act = eng.act_flat(f, {(0, g, b): ONE})
                        if act:
                            worst = max(worst, max(j for j, *_ in act))
    dt = time.perf_counter() - t0
    record(3, "lambda-degree <= 2 on d-free vectors, n <= 5, dim F <= 5",
           worst <= 2 and dt < 60, f"{len(reps)} modules, max degree {worst}, {dt:.1f}s")


def test_criterion_04_natural_dual_equivalence():
    bad = 0
    count = 0
    for n, mu in [(0, ""), (1, ""), (2, "1"), (3, "1"), (3, "1/2"), (4, "1,0"), (4, "1/2,-1/2")]:
        rep = build_irrep(n, parse_weight(f"3/2;{mu}", n))
        nat, dual = ActionEngine(rep, NATURAL), ActionEngine(rep, DUAL)
        for f in monomials(n):
            for g in monomials(n):
                for k in (0, 1):
                    for b in range(rep.dim):
                        w = InducedVector(rep, {(k, g, b): ONE}, NATURAL)
                        lhs = transport_action(nat.act(f, w))
                        rhs = dual.act(f, hodge_transport(w))
                        count += 1
                        bad += lhs != rhs
    record(4, "T o natural o T^-1 equals the dual action, n <= 4", bad == 0,
           f"{count} pairs, {bad} mismatches")


def test_criterion_05_module_axioms():
    t0 = time.perf_counter()
    res = []
    for n, mu in [(3, "1;1"), (4, "0;1,0"), (5, "0;1,0")]:
        rep = build_irrep(n, parse_weight(mu, n))
        r = check_module_axioms(rep, basis=DUAL, max_d=2)
        res.append((n, mu, r["passed"], r.get("count")))
    dt = time.perf_counter() - t0
    ok = all(p for _, _, p, _ in res) and dt < 300
    record(5, "(M1)/(M2) as exact (lambda, mu)-identities on Ind(F)", ok,
           f"{dt:.1f}s, {[(n, mu, p) for n, mu, p, _ in res]}")


FAMILY_CASES = [
    (4, "-1;1,0", FAMILY_A), (4, "-2;2,0", FAMILY_A), (4, "3;1,0", FAMILY_B),
    (5, "4;1,0", FAMILY_B), (6, "5;1,0,0", FAMILY_B), (3, "-1/2;1/2", FAMILY_A),
    (3, "2;1", FAMILY_B), (3, "3/2;1/2", FAMILY_C3),
]
EMPTY_CASES = [(4, "1;1,0"), (4, "-1;2,0"), (4, "5;1,1")]


@pytest.fixture(scope="module")
def solved():
    t0 = time.perf_counter()
    out = {(n, mu): solve(n, parse_weight(mu, n)) for n, mu, _ in FAMILY_CASES}
    out.update({(n, mu): solve(n, parse_weight(mu, n)) for n, mu in EMPTY_CASES})
    return out, time.perf_counter() - t0


def _prediction(n, rep, fam):
    if fam == FAMILY_A:
        return predicted_family_a(rep)
    if fam == FAMILY_B:
        return predicted_family_b(n, rep.weight, rep)
    return predicted_family_c3(rep)


def test_criterion_06_singular_vector_classification(solved):
    reports, dt = solved
    problems = []
    for n, mu, fam in FAMILY_CASES:
        r = reports[(n, mu)]
        if r.dimension != 1:
            problems.append((n, mu, "dim", r.dimension))
            continue
        if r.details[0]["family"] != fam:
            problems.append((n, mu, "family", r.details[0]["family"]))
        if proportional(r.vectors[0].terms, _prediction(n, r.rep, fam).terms) is None:
            problems.append((n, mu, "not proportional to the stated vector"))
    c3 = _prediction(3, reports[(3, "3/2;1/2")].rep, FAMILY_C3)
    hw = reports[(3, "3/2;1/2")].rep.hwIndex
    coeffs = [c3.terms.get((1, co(3), hw)), c3.terms.get((0, co(3, 1, 2), hw))]
    if coeffs != [ONE, I]:
        problems.append(("c3 coefficients", coeffs))
    for n, mu in EMPTY_CASES:
        if reports[(n, mu)].dimension:
            problems.append((n, mu, "expected empty"))
    record(6, "singular vectors at the listed weights, empty elsewhere",
           not problems and dt < 900, f"{dt:.1f}s, problems={problems}")


def test_criterion_07_independent_soundness(solved):
    reports, _ = solved
    problems = []
    for n, mu, fam in FAMILY_CASES:
        for v in reports[(n, mu)].vectors:
            if not verify_direct(v)["passed"]:
                problems.append((n, mu, "direct annihilation"))
            if fam == FAMILY_B:
                fb = family_b_relations_check(v)
                if not fb["passed"]:
                    problems.append((n, mu, [x["relation"] for x in fb["relations"]
                                             if not x["holds"]]))
    record(7, "direct g_>0 annihilation and the family b coordinate relations",
           not problems, f"problems={problems}")


def test_criterion_08_brute_force_completeness():
    t0 = time.perf_counter()
    grid = [Fraction(x, 2) for x in range(-12, 21)]
    mus = [(3, (0,)), (3, (h,)), (3, (1,))]
    mus += [(4, mu) for mu in [(0, 0), (h, h), (h, -h), (1, 0), (1, 1), (1, -1),
                               (3 * h, 3 * h), (3 * h, -3 * h), (2, 2), (2, -2)]]
    outside, dpow3, hits = [], [], 0
    for n, mu in mus:
        rep = build_irrep(n, make_weight(0, *mu))
        assert rep.dim <= 5
        for mu0, vs in brute_force(n, rep, grid).items():
            w = make_weight(mu0.as_fraction(), *mu)
            for v in vs:
                hits += 1
                if not predicted_singular(n, w):
                    outside.append(str(w) + f" n={n}")
                if max(k for k, _, _ in v.terms) >= 3:
                    dpow3.append(str(w))
    dt = time.perf_counter() - t0
    record(8, "brute-force search finds nothing outside the classification, no d^3",
           not outside and not dpow3 and dt < 600,
           f"{dt:.1f}s, {hits} vectors, outside list={outside}, d^3={dpow3}")


def test_criterion_09_contact_complex():
    t0 = time.perf_counter()
    problems = []
    found = {}
    for n in (3, 4):
        kmax = n + 1
        for side in (PLUS, MINUS):
            cx = quotient_complex(n, side, kmax, 4)
            if not (cx.dd_zero() and check_dd_zero(n, side, kmax, cx.weights)):
                problems.append((n, side, "d^2"))
            defects = exactness_check(cx)["defects"]
            found[(n, side)] = defects
            if side == PLUS:
                want = {1: 1, **{k: 0 for k in range(2, n + 1)}}
            else:
                want = {0: 0, 1: 1, **{k: 0 for k in range(2, kmax)}}
            for k, e in want.items():
                if defects.get(k) != e:
                    problems.append((n, side, f"level {k}: defect {defects.get(k)}, expected {e}"))
        if not homotopy_check(n, 4, n + 1)["passed"]:
            problems.append((n, "homotopy"))
    dt = time.perf_counter() - t0
    record(9, "d^2 = 0, homotopy formula, exactness defects of the contact complex",
           not problems and dt < 600, f"{dt:.1f}s, problems={problems}")


def test_criterion_10_gamma_weights():
    problems = []
    for n in (4, 5):
        zeros = [0] * (n // 2 - 1)
        for l in range(4):
            g = gamma_weights(n, l, PLUS)
            if g["weight"] != make_weight(-l, l, *zeros) or not g["extremal"]:
                problems.append((n, "plus", l, str(g["weight"])))
            g = gamma_weights(n, l, MINUS)
            if g["weight"] != make_weight(n + l - 2, l, *zeros) or not g["extremal"]:
                problems.append((n, "minus", l, str(g["weight"])))
    record(10, "weights (-l; l, 0, ...) and (n+k-2; k, 0, ...) of the generating pieces",
           not problems, f"problems={problems}")


def test_criterion_11_graded_characters():
    bad = [(n, l) for n in (3, 4) for l in range(4)
           if not graded_character_compare(n, l, depth=6)["passed"]]
    record(11, "graded dims of Omega^l_+/I^l_+ equal those of Ind(T^l) to grade -6",
           not bad, f"failures={bad}")


IRREP_WEIGHTS = [
    (3, (0,), 1), (3, (h,), 2), (3, (1,), 3), (3, (3 * h,), 4), (3, (2,), 5),
    (5, (1, 0), 5), (5, (h, h), 4), (5, (1, 1), 10), (5, (3 * h, h), 16), (5, (3 * h, 3 * h), 20),
    (4, (1, 0), 4), (4, (1, 1), 3), (4, (h, -h), 2), (4, (2, 0), 9), (4, (3 * h, h), 6),
    (6, (1, 0, 0), 6), (6, (h, h, h), 4), (6, (h, h, -h), 4), (6, (1, 1, 0), 15),
    (6, (1, 1, 1), 10),
]


def test_criterion_12_representation_builder():
    assert len(IRREP_WEIGHTS) == 20
    bad = []
    for n, mu, dim in IRREP_WEIGHTS:
        w = make_weight(0, *mu)
        rep = build_irrep(n, w)
        if not (rep.dim == weyl_dim(n, w) == dim and check_bracket_fidelity(rep)):
            bad.append((n, mu))
    record(12, "irrep dimensions equal the Weyl formula; matrices respect brackets",
           not bad, f"20 weights, failures={bad}")
