from fractions import Fraction

import pytest

from conformalk.grassmann import mask_of
from conformalk.induced import DUAL, InducedVector
from conformalk.scalar import I, ONE, GaussScalar
from conformalk.singular import (FAMILY_A, FAMILY_B, FAMILY_C3, UNKNOWN, brute_force, classify,
                                 family_b_components, family_b_relations_check,
                                 predicted_family_a, predicted_family_b, predicted_family_c3,
                                 predicted_reducible, predicted_singular, scan, solve,
                                 support_ok, verify_direct)
from conformalk.linalg import proportional
from conformalk.so_rep import build_irrep, make_weight, parse_weight, root_vector


def W(text, n):
    return parse_weight(text, n)


def co(n, *idx):
    return ((1 << n) - 1) & ~mask_of(idx)


def test_family_a_exact_line():
    # (xi_{2^c} - i xi_{1^c}) (x) v_mu
    rep = solve(4, W("-2;2,0", 4))
    assert rep.dimension == 1
    v = rep.vectors[0]
    hw = rep.rep.hwIndex
    assert v.terms == {(0, co(4, 2), hw): ONE, (0, co(4, 1), hw): -I}
    assert rep.details[0]["family"] == FAMILY_A


def test_family_c_exact_coefficients():
    rep = solve(3, W("3/2;1/2", 3))
    assert rep.dimension == 1
    v = rep.vectors[0]
    pred = predicted_family_c3(rep.rep)
    top = (1 << 3) - 1
    hw = rep.rep.hwIndex
    assert pred.terms[(1, top, hw)] == ONE
    assert pred.terms[(0, co(3, 1, 2), hw)] == I
    scale = proportional(v.terms, pred.terms)
    assert scale is not None
    assert classify(v, 3, rep.weight) == FAMILY_C3


@pytest.mark.parametrize("n,mu,family", [
    (4, "-1;1,0", FAMILY_A), (3, "-1/2;1/2", FAMILY_A), (3, "2;1", FAMILY_B),
    (4, "3;1,0", FAMILY_B), (5, "4;1,0", FAMILY_B),
])
def test_listed_weights(n, mu, family):
    rep = solve(n, W(mu, n))
    assert rep.dimension == 1
    v = rep.vectors[0]
    assert rep.details[0]["family"] == family
    pred = predicted_family_a(rep.rep) if family == FAMILY_A else predicted_family_b(n, rep.weight)
    assert proportional(v.terms, pred.terms) is not None
    assert verify_direct(v)["passed"]
    assert support_ok(v)
    if family == FAMILY_B:
        assert family_b_relations_check(v)["passed"]


@pytest.mark.parametrize("n,mu", [(4, "1;1,0"), (4, "-1;2,0"), (4, "5;1,1"), (3, "1;1")])
def test_unlisted_weights_are_empty(n, mu):
    assert solve(n, W(mu, n), dmax=2).dimension == 0


def test_trivial_weight_has_the_k0_family_a_shape():
    # recorded as computed: the family (a) formula continued to k = 0 is singular
    for n, mu in [(3, "0;0"), (4, "0;0,0")]:
        rep = solve(n, W(mu, n), dmax=2)
        assert rep.dimension == 1
        assert rep.details[0]["weight"][:2] == ["-1", "1"]
        assert proportional(rep.vectors[0].terms, predicted_family_a(rep.rep).terms) is not None
        assert rep.details[0]["family"] == UNKNOWN
        assert verify_direct(rep.vectors[0], 2)["passed"]


def test_family_b_at_k0_is_not_found():
    assert solve(4, W("2;0,0", 4), dmax=2).dimension == 0
    with pytest.raises(ValueError):
        family_b_components(build_irrep(4, W("2;0,0", 4)))


def test_family_b_components_n4():
    rep = build_irrep(4, W("3;1,0", 4))
    comps = family_b_components(rep)
    v = rep.hw_vector()
    lower_minus = rep.act(root_vector(4, (-1, 1)), v)   # E_{-(e1-e2)} v
    lower_plus = rep.act(root_vector(4, (-1, -1)), v)   # E_{-(e1+e2)} v
    half = GaussScalar.coerce(Fraction(1, 2))
    assert comps[("w", 1)] == v
    assert comps[("w", 2)] == {b: -half * c for b, c in lower_minus.items()}
    assert comps[("wbar", 2)] == {b: half * c for b, c in lower_plus.items()}
    both = rep.act(root_vector(4, (-1, -1)), lower_minus)
    C = GaussScalar.coerce(Fraction(1, 4))
    assert comps[("wbar", 1)] == {b: C * c for b, c in both.items()}


def test_family_b_components_odd_n():
    rep = build_irrep(5, W("4;1,0", 5))
    comps = family_b_components(rep)
    e1 = rep.act(root_vector(5, (-1, 0)), rep.hw_vector())
    assert comps[("w", 3)] == {b: -c for b, c in e1.items()}


def test_mutations_are_detected():
    rep = solve(4, W("3;1,0", 4))
    v = rep.vectors[0]
    key = next(k for k in sorted(v.terms) if k[2] == 3)
    bad = dict(v.terms)
    bad[key] = bad[key] * 2
    w = InducedVector(v.rep, bad, DUAL)
    assert not family_b_relations_check(w)["passed"]
    assert not verify_direct(w)["passed"]
    assert classify(w, 4, rep.weight) == UNKNOWN


def test_predictions():
    assert predicted_reducible(4, W("-1;1,0", 4))
    assert predicted_reducible(4, W("0;0,0", 4))
    assert predicted_reducible(4, W("3;1,0", 4))
    assert not predicted_reducible(4, W("2;0,0", 4))
    assert not predicted_reducible(4, W("5;1,1", 4))
    assert predicted_singular(3, W("3/2;1/2", 3))
    assert not predicted_singular(3, W("5/2;1/2", 3))


def test_brute_force_n3():
    grid = [Fraction(x, 2) for x in range(-12, 21)]
    hits = {}
    for mu1 in (Fraction(1, 2), 1, 0):
        res = brute_force(3, build_irrep(3, make_weight(0, mu1)), grid)
        hits[mu1] = sorted(str(k) for k, vs in res.items() if vs)
        for vs in res.values():
            assert len(vs) <= 1
            assert all(max(k for k, _, _ in v.terms) < 3 for v in vs)
    assert hits == {Fraction(1, 2): ["-1/2", "3/2"], 1: ["-1", "2"], 0: ["0"]}


def test_brute_force_agrees_with_solver():
    rep = build_irrep(3, W("0;1", 3))
    res = brute_force(3, rep, [2])
    (v,) = res[GaussScalar.coerce(2)]
    sol = solve(3, W("2;1", 3)).vectors[0]
    assert proportional(v.terms, sol.terms) is not None


def test_scan_n4_table():
    ws = [make_weight(m0, k, 0) for k in (0, 1, 2) for m0 in range(-2, 5)]
    table = scan(4, ws)
    found = {tuple(r["mu"]) for r in table if r["reducible"]}
    assert found == {("0", "0", "0"), ("-1", "1", "0"), ("3", "1", "0"),
                     ("-2", "2", "0"), ("4", "2", "0")}
    assert all(r["singularDimension"] <= 1 for r in table)


def test_report_json_shape():
    rep = solve(4, W("-1;1,0", 4))
    js = rep.to_json()
    assert js["n"] == 4 and js["mu"] == ["-1", "1", "0"]
    t = js["vectors"][0]["terms"][0]
    assert set(t) == {"dpow", "xi", "vecIndex", "coeff"}
    assert js["vectors"][0]["basis"] == "dual"
