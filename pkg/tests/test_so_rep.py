from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conformalk.scalar import I, ONE
from conformalk.so_rep import (NOT_A_WEIGHT_VECTOR, WeightError, alpha_lj, build_irrep,
                               check_bracket_fidelity, check_hw, check_weight,
                               harmonic_cross_check, make_weight, parse_weight,
                               root_vector, weight_of, weyl_dim)
from conformalk.sparse import add_scaled

h = Fraction(1, 2)

# textbook dimensions (sl2, sl2 x sl2, sp4, sl4 pictures of so(3), so(4), so(5), so(6))
TEXTBOOK_DIMS = [
    (3, (0,), 1), (3, (h,), 2), (3, (1,), 3), (3, (3 * h,), 4), (3, (2,), 5),
    (5, (1, 0), 5), (5, (h, h), 4), (5, (1, 1), 10), (5, (2, 0), 14),
    (5, (3 * h, h), 16), (5, (3 * h, 3 * h), 20),
    (4, (1, 0), 4), (4, (1, 1), 3), (4, (h, -h), 2), (4, (2, 0), 9), (4, (3 * h, h), 6),
    (6, (1, 0, 0), 6), (6, (h, h, h), 4), (6, (h, h, -h), 4), (6, (1, 1, 0), 15),
    (6, (2, 0, 0), 20), (6, (1, 1, 1), 10),
]


@pytest.mark.parametrize("n,mu,dim", TEXTBOOK_DIMS)
def test_dimensions(n, mu, dim):
    w = make_weight(0, *mu)
    assert weyl_dim(n, w) == dim
    rep = build_irrep(n, w)
    assert rep.dim == dim
    assert check_bracket_fidelity(rep)
    assert check_hw(rep)


def test_root_vectors():
    assert root_vector(4, (1, -1)) == {(1, 3): ONE, (2, 4): ONE, (1, 4): I, (2, 3): -I}
    assert root_vector(5, (1, 0)) == {(1, 5): ONE, (2, 5): -I}
    assert alpha_lj(1, 2) == {(1, 3): ONE, (2, 3): -I}


def test_weight_of():
    rep = build_irrep(4, parse_weight("-1;1,0", 4))
    hw = rep.hw_vector()
    assert str(weight_of(rep, hw)) == "(-1;1,0)"
    low = rep.act(root_vector(4, (-1, 1)), hw)
    assert str(weight_of(rep, low)) == "(-1;0,1)"
    mixed = dict(hw)
    add_scaled(mixed, low, ONE)
    assert weight_of(rep, mixed) == NOT_A_WEIGHT_VECTOR


def test_weight_parsing_and_validation():
    w = parse_weight("-1/2;1/2", 3)
    assert w.mu0 == Fraction(-1, 2) and w.mu == (h,)
    with pytest.raises(ValueError):
        parse_weight("1,0", 4)
    with pytest.raises(ValueError):
        parse_weight("0;1", 4)
    for bad in ["0;0,1", "0;1/2,0", "0;1/3,0"]:
        with pytest.raises(WeightError):
            check_weight(4, parse_weight(bad, 4))
    with pytest.raises(WeightError):
        check_weight(5, parse_weight("0;1,2", 5))


@pytest.mark.parametrize("n,k", [(3, 1), (3, 2), (4, 2), (5, 1), (5, 2)])
def test_harmonic_polynomials(n, k):
    assert harmonic_cross_check(n, k)["passed"]


@st.composite
def dominant(draw):
    n = draw(st.sampled_from([3, 4, 5]))
    m = n // 2
    half = draw(st.booleans())
    base = [draw(st.integers(0, 2)) for _ in range(m)]
    mu = sorted(base, reverse=True)
    mu = [Fraction(x) + (h if half else 0) for x in mu]
    if n % 2 == 0 and draw(st.booleans()):
        mu[-1] = -mu[-1]
    return n, make_weight(draw(st.integers(-3, 3)), *mu)


@given(dominant())
def test_irrep_properties(nw):
    n, w = nw
    rep = build_irrep(n, w)
    assert rep.dim == weyl_dim(n, w)
    assert check_bracket_fidelity(rep)
    assert weight_of(rep, rep.hw_vector()) == w
    for b in range(rep.dim):
        assert weight_of(rep, {b: ONE}) == rep.basisWeights[b]
