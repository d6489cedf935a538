import pytest
from hypothesis import given, strategies as st

from conformalk import kernels
from conformalk._kernels_py import mono_mul_sign as py_mul_sign
from conformalk.grassmann import (GrassmannElement, derive, derive_multi, epsilon,
                                  format_monomial, full_mask, hodge, hodge_mask,
                                  indices_of, mask_of, monomials, mul, parse_monomial)
from conformalk.scalar import ONE


def perm_sign(seq):
    """Sign of the sorting permutation of distinct integers (inversion count)."""
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def mono(n, *idx):
    return GrassmannElement.monomial(n, list(idx))


N = 6
masks = st.integers(min_value=0, max_value=(1 << N) - 1)


def test_products():
    assert mul(mono(3, 1), mono(3, 2)) == mono(3, 1, 2)
    assert mul(mono(3, 2), mono(3, 1)) == mono(3, 1, 2).scale(-1)
    assert not mul(mono(3, 1), mono(3, 1))


def test_derivations():
    assert derive(1, mono(3, 1, 2)) == mono(3, 2)
    assert derive(2, mono(3, 1, 2)) == mono(3, 1).scale(-1)
    assert not derive(3, mono(3, 1, 2))
    assert derive_multi([1, 2], mono(3, 1, 2)) == mono(3).scale(-1)
    assert derive_multi([1, 2, 3], mono(3, 1, 2, 3)) == mono(3).scale(-1)
    assert not derive_multi([1], mono(3, 2))


def test_hodge_examples():
    assert hodge(mono(3, 1, 2)) == mono(3, 3)
    assert hodge(mono(2, 1)) == mono(2, 2).scale(-1)
    for n in range(5):
        assert hodge(mono(n)) == GrassmannElement.monomial(n, full_mask(n))


def test_epsilon():
    assert epsilon(3, [1, 2, 4]) == 2
    assert epsilon(1, [2, 3, 5]) == 0
    assert epsilon(5, [1, 2, 3, 4]) == 4


def test_parse_and_format():
    assert parse_monomial("x1 x3 x4", 4) == mask_of([1, 3, 4])
    assert parse_monomial("1", 4) == 0
    assert parse_monomial(format_monomial(0b1011), 4) == 0b1011
    with pytest.raises(ValueError):
        parse_monomial("x5", 4)
    with pytest.raises(ValueError):
        parse_monomial("x1 x1", 4)


@given(masks, masks)
def test_sign_matches_permutation_oracle(a, b):
    s = kernels.mono_mul_sign(a, b)
    if a & b:
        assert s == 0
    else:
        assert s == perm_sign(indices_of(a) + indices_of(b))
    assert s == py_mul_sign(a, b)


@given(masks, masks, masks)
def test_associativity(a, b, c):
    x, y, z = (GrassmannElement.monomial(N, m) for m in (a, b, c))
    assert mul(mul(x, y), z) == mul(x, mul(y, z))


@given(masks, masks)
def test_supercommutativity(a, b):
    x, y = (GrassmannElement.monomial(N, m) for m in (a, b))
    sign = -1 if (bin(a).count("1") * bin(b).count("1")) % 2 else 1
    assert mul(x, y) == mul(y, x).scale(sign)


@given(st.integers(1, N), masks, masks)
def test_derivation_is_odd_leibniz(i, a, b):
    x, y = (GrassmannElement.monomial(N, m) for m in (a, b))
    px = bin(a).count("1") % 2
    rhs = mul(derive(i, x), y) + mul(x, derive(i, y)).scale(-1 if px else 1)
    assert derive(i, mul(x, y)) == rhs


@given(masks)
def test_hodge_defining_relation(a):
    x = GrassmannElement.monomial(N, a)
    assert mul(hodge(x), x) == GrassmannElement.monomial(N, full_mask(N))
    s, comp = hodge_mask(a, N)
    assert comp == full_mask(N) & ~a and s in (1, -1)


def test_monomials_enumeration():
    assert sorted(monomials(4)) == list(range(16))
    assert all(mono(4, *indices_of(m)).terms == {m: ONE} for m in monomials(4))
