import json
import pickle
from fractions import Fraction

import pytest
from hypothesis import given

from conformalk.scalar import (I, ONE, ZERO, GaussScalar, ScalarDivisionByZero,
                               normalize, parse_scalar)

from conftest import gauss


def test_small_identities():
    assert parse_scalar("1+i") + parse_scalar("1-i") == 2
    assert I * I == -1
    assert GaussScalar.coerce(1) / parse_scalar("2i") == parse_scalar("-1/2i")
    assert parse_scalar("2i") * parse_scalar("-1/2i") == ONE


@pytest.mark.parametrize("text", ["3", "-1/2", "i", "-i", "2i", "1/2-3/4i", "-5+7i"])
def test_parse_format_roundtrip(text):
    x = parse_scalar(text)
    assert parse_scalar(str(x)) == x


@pytest.mark.parametrize("bad", ["", "x", "1//2", "i i"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


def test_division_by_zero():
    with pytest.raises(ScalarDivisionByZero):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


@given(gauss(), gauss(), gauss())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO


@given(gauss(nonzero=True))
def test_inverse(a):
    assert a * a.inverse() == ONE
    assert ONE / a == a.inverse()


@given(gauss(), gauss())
def test_conjugation_is_multiplicative(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a * a.conjugate()).is_real()


@given(gauss())
def test_serialization_roundtrips(a):
    assert GaussScalar.from_json(json.loads(json.dumps(a.to_json()))) == a
    assert parse_scalar(str(a)) == a
    assert pickle.loads(pickle.dumps(a)) == a
    assert normalize(a) == a


@given(gauss())
def test_hash_consistent_with_rationals(a):
    if a.is_real():
        assert hash(a) == hash(a.as_fraction())
        assert a == a.as_fraction()


def test_integer_predicates():
    assert GaussScalar.coerce(3).is_rational_integer()
    assert not GaussScalar.coerce(Fraction(1, 2)).is_rational_integer()
    assert not I.is_real()
