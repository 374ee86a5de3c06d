from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from subgraph_ef.errors import DimensionError, InputError
from subgraph_ef.rational import dot, format_rational, parse_rational, rat


@pytest.mark.parametrize("p, q, num, den", [(2, 4, 1, 2), (-3, -6, 1, 2), (0, 7, 0, 1), (3, -9, -1, 3)])
def test_rat_canonical(p, q, num, den):
    r = rat(p, q)
    assert (r.numerator, r.denominator) == (num, den)


def test_rat_zero_denominator():
    with pytest.raises(InputError):
        rat(1, 0)


def test_dot_examples():
    assert dot([rat(1, 2), rat(1, 3)], [2, 3]) == 2
    assert dot([1, -1], [1, 1]) == 0
    assert dot([rat(1, 3)] * 3, [1, 1, 1]) == 1


def test_dot_length_mismatch():
    with pytest.raises(DimensionError):
        dot([1, 2], [1])


@pytest.mark.parametrize("r, text", [(rat(1, 2), "1/2"), (rat(4, 2), "2"), (rat(-3, 9), "-1/3"), (rat(0, 5), "0")])
def test_format(r, text):
    assert format_rational(r) == text
    assert parse_rational(text) == r


@pytest.mark.parametrize("bad", ["", "1/0", "a/2", "1.5"])
def test_parse_rejects(bad):
    with pytest.raises(InputError):
        parse_rational(bad)


rationals = st.fractions(max_denominator=10**6)


def _canonical(r: Fraction):
    from math import gcd
    return r.denominator > 0 and gcd(abs(r.numerator), r.denominator) == 1


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    for r in (a + b, a * b, a - c, b * c):
        assert _canonical(r)


@given(rationals)
def test_roundtrip(r):
    assert parse_rational(format_rational(r)) == r
