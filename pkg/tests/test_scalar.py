import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bcsym.scalar import (DegenerateParameters, Params, S, fmt, genericity_check, multi_qpoch, power, qpoch,
                          random_params)

from conftest import fpoch, frac

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=30)


def test_qpoch_examples():
    assert qpoch("7/3", "1/2", 0) == 1
    assert qpoch("1/3", "1/2", 2) == S("5/9")
    assert qpoch(2, 2, 2) == 3


def test_multi_qpoch_examples():
    assert multi_qpoch([], 3, 4) == 1
    assert multi_qpoch([2, 3], "1/2", 1) == 2
    assert multi_qpoch(["3/5"], 2, 3) == qpoch("3/5", 2, 3)


@given(rationals, rationals.filter(lambda q: q != 0), st.integers(0, 6))
def test_qpoch_matches_product(a, q, k):
    assert frac(qpoch(S(a), S(q), k)) == fpoch(a, q, k)


@given(rationals.filter(lambda x: x != 0), st.integers(-5, 5), st.integers(-5, 5))
def test_power_is_exponent_additive(x, i, j):
    x = S(x)
    assert power(x, i) * power(x, j) == power(x, i + j)


def test_scalar_parsing_and_format():
    assert S("6/4") == S(3) / 2
    assert fmt(S("-6/4")) == "-3/2"
    assert fmt(S(5)) == "5"
    with pytest.raises(ValueError):
        S("0.5")


def test_genericity_examples():
    assert genericity_check(Params(2, 3), 6, 6)
    assert not genericity_check(Params("1/2", 2), 1, 1)
    assert not genericity_check(Params(2, "1/2"), 2, 2)


def test_degenerate_q_rejected():
    with pytest.raises(DegenerateParameters):
        Params(1, 3)


def test_params_derived_values():
    p = Params("2/3", "5/2", r=(1, 2, 3, 4))
    assert p.q == S("4/9") and p.t == S("25/4")
    assert p.ts == (1, 4, 9, 16)
    assert p.t0hat_half ** 2 * p.q == 1 * 4 * 9 * 16
    assert p.as_strings()["q_half"] == "2/3"


def test_random_params_reproducible():
    a = random_params(random.Random(11), ("u", "v"))
    b = random_params(random.Random(11), ("u", "v"))
    assert a == b and set(a.free) == {"u", "v"}
    assert Fraction(str(fmt(a.q))) == frac(a.qh) ** 2
