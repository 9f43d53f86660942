from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bcsym import interpolation as ip
from bcsym.bcpoly import evaluate, partition_point, to_mbasis
from bcsym.interpolation import binom, diagonal_value, interp_poly, psi_d
from bcsym.partitions import Partition, in_box, partitions_upto
from bcsym.scalar import S

from conftest import frac
from oracles import interpolation_by_vanishing

P = lambda *parts: Partition(parts)
q, t, s = S("4/9"), S("25/4"), S("3/7")
nonunit = st.fractions(min_value=-7, max_value=7, max_denominator=7).filter(lambda v: v not in (0, 1, -1))


def test_one_variable_examples():
    x = S("-5/2")
    assert evaluate(interp_poly(1, P(), s, q, t), [x]) == 1
    assert evaluate(interp_poly(1, P(1), s, q, t), [x]) == x + 1 / x - s - 1 / s
    assert evaluate(interp_poly(1, P(2), s, q, t), [x]) == ((x + 1 / x - s - 1 / s)
                                                            * (x + 1 / x - q * s - 1 / (q * s)))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 5), nonunit, nonunit)
def test_one_variable_product_formula(l, sv, xv):
    sv, xv = S(sv), S(xv)
    expected = S(1)
    for j in range(1, l + 1):
        expected *= xv + 1 / xv - q ** (j - 1) * sv - q ** (1 - j) / sv
    assert evaluate(interp_poly(1, P(l), sv, q, t), [xv]) == expected


def test_two_variable_degree_one():
    f = interp_poly(2, P(1), s, q, t)
    assert f.mview == {P(1): 1, P(): -(t * s + 1 / (t * s) + s + 1 / s)}
    assert evaluate(f, [t * s, s]) == 0


@pytest.mark.parametrize("n,size", [(2, 3), (3, 2)])
def test_matches_vanishing_oracle(n, size):
    qf, tf, sf = frac(q), frac(t), frac(s)
    for lam in partitions_upto(size, None, n):
        got = {k: frac(v) for k, v in interp_poly(n, lam, s, q, t).mview.items()}
        assert got == interpolation_by_vanishing(n, lam, sf, qf, tf)


def test_diagonal_values():
    assert diagonal_value(3, P(), s, q, t) == 1
    assert diagonal_value(1, P(1), s, q, t) == (1 - q) * (1 - q * s * s) / (q * s)
    for lam in in_box(3, 3):
        f = interp_poly(3, lam, s, q, t)
        assert evaluate(f, partition_point(lam, 3, s, q, t)) == diagonal_value(3, lam, s, q, t)


def test_binomial_examples():
    assert binom("bracket", P(2, 1), P(), s, q, t) == 1
    assert binom("bracket", P(2), P(1), s, q, t) == (1 + q) * (1 - q * q * s * s) / (q * (1 - q * s * s))
    assert binom("brace", P(1), P(), s, q, t) == -1


def test_weight_trivial_cases():
    u = S("5/3")
    assert psi_d(P(), P(), u, s, q, t) == 1


def test_identity_reports(params):
    reports = []
    for n in (1, 2):
        for lam in partitions_upto(2, None, n):
            reports += ip.extra_vanishing(n, lam, params)
            reports += ip.symmetry(n, lam, params)
            reports.append(ip.difference_equation(n, lam, params["u"], params))
            reports.append(ip.special_difference(n, lam, params))
            reports.append(ip.branch(n, lam, params["v"], params))
            reports.append(ip.connection(n, lam, params["s2"], params))
            reports.append(ip.e_pieri(n, lam, params["w"], params))
    reports.append(ip.cauchy(1, 1, params))
    bad = [r for r in reports if not r.equal]
    assert not bad, bad


def test_cauchy_one_by_one(params):
    # sum_{lam in 1^1} (-1)^{1-|lam|} P*_lam(x) P*_{1-lam'}(y) = x + 1/x - y - 1/y
    assert ip.cauchy(1, 1, params).equal


def test_leading_term_is_macdonald(params):
    for lam in partitions_upto(4, None, 3):
        assert ip.leading_term(3, lam, params).equal


def test_difference_equation_empty_partition(params):
    r = ip.difference_equation(2, P(), params["u"], params)
    assert r.equal
