from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from bcsym.cnorm import b_lambda
from bcsym.partitions import Partition, partitions_of, partitions_upto
from bcsym.scalar import S
from bcsym.symfunc import (SymFunc, e_k, gauss_moment, half_rule, macdonald_P, macdonald_Q, multiply, p_power,
                           pairing, phi, plethysm_scalar, plethysm_sym, psi, shift_rule, skew_coeffs, skew_P)

from conftest import frac

P = lambda *parts: Partition(parts)
q, t = S("4/9"), S("25/4")


def evaluate(f: SymFunc, xs) -> Fraction:
    """Brute-force evaluation in finitely many variables through the m-basis."""
    xs = [Fraction(x) for x in xs]
    total = Fraction(0)
    for lam, c in f.to("m").coeffs.items():
        if len(lam) > len(xs):
            continue
        padded = tuple(lam) + (0,) * (len(xs) - len(lam))
        for e in set(permutations(padded)):
            term = frac(c)
            for x, a in zip(xs, e):
                term *= x ** a
            total += term
    return total


def test_basis_examples():
    assert p_power(P(1)).to("m").coeffs == {P(1): 1}
    assert e_k(2).to("m").coeffs == {P(1, 1): 1}
    assert macdonald_P(P(1), q, t).to("m").coeffs == {P(1): 1}


def test_macdonald_two_row_coefficient():
    c = (1 + q) * (1 - t) / (1 - q * t)
    assert macdonald_P(P(2), q, t).to("m").coeffs == {P(2): 1, P(1, 1): c}


@pytest.mark.parametrize("size", range(6))
def test_m_p_round_trip(size):
    for lam in partitions_of(size):
        f = SymFunc("m", {lam: 1})
        assert f.to("p").to("m") == f


def test_pairing_orthogonality():
    for n in range(5):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                value = pairing(macdonald_P(lam, q, t), macdonald_Q(mu, q, t), q, t)
                assert value == (1 if lam == mu else 0)


@pytest.mark.parametrize("lam", [P(1), P(2), P(1, 1), P(2, 1), P(3), P(2, 1, 1), P(3, 1)])
@pytest.mark.parametrize("xs", [(2, Fraction(-1, 3), 5), (Fraction(3, 2), 7)])
def test_macdonald_operator_eigenfunction(lam, xs):
    # independent oracle: sum_i prod_{j != i} (t x_i - x_j)/(x_i - x_j) T_{q, x_i}
    qf, tf = frac(q), frac(t)
    n = len(xs)
    if len(lam) > n:
        return
    f = macdonald_P(lam, q, t)
    total = Fraction(0)
    for i in range(n):
        coef = Fraction(1)
        for j in range(n):
            if j != i:
                coef *= (tf * xs[i] - xs[j]) / (Fraction(xs[i]) - xs[j])
        shifted = list(xs)
        shifted[i] = qf * xs[i]
        total += coef * evaluate(f, shifted)
    eig = sum(qf ** lam.part(i + 1) * tf ** (n - 1 - i) for i in range(n))
    assert total == eig * evaluate(f, xs)


def test_skew_trivial_cases():
    for lam in partitions_upto(3):
        assert skew_coeffs(lam, lam, q, t) == {P(): 1}
        assert skew_coeffs(lam, P(), q, t) == {lam: 1}
    assert skew_coeffs(P(1), P(2), q, t) == {}


@pytest.mark.parametrize("lam", [P(2), P(1, 1), P(2, 1), P(3, 1), P(2, 2)])
def test_skew_coproduct_two_alphabets(lam):
    xs, ys = (Fraction(2), Fraction(-1, 3)), (Fraction(5, 4), Fraction(3))
    lhs = evaluate(macdonald_P(lam, q, t), xs + ys)
    rhs = sum(evaluate(macdonald_P(mu, q, t), xs) * evaluate(skew_P(lam, mu, q, t), ys)
              for mu in partitions_upto(lam.size) if all(mu.part(i) <= lam.part(i) for i in range(1, 5)))
    assert lhs == rhs


def test_one_variable_weights():
    lam, mu = P(2), P(1)
    one_var = skew_P(lam, mu, q, t).to("m").coeffs.get(P(1))
    assert psi(lam, mu, q, t) == one_var
    assert phi(lam, mu, q, t) == b_lambda(lam, q, t) / b_lambda(mu, q, t) * psi(lam, mu, q, t)
    assert psi(P(2, 2), P(1), q, t) == 0
    assert psi(lam, lam, q, t) == 1 and phi(lam, lam, q, t) == 1


def test_plethysm_rules():
    p1, p2 = p_power(P(1)), p_power(P(2))
    assert plethysm_sym(p2, half_rule()) == SymFunc("p", {P(1): 2})
    assert plethysm_sym(p1, half_rule()).is_zero()
    a = S("3/5")
    rule = shift_rule(lambda k: a ** k + a ** -k)
    assert plethysm_sym(p1, rule) == SymFunc("p", {P(1): 1, P(): a + 1 / a})


def test_gauss_moments():
    mean, var = S("2/3"), S("5/7")
    assert gauss_moment(1, mean, var) == mean
    assert gauss_moment(2, mean, var) == mean ** 2 + var
    assert gauss_moment(4, 0, var) == 3 * var ** 2
    assert gauss_moment(3, mean, var) == mean ** 3 + 3 * mean * var


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(partitions_upto(3)), st.sampled_from(partitions_upto(3)))
def test_multiplication_is_commutative_and_evaluates(lam, mu):
    f, g = macdonald_P(lam, q, t), macdonald_P(mu, q, t)
    fg = multiply(f, g)
    assert fg == multiply(g, f)
    xs = (Fraction(2), Fraction(-3, 5), Fraction(1, 7))
    assert evaluate(fg, xs) == evaluate(f, xs) * evaluate(g, xs)


def test_plethysm_scalar_on_p_basis():
    f = SymFunc("p", {P(2, 1): 3, P(): 1})
    assert plethysm_scalar(f, lambda k: S(k + 1)) == 3 * 3 * 2 + 1
