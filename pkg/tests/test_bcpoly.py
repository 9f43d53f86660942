from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from bcsym.bcpoly import (BCPoly, NotSymmetric, apply_D, eigenvalue, eval_at_partition, evaluate, from_mbasis,
                          orbit_sum, to_mbasis)
from bcsym.partitions import Partition, dominance_leq, partitions_upto
from bcsym.scalar import S

from conftest import frac

P = lambda *parts: Partition(parts)
qh, th = S("2/3"), S("5/2")
q, t = qh * qh, th * th


def brute_D(f: BCPoly, u1, u2, xs):
    """The defining sign-vector sum, evaluated pointwise with Fractions."""
    qhf, tf = frac(qh), frac(t)
    u1, u2 = frac(S(u1)), frac(S(u2))
    n = len(xs)
    total = Fraction(0)
    for sigma in product((1, -1), repeat=n):
        y = [Fraction(x) ** s for x, s in zip(xs, sigma)]
        coef = Fraction(1)
        for i in range(n):
            coef *= (1 - u1 * y[i]) * (1 - u2 * y[i]) / (1 - y[i] ** 2)
            for j in range(i + 1, n):
                coef *= (1 - tf * y[i] * y[j]) / (1 - y[i] * y[j])
        shifted = [S(Fraction(x) * qhf ** s) for x, s in zip(xs, sigma)]
        total += coef * frac(evaluate(f, shifted))
    return total


def test_orbit_sums():
    assert orbit_sum(P(), 3).terms == {(0, 0, 0): 1}
    assert orbit_sum(P(1), 1).terms == {(1,): 1, (-1,): 1}
    assert len(orbit_sum(P(1), 2).terms) == 4
    assert to_mbasis(orbit_sum(P(2, 1), 2)) == {P(2, 1): 1}


def test_square_of_x_plus_inverse():
    f = orbit_sum(P(1), 1)
    assert to_mbasis(f * f) == {P(2): 1, P(): 2}


def test_non_symmetric_rejected():
    with pytest.raises(NotSymmetric):
        to_mbasis(BCPoly(1, {(1,): S(1)}))


@settings(max_examples=25, deadline=None)
@given(st.dictionaries(st.sampled_from(partitions_upto(3, None, 2)),
                       st.fractions(min_value=-5, max_value=5, max_denominator=6), max_size=4))
def test_m_basis_round_trip(coeffs):
    coeffs = {k: S(v) for k, v in coeffs.items() if v != 0}
    assert to_mbasis(BCPoly(2, from_mbasis(coeffs, 2).terms)) == coeffs


def test_eval_at_partition_examples():
    s = S("3/7")
    assert eval_at_partition(BCPoly.constant(2), P(1), s, q, t) == 1
    assert eval_at_partition(orbit_sum(P(1), 1), P(1), s, q, t) == q * s + 1 / (q * s)
    assert eval_at_partition(orbit_sum(P(1), 2), P(), s, q, t) == t * s + 1 / (t * s) + s + 1 / s


def test_D_on_constants():
    u1, u2 = S("3/5"), S("-7/2")
    assert to_mbasis(apply_D(BCPoly.constant(1), u1, u2, qh, t)) == {P(): 1 - u1 * u2}
    for n in (2, 3):
        expected = 1
        for i in range(1, n + 1):
            expected *= 1 - t ** (n - i) * u1 * u2
        assert to_mbasis(apply_D(BCPoly.constant(n), u1, u2, qh, t)) == {P(): expected}


@pytest.mark.parametrize("n,lam", [(1, P(1)), (1, P(3)), (2, P(1, 1)), (2, P(2, 1)), (3, P(1))])
def test_D_matches_defining_sum(n, lam):
    u1, u2 = S("3/5"), S("-7/2")
    f = orbit_sum(lam, n)
    Df = apply_D(f, u1, u2, qh, t)
    xs = [Fraction(2), Fraction(-5, 3), Fraction(7, 4)][:n]
    assert frac(evaluate(Df, [S(x) for x in xs])) == brute_D(f, u1, u2, xs)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_D_is_triangular(n):
    u1, u2 = S("3/5"), S("-7/2")
    for lam in partitions_upto(4, None, n):
        image = to_mbasis(apply_D(orbit_sum(lam, n), u1, u2, qh, t))
        assert all(dominance_leq(mu, lam) for mu in image)
        assert image[lam] == eigenvalue(lam, n, u1 * u2, qh, t)
