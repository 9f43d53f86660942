from fractions import Fraction

import pytest

from bcsym import koornwinder as kw
from bcsym.bcpoly import BCPoly, evaluate
from bcsym.koornwinder import KParams, k0, koorn_poly, virtual_integral
from bcsym.partitions import Partition, in_box, partitions_upto
from bcsym.scalar import S

from conftest import frac
from oracles import askey_wilson_monic

P = lambda *parts: Partition(parts)
KP = KParams.from_halves("2/3", "5/2", ["1/3", "-3/4", "5/6", "2/5"])


@pytest.mark.parametrize("l", range(5))
@pytest.mark.parametrize("z", [Fraction(3), Fraction(-2, 7)])
def test_one_variable_is_askey_wilson(l, z):
    a, b, c, d = (frac(x) for x in KP.ts)
    expected = askey_wilson_monic(l, a, b, c, d, frac(KP.q), z)
    assert frac(evaluate(koorn_poly(1, P(l), KP), [S(z)])) == expected


def test_k0_examples():
    T = S("7/5")
    t, q = KP.t, KP.q
    t0, t1, t2, t3 = KP.ts
    assert k0(P(), T, KP) == 1
    expected = ((t / (t0 * T)) * (1 - T) * (1 - T * t0 * t1 / t) * (1 - T * t0 * t2 / t) * (1 - T * t0 * t3 / t)
                / ((1 - t) * (1 - q * T * T * KP.t0hat ** 2 / t ** 2)))
    assert k0(P(1), T, KP) == expected


def test_monic_and_trivial():
    assert koorn_poly(2, P(), KP).mview == {P(): 1}
    for lam in partitions_upto(3, None, 2):
        assert koorn_poly(2, lam, KP).mview[lam] == 1


def test_virtual_integral_basics():
    assert virtual_integral(BCPoly.constant(2), KP) == 1
    for lam in partitions_upto(3, None, 2):
        if lam:
            assert virtual_integral(koorn_poly(2, lam, KP), KP) == 0


def test_parameter_permutations():
    for lam in partitions_upto(2, None, 2):
        assert kw.parameter_symmetry(2, lam, KP).equal
        f = koorn_poly(2, lam, KP)
        assert koorn_poly(2, lam, KP.permuted((1, 0, 3, 2))) == f


def test_evaluation_symmetry_and_construction():
    shapes = partitions_upto(2, None, 2)
    for lam in shapes:
        assert all(r.equal for r in kw.binomial_construction(2, lam, KP))
        for mu in shapes:
            assert kw.evaluation_symmetry(2, lam, mu, KP).equal


def test_qracah():
    kp = KParams.qracah("2/3", "5/3", "3/7", "-7/4", "11/5", 2, 2)
    assert kw.qracah_norm_check(2, 2, kp).equal
    box = in_box(2, 2)
    for lam in box:
        for mu in box:
            assert kw.qracah_orthogonality(2, 2, lam, mu, kp).equal
        assert kw.qracah_vs_virtual(2, 2, BCPoly.from_m({lam: 1}, 2), kp, str(lam)).equal


def test_identity_reports():
    other = KParams.from_halves("2/3", "5/2", ["1/3", "7/2", "-1/4", "3/5"])
    reports = []
    for lam in partitions_upto(2, None, 2):
        reports += [kw.kadell(2, lam, KP), kw.inverse_binomial(2, lam, KP), kw.connection(2, lam, KP, other),
                    kw.diff_action(2, lam, KP), kw.special_connection(2, lam, KP), kw.connt(2, lam, KP)]
    reports.append(kw.cauchy_koorn(1, 1, KP))
    reports += kw.w8_7_integral(2, 1, S("-3/8"), KP)
    bad = [r for r in reports if not r.equal]
    assert not bad, bad


def test_connection_needs_shared_t0():
    other = KParams.from_halves("2/3", "5/2", ["2", "7/2", "-1/4", "3/5"])
    with pytest.raises(ValueError):
        kw.connection(1, P(1), KP, other)


def test_bad_hat_rejected():
    with pytest.raises(ValueError):
        KParams("2/3", "5/2", (1, 2, 3, 4), 5)
