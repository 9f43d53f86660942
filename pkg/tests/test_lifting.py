from fractions import Fraction

import pytest

from bcsym import lifting as lf
from bcsym.bcpoly import evaluate, partition_point
from bcsym.koornwinder import KParams
from bcsym.lifting import (gaussian, gaussian_moments, lift_hom_eval, lifted_interp, restrict_bc, GaussianSpec)
from bcsym.partitions import Partition, partitions_upto
from bcsym.scalar import S
from bcsym.symfunc import SymFunc, macdonald_P

from conftest import frac
from oracles import interpolation_by_vanishing

P = lambda *parts: Partition(parts)
qh, th = S("2/3"), S("5/2")
q, t = qh * qh, th * th
s, T = S("3/7"), S("-7/5")
KP = KParams.from_halves(qh, th, ["1/3", "-3/4", "5/6", "2/5"])


def test_homomorphism_examples():
    one = SymFunc("p", {P(): 1})
    assert lift_hom_eval(one, P(2), s, T, q, t) == 1
    p1 = SymFunc("p", {P(1): 1})
    assert lift_hom_eval(p1, P(), s, T, q, t) == s * (1 - T) / (1 - t) + (1 - 1 / T) / (s * (1 - 1 / t))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_homomorphism_at_integer_T(n):
    f = macdonald_P(P(2, 1), q, t) + SymFunc("p", {P(3): S("2/5"), P(1): 1})
    restricted = restrict_bc(f, n)
    for mu in partitions_upto(3, None, n):
        assert lift_hom_eval(f, mu, s, t ** n, q, t) == evaluate(restricted, partition_point(mu, n, s, q, t))


def test_restriction_matches_vanishing_oracle():
    for lam in partitions_upto(3):
        got = restrict_bc(lifted_interp(lam, t * t, s, q, t), 2).mview
        if len(lam) > 2:
            assert not got
            continue
        expected = interpolation_by_vanishing(2, lam, frac(s), frac(q), frac(t))
        assert {k: frac(v) for k, v in got.items()} == expected


def test_interp_reports():
    reports = [lf.restriction(P(2, 1), 1, s, qh, th), lf.restriction(P(2), 2, s, qh, th)]
    for lam in partitions_upto(2):
        reports += lf.lifted_vanishing(lam, T, s, qh, th)
        reports.append(lf.duality(lam, T, s, qh, th))
        reports.append(lf.interp_triangularity(lam, T, s, qh, th))
        reports.append(lf.lifted_connection(lam, T, s, S("5/9"), qh, th))
        reports.append(lf.hom_sT(lam, T, S("3/2"), s, qh, th))
    for n in (1, 2, 3):
        reports.append(lf.e_difference(n, T, s, qh, th))
    bad = [r for r in reports if not r.equal]
    assert not bad, bad


def test_omega_involution():
    for lam in partitions_upto(4):
        assert lf.omega_involution(lam, qh, th).equal


def test_lifted_cauchy_low_degree():
    assert lf.lifted_cauchy(T, s, qh, th, 3).equal


def test_koornwinder_lift():
    reports = [lf.koorn_restriction(P(1), 1, KP), lf.koorn_restriction(P(1, 1), 2, KP),
               lf.koorn_restriction(P(1, 1), 1, KP)]
    for lam in partitions_upto(2):
        for mu in partitions_upto(2):
            reports.append(lf.koorn_orthogonality(lam, mu, T, KP))
    assert all(r.equal for r in reports)


def test_gaussian_examples():
    spec = GaussianSpec(lambda k: S(k) / 3, lambda k: S(k + 1))
    assert gaussian(SymFunc("p", {P(2): 1}), spec) == S(2) / 3
    assert gaussian(SymFunc("p", {P(1, 1): 1}), spec) == S(1) / 9 + 2
    assert gaussian(SymFunc("p", {P(2, 1): 1}), spec) == S(2) / 3 * S(1) / 3


def test_gaussian_variance_has_q_factor():
    spec = gaussian_moments(KP)
    assert spec.var(1) == (1 - q) / (1 - t)
    assert spec.var(2) == 2 * (1 - q * q) / (1 - t * t)


def test_t0_theory():
    reports = [lf.ik_equals_ig(lam, KP) for lam in partitions_upto(3)]
    reports += [lf.t0_orthogonality(lam, mu, KP) for lam in partitions_upto(2) for mu in partitions_upto(2)]
    reports += [lf.t0_branching(P(2, 1), KP), lf.t0_e_pieri(P(1), KP, 2), lf.t0_g_pieri(P(1), KP, 2)]
    bad = [r for r in reports if not r.equal]
    assert not bad, bad
