from fractions import Fraction

import pytest

from bcsym import hyperg
from bcsym.interpolation import binom
from bcsym.partitions import Partition, partitions_upto, subpartitions
from bcsym.scalar import S
from bcsym.hyperg import jackson_rhs, w8_7

from conftest import frac
from oracles import qpoch

P = lambda *parts: Partition(parts)


def classical_w87(a, b, c, d, e, m, q):
    """Terminating very-well-poised 8phi7 with f = q^-m and argument q."""
    f = q ** -m
    total = Fraction(0)
    for k in range(m + 1):
        num = qpoch(a, q, k) * (1 - a * q ** (2 * k)) / (1 - a)
        for x in (b, c, d, e, f):
            num *= qpoch(x, q, k)
        den = qpoch(q, q, k)
        for x in (b, c, d, e, f):
            den *= qpoch(a * q / x, q, k)
        total += num / den * q ** k
    return total


@pytest.mark.parametrize("m", [1, 2, 3])
def test_one_variable_sum_is_classical(m):
    q, t = S("4/9"), S("25/4")
    a, b, c, d, e = map(S, ("2/5", "-3/2", "7/3", "5/8", "-4/7"))
    got = w8_7(a, b, c, d, e, q ** -m, q, t, q, m, 1)
    assert frac(got) == classical_w87(*(frac(v) for v in (a, b, c, d, e)), m, frac(q))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_classical_jackson(m):
    q, t = S("4/9"), S("25/4")
    a, b, c, d = map(S, ("2/5", "-3/2", "7/3", "5/8"))
    e = a * a * q ** (m + 1) / (b * c * d)
    lhs = classical_w87(*(frac(v) for v in (a, b, c, d, e)), m, frac(q))
    assert frac(jackson_rhs(a, b, c, d, e, q, t, m, 1)) == lhs


def test_jackson_reports(params):
    for mn in ((1, 1), (1, 2), (2, 1), (2, 2)):
        assert hyperg.jackson(*mn, params).equal
        assert hyperg.watson_rectangle(*mn, params).equal


def test_inversion_smallest_case(params):
    s, q, t = params.s, params.q, params.t
    total = (binom("bracket", P(), P(), s, q, t) * binom("brace", P(1), P(), s, q, t)
             + binom("bracket", P(1), P(), s, q, t) * binom("brace", P(1), P(1), s, q, t))
    assert total == 0


@pytest.mark.parametrize("name", sorted(hyperg.SUITE))
def test_suite_members(name, params):
    fn = hyperg.SUITE[name]
    for lam in partitions_upto(3):
        for kappa in subpartitions(lam):
            out = fn(lam, kappa, params)
            for r in out if isinstance(out, list) else [out]:
                assert r.equal, r


def test_identity_collapses_on_diagonal(params):
    lam = P(2, 1)
    for name, fn in hyperg.SUITE.items():
        out = fn(lam, lam, params)
        assert all(r.equal for r in (out if isinstance(out, list) else [out])), name


def test_binomial_properties(params):
    for lam in partitions_upto(3):
        assert all(r.equal for r in hyperg.binomial_special_values(lam, params))
    for mm in range(3):
        for l in range(mm + 1):
            assert all(r.equal for r in hyperg.binomial_one_row(mm, l, params))
