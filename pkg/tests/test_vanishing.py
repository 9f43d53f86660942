import pytest

from bcsym import vanishing as vn
from bcsym.partitions import Partition, partitions_upto
from bcsym.scalar import S

P = lambda *parts: Partition(parts)
qh, th = S("2/3"), S("5/2")
q, t = qh * qh, th * th
T = S("-7/5")


def test_shape_helpers():
    assert vn.square_root(P(2, 2, 1, 1)) == P(2, 1)
    assert vn.square_root(P(2, 1)) is None
    assert vn.half(P(4, 2)) == P(2, 1)
    assert vn.half(P(3)) is None


def test_t0_examples():
    one, = [r for r in vn.check_T0_props(P(1), qh, th) if r.name == "t0_usp"]
    assert one.lhs == 0 and one.equal
    usp = vn.check_T0_props(P(1, 1), qh, th)[0]
    assert usp.lhs == (1 - q * t) / (1 - t * t)
    uo = vn.check_T0_props(P(2), qh, th)[1]
    assert uo.lhs == (1 - q) / (1 - t)


def test_t0_props_through_size_five():
    for lam in partitions_upto(5):
        assert all(r.equal for r in vn.check_T0_props(lam, qh, th))


def test_closed_form_examples():
    assert vn.usp_value(P(2), T, q, t) == 0
    expected = (1 - T * T) * (1 - q * t) / ((1 - q * T * T / t) * (1 - t * t))
    assert vn.usp_value(P(1, 1), T, q, t) == expected
    assert vn.uo_value(P(2, 1), T, q, t) == 0 and vn.usp_value(P(2, 1), T, q, t) == 0


def test_integer_T_families():
    for n in (1, 2):
        for lam in partitions_upto(4):
            if len(lam) <= 2 * n:
                assert vn.check_USp(n, lam, qh, th).equal
                assert all(r.equal for r in vn.check_UO(n, lam, qh, th))
    r = vn.check_USp(1, P(1, 1), qh, th)
    assert r.lhs == vn.usp_value(P(1, 1), t, q, t) != 0


def test_generic_T():
    for lam in partitions_upto(4):
        assert vn.check_T_generic(lam, T, qh, th, "usp").equal
        assert vn.check_T_generic(lam, T, qh, th, "uo").equal


def test_q_equals_t():
    reports = vn.check_q_equals_t(1, P(1, 1), th) + vn.check_q_equals_t(1, P(2), th)
    values = {(r.name, r.shapes["lambda"]): r.lhs for r in reports}
    assert values[("usp_q_equals_t", P(1, 1))] == 1
    assert values[("uo_q_equals_t", P(2))] == 1
    assert values[("usp_q_equals_t", P(2))] == 0
    assert all(r.lhs == 0 for r in vn.check_q_equals_t(2, P(2, 1), th))


def test_orthogonal_group_props():
    r = (S("3/4"), S("-5/3"), S("2/7"), S("7/2"))
    for lam in partitions_upto(3):
        assert all(x.equal for x in vn.check_O1_props(lam, T, qh, th, r))
    pattern = {lam: [x.lhs for x in vn.check_O2_theorems(lam, T, qh, th, r[0], r[1])] for lam in (P(1, 1), P(2, 1))}
    assert pattern[P(1, 1)] == [True, True]
    assert pattern[P(2, 1)] == [False, False]


def test_dm_support():
    for m in (1, 2, 3):
        for n in range(3):
            rep = vn.dm_vanishing(m, n, qh, th)
            assert rep.equal, rep.lhs


def test_grassmannian_conjectures_are_advisory():
    a, b = S("3/4"), S("-5/3")
    for lam in partitions_upto(2):
        r = vn.check_O_grass(lam, T, qh, th, a, b)
        assert r.advisory and r.equal
        assert vn.check_Sp_grass(lam, T, qh, th, a, b).equal
    assert vn.check_O_grass(P(1), T, qh, th, a, b).lhs == 0


def test_unitary_grassmannian_examples():
    off = vn.check_U_grass2(1, P(1), P(), qh, th)
    assert off.lhs == 0 and off.equal
    on = vn.check_U_grass2(1, P(1), P(1), qh, th)
    assert on.equal and on.lhs != 0


def test_too_many_parts_rejected():
    with pytest.raises(ValueError):
        vn.check_USp(1, P(1, 1, 1), qh, th)
