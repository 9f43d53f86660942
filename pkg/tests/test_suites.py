from hypothesis import given, settings, strategies as st

from bcsym.suites import SUITES, SuiteConfig, _generic, draw, parse_partition, run_suite
from bcsym.partitions import Partition
from bcsym.scalar import Params, power


def test_draws_are_reproducible_and_distinct():
    assert draw(7, 0) == draw(7, 0)
    assert draw(7, 0) != draw(7, 1)
    assert draw(2 ** 64 - 1, 3) == draw(2 ** 64 - 1, 3)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 64 - 1), st.integers(0, 50))
def test_draws_pass_the_guard(seed, index):
    p = draw(seed, index)
    assert _generic(p)
    assert p.q != p.t and p.q * p.t != 1
    assert all(power(p.q, i) * p.s ** 2 != 1 for i in range(-4, 5))


def test_guard_rejects_q_equal_t():
    assert not _generic(Params("2/3", "2/3"))
    assert not _generic(Params("2/3", "3/2"))
    assert not _generic(Params("2/3", "5/2", s="3/2"))  # s^2 q = 1


def test_partition_parsing():
    assert parse_partition("3,2,1") == Partition((3, 2, 1))
    assert parse_partition("") == Partition(())
    assert parse_partition("(2, 1)") == Partition((2, 1))


def test_small_runs_of_every_suite_pass():
    cfg = SuiteConfig(max_size=1, max_n=1, order=1)
    for module, suites in SUITES.items():
        for name in suites:
            if (module, name) == ("lifting", "virtual"):
                continue
            reports = run_suite(module, name, cfg, 5, 0)
            assert reports, (module, name)
            assert all(r.equal for r in reports), (module, name, [r for r in reports if not r.equal][:1])
            assert all(r.spec["draw"] == "0" for r in reports)
