from hypothesis import given, strategies as st

from bcsym.partitions import (Partition, conjugate, contains, dominance_leq, dominated_by, double, in_box,
                              is_horizontal_strip, is_vertical_strip, partitions_of, partitions_upto, rect,
                              rect_minus, rect_plus, square, stats, subpartitions)

P = lambda *parts: Partition(parts)

small = st.integers(0, 8).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def test_conjugate_examples():
    assert conjugate(P(3, 1)) == P(2, 1, 1)
    assert conjugate(P()) == P()


@given(small)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


def test_dominance_examples():
    assert dominance_leq(P(2, 2), P(3, 1, 1))
    assert not dominance_leq(P(3, 1, 1), P(2, 2))
    assert dominance_leq(P(2, 1), P(2, 1))


@given(small, small)
def test_dominance_reverses_under_conjugation(mu, lam):
    if mu.size == lam.size:
        assert dominance_leq(mu, lam) == dominance_leq(conjugate(lam), conjugate(mu))


def test_strips():
    assert is_vertical_strip(P(1), P(2, 1))
    assert not is_vertical_strip(P(1), P(3, 1))
    assert is_horizontal_strip(P(1), P(3, 1))
    assert is_vertical_strip(P(2, 1), P(2, 1)) and is_horizontal_strip(P(2, 1), P(2, 1))


def test_stats_examples():
    assert stats(P(2, 1)) == (3, 1, 1)
    assert stats(P(5)) == (5, 0, 10)
    assert stats(P()) == (0, 0, 0)


def test_doubling_and_rectangles():
    assert double(P(2, 1)) == P(4, 2)
    assert square(P(2, 1)) == P(2, 2, 1, 1)
    assert rect_minus(P(2, 1), 3, 2) == P(2, 1)
    assert rect_plus(P(2, 1), 1, 2) == P(3, 2)


def test_complement_conjugation():
    for lam in in_box(3, 3):
        assert conjugate(rect_minus(lam, 3, 3)) == rect_minus(conjugate(lam), 3, 3)


def test_enumerations():
    assert in_box(1, 2) == [P(), P(1), P(1, 1)]
    assert partitions_upto(2) == [P(), P(1), P(2), P(1, 1)]
    assert set(dominated_by(P(2), 1)) == {P(), P(1), P(2)}
    assert [len(partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


@given(small)
def test_subpartitions_are_contained(lam):
    subs = subpartitions(lam)
    assert lam in subs and P() in subs
    assert all(contains(k, lam) for k in subs)
    assert rect(2, 3) == P(2, 2, 2)
