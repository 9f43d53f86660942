from fractions import Fraction

import pytest

from bcsym.scalar import Params


def frac(x) -> Fraction:
    """gmpy2 rational to Fraction, for oracles written against the stdlib."""
    return Fraction(int(x.numerator), int(x.denominator))


def fpoch(a, q, k):
    out = Fraction(1)
    for i in range(k):
        out *= 1 - a * q ** i
    return out


@pytest.fixture
def params():
    # a fixed generic specialization; q = 4/9, t = 25/4
    return Params("2/3", "5/2", s="3/7", T="7/5", Q="-4/3", r=("1/3", "-3/4", "5/6", "2/5"),
                  free={"u": "-2/7", "v": "5/3", "w": "3/8", "x": "-7/4", "s2": "6/5",
                        "ah": "4/5", "b": "-5/2", "c": "2/9", "d": "7/3", "e": "-3/5"})
