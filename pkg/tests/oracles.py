"""Independent Fraction-based constructions used as test oracles."""
from fractions import Fraction
from itertools import permutations

from bcsym.partitions import Partition, partitions_upto


def bc_monomial(nu, xs) -> Fraction:
    """BC_n orbit sum m_nu at a point."""
    padded = tuple(nu) + (0,) * (len(xs) - len(nu))
    total = Fraction(0)
    for e in set(permutations(padded)):
        term = Fraction(1)
        for x, a in zip(xs, e):
            if a:
                term *= x ** a + x ** -a
        total += term
    return total


def solve(rows, rhs):
    """Gauss-Jordan elimination over Fractions."""
    n = len(rows)
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[-1] for row in a]


def point(mu, n, s, q, t):
    return [q ** mu.part(i) * t ** (n - i) * s for i in range(1, n + 1)]


def interpolation_by_vanishing(n, lam, s, q, t) -> dict:
    """m-basis coefficients of the monic polynomial of degree |lam| vanishing at all other mu, |mu| <= |lam|."""
    lam = Partition(lam)
    shapes = [nu for nu in partitions_upto(lam.size, None, n) if nu != lam]
    rows, rhs = [], []
    for mu in shapes:
        x = point(mu, n, s, q, t)
        rows.append([bc_monomial(nu, x) for nu in shapes])
        rhs.append(-bc_monomial(lam, x))
    coeffs = dict(zip(shapes, solve(rows, rhs)))
    coeffs[lam] = Fraction(1)
    return {k: v for k, v in coeffs.items() if v != 0}


def qpoch(a, q, k):
    out = Fraction(1)
    for i in range(k):
        out *= 1 - a * q ** i
    return out


def askey_wilson_monic(l, a, b, c, d, q, z) -> Fraction:
    """Monic Askey-Wilson polynomial in z + 1/z through its terminating 4phi3."""
    abcd = a * b * c * d
    total = Fraction(0)
    for k in range(l + 1):
        num = qpoch(q ** -l, q, k) * qpoch(abcd * q ** (l - 1), q, k) * qpoch(a * z, q, k) * qpoch(a / z, q, k)
        den = qpoch(a * b, q, k) * qpoch(a * c, q, k) * qpoch(a * d, q, k) * qpoch(q, q, k)
        total += num / den * q ** k
    scale = qpoch(a * b, q, l) * qpoch(a * c, q, l) * qpoch(a * d, q, l) / (a ** l * qpoch(abcd * q ** (l - 1), q, l))
    return scale * total
