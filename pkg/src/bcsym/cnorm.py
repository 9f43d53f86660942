"""The box products C^0, C^-, C^+ and the quantities built from them.

Every C-function is a literal product over the boxes of the diagram; row
forms appear only as test oracles.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .partitions import (Partition, conjugate, contains, double, rect, rect_minus,
                         rect_plus, square)
from .report import Report
from .scalar import ONE, QT, Scalar, S, power, prod

KINDS = ("zero", "minus", "plus")


@lru_cache(maxsize=None)
def _box_exponents(kind: str, lam: Partition) -> tuple:
    """(a, b) pairs such that the factor for each box is 1 - q^a t^b x."""
    conj = conjugate(lam)
    out = []
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            if kind == "zero":
                out.append((j - 1, 1 - i))
            elif kind == "minus":
                out.append((row - j, conj[j - 1] - i))
            elif kind == "plus":
                out.append((row + j - 1, 2 - conj[j - 1] - i))
            else:
                raise ValueError(f"unknown C-function kind {kind!r}")
    return tuple(out)


class _Powers:
    """Memoized integer powers of a nonzero scalar."""

    __slots__ = ("base", "cache")

    def __init__(self, base):
        self.base = base
        self.cache = {0: ONE}

    def __call__(self, k: int):
        v = self.cache.get(k)
        if v is None:
            v = power(self.base, k)
            self.cache[k] = v
        return v


@lru_cache(maxsize=200000)
def _cfun_single(kind: str, lam: Partition, x, q, t):
    qp, tp = _Powers(q), _Powers(t)
    out = ONE
    for a, b in _box_exponents(kind, lam):
        out *= 1 - qp(a) * tp(b) * x
    return out


def cfun(kind: str, lam, x, q, t) -> Scalar:
    """C^kind_lam(x; q, t); a list of x values means the product over them."""
    lam = Partition(lam)
    q, t = S(q), S(t)
    if isinstance(x, (list, tuple)):
        return prod(_cfun_single(kind, lam, S(v), q, t) for v in x)
    return _cfun_single(kind, lam, S(x), q, t)


def C0(lam, x, q, t):
    return cfun("zero", lam, x, q, t)


def Cm(lam, x, q, t):
    return cfun("minus", lam, x, q, t)


def Cp(lam, x, q, t):
    return cfun("plus", lam, x, q, t)


def c0_rows(lam, x, q, t):
    """Row form prod_i (t^{1-i} x; q)_{lam_i}, used as an oracle."""
    from .scalar import qpoch
    return prod(qpoch(power(t, 1 - i) * x, q, p) for i, p in enumerate(Partition(lam), start=1))


def b_lambda(lam, q, t) -> Scalar:
    den = Cm(lam, q, q, t)
    if den == 0:
        raise ZeroDivisionError("C^-_lam(q) vanishes")
    return Cm(lam, t, q, t) / den


def principal_P(lam, u, q, t) -> Scalar:
    """P_lam([(1-u^k)/(1-t^k)]; q, t) = t^{n(lam)} C^0_lam(u) / C^-_lam(t)."""
    lam = Partition(lam)
    return power(t, lam.n()) * C0(lam, u, q, t) / Cm(lam, t, q, t)


def norm_pp(lam, n: int, q, t) -> Scalar:
    """<P_lam, P_lam>''_n."""
    lam = Partition(lam)
    num = C0(lam, power(t, n), q, t) * Cm(lam, q, q, t)
    if num == 0:
        return num
    return num / (C0(lam, q * power(t, n - 1), q, t) * Cm(lam, t, q, t))


def _compare(name, lhs, rhs, shapes, spec) -> Report:
    return Report(name, lhs, rhs, shapes=shapes, spec=spec)


def verify_c_lemmas(lam, x, qt: QT, m: int | None = None, n: int | None = None) -> list:
    """Check the inversion, conjugation, shift, complement and doubling lemmas."""
    lam = Partition(lam)
    q, t = qt.q, qt.t
    x = S(x)
    iq, it = 1 / q, 1 / t
    size, nl, nlc = lam.size, lam.n(), conjugate(lam).n()
    if m is None:
        m = (lam[0] if lam else 0) + 1
    if n is None:
        n = len(lam) + 1
    spec = {"q_half": str(qt.qh), "t_half": str(qt.th), "x": str(x)}
    shapes = {"lambda": lam, "m": m, "n": n}
    out = []
    add = lambda name, l, r: out.append(_compare(name, l, r, shapes, spec))

    # inversion
    add("inversion_plus", Cp(lam, 1 / x, iq, it),
        power(-q * x, -size) * power(t, 3 * nl) * power(q, -3 * nlc) * Cp(lam, x, q, t))
    add("inversion_minus", Cm(lam, 1 / x, iq, it),
        power(-1 / x, size) * power(t, -nl) * power(q, -nlc) * Cm(lam, x, q, t))
    add("inversion_zero", C0(lam, 1 / x, iq, it),
        power(-1 / x, size) * power(t, nl) * power(q, -nlc) * C0(lam, x, q, t))

    # conjugation
    lc = conjugate(lam)
    add("conjugation_plus", Cp(lc, x, q, t), Cp(lam, q * t * x, it, iq))
    add("conjugation_minus", Cm(lc, x, q, t), Cm(lam, x, t, q))
    add("conjugation_zero", C0(lc, x, q, t), C0(lam, x, it, iq))

    # shift by a rectangle
    big = rect_plus(lam, m, n)
    R = rect(m, n)
    qm, q2m = power(q, m), power(q, 2 * m)
    add("shift_plus", Cp(big, x, q, t) / Cp(R, x, q, t),
        C0(lam, q2m * power(t, 1 - n) * x, q, t) * Cp(lam, q2m * x, q, t)
        / C0(lam, qm * power(t, 1 - n) * x, q, t))
    add("shift_minus", Cm(big, x, q, t) / Cm(R, x, q, t),
        C0(lam, qm * power(t, n - 1) * x, q, t) * Cm(lam, x, q, t) / C0(lam, power(t, n - 1) * x, q, t))
    add("shift_zero", C0(big, x, q, t) / C0(R, x, q, t), C0(lam, qm * x, q, t))

    # complement in a rectangle
    comp = rect_minus(lam, m, n)
    add("complement_plus", Cp(comp, x, q, t) / Cp(R, x, q, t),
        Cp(lam, power(q, 2 * m - 1) * power(t, 3 - 2 * n) * x, iq, it)
        * C0(lam, [power(q, m - 1) * power(t, 2 - 2 * n) * x, power(q, 2 * m - 1) * power(t, 2 - n) * x], iq, it)
        / C0(double(square(lam)), power(q, 2 * m - 1) * power(t, 2 - 2 * n) * x, iq, it))
    add("complement_minus", Cm(comp, x, q, t) / Cm(R, x, q, t),
        Cm(lam, x, q, t) / (C0(lam, power(t, n - 1) * x, q, t) * C0(lam, power(q, m - 1) * x, iq, it)))
    add("complement_zero", C0(comp, x, q, t) / C0(R, x, q, t),
        1 / C0(lam, power(q, m - 1) * power(t, 1 - n) * x, iq, it))

    # doubling
    q2, t2 = q * q, t * t
    add("double_plus", Cp(double(lam), x, q, t), Cp(lam, [x, q * x], q2, t))
    add("double_minus", Cm(double(lam), x, q, t), Cm(lam, [x, q * x], q2, t))
    add("double_zero", C0(double(lam), x, q, t), C0(lam, [x, q * x], q2, t))
    add("square_plus", Cp(square(lam), x, q, t), Cp(lam, [x / t, x / t2], q, t2))
    add("square_minus", Cm(square(lam), x, q, t), Cm(lam, [x, x * t], q, t2))
    add("square_zero", C0(square(lam), x, q, t), C0(lam, [x, x / t], q, t2))

    # row form of C^0
    add("c0_row_form", C0(lam, x, q, t), c0_rows(lam, x, q, t))
    return out


def skew_principal(lam, kappa, u, q, t) -> Scalar:
    """P_{lam/kappa}([(1-u^k)/(1-t^k)]; q, t) through the skew machinery."""
    from .partitions import ShapeError
    from .symfunc import plethysm_scalar, skew_P
    lam, kappa = Partition(lam), Partition(kappa)
    if not contains(kappa, lam):
        raise ShapeError(f"{kappa} is not contained in {lam}")
    u, t = S(u), S(t)
    f = skew_P(lam, kappa, S(q), t)
    return plethysm_scalar(f, lambda k: (1 - u ** k) / (1 - t ** k))


def _limit_ratio(num_factors: Sequence, den_factors: Sequence):
    """Product ratio where exactly-vanishing factors are cancelled in pairs.

    Every factor is presented as (constant, value) where value vanishes when
    the constant equals the limit point; equal counts cancel to 1.
    """
    num = [v for v in num_factors if v != 0]
    den = [v for v in den_factors if v != 0]
    if len(num_factors) - len(num) != len(den_factors) - len(den):
        raise ZeroDivisionError("unbalanced vanishing factors in limit")
    return prod(num) / prod(den)


def _c0_factors(lam, x, q, t):
    qp, tp = _Powers(q), _Powers(t)
    return [1 - qp(a) * tp(b) * x for a, b in _box_exponents("zero", Partition(lam))]


SKEW_CHECKS = ("basic", "shift", "complement", "corollary")


def verify_skew_lemma(lam, kappa, u, qt: QT, m: int | None = None, n: int | None = None,
                      checks=SKEW_CHECKS) -> list:
    """Check the four skew principal-specialization transformations and the corollary.

    ``checks`` selects among the closed form and inversion/conjugation rules
    ("basic"), the m^n shift, the complement in m^n and the two corollaries;
    each runs only when its containment hypothesis holds for (m, n).
    """
    from .symfunc import skew_P, plethysm_scalar
    lam, kappa = Partition(lam), Partition(kappa)
    q, t = qt.q, qt.t
    u = S(u)
    iq, it = 1 / q, 1 / t
    if m is None:
        m = (lam[0] if lam else 0) + 1
    if n is None:
        n = len(lam) + 1
    shapes = {"lambda": lam, "kappa": kappa, "m": m, "n": n}
    spec = {"q_half": str(qt.qh), "t_half": str(qt.th), "u": str(u)}
    out = []
    add = lambda name, l, r: out.append(Report(name, l, r, shapes=shapes, spec=spec))
    skew = skew_P
    size = lam.size - kappa.size

    base = plethysm_scalar(skew(lam, kappa, q, t), lambda k: (1 - u ** k) / (1 - t ** k))
    if "basic" in checks:
        add("skew_principal_closed_form_consistency", base, skew_principal(lam, kappa, u, q, t))
        inv = plethysm_scalar(skew(lam, kappa, iq, it), lambda k: (1 - u ** -k) / (1 - t ** -k))
        add("skew_inversion", inv, power(t / u, size) * base)

        conj = plethysm_scalar(skew(conjugate(lam), conjugate(kappa), t, q), lambda k: (1 - u ** k) / (1 - q ** k))
        other = plethysm_scalar(skew(lam, kappa, q, t), lambda k: (1 - u ** -k) / (1 - t ** k))
        add("skew_conjugation", conj, power(-u, size) * b_lambda(lam, q, t) / b_lambda(kappa, q, t) * other)

    tn, tn1 = power(t, n), power(t, n - 1)
    qm = power(q, m)
    if "shift" in checks and len(lam) <= n:
        shifted = plethysm_scalar(skew(rect_plus(lam, m, n), rect_plus(kappa, m, n), q, t),
                                  lambda k: (1 - u ** k) / (1 - t ** k))
        factor = (C0(lam, [q * qm * tn1, tn], q, t) * C0(kappa, [qm * tn, q * tn1], q, t)
                  / (C0(kappa, [q * qm * tn1, tn], q, t) * C0(lam, [qm * tn, q * tn1], q, t)))
        add("skew_shift", shifted, factor * base)

    if "complement" in checks and (not lam or lam[0] <= m) and len(lam) <= n:
        comp = plethysm_scalar(skew(rect_minus(kappa, m, n), rect_minus(lam, m, n), q, t),
                               lambda k: (1 - u ** k) / (1 - t ** k))
        qmi = power(q, -m)
        factor = (power(q / t, size) * C0(lam, qmi, q, t) * C0(kappa, q * qmi / t, q, t) * b_lambda(lam, q, t)
                  / (C0(kappa, qmi, q, t) * C0(lam, q * qmi / t, q, t) * b_lambda(kappa, q, t)))
        add("skew_complement", comp, factor * base)

        # corollary: P_{m^n/lam} / P_{m^n}
        R = rect(m, n)
        lhs = (plethysm_scalar(skew(R, lam, q, t), lambda k: (1 - u ** k) / (1 - t ** k))
               / principal_P(R, u, q, t))
        rhs = (power(t, lam.n()) * power(q / u, lam.size) * C0(lam, [tn, qmi], q, t)
               / (Cm(lam, q, q, t) * C0(lam, tn1 * q * qmi / u, q, t)))
        add("skew_corollary_rect_over_lambda", lhs, rhs)

    # corollary: P_{lam/m^n} as a limit Q -> q^m, for lam with l(lam) <= n, lam_n >= m
    big = rect_plus(lam, m, n) if "corollary" in checks and len(lam) <= n else None
    if big is not None:
        R = rect(m, n)
        lhs = plethysm_scalar(skew(big, R, q, t), lambda k: (1 - u ** k) / (1 - t ** k))
        Q = qm
        num = (_c0_factors(R, tn, q, t) + _c0_factors(R, q * tn1 / Q, q, t)
               + _c0_factors(big, q * tn1, q, t) + _c0_factors(big, u / Q, q, t))
        den = (_c0_factors(R, q * tn1, q, t) + _c0_factors(R, u / Q, q, t)
               + _c0_factors(big, q * tn1 / Q, q, t))
        # the printed limit omits t^{n(big) - n(m^n)}
        rhs = power(t, big.n() - R.n()) * _limit_ratio(num, den) / Cm(big, t, q, t)
        add("skew_corollary_lambda_over_rect", lhs, rhs)
    return out
