"""Terminating multivariate basic hypergeometric sums and transformations.

Every sum is a finite sum over partitions in a box or between two
partitions; identity parameters come from ``Params.free`` with ``ah``
the half-parameter of a (so that sqrt(a) is rational).
"""
from __future__ import annotations

from dataclasses import dataclass

from .cnorm import C0, Cm, Cp, norm_pp
from .interpolation import (bracket, brace, diagonal_value, psi_d, psi_d_diag, psi_d_formula, psi_i,
                            psi_i_diag, skew_plethysm)
from .partitions import (EMPTY, Partition, between, conjugate, contains, double, in_box,
                         is_horizontal_strip, is_vertical_strip, rect,
                         rect_minus, rect_plus, square, subpartitions)
from .report import Report
from .scalar import ONE, ZERO, Params, S, Scalar, fmt, power


@dataclass(frozen=True)
class SeriesSpec:
    """A boxed sum over mu inside m^n."""
    m: int
    n: int
    params: tuple = ()
    z: Scalar = ONE

    def shapes(self):
        return in_box(self.m, self.n)


def w8_7(a, b, c, d, e, f, q, t, z, m: int, n: int) -> Scalar:
    """The 8W7^(n) sum restricted to mu inside m^n."""
    a, b, c, d, e, f, q, t, z = map(S, (a, b, c, d, e, f, q, t, z))
    tn = power(t, n)
    total = ZERO
    for mu in in_box(m, n):
        num = C0(mu, tn, q, t) * C0(mu, [b, c, d, e, f], q, t)
        if num == 0:
            continue
        num *= C0(double(square(mu)), a * q, q, t) * power(t, 2 * mu.n()) * power(z, mu.size)
        den = Cp(mu, [a, q * a / t], q, t) * C0(mu, [a * q / tn, a * q / b, a * q / c, a * q / d, a * q / e, a * q / f], q, t)
        den *= Cm(mu, [q, t], q, t)
        total += num / den
    return total


def phi4_3(nums, dens, q, t, z, m: int, n: int) -> Scalar:
    """The 4Phi3^(n) sum with numerator (a,b,c,d), denominator (e,f,g), over mu inside m^n."""
    nums = [S(x) for x in nums]
    dens = [S(x) for x in dens]
    q, t, z = S(q), S(t), S(z)
    tn = power(t, n)
    total = ZERO
    for mu in in_box(m, n):
        num = C0(mu, [tn] + nums, q, t)
        if num == 0:
            continue
        num *= power(t, 2 * mu.n()) * power(z, mu.size)
        total += num / (C0(mu, dens, q, t) * Cm(mu, [q, t], q, t))
    return total


def jackson_rhs(a, b, c, d, e, q, t, m: int, n: int) -> Scalar:
    a, b, c, d, e, q, t = map(S, (a, b, c, d, e, q, t))
    R = rect(m, n)
    aq = a * q
    return (C0(R, [aq, aq / (c * d), aq / (c * e), aq / (d * e)], q, t)
            / C0(R, [aq / c, aq / d, aq / e, aq / (c * d * e)], q, t))


# ---------------------------------------------------------------------------
# helpers

def _free(p: Params, *names):
    return [p[name] for name in names]


def _spec(p: Params, **extra) -> dict:
    out = {"q_half": fmt(p.qh), "t_half": fmt(p.th)}
    for k, v in p.free.items():
        out[k] = fmt(v)
    out.update({k: fmt(S(v)) for k, v in extra.items()})
    return out


def _nc(lam) -> int:
    return conjugate(Partition(lam)).n()


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _P(lam, mu, q, t, fn):
    return skew_plethysm(lam, mu, q, t, fn)


def _geom_image(x, t):
    """[(1 - x^k)/(1 - t^k)]."""
    return lambda k: (1 - power(x, k)) / (1 - power(t, k))


def _diff_image(x, y, t):
    return lambda k: (power(x, k) - power(y, k)) / (1 - power(t, k))


# ---------------------------------------------------------------------------
# identities

def qsaal(lam, kappa, p: Params) -> Report:
    lam, kappa = Partition(lam), Partition(kappa)
    q, t = p.q, p.t
    ah, b, c = _free(p, "ah", "b", "c")
    a = ah * ah
    z = q * a / (b * c)
    lhs = ZERO
    for mu in between(kappa, lam):
        w = _sign(mu.size - kappa.size) * power(q, _nc(kappa) - _nc(mu))
        w *= C0(kappa, [b, c], q, t) * Cm(mu, t, q, t) * Cp(mu, a, q, t)
        w /= C0(mu, [q * a / b, q * a / c], q, t) * Cm(kappa, t, q, t) * Cp(kappa, a, q, t)
        lhs += w * _P(mu, kappa, q, t, _geom_image(z, t)) * bracket(lam, mu, ah, q, t)
    rhs = power(z, lam.size - kappa.size) * C0(lam, [b, c], q, t) / C0(lam, [q * a / b, q * a / c], q, t)
    rhs *= bracket(lam, kappa, ah, q, t)
    return Report("qsaal", lhs, rhs, {"lambda": lam, "kappa": kappa}, _spec(p))


def qsaal_reversed(lam, kappa, p: Params) -> Report:
    lam, kappa = Partition(lam), Partition(kappa)
    q, t = p.q, p.t
    ah, b, c = _free(p, "ah", "b", "c")
    a = ah * ah
    y = b * c / (q * a)
    lhs = ZERO
    for mu in between(kappa, lam):
        w = _sign(lam.size - mu.size) * power(q, _nc(mu) - _nc(lam))
        w *= C0(mu, [b, c], q, t) * Cm(lam, t, q, t) * Cp(lam, a, q, t)
        w /= C0(lam, [q * a / b, q * a / c], q, t) * Cm(mu, t, q, t) * Cp(mu, a, q, t)
        pl = _P(lam, mu, q, t, lambda k: (power(y, k) - 1) / (1 - power(t, k)))
        lhs += w * pl * brace(mu, kappa, ah, q, t)
    rhs = power(y, lam.size - kappa.size) * C0(kappa, [b, c], q, t) / C0(kappa, [q * a / b, q * a / c], q, t)
    rhs *= brace(lam, kappa, ah, q, t)
    return Report("qsaal_reversed", lhs, rhs, {"lambda": lam, "kappa": kappa}, _spec(p))


def duality(lam, mu, p: Params) -> list:
    lam, mu = Partition(lam), Partition(mu)
    q, t, s = p.q, p.t, p.s
    s_dual = 1 / (p.qh * p.th * s)
    lc, mc = conjugate(lam), conjugate(mu)
    shapes = {"lambda": lam, "mu": mu}
    spec = _spec(p, s=s)
    return [Report("duality_bracket", bracket(lam, mu, s, q, t), bracket(lc, mc, s_dual, t, q), shapes, spec),
            Report("duality_brace", brace(lam, mu, s, q, t), brace(lc, mc, s_dual, t, q), shapes, spec)]


def inversion(lam, kappa, p: Params) -> list:
    lam, kappa = Partition(lam), Partition(kappa)
    q, t, s = p.q, p.t, p.s
    delta = ONE if lam == kappa else ZERO
    first = sum((bracket(mu, kappa, s, q, t) * brace(lam, mu, s, q, t) for mu in between(kappa, lam)), ZERO)
    second = sum((brace(mu, kappa, s, q, t) * bracket(lam, mu, s, q, t) for mu in between(kappa, lam)), ZERO)
    shapes = {"lambda": lam, "kappa": kappa}
    spec = _spec(p, s=s)
    return [Report("inversion_bracket_brace", first, delta, shapes, spec),
            Report("inversion_brace_bracket", second, delta, shapes, spec)]


def _vwp_prefactor(lam, kappa, a, b, c, q, t):
    """(-1)^{|lam/kappa|} q^{n(kappa')-n(lam')} C^-_lam(t) C^+_lam(a) C^0_kappa(b,c) / (... kappa, lam ...)."""
    out = _sign(lam.size - kappa.size) * power(q, _nc(kappa) - _nc(lam))
    out *= Cm(lam, t, q, t) * Cp(lam, a, q, t) * C0(kappa, [b, c], q, t)
    return out / (Cm(kappa, t, q, t) * Cp(kappa, a, q, t))


def w6_5(lam, kappa, p: Params) -> Report:
    lam, kappa = Partition(lam), Partition(kappa)
    q, t = p.q, p.t
    ah, b, c = _free(p, "ah", "b", "c")
    a = ah * ah
    z = q * a / (b * c)
    lhs = ZERO
    for mu in between(kappa, lam):
        w = power(z, mu.size - kappa.size) * C0(mu, [b, c], q, t) / C0(mu, [q * a / b, q * a / c], q, t)
        lhs += w * brace(lam, mu, ah, q, t) * bracket(mu, kappa, ah, q, t)
    rhs = _vwp_prefactor(lam, kappa, a, b, c, q, t) / C0(lam, [a * q / b, a * q / c], q, t)
    rhs *= _P(lam, kappa, q, t, _geom_image(z, t))
    return Report("w6_5", lhs, rhs, {"lambda": lam, "kappa": kappa}, _spec(p))


def _watson_lhs(lam, kappa, ah, b, c, d, e, q, t):
    a = ah * ah
    z = a * a * q * q / (b * c * d * e)
    aq = a * q
    total = ZERO
    for mu in between(kappa, lam):
        w = power(z, mu.size - kappa.size) * C0(mu, [b, c, d, e], q, t)
        w /= C0(mu, [aq / b, aq / c, aq / d, aq / e], q, t)
        total += w * brace(lam, mu, ah, q, t) * bracket(mu, kappa, ah, q, t)
    return total


def _balanced_sum(lam, kappa, a, b, c, d, e, q, t):
    """sum_mu C0_mu(d,e)/C0_mu(aq/b,aq/c) P_{lam/mu}[...] P_{mu/kappa}[...]."""
    aq = a * q
    x = aq / (d * e)
    y = a * a * q * q / (b * c * d * e)
    total = ZERO
    for mu in between(kappa, lam):
        w = C0(mu, [d, e], q, t) / C0(mu, [aq / b, aq / c], q, t)
        w *= _P(lam, mu, q, t, _geom_image(x, t))
        if w == 0:
            continue
        total += w * _P(mu, kappa, q, t, _diff_image(x, y, t))
    return total


def watson(lam, kappa, p: Params) -> Report:
    lam, kappa = Partition(lam), Partition(kappa)
    q, t = p.q, p.t
    ah, b, c, d, e = _free(p, "ah", "b", "c", "d", "e")
    a = ah * ah
    lhs = _watson_lhs(lam, kappa, ah, b, c, d, e, q, t)
    rhs = _vwp_prefactor(lam, kappa, a, b, c, q, t) / C0(lam, [a * q / d, a * q / e], q, t)
    rhs *= _balanced_sum(lam, kappa, a, b, c, d, e, q, t)
    return Report("watson", lhs, rhs, {"lambda": lam, "kappa": kappa}, _spec(p))


def watson_reduces_to_w6_5(lam, kappa, p: Params) -> Report:
    """Watson's left side with b = aq/c equals the 6W5 left side with (d, e)."""
    lam, kappa = Partition(lam), Partition(kappa)
    q, t = p.q, p.t
    ah, c, d, e = _free(p, "ah", "c", "d", "e")
    a = ah * ah
    lhs = _watson_lhs(lam, kappa, ah, a * q / c, c, d, e, q, t)
    six = w6_5(lam, kappa, p.with_free(b=d, c=e))
    return Report("watson_b_equals_aq_over_c", lhs, six.lhs, {"lambda": lam, "kappa": kappa}, _spec(p))


def _sears_side(lam, kappa, a, b, c, d, e, q, t):
    aq = a * q
    return (C0(lam, [aq / b, aq / c], q, t) / C0(kappa, [d, e], q, t)
            * _balanced_sum(lam, kappa, a, b, c, d, e, q, t))


def sears(lam, kappa, p: Params) -> Report:
    lam, kappa = Partition(lam), Partition(kappa)
    q, t = p.q, p.t
    ah, b, c, d, e = _free(p, "ah", "b", "c", "d", "e")
    a = ah * ah
    lhs = _sears_side(lam, kappa, a, b, c, d, e, q, t)
    rhs = _sears_side(lam, kappa, a, b, d, c, e, q, t)
    return Report("sears", lhs, rhs, {"lambda": lam, "kappa": kappa}, _spec(p))


def weak_qsaal(lam, kappa, p: Params) -> Report:
    lam, kappa = Partition(lam), Partition(kappa)
    q, t = p.q, p.t
    a, b, c = _free(p, "b", "c", "d")
    lhs = ZERO
    for mu in between(kappa, lam):
        w = C0(mu, a, q, t) / C0(mu, c, q, t) * _P(lam, mu, q, t, _diff_image(a, b, t))
        if w == 0:
            continue
        lhs += w * _P(mu, kappa, q, t, _diff_image(b, c, t))
    rhs = C0(kappa, a, q, t) * C0(lam, b, q, t) / (C0(kappa, b, q, t) * C0(lam, c, q, t))
    rhs *= _P(lam, kappa, q, t, _diff_image(a, c, t))
    return Report("weak_qsaal", lhs, rhs, {"lambda": lam, "kappa": kappa}, _spec(p, a=a, b=b, c=c))


def second_sears_consequence(lam, kappa, p: Params) -> Report:
    lam, kappa = Partition(lam), Partition(kappa)
    q, t = p.q, p.t
    ah, b, c, d, e = _free(p, "ah", "b", "c", "d", "e")
    a = ah * ah
    lhs = _sears_side(lam, kappa, a, b, c, d, e, q, t)
    rhs = _sears_side(lam, kappa, a, d, e, b, c, q, t)
    return Report("sears_exchange_pairs", lhs, rhs, {"lambda": lam, "kappa": kappa}, _spec(p))


def bc_difference(lam, mu, p: Params) -> list:
    lam, mu = Partition(lam), Partition(mu)
    q, t, s = p.q, p.t, p.s
    u = p["u"]
    sq = s * p.qh
    shapes = {"lambda": lam, "mu": mu}
    spec = _spec(p, s=s)
    lhs1 = psi_d_diag(mu, u, s, q, t) * bracket(lam, mu, s, q, t)
    rhs1 = ZERO
    for kappa in subpartitions(lam):
        if is_vertical_strip(kappa, lam) and contains(mu, kappa):
            rhs1 += psi_d(lam, kappa, u, s, q, t) * bracket(kappa, mu, sq, q, t)
    lhs2 = psi_d_diag(lam, u, s, q, t) * brace(lam, mu, sq, q, t)
    rhs2 = ZERO
    for kappa in between(mu, lam):
        if is_vertical_strip(mu, kappa):
            rhs2 += psi_d(kappa, mu, u, s, q, t) * brace(lam, kappa, s, q, t)
    diag = Report("psi_d_diagonal_consistency", psi_d_diag(lam, u, s, q, t),
                  psi_d_formula(lam, lam, u, s, q, t), shapes, spec)
    return [Report("bc_difference_bracket", lhs1, rhs1, shapes, spec),
            Report("bc_difference_brace", lhs2, rhs2, shapes, spec), diag]


def bc_integral(lam, mu, p: Params) -> list:
    lam, mu = Partition(lam), Partition(mu)
    q, t, s = p.q, p.t, p.s
    u = p["u"]
    st = s * p.th
    shapes = {"lambda": lam, "mu": mu}
    spec = _spec(p, s=s)
    lhs1 = psi_i_diag(mu, u, s, q, t) * bracket(lam, mu, st, q, t)
    rhs1 = ZERO
    for kappa in subpartitions(lam):
        if is_horizontal_strip(kappa, lam) and contains(mu, kappa):
            rhs1 += psi_i(lam, kappa, u, s, q, t) * bracket(kappa, mu, s, q, t)
    lhs2 = psi_i_diag(lam, u, s, q, t) * brace(lam, mu, s, q, t)
    rhs2 = ZERO
    for nu in between(mu, lam):
        if is_horizontal_strip(mu, nu):
            rhs2 += psi_i(nu, mu, u, s, q, t) * brace(lam, nu, st, q, t)
    return [Report("bc_integral_bracket", lhs1, rhs1, shapes, spec),
            Report("bc_integral_brace", lhs2, rhs2, shapes, spec)]


def jackson(m: int, n: int, p: Params) -> Report:
    q, t = p.q, p.t
    ah, b, c, d = _free(p, "ah", "b", "c", "d")
    a = ah * ah
    e = a * a * power(q, m + 1) / (power(t, n - 1) * b * c * d)
    lhs = w8_7(a, b, c, d, e, power(q, -m), q, t, q, m, n)
    rhs = jackson_rhs(a, b, c, d, e, q, t, m, n)
    return Report("jackson", lhs, rhs, {"m": m, "n": n}, _spec(p, e=e))


def watson_rectangle(m: int, n: int, p: Params) -> Report:
    """The lam = m^n, kappa = 0 case written as 8W7 = prefactor * 4Phi3."""
    q, t = p.q, p.t
    ah, b, c, d, e = _free(p, "ah", "b", "c", "d", "e")
    a = ah * ah
    aq = a * q
    z = a * a * power(q, m + 2) / (power(t, n - 1) * b * c * d * e)
    lhs = w8_7(a, b, c, d, e, power(q, -m), q, t, z, m, n)
    R = rect(m, n)
    pref = C0(R, [aq, aq / (d * e)], q, t) / C0(R, [aq / d, aq / e], q, t)
    rhs = pref * phi4_3([power(q, -m), d, e, aq / (b * c)],
                        [aq / b, aq / c, power(t, n - 1) * power(q, -m) * d * e / a], q, t, q, m, n)
    return Report("watson_rectangle", lhs, rhs, {"m": m, "n": n}, _spec(p))


# ---------------------------------------------------------------------------
# special values and shapes of the binomial coefficients

def binomial_special_values(lam, p: Params, m: int | None = None, n: int | None = None) -> list:
    lam = Partition(lam)
    q, t, s = p.q, p.t, p.s
    m = (lam[0] if lam else 0) if m is None else m
    n = len(lam) if n is None else n
    s2 = s * s
    shapes = {"lambda": lam, "m": m, "n": n}
    spec = _spec(p, s=s)
    out = [Report("bracket_at_zero", bracket(lam, EMPTY, s, q, t), ONE, shapes, spec)]
    val = _sign(lam.size) * power(t, lam.n()) * power(q, -_nc(lam)) * Cp(lam, s2, q, t) / C0(lam, q * s2, q, t)
    out.append(Report("brace_at_zero", brace(lam, EMPTY, s, q, t), val, shapes, spec))
    R = rect(m, n)
    if n > 0:
        val = power(-q, lam.size) * power(t, lam.n()) * power(q, _nc(lam))
        val *= C0(lam, [power(t, n), power(q, -m), power(q, m) * s2 / power(t, n - 1)], q, t)
        val /= Cm(lam, [q, t], q, t) * Cp(lam, s2, q, t)
        out.append(Report("bracket_rectangle", bracket(R, lam, s, q, t), val, shapes, spec))
        num = _sign(m * n) * power(t, R.n()) * C0(R, power(q, m) * s2 / power(t, n - 1), q, t)
        num *= power(power(q, m) / power(t, n - 1), lam.size) * power(t, 2 * lam.n())
        num *= C0(lam, [power(t, n), power(q, -m)], q, t) * C0(double(square(lam)), s2 * q, q, t)
        den = power(q, rect(n, m).n()) * C0(R, q * s2, q, t)
        den *= Cm(lam, [q, t], q, t) * Cp(lam, [s2, s2 * q / t], q, t)
        den *= C0(lam, [power(q, m + 1) * s2, s2 * q / power(t, n)], q, t)
        out.append(Report("brace_rectangle", brace(R, lam, s, q, t), num / den, shapes, spec))
    return out


def binomial_one_row(mm: int, l: int, p: Params) -> list:
    q, t, s = p.q, p.t, p.s
    s2 = s * s
    from .scalar import qpoch, multi_qpoch
    shapes = {"m": mm, "l": l}
    spec = _spec(p, s=s)
    lam, mu = Partition((mm,)), Partition((l,))
    val = _sign(l) * power(q, l * (l + 1) // 2) * multi_qpoch([power(q, -mm), power(q, mm) * s2], q, l)
    val /= multi_qpoch([power(q, l) * s2, q], q, l)
    out = [Report("bracket_one_row", bracket(lam, mu, s, q, t), val, shapes, spec)]
    val = _sign(mm) * power(q, l * mm - mm * (mm - 1) // 2)
    val *= multi_qpoch([power(q, -mm), s2], q, l) * (1 - power(q, 2 * l) * s2) * qpoch(power(q, mm + 1) * s2, q, mm)
    val /= multi_qpoch([power(q, mm + 1) * s2, q], q, l) * (1 - power(q, 2 * mm) * s2) * qpoch(s2, q, mm)
    out.append(Report("brace_one_row", brace(lam, mu, s, q, t), val, shapes, spec))
    return out


def _shift_factor(lam, mu, m, n, s, q, t):
    s2 = s * s
    A = [power(t, 1 - n) * power(q, 2 * m) * s2, power(t, n - 1) * power(q, m + 1)]
    B = [power(t, 1 - n) * power(q, m) * s2, power(t, n - 1) * q]
    out = power(q, -m * (lam.size - mu.size))
    return out * C0(lam, A, q, t) * C0(mu, B, q, t) / (C0(mu, A, q, t) * C0(lam, B, q, t))


def binomial_shift(lam, mu, m: int, n: int, p: Params) -> list:
    lam, mu = Partition(lam), Partition(mu)
    q, t, s = p.q, p.t, p.s
    big_l, big_m = rect_plus(lam, m, n), rect_plus(mu, m, n)
    f = _shift_factor(lam, mu, m, n, s, q, t)
    sm = s * power(q, m)
    shapes = {"lambda": lam, "mu": mu, "m": m, "n": n}
    spec = _spec(p, s=s)
    return [Report("bracket_shift", bracket(big_l, big_m, s, q, t), f * bracket(lam, mu, sm, q, t), shapes, spec),
            Report("brace_shift", brace(big_l, big_m, s, q, t), f * brace(lam, mu, sm, q, t), shapes, spec)]


def binomial_complement(lam, mu, m: int, n: int, p: Params) -> list:
    lam, mu = Partition(lam), Partition(mu)
    q, t, s = p.q, p.t, p.s
    sc, sp = power(q, -m) / s, power(t, 1 - n) * s
    lc, mc = rect_minus(lam, m, n), rect_minus(mu, m, n)
    num = norm_pp(lam, n, q, t) * diagonal_value(n, mu, sc, q, t) * diagonal_value(n, mc, sp, q, t)
    den = norm_pp(mu, n, q, t) * diagonal_value(n, lam, sc, q, t) * diagonal_value(n, lc, sp, q, t)
    f = num / den
    qm = power(q, m)
    shapes = {"lambda": lam, "mu": mu, "m": m, "n": n}
    spec = _spec(p, s=s)
    return [Report("bracket_complement", bracket(mc, lc, s, q, t),
                   f * brace(lam, mu, power(t, n - 1) / (qm * s), q, t), shapes, spec),
            Report("brace_complement", brace(mc, lc, s, q, t),
                   # the printed statement has t^n here; t^{n-1} is what holds
                   f * bracket(lam, mu, power(t, n - 1) / (qm * s), q, t), shapes, spec)]


def binomial_independence(lam, mu, p: Params) -> list:
    """Bracket does not depend on the internal n, brace not on the box."""
    lam, mu = Partition(lam), Partition(mu)
    q, t, s = p.q, p.t, p.s
    m0 = max(lam[0] if lam else 0, mu[0] if mu else 0)
    n0 = max(len(lam), len(mu))
    shapes = {"lambda": lam, "mu": mu}
    spec = _spec(p, s=s)
    return [Report("bracket_n_independent", bracket(lam, mu, s, q, t), bracket(lam, mu, s, q, t, n=n0 + 1), shapes, spec),
            Report("brace_m_independent", brace(lam, mu, s, q, t), brace(lam, mu, s, q, t, m=m0 + 1), shapes, spec),
            Report("brace_n_independent", brace(lam, mu, s, q, t), brace(lam, mu, s, q, t, n=n0 + 1), shapes, spec)]


SUITE = {
    "qsaal": qsaal, "qsaal_reversed": qsaal_reversed, "duality": duality, "inversion": inversion,
    "w6_5": w6_5, "watson": watson, "sears": sears, "weak_qsaal": weak_qsaal,
    "second_sears_consequence": second_sears_consequence, "bc_difference": bc_difference,
    "bc_integral": bc_integral,
}
