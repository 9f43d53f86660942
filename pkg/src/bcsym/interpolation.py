"""Interpolation polynomials, binomial coefficients and their identities.

The polynomial for (n, lam, s) is the unique BC_n-symmetric m_lam + lower
terms vanishing at every partition point mu < lam.  It is built by a dense
exact solve over the m-basis; extra vanishing and the diagonal value are
theorems and are checked separately, never assumed.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable, Sequence

from .bcpoly import (BCPoly, apply_D, apply_D_special, eigenvalue, eval_m, evaluate,
                     partition_point, _power_sums_table)
from .cnorm import C0, Cm, Cp, b_lambda, norm_pp
from .linalg import solve
from .partitions import (Partition, ShapeError, conjugate, contains, dominated_by,
                         is_horizontal_strip, is_vertical_strip, partitions_upto,
                         rect_minus, rect_plus, subpartitions)
from .report import Report
from .scalar import ONE, ZERO, Params, S, Scalar, fmt, power, prod
from .symfunc import macdonald_P, one_var_weights, plethysm_scalar, skew_P


@dataclass(frozen=True)
class InterpKey:
    n: int
    lam: Partition
    s: Scalar
    q: Scalar
    t: Scalar

    def __post_init__(self):
        object.__setattr__(self, "lam", Partition(self.lam))
        for name in ("s", "q", "t"):
            object.__setattr__(self, name, S(getattr(self, name)))
        if len(self.lam) > self.n:
            raise ShapeError(f"{self.lam} has more than {self.n} parts")


_cache: dict = {}
_lock = threading.Lock()


def interp_poly(n: int, lam, s, q, t) -> BCPoly:
    """P-bar*^(n)_lam(x; q, t, s) in the m-basis."""
    key = InterpKey(n, lam, s, q, t)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    poly = _build(key)
    with _lock:
        return _cache.setdefault(key, poly)


def clear_cache():
    with _lock:
        _cache.clear()


def _build(key: InterpKey) -> BCPoly:
    n, lam = key.n, key.lam
    if not lam:
        return BCPoly.constant(n)
    basis = [mu for mu in dominated_by(lam, n) if mu != lam]
    if not basis:
        return BCPoly(n, mview={lam: ONE})
    rows, rhs = [], []
    top = lam[0]
    for nu in basis:
        point = partition_point(nu, n, key.s, key.q, key.t)
        table = _power_sums_table(point, top)
        rows.append([eval_m(mu, point, table) for mu in basis])
        rhs.append(-eval_m(lam, point, table))
    coeffs = solve(rows, rhs)
    mview = {lam: ONE}
    for mu, c in zip(basis, coeffs):
        if c != 0:
            mview[mu] = c
    return BCPoly(n, mview=mview)


def evaluate_at(n: int, lam, at, s, q, t) -> Scalar:
    """P-bar*^(n)_lam evaluated at the partition point of ``at``."""
    f = interp_poly(n, lam, s, q, t)
    point = partition_point(at, n, s, q, t)
    return evaluate(f, point)


def diagonal_value(n: int, lam, s, q, t) -> Scalar:
    """Closed form of P-bar*^(n)_lam(lam; q, t, s)."""
    lam = Partition(lam)
    s, q, t = S(s), S(q), S(t)
    out = power(q * power(t, n - 1) * s, -lam.size) * power(t, lam.n()) * power(q, -2 * conjugate(lam).n())
    return out * Cm(lam, q, q, t) * Cp(lam, power(t, 2 * n - 2) * s * s, q, t)


# ---------------------------------------------------------------------------
# binomial coefficients

def _box_for(lam, mu):
    m = max(lam[0] if lam else 0, mu[0] if mu else 0)
    n = max(len(lam), len(mu))
    return m, n


def bracket(lam, mu, s, q, t, n: int | None = None) -> Scalar:
    lam, mu = Partition(lam), Partition(mu)
    s, q, t = S(s), S(q), S(t)
    if n is None:
        n = max(len(lam), len(mu))
    if n == 0:
        return ONE
    sp = power(t, 1 - n) * s
    num = evaluate_at(n, mu, lam, sp, q, t)
    if num == 0:
        return ZERO
    return num / diagonal_value(n, mu, sp, q, t)


def brace(lam, mu, s, q, t, m: int | None = None, n: int | None = None) -> Scalar:
    lam, mu = Partition(lam), Partition(mu)
    s, q, t = S(s), S(q), S(t)
    m0, n0 = _box_for(lam, mu)
    m = m0 if m is None else m
    n = n0 if n is None else n
    if m < m0 or n < n0:
        raise ShapeError("box too small")
    if n == 0:
        return ONE
    sp = power(t, 1 - n) * s
    sc = power(q, -m) / s
    lc, mc = rect_minus(lam, m, n), rect_minus(mu, m, n)
    off = evaluate_at(n, lc, mc, sc, q, t)
    if off == 0:
        return ZERO
    num = norm_pp(mu, n, q, t) * diagonal_value(n, lam, sp, q, t) * off
    den = norm_pp(lam, n, q, t) * diagonal_value(n, mu, sp, q, t) * diagonal_value(n, mc, sc, q, t)
    return num / den


def binom(kind: str, lam, mu, s, q, t, **box) -> Scalar:
    if kind == "bracket":
        return bracket(lam, mu, s, q, t, **box)
    if kind == "brace":
        return brace(lam, mu, s, q, t, **box)
    raise ValueError(f"unknown binomial kind {kind!r}")


# ---------------------------------------------------------------------------
# expansion coefficients

def skew_plethysm(lam, mu, q, t, image: Callable[[int], Scalar], kind: str = "P") -> Scalar:
    """P_{lam/mu}([c_k]) (or Q_{lam/mu}), zero unless mu is inside lam."""
    lam, mu = Partition(lam), Partition(mu)
    if not contains(mu, lam):
        return ZERO
    val = plethysm_scalar(skew_P(lam, mu, q, t), image)
    if kind == "Q" and val != 0:
        val = val * b_lambda(lam, q, t) / b_lambda(mu, q, t)
    return val


def _diff_image(a, b, t):
    return lambda k: (power(a, k) - power(b, k)) / (1 - power(t, k))


def psi_B(lam, mu, v, vp, s, q, t) -> Scalar:
    """Bulk branching coefficient."""
    lam, mu = Partition(lam), Partition(mu)
    v, vp, s, q, t = map(S, (v, vp, s, q, t))
    pl = skew_plethysm(lam, mu, q, t, _diff_image(v, vp, t))
    if pl == 0:
        return ZERO
    iq, it = 1 / q, 1 / t
    num = C0(lam, s / v, q, t) * C0(lam, t / (s * vp), iq, it)
    den = C0(mu, s / v, q, t) * C0(mu, t / (s * vp), iq, it)
    return num / den * pl


def _skew_boxes(lam, mu):
    for i, row in enumerate(lam, start=1):
        start = mu.part(i) if i <= len(mu) else 0
        for j in range(start + 1, row + 1):
            yield i, j


def psi_b(lam, mu, v, s, q, t) -> Scalar:
    """Branching coefficient, zero unless lam/mu is a horizontal strip."""
    lam, mu = Partition(lam), Partition(mu)
    v, s, q, t = map(S, (v, s, q, t))
    w = one_var_weights(lam, mu, q, t)[0]
    if w == 0:
        return ZERO
    for i, j in _skew_boxes(lam, mu):
        w *= v + 1 / v - power(q, j - 1) * power(t, 1 - i) * s - power(q, 1 - j) * power(t, i - 1) / s
    return w


def psi_P_poly(lam, mu, m: int, v, s, n: int, q, t) -> Scalar:
    """Coefficient of P-bar*_lam in prod (v x_i, v/x_i; q)_m P-bar*_mu."""
    lam, mu = Partition(lam), Partition(mu)
    v, s, q, t = map(S, (v, s, q, t))
    big = rect_plus(mu, m, n)
    if not contains(lam, big):
        return ZERO
    c = skew_plethysm(lam, mu, q, t, lambda k: (power(q, m * k) - 1) / (1 - power(t, k)), kind="Q")
    if c == 0:
        return ZERO
    c *= power(v, lam.size - mu.size)
    for i, j in _skew_boxes(big, lam):
        c *= (1 - v * power(q, j - 1) * power(t, n - i) * s) * (1 - v * power(q, m - j) * power(t, i - n) / s)
    return c


def psi_e(lam, mu, v, s, q, t) -> Scalar:
    lam, mu = Partition(lam), Partition(mu)
    v, s, q, t = map(S, (v, s, q, t))
    w = one_var_weights(lam, mu, q, t)[2]
    if w == 0:
        return ZERO
    for i, j in _skew_boxes(lam, mu):
        w /= v + 1 / v + power(q, j - 1) * power(t, -i) * s + power(q, 1 - j) * power(t, i) / s
    return w


def phi_g_series(lam, mu, s, q, t, order: int) -> list:
    """Power series in u of the g-Pieri coefficient, truncated after u^order."""
    lam, mu = Partition(lam), Partition(mu)
    s, q, t = map(S, (s, q, t))
    w = one_var_weights(lam, mu, q, t)[1]
    series = [ZERO] * (order + 1)
    shift = lam.size - mu.size
    if w == 0 or shift > order:
        return series
    series[shift] = w
    for i, j in _skew_boxes(lam, mu):
        for a in (power(q, j - 1) * power(t, 1 - i) * s, power(q, -j) * power(t, i) / s):
            series = _series_mul(series, _geometric(a, order))
    return series


def psi_d(lam, kappa, u, s, q, t) -> Scalar:
    """Coefficient in the difference equation for binomial coefficients."""
    lam, kappa = Partition(lam), Partition(kappa)
    u, s, q, t = map(S, (u, s, q, t))
    if lam == kappa:
        return psi_d_diag(lam, u, s, q, t)
    if not is_vertical_strip(kappa, lam):
        return ZERO
    return psi_d_formula(lam, kappa, u, s, q, t)


def psi_d_formula(lam, kappa, u, s, q, t) -> Scalar:
    """The box-product expression for psi^(d), valid for any vertical strip."""
    lam, kappa = Partition(lam), Partition(kappa)
    u, s, q, t = map(S, (u, s, q, t))
    s2 = s * s
    lc, kc = conjugate(lam), conjugate(kappa)
    L = lambda i: lam.part(i)
    K = lambda i: kappa.part(i)
    Lc = lambda j: lc.part(j)
    Kc = lambda j: kc.part(j)
    qp = lambda a: power(q, a)
    tp = lambda b: power(t, b)
    out = power(-u / t, lam.size - kappa.size) * tp(kappa.n() - lam.n())
    out *= C0(lam, q * t * s2 / u, q, t) * C0(kappa, q * u / t, q, t)
    out /= C0(lam, u / t, q, t) * C0(kappa, q * t * s2 / u, q, t)
    for i, j in lam.boxes():
        if L(i) == K(i):
            out *= (1 - qp(L(i) + j - 1) * tp(2 - Lc(j) - i) * s2) / (1 - qp(K(i) - j) * tp(Kc(j) - i + 1))
        else:
            out *= (1 - qp(L(i) - j + 1) * tp(Lc(j) - i)) / (1 - qp(K(i) + j + 1) * tp(1 - Kc(j) - i) * s2)
    for i, j in kappa.boxes():
        if L(i) == K(i):
            out *= (1 - qp(L(i) - j) * tp(Lc(j) - i + 1)) / (1 - qp(K(i) + j) * tp(2 - Kc(j) - i) * s2)
        else:
            out *= (1 - qp(L(i) + j) * tp(1 - Lc(j) - i) * s2) / (1 - qp(K(i) - j + 1) * tp(Kc(j) - i))
    return out


def psi_d_diag(lam, u, s, q, t) -> Scalar:
    lam = Partition(lam)
    u, s, q, t = map(S, (u, s, q, t))
    out = Cp(lam, s * s, q, t) / Cp(lam, s * s * q, q, t)
    for i in range(1, len(lam) + 1):
        out *= (1 - power(q, lam.part(i)) * power(t, -i) * u) / (1 - power(t, -i) * u)
    return out


def psi_i(lam, kappa, u, s, q, t) -> Scalar:
    """Coefficient in the dual (integral) equation; lam/kappa a horizontal strip."""
    lam, kappa = Partition(lam), Partition(kappa)
    u, s, q, t = map(S, (u, s, q, t))
    if lam == kappa:
        return psi_i_diag(lam, u, s, q, t)
    if not is_horizontal_strip(kappa, lam):
        return ZERO
    s2 = s * s
    lc, kc = conjugate(lam), conjugate(kappa)
    L = lambda i: lam.part(i)
    K = lambda i: kappa.part(i)
    Lc = lambda j: lc.part(j)
    Kc = lambda j: kc.part(j)
    qp = lambda a: power(q, a)
    tp = lambda b: power(t, b)
    out = power(u / t, lam.size - kappa.size) * tp(kappa.n() - lam.n())
    out *= C0(lam, s2 * q * t / u, q, t) * C0(kappa, u / t, q, t)
    out /= C0(lam, u, q, t) * C0(kappa, s2 * q * t / u, q, t)
    for i, j in lam.boxes():
        if Lc(j) == Kc(j):
            out *= (1 - qp(L(i) + j - 1) * tp(3 - Lc(j) - i) * s2) / (1 - qp(K(i) - j + 1) * tp(Kc(j) - i))
        else:
            out *= (1 - qp(L(i) - j) * tp(Lc(j) - i + 1)) / (1 - qp(K(i) + j) * tp(1 - Kc(j) - i) * s2)
    for i, j in kappa.boxes():
        if Lc(j) == Kc(j):
            out *= (1 - qp(L(i) - j + 1) * tp(Lc(j) - i)) / (1 - qp(K(i) + j - 1) * tp(2 - Kc(j) - i) * s2)
        else:
            out *= (1 - qp(L(i) + j) * tp(2 - Lc(j) - i) * s2) / (1 - qp(K(i) - j) * tp(Kc(j) - i + 1))
    return out


def psi_i_diag(lam, u, s, q, t) -> Scalar:
    lam = Partition(lam)
    u, s, q, t = map(S, (u, s, q, t))
    return C0(lam, u / t, q, t) / C0(lam, u, q, t) * Cp(lam, s * s * t, q, t) / Cp(lam, s * s, q, t)


def psi_weights(which: str, *args, **kwargs) -> Scalar:
    table = {"B": psi_B, "b": psi_b, "P": psi_P_poly, "e": psi_e, "d": psi_d, "i": psi_i,
             "g": lambda *a, **k: phi_g_series(*a, **k)}
    try:
        fn = table[which]
    except KeyError:
        raise ValueError(f"unknown coefficient family {which!r}") from None
    return fn(*args, **kwargs)


# ---------------------------------------------------------------------------
# truncated power series in u (coefficients are scalars or BCPolys)

def _series_mul(a: list, b: list) -> list:
    order = len(a) - 1
    out = [None] * (order + 1)
    for i, x in enumerate(a):
        if _is_zero(x):
            continue
        for j in range(order + 1 - i):
            y = b[j]
            if _is_zero(y):
                continue
            term = x * y if not isinstance(x, BCPoly) or isinstance(y, BCPoly) else x.scale(y)
            out[i + j] = term if out[i + j] is None else out[i + j] + term
    return [ZERO if v is None else v for v in out]


def _is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, BCPoly) else x == 0


def _geometric(a, order: int) -> list:
    """1 / (1 - a u)."""
    return [power(a, k) for k in range(order + 1)]


def _qbinomial_series(z, q, t, order: int) -> list:
    """(t u z; q)_inf / (u z; q)_inf = sum_k (t; q)_k / (q; q)_k (z u)^k."""
    out, c = [], ONE
    for k in range(order + 1):
        out.append(c * power(z, k))
        c = c * (1 - t * power(q, k)) / (1 - power(q, k + 1))
    return out


# ---------------------------------------------------------------------------
# verify suite

def _spec(p: Params, **extra) -> dict:
    out = {"q_half": fmt(p.qh), "t_half": fmt(p.th), "s": fmt(p.s)}
    out.update({k: fmt(S(v)) for k, v in extra.items()})
    return out


def _lin(terms: Sequence, n: int) -> BCPoly:
    """Sum of coefficient * polynomial pairs in the m-basis."""
    out = {}
    for c, f in terms:
        if c == 0:
            continue
        for k, v in f.mview.items():
            out[k] = out.get(k, ZERO) + c * v
    return BCPoly(n, mview=out)


def extra_vanishing(n: int, lam, p: Params) -> list:
    """Zero at every mu not containing lam (|mu| <= |lam|+1); nonzero at lam."""
    lam = Partition(lam)
    q, t, s = p.q, p.t, p.s
    f = interp_poly(n, lam, s, q, t)
    zeros = {}
    for mu in partitions_upto(lam.size + 1, None, n):
        if not contains(lam, mu):
            zeros[mu] = evaluate(f, partition_point(mu, n, s, q, t))
    shapes = {"n": n, "lambda": lam}
    diag = evaluate(f, partition_point(lam, n, s, q, t))
    return [
        Report("extra_vanishing", zeros, {mu: ZERO for mu in zeros}, shapes, _spec(p)),
        Report("diagonal_nonzero", diag != 0, True, shapes, _spec(p)),
        Report("diagonal_value", diag, diagonal_value(n, lam, s, q, t), shapes, _spec(p)),
    ]


def symmetry(n: int, lam, p: Params) -> list:
    lam = Partition(lam)
    q, t, s = p.q, p.t, p.s
    f = interp_poly(n, lam, s, q, t)
    inv = interp_poly(n, lam, 1 / s, 1 / q, 1 / t)
    neg = interp_poly(n, lam, -s, q, t).scale_vars([-1] * n).scale((-1) ** lam.size)
    shapes = {"n": n, "lambda": lam}
    return [Report("symmetry_inverse", f.coefficient_map(), inv.coefficient_map(), shapes, _spec(p)),
            Report("symmetry_negate", f.coefficient_map(), neg.coefficient_map(), shapes, _spec(p))]


def dec_mn(n: int, m: int, lam, p: Params) -> list:
    """Variable reduction and the rectangle lemma."""
    lam = Partition(lam)
    q, t, s = p.q, p.t, p.s
    out = []
    shapes = {"n": n, "m": m, "lambda": lam}
    if len(lam) <= n + m:
        big = interp_poly(n + m, lam, s, q, t)
        lhs = big.specialize_tail([s * power(t, k) for k in range(m)])
        if len(lam) <= n:
            rhs = interp_poly(n, lam, s * power(t, m), q, t)
        else:
            rhs = BCPoly(n)
        out.append(Report("variable_reduction", lhs.coefficient_map(), rhs.coefficient_map(), shapes, _spec(p)))
    if len(lam) <= n and n > 0:
        lhs = interp_poly(n, rect_plus(lam, m, n), s, q, t)
        rhs = interp_poly(n, lam, s * power(q, m), q, t)
        for i in range(n):
            for j in range(1, m + 1):
                c = power(q, j - 1) * s + power(q, 1 - j) / s
                factor = BCPoly(n, {tuple(1 if k == i else 0 for k in range(n)): ONE,
                                    tuple(-1 if k == i else 0 for k in range(n)): ONE,
                                    (0,) * n: -c})
                rhs = rhs * factor
        out.append(Report("rectangle_shift", lhs.coefficient_map(), rhs.coefficient_map(), shapes, _spec(p)))
    return out


def leading_term(n: int, lam, p: Params) -> Report:
    lam = Partition(lam)
    q, t = p.q, p.t
    top = interp_poly(n, lam, p.s, q, t).top_component()
    mac = macdonald_P(lam, q, t).to("m")
    expected = {k: v for k, v in mac.coeffs.items() if len(k) <= n and v != 0}
    return Report("leading_term", top, expected, {"n": n, "lambda": lam}, _spec(p))


def okounkov_rescaling(n: int, lam, p: Params) -> Report:
    """(t^{n-1}s)^{-|lam|} P-bar*(x_i t^{n-i} s) vanishes at x = q^mu for mu not containing lam."""
    lam = Partition(lam)
    q, t, s = p.q, p.t, p.s
    f = interp_poly(n, lam, s, q, t)
    g = f.scale_vars([power(t, n - i) * s for i in range(1, n + 1)]).scale(power(power(t, n - 1) * s, -lam.size))
    vals = {}
    for mu in partitions_upto(lam.size, None, n):
        if not contains(lam, mu):
            vals[mu] = evaluate(g, [power(q, mu.part(i)) for i in range(1, n + 1)])
    return Report("okounkov_rescaling", vals, {mu: ZERO for mu in vals}, {"n": n, "lambda": lam}, _spec(p))


def difference_equation(n: int, lam, u, p: Params) -> Report:
    lam = Partition(lam)
    u = S(u)
    q, t, s, qh = p.q, p.t, p.s, p.qh
    lhs = interp_poly(n, lam, s, q, t).scale(eigenvalue(lam, n, u, qh, t))
    rhs = apply_D(interp_poly(n, lam, s * qh, q, t), s, u / s, qh, t)
    return Report("difference_equation", lhs.coefficient_map(), rhs.coefficient_map(),
                  {"n": n, "lambda": lam}, _spec(p, u=u))


def special_difference(n: int, lam, p: Params) -> Report:
    lam = Partition(lam)
    q, t, s, qh = p.q, p.t, p.s, p.qh
    lhs = apply_D_special(interp_poly(n, lam, s, q, t), qh, t)
    if n > 0 and len(lam) == n:
        mu = Partition(x - 1 for x in lam)
        rhs = interp_poly(n, mu, s * qh, q, t).scale(eigenvalue(lam, n, 1, qh, t))
    else:
        rhs = BCPoly(n)
    return Report("special_difference", lhs.coefficient_map(), rhs.coefficient_map(),
                  {"n": n, "lambda": lam}, _spec(p))


def bulk_branch(n: int, m: int, lam, v, p: Params) -> Report:
    lam = Partition(lam)
    v = S(v)
    q, t, s = p.q, p.t, p.s
    lhs = interp_poly(n + m, lam, s, q, t).specialize_tail([power(t, m - 1 - k) * v for k in range(m)])
    sn = s * power(t, n)
    terms = [(psi_B(lam, mu, v, v * power(t, m), sn, q, t), interp_poly(n, mu, s, q, t))
             for mu in subpartitions(lam) if len(mu) <= n]
    rhs = _lin(terms, n)
    return Report("bulk_branch", lhs.coefficient_map(), rhs.coefficient_map(),
                  {"n": n, "m": m, "lambda": lam}, _spec(p, v=v))


def branch(n: int, lam, v, p: Params) -> Report:
    lam = Partition(lam)
    v = S(v)
    q, t, s = p.q, p.t, p.s
    lhs = interp_poly(n + 1, lam, s, q, t).specialize_tail([v])
    sn = s * power(t, n)
    terms = [(psi_b(lam, mu, v, sn, q, t), interp_poly(n, mu, s, q, t))
             for mu in subpartitions(lam) if len(mu) <= n and is_horizontal_strip(mu, lam)]
    rhs = _lin(terms, n)
    return Report("branch", lhs.coefficient_map(), rhs.coefficient_map(),
                  {"n": n, "lambda": lam}, _spec(p, v=v))


def eval_at_geometric(n: int, lam, x, p: Params) -> Report:
    lam = Partition(lam)
    x = S(x)
    q, t, s = p.q, p.t, p.s
    f = interp_poly(n, lam, s, q, t)
    lhs = evaluate(f, [x * power(t, n - i) * s for i in range(1, n + 1)])
    rhs = power(-s * power(t, n - 1), -lam.size) * power(t, 2 * lam.n()) * power(q, -conjugate(lam).n())
    rhs *= C0(lam, [power(t, n), 1 / x, x * s * s * power(t, n - 1)], q, t) / Cm(lam, t, q, t)
    return Report("eval_at_geometric", lhs, rhs, {"n": n, "lambda": lam}, _spec(p, x=x))


def connection_coefficient(n: int, lam, mu, s, s2, q, t) -> Scalar:
    lam, mu = Partition(lam), Partition(mu)
    s, s2, q, t = map(S, (s, s2, q, t))
    pl = skew_plethysm(lam, mu, q, t, _diff_image(s, s2, t))
    if pl == 0:
        return ZERO
    tn, x = power(t, n), power(t, 1 - n) / (s * s2)
    iq, it = 1 / q, 1 / t
    return C0(lam, tn, q, t) * C0(lam, x, iq, it) / (C0(mu, tn, q, t) * C0(mu, x, iq, it)) * pl


def connection(n: int, lam, s2, p: Params) -> Report:
    lam = Partition(lam)
    s2 = S(s2)
    q, t, s = p.q, p.t, p.s
    lhs = interp_poly(n, lam, s2, q, t)
    terms = [(connection_coefficient(n, lam, mu, s, s2, q, t), interp_poly(n, mu, s, q, t))
             for mu in subpartitions(lam) if len(mu) <= n]
    rhs = _lin(terms, n)
    return Report("connection", lhs.coefficient_map(), rhs.coefficient_map(),
                  {"n": n, "lambda": lam}, _spec(p, s_prime=s2))


def _one_var_poly(n: int, i: int, coeffs: dict) -> BCPoly:
    """A polynomial in x_i alone given by {exponent: coefficient}."""
    return BCPoly(n, {tuple(e if k == i else 0 for k in range(n)): c for e, c in coeffs.items()})


def bulk_pieri(n: int, mu, m: int, v, p: Params) -> Report:
    mu = Partition(mu)
    v = S(v)
    q, t, s = p.q, p.t, p.s
    lhs = interp_poly(n, mu, s, q, t)
    for i in range(n):
        for k in range(m):
            a = v * power(q, k)
            # (1 - a x)(1 - a/x) = 1 + a^2 - a x - a/x
            lhs = lhs * _one_var_poly(n, i, {1: -a, 0: 1 + a * a, -1: -a})
    big = rect_plus(mu, m, n)
    terms = [(psi_P_poly(lam, mu, m, v, s, n, q, t), interp_poly(n, lam, s, q, t))
             for lam in subpartitions(big) if contains(mu, lam)]
    rhs = _lin(terms, n)
    return Report("bulk_pieri", lhs.coefficient_map(), rhs.coefficient_map(),
                  {"n": n, "mu": mu, "m": m}, _spec(p, v=v))


def e_pieri(n: int, mu, v, p: Params) -> Report:
    mu = Partition(mu)
    v = S(v)
    q, t, s = p.q, p.t, p.s
    lhs = interp_poly(n, mu, s, q, t)
    for i in range(n):
        lhs = lhs * _one_var_poly(n, i, {1: ONE, 0: v + 1 / v, -1: ONE})
    pref = prod(v + 1 / v + power(q, mu.part(i)) * power(t, n - i) * s
                + power(q, -mu.part(i)) * power(t, i - n) / s for i in range(1, n + 1))
    sn = s * power(t, n)
    cands = [lam for lam in partitions_upto(mu.size + n, None, n)
             if contains(mu, lam) and is_vertical_strip(mu, lam)]
    terms = [(pref * psi_e(lam, mu, v, sn, q, t), interp_poly(n, lam, s, q, t)) for lam in cands]
    rhs = _lin(terms, n)
    return Report("e_pieri", lhs.coefficient_map(), rhs.coefficient_map(),
                  {"n": n, "mu": mu}, _spec(p, v=v))


def g_pieri_truncated(n: int, mu, order: int, p: Params) -> Report:
    """Compare the g-Pieri identity coefficientwise in u up to u^order."""
    mu = Partition(mu)
    q, t, s = p.q, p.t, p.s
    base = interp_poly(n, mu, s, q, t)
    lhs = [base] + [BCPoly(n)] * order
    for i in range(n):
        for sign in (1, -1):
            ser = _qbinomial_series(ONE, q, t, order)
            poly_series = [_one_var_poly(n, i, {sign * k: c}) for k, c in enumerate(ser)]
            lhs = _series_mul(lhs, poly_series)
    pref = [ONE] + [ZERO] * order
    for i in range(1, n + 1):
        z = power(q, mu.part(i)) * power(t, n - i) * s
        pref = _series_mul(pref, _qbinomial_series(z, q, t, order))
        pref = _series_mul(pref, _qbinomial_series(1 / z, q, t, order))
    sn = s * power(t, n)
    total = [BCPoly(n)] * (order + 1)
    for lam in partitions_upto(mu.size + order, None, n):
        if not is_horizontal_strip(mu, lam):
            continue
        coeff = _series_mul(pref, phi_g_series(lam, mu, sn, q, t, order))
        f = interp_poly(n, lam, s, q, t)
        total = [acc + f.scale(c) if c != 0 else acc for acc, c in zip(total, coeff)]
    lhs_maps = [f.coefficient_map() if isinstance(f, BCPoly) else {} for f in lhs]
    rhs_maps = [f.coefficient_map() for f in total]
    return Report("g_pieri_truncated", lhs_maps, rhs_maps,
                  {"n": n, "mu": mu, "order": order}, _spec(p))


def cauchy(n: int, m: int, p: Params) -> Report:
    """Dual Cauchy identity as a polynomial in x_1..x_n, y_1..y_m."""
    q, t, s = p.q, p.t, p.s
    lhs = {}
    for lam in partitions_upto(m * n, m, n):
        comp = rect_minus(conjugate(lam), n, m)
        sign = -1 if (m * n - lam.size) % 2 else 1
        fx = interp_poly(n, lam, s, q, t).terms
        fy = interp_poly(m, comp, s, t, q).terms
        for ex, cx in fx.items():
            for ey, cy in fy.items():
                key = ex + ey
                lhs[key] = lhs.get(key, ZERO) + sign * cx * cy
    lhs = {k: v for k, v in lhs.items() if v != 0}
    rhs = {(0,) * (n + m): ONE}
    for i in range(n):
        for j in range(m):
            unit = lambda k, e: tuple(e if r == k else 0 for r in range(n + m))
            factor = {unit(i, 1): ONE, unit(i, -1): ONE, unit(n + j, 1): -ONE, unit(n + j, -1): -ONE}
            nxt = {}
            for ea, ca in rhs.items():
                for eb, cb in factor.items():
                    e = tuple(a + b for a, b in zip(ea, eb))
                    nxt[e] = nxt.get(e, ZERO) + ca * cb
            rhs = {k: v for k, v in nxt.items() if v != 0}
    return Report("cauchy", lhs, rhs, {"n": n, "m": m}, _spec(p))


def quasi_commutation(n: int, lam, u1, u2, u3, p: Params) -> Report:
    """D(u1, sqrt(q) u2) D(sqrt(q) u1, u3) = D(u1, sqrt(q) u3) D(sqrt(q) u1, u2) on m_lam."""
    lam = Partition(lam)
    u1, u2, u3 = map(S, (u1, u2, u3))
    qh, t = p.qh, p.t
    f = BCPoly(n, mview={lam: ONE})
    lhs = apply_D(apply_D(f, qh * u1, u3, qh, t), u1, qh * u2, qh, t)
    rhs = apply_D(apply_D(f, qh * u1, u2, qh, t), u1, qh * u3, qh, t)
    return Report("quasi_commutation", lhs.coefficient_map(), rhs.coefficient_map(),
                  {"n": n, "lambda": lam}, _spec(p, u1=u1, u2=u2, u3=u3))
