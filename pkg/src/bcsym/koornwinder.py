"""Koornwinder polynomials through the binomial formula.

Parameters travel as ``KParams``: q and t through their half-parameters and
the four t_i together with an exact square root t0hat of t0 t1 t2 t3 / q.
Keeping t0hat explicit lets shifted parameter sets (t1 -> q t1, the
q-Racah constraint, the hat involution) stay rational.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, replace
from itertools import permutations
from typing import Sequence

from .bcpoly import BCPoly, apply_D, eigenvalue, evaluate, partition_point
from .cnorm import C0, Cm, Cp, norm_pp, principal_P
from .hyperg import phi4_3, w8_7
from .interpolation import (bracket, brace, diagonal_value, interp_poly, psi_d, psi_i)
from .partitions import (EMPTY, Partition, between, conjugate, dominance_sort_key,
                         double, in_box, is_horizontal_strip, is_vertical_strip,
                         rect, rect_minus, square, subpartitions)
from .report import Report
from .scalar import ONE, ZERO, DegenerateParameters, Params, S, Scalar, fmt, power, prod, qpoch


@dataclass(frozen=True)
class KParams:
    qh: Scalar
    th: Scalar
    ts: tuple
    t0hat: Scalar

    def __post_init__(self):
        object.__setattr__(self, "qh", S(self.qh))
        object.__setattr__(self, "th", S(self.th))
        object.__setattr__(self, "ts", tuple(S(x) for x in self.ts))
        object.__setattr__(self, "t0hat", S(self.t0hat))
        if len(self.ts) != 4:
            raise ValueError("four parameters t0..t3 are required")
        if self.t0hat ** 2 * self.q != prod(self.ts):
            raise ValueError("t0hat^2 must equal t0 t1 t2 t3 / q")

    @property
    def q(self):
        return self.qh * self.qh

    @property
    def t(self):
        return self.th * self.th

    @classmethod
    def from_params(cls, p: Params) -> "KParams":
        return cls(p.qh, p.th, p.ts, p.t0hat_half)

    @classmethod
    def from_halves(cls, qh, th, r: Sequence) -> "KParams":
        r = [S(x) for x in r]
        return cls(qh, th, tuple(x * x for x in r), prod(r) / S(qh))

    @classmethod
    def qracah(cls, qh, th, t0, r2, r3, n: int, m: int) -> "KParams":
        """Impose t0 t1 = t^{1-n} q^{-m} by solving for t1."""
        qh, th, t0, r2, r3 = map(S, (qh, th, t0, r2, r3))
        t1 = power(th, 2 - 2 * n) * power(qh, -2 * m) / t0
        hat = power(th, 1 - n) * power(qh, -m - 1) * r2 * r3
        return cls(qh, th, (t0, t1, r2 * r2, r3 * r3), hat)

    def key(self):
        return (self.qh, self.th, self.ts, self.t0hat)

    def as_strings(self) -> dict:
        out = {"q_half": fmt(self.qh), "t_half": fmt(self.th), "t0hat": fmt(self.t0hat)}
        for i, x in enumerate(self.ts):
            out[f"t{i}"] = fmt(x)
        return out

    # parameter transforms; each keeps t0hat exact
    def scaled(self, factors: Sequence, hat_factor) -> "KParams":
        return KParams(self.qh, self.th, tuple(x * S(f) for x, f in zip(self.ts, factors)),
                       self.t0hat * S(hat_factor))

    def permuted(self, order: Sequence[int]) -> "KParams":
        return replace(self, ts=tuple(self.ts[i] for i in order))

    def inverted(self) -> "KParams":
        return KParams(1 / self.qh, 1 / self.th, tuple(1 / x for x in self.ts), 1 / self.t0hat)

    def negated(self) -> "KParams":
        return replace(self, ts=tuple(-x for x in self.ts))

    def hatted(self) -> "KParams":
        t0 = self.ts[0]
        h = self.t0hat
        return KParams(self.qh, self.th, (h,) + tuple(t0 * x / h for x in self.ts[1:]), t0)

    def swapped(self) -> "KParams":
        """(q, t) -> (t, q); the square root of t0 t1 t2 t3 / t is t0hat qh / th."""
        return KParams(self.th, self.qh, self.ts, self.t0hat * self.qh / self.th)


def k0(lam, T, kp: KParams, ts: Sequence | None = None) -> Scalar:
    """k^0_lam(q, t, T; t0 : t1, t2, t3)."""
    lam = Partition(lam)
    q, t, T = kp.q, kp.t, S(T)
    t0, t1, t2, t3 = kp.ts if ts is None else [S(x) for x in ts]
    hat2 = t0 * t1 * t2 * t3 / q
    out = power(t0 * T / t, -lam.size) * power(t, lam.n())
    num = C0(lam, [T, T * t0 * t1 / t, T * t0 * t2 / t, T * t0 * t3 / t], q, t)
    if num == 0:
        return ZERO
    den = Cm(lam, t, q, t) * Cp(lam, T * T * hat2 / (t * t), q, t)
    if den == 0:
        raise ZeroDivisionError(f"k0 denominator vanishes for {lam}")
    return out * num / den


_cache: dict = {}
_lock = threading.Lock()


def koorn_poly(n: int, lam, kp: KParams) -> BCPoly:
    """K^(n)_lam(; q, t; t0, t1, t2, t3) in the m-basis, by the binomial formula."""
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    key = (n, lam, kp.key())
    hit = _cache.get(key)
    if hit is not None:
        return hit
    q, t = kp.q, kp.t
    tn = power(t, n)
    s = power(t, n - 1) * kp.t0hat
    kl = k0(lam, tn, kp)
    if kl == 0:
        raise DegenerateParameters(f"k0 vanishes for {lam}")
    acc = {}
    for mu in subpartitions(lam):
        c = bracket(lam, mu, s, q, t, n=n)
        if c == 0:
            continue
        c = c * kl / k0(mu, tn, kp)
        for k, v in interp_poly(n, mu, kp.ts[0], q, t).mview.items():
            acc[k] = acc.get(k, ZERO) + c * v
    poly = BCPoly(n, mview=acc)
    if poly.mview.get(lam) != ONE:
        raise AssertionError(f"binomial formula did not produce a monic polynomial for {lam}")
    with _lock:
        return _cache.setdefault(key, poly)


def expand_in_K(f: BCPoly, kp: KParams) -> dict:
    """Coefficients of f in the Koornwinder basis (triangular peeling)."""
    n = f.n
    rest = dict(f.mview)
    out = {}
    while rest:
        top = max(rest, key=dominance_sort_key)
        c = rest[top]
        out[top] = c
        for k, v in koorn_poly(n, top, kp).mview.items():
            nv = rest.get(k, ZERO) - c * v
            if nv == 0:
                rest.pop(k, None)
            else:
                rest[k] = nv
    return out


def virtual_integral(f: BCPoly, kp: KParams) -> Scalar:
    """I_K(f): the coefficient of K_0 = 1 in f."""
    return expand_in_K(f, kp).get(EMPTY, ZERO)


def norm_value(lam, T, kp: KParams) -> Scalar:
    """N_lam(; q, t, T; t0, t1, t2, t3)."""
    lam = Partition(lam)
    q, t, T = kp.q, kp.t, S(T)
    ts = kp.ts
    P4 = prod(ts)
    num = Cm(lam, q, q, t) * Cp(lam, T * T * P4 / power(t, 3), q, t)
    num *= C0(lam, [T, T * P4 / (t * t)], q, t)
    num *= C0(lam, [T * ts[i] * ts[j] / t for i in range(4) for j in range(i + 1, 4)], q, t)
    den = Cm(lam, t, q, t) * Cp(lam, T * T * P4 / (q * t * t), q, t)
    den *= C0(double(square(lam)), T * T * P4 / (t * t), q, t)
    return num / den


# ---------------------------------------------------------------------------
# q-Racah

def qracah_delta(mu, n: int, m: int, kp: KParams) -> Scalar:
    mu = Partition(mu)
    q, t = kp.q, kp.t
    t0, t1, t2, t3 = kp.ts
    tn1 = power(t, n - 1)
    comp = rect_minus(mu, m, n)
    out = power(q, -2 * conjugate(mu).n()) * power(t, 2 * mu.n())
    out *= power(power(t, 2 * n - 2) * q * t0 * t0, -mu.size)
    out *= C0(mu, [tn1 * t0 * t2, tn1 * t0 * t3], q, t) * C0(comp, [tn1 * t1 * t2, tn1 * t1 * t3], q, t)
    out *= norm_pp(mu, n, q, t)
    return out / (diagonal_value(n, mu, t0, q, t) * diagonal_value(n, comp, t1, q, t))


def qracah_expect(f: BCPoly, n: int, m: int, kp: KParams) -> Scalar:
    q, t, t0 = kp.q, kp.t, kp.ts[0]
    total = ZERO
    for mu in in_box(m, n):
        total += evaluate(f, partition_point(mu, n, t0, q, t)) * qracah_delta(mu, n, m, kp)
    return total


def qracah_normalization(n: int, m: int, kp: KParams) -> Scalar:
    """<1>_qR from the rectangle case (kappa = 0, lambda = m^n) of the 6W5 sum.

    The q-Racah weight is Delta(0) / {m^n, 0} times the 6W5 summand with
    a = t^{2n-2} t0^2, b = t^{n-1} t0 t2, c = t^{n-1} t0 t3.
    """
    q, t = kp.q, kp.t
    t0, t1, t2, t3 = kp.ts
    R = rect(m, n)
    a = power(t, 2 * n - 2) * t0 * t0
    b, c = power(t, n - 1) * t0 * t2, power(t, n - 1) * t0 * t3
    six = (-1) ** R.size * power(q, -conjugate(R).n()) * Cm(R, t, q, t) * Cp(R, a, q, t)
    six /= C0(R, [a * q / b, a * q / c], q, t)
    six *= principal_P(R, q * a / (b * c), q, t)
    return qracah_delta(EMPTY, n, m, kp) / brace(R, EMPTY, power(t, n - 1) * t0, q, t, m=m, n=n) * six


# ---------------------------------------------------------------------------
# verify suite

def _shapes(**kw):
    return kw


def binomial_construction(n: int, lam, kp: KParams) -> list:
    """Monic with m_lam and supported on mu dominated by lam."""
    lam = Partition(lam)
    from .partitions import dominance_leq
    f = koorn_poly(n, lam, kp)
    outside = sorted(str(mu) for mu in f.mview if not dominance_leq(mu, lam))
    return [Report("koorn_monic", f.mview.get(lam), ONE, {"n": n, "lambda": lam}, kp.as_strings()),
            Report("koorn_triangular", outside, [], {"n": n, "lambda": lam}, kp.as_strings())]


def evaluation_symmetry(n: int, lam, mu, kp: KParams) -> Report:
    lam, mu = Partition(lam), Partition(mu)
    q, t = kp.q, kp.t
    tn = power(t, n)
    hk = kp.hatted()
    lhs = evaluate(koorn_poly(n, lam, kp), partition_point(mu, n, kp.ts[0], q, t)) / k0(lam, tn, kp)
    rhs = evaluate(koorn_poly(n, mu, hk), partition_point(lam, n, hk.ts[0], q, t)) / k0(mu, tn, hk)
    return Report("evaluation_symmetry", lhs, rhs, {"n": n, "lambda": lam, "mu": mu}, kp.as_strings())


def hat_invariance(n: int, nu, kp: KParams) -> Report:
    nu = Partition(nu)
    q, t = kp.q, kp.t
    tn = power(t, n)
    hk = kp.hatted()
    lhs = k0(nu, tn, kp) * diagonal_value(n, nu, kp.t0hat, q, t)
    rhs = k0(nu, tn, hk) * diagonal_value(n, nu, hk.t0hat, q, t)
    return Report("k0_hat_invariance", lhs, rhs, {"n": n, "nu": nu}, kp.as_strings())


def parameter_symmetry(n: int, lam, kp: KParams) -> Report:
    """All 24 orderings of t0..t3 give the same polynomial."""
    lam = Partition(lam)
    base = koorn_poly(n, lam, kp).coefficient_map()
    differing = []
    for order in permutations(range(4)):
        if koorn_poly(n, lam, kp.permuted(order)).coefficient_map() != base:
            differing.append(order)
    return Report("parameter_symmetry", differing, [], {"n": n, "lambda": lam}, kp.as_strings())


def trivial_symmetries(n: int, lam, kp: KParams) -> list:
    lam = Partition(lam)
    f = koorn_poly(n, lam, kp)
    inv = koorn_poly(n, lam, kp.inverted())
    neg = koorn_poly(n, lam, kp.negated()).scale_vars([-1] * n).scale((-1) ** lam.size)
    shapes = {"n": n, "lambda": lam}
    return [Report("koorn_inverse_symmetry", f.coefficient_map(), inv.coefficient_map(), shapes, kp.as_strings()),
            Report("koorn_negation_symmetry", f.coefficient_map(), neg.coefficient_map(), shapes, kp.as_strings())]


def qracah_orthogonality(n: int, m: int, lam, mu, kp: KParams) -> Report:
    """<K_lam(t0,t1,..) K_mu(t1,t0,..)>_qR / <1>_qR = delta N_lam(t^n)."""
    lam, mu = Partition(lam), Partition(mu)
    f = koorn_poly(n, lam, kp) * koorn_poly(n, mu, kp.permuted((1, 0, 2, 3)))
    lhs = qracah_expect(f, n, m, kp) / qracah_expect(BCPoly.constant(n), n, m, kp)
    rhs = norm_value(lam, power(kp.t, n), kp) if lam == mu else ZERO
    return Report("qracah_orthogonality", lhs, rhs, {"n": n, "m": m, "lambda": lam, "mu": mu}, kp.as_strings())


def qracah_norm_check(n: int, m: int, kp: KParams) -> Report:
    lhs = qracah_expect(BCPoly.constant(n), n, m, kp)
    return Report("qracah_normalization", lhs, qracah_normalization(n, m, kp), {"n": n, "m": m}, kp.as_strings())


def qracah_vs_virtual(n: int, m: int, f: BCPoly, kp: KParams, label: str = "") -> Report:
    lhs = virtual_integral(f, kp)
    rhs = qracah_expect(f, n, m, kp) / qracah_expect(BCPoly.constant(n), n, m, kp)
    return Report("qracah_equals_virtual", lhs, rhs, {"n": n, "m": m, "f": label}, kp.as_strings())


def orthogonality(n: int, lam, mu, kp: KParams) -> Report:
    lam, mu = Partition(lam), Partition(mu)
    f = koorn_poly(n, lam, kp) * koorn_poly(n, mu, kp)
    rhs = norm_value(lam, power(kp.t, n), kp) if lam == mu else ZERO
    return Report("virtual_orthogonality", virtual_integral(f, kp), rhs,
                  {"n": n, "lambda": lam, "mu": mu}, kp.as_strings())


def kadell(n: int, lam, kp: KParams) -> Report:
    lam = Partition(lam)
    q, t = kp.q, kp.t
    t0, t1, t2, t3 = kp.ts
    tn1 = power(t, n - 1)
    lhs = virtual_integral(interp_poly(n, lam, t0, q, t), kp)
    rhs = power(-t0 * tn1, -lam.size) * power(t, 2 * lam.n()) * power(q, -conjugate(lam).n())
    rhs *= C0(lam, [power(t, n), tn1 * t0 * t1, tn1 * t0 * t2, tn1 * t0 * t3], q, t)
    rhs /= Cm(lam, t, q, t) * C0(lam, power(t, 2 * n - 2) * t0 * t1 * t2 * t3, q, t)
    return Report("kadell_integral", lhs, rhs, {"n": n, "lambda": lam}, kp.as_strings())


def _lin(terms, n: int) -> BCPoly:
    out = {}
    for c, f in terms:
        if c == 0:
            continue
        for k, v in f.mview.items():
            out[k] = out.get(k, ZERO) + c * v
    return BCPoly(n, mview=out)


def inverse_binomial(n: int, lam, kp: KParams) -> Report:
    lam = Partition(lam)
    q, t = kp.q, kp.t
    tn = power(t, n)
    s = power(t, n - 1) * kp.t0hat
    kl = k0(lam, tn, kp)
    terms = [(brace(lam, mu, s, q, t) * kl / k0(mu, tn, kp), koorn_poly(n, mu, kp))
             for mu in subpartitions(lam) if len(mu) <= n]
    rhs = _lin(terms, n)
    lhs = interp_poly(n, lam, kp.ts[0], q, t)
    return Report("inverse_binomial", lhs.coefficient_map(), rhs.coefficient_map(),
                  {"n": n, "lambda": lam}, kp.as_strings())


def connection(n: int, lam, kp: KParams, kp2: KParams) -> Report:
    """Expansion of K_lam(t0, t1', t2', t3') in K_kappa(t0, t1, t2, t3), both normalized by k0."""
    lam = Partition(lam)
    if kp2.ts[0] != kp.ts[0]:
        raise ValueError("t0 must be shared")
    q, t = kp.q, kp.t
    tn = power(t, n)
    s, s2 = power(t, n - 1) * kp.t0hat, power(t, n - 1) * kp2.t0hat
    f = koorn_poly(n, lam, kp2).scale(1 / k0(lam, tn, kp2))
    coeffs = expand_in_K(f, kp)
    lhs = {k: c * k0(k, tn, kp) for k, c in coeffs.items() if c != 0}
    rhs = {}
    for kappa in subpartitions(lam):
        if len(kappa) > n:
            continue
        total = ZERO
        for mu in between(kappa, lam):
            total += bracket(lam, mu, s2, q, t) * brace(mu, kappa, s, q, t) * k0(mu, tn, kp) / k0(mu, tn, kp2)
        if total != 0:
            rhs[kappa] = total
    return Report("koorn_connection", lhs, rhs, {"n": n, "lambda": lam},
                  {**kp.as_strings(), **{f"new_{k}": v for k, v in kp2.as_strings().items()}})


def diff_action(n: int, lam, kp: KParams) -> Report:
    """D(t0, t1) K(t0 sqrt q, t1 sqrt q, t2, t3) = E_lam(t0 t1) K(t0, t1, t2 sqrt q, t3 sqrt q)."""
    lam = Partition(lam)
    qh, t = kp.qh, kp.t
    t0, t1 = kp.ts[0], kp.ts[1]
    up01 = kp.scaled((qh, qh, 1, 1), qh)
    up23 = kp.scaled((1, 1, qh, qh), qh)
    lhs = apply_D(koorn_poly(n, lam, up01), t0, t1, qh, t)
    rhs = koorn_poly(n, lam, up23).scale(eigenvalue(lam, n, t0 * t1, qh, t))
    return Report("koorn_diff_action", lhs.coefficient_map(), rhs.coefficient_map(),
                  {"n": n, "lambda": lam}, kp.as_strings())


def special_connection(n: int, lam, kp: KParams) -> Report:
    """K_lam / k0 expanded in K_kappa(t0, q t1, t2, t3) / k0 over vertical strips."""
    lam = Partition(lam)
    q, t = kp.q, kp.t
    tn = power(t, n)
    t0, t1 = kp.ts[0], kp.ts[1]
    up = kp.scaled((1, q, 1, 1), kp.qh)
    u = tn * t0 * t1
    s = power(t, n - 1) * kp.t0hat
    lhs = koorn_poly(n, lam, kp).scale(1 / k0(lam, tn, kp))
    terms = [(psi_d(lam, kappa, u, s, q, t) / k0(kappa, tn, up), koorn_poly(n, kappa, up))
             for kappa in subpartitions(lam) if is_vertical_strip(kappa, lam)]
    rhs = _lin(terms, n)
    return Report("koorn_special_connection", lhs.coefficient_map(), rhs.coefficient_map(),
                  {"n": n, "lambda": lam}, kp.as_strings())


def connt(n: int, lam, kp: KParams) -> Report:
    """K_lam(t0, t t1, t2, t3) / k0 expanded over horizontal strips."""
    lam = Partition(lam)
    q, t = kp.q, kp.t
    tn = power(t, n)
    t0, t1 = kp.ts[0], kp.ts[1]
    up = kp.scaled((1, t, 1, 1), kp.th)
    u = tn * t0 * t1
    s = power(t, n - 1) * kp.t0hat
    lhs = koorn_poly(n, lam, up).scale(1 / k0(lam, tn, up))
    terms = [(psi_i(lam, kappa, u, s, q, t) / k0(kappa, tn, kp), koorn_poly(n, kappa, kp))
             for kappa in subpartitions(lam) if is_horizontal_strip(kappa, lam)]
    rhs = _lin(terms, n)
    return Report("koorn_connt", lhs.coefficient_map(), rhs.coefficient_map(),
                  {"n": n, "lambda": lam}, kp.as_strings())


def brancht(n: int, lam, kp: KParams) -> Report:
    """K^(n+1)_lam(x, t0) in terms of K^(n)_kappa(x; t0 t, t1, t2, t3)."""
    lam = Partition(lam)
    q, t = kp.q, kp.t
    t0 = kp.ts[0]
    up = kp.scaled((t, 1, 1, 1), kp.th)
    big = koorn_poly(n + 1, lam, kp).specialize_tail([t0])
    lhs = big.scale(1 / k0(lam, power(t, n + 1), kp))
    s = power(t, n) * kp.t0hat / kp.th
    terms = [(psi_i(lam, kappa, power(t, n + 1), s, q, t) / k0(kappa, power(t, n), up), koorn_poly(n, kappa, up))
             for kappa in subpartitions(lam) if is_horizontal_strip(kappa, lam) and len(kappa) <= n]
    rhs = _lin(terms, n)
    return Report("koorn_brancht", lhs.coefficient_map(), rhs.coefficient_map(),
                  {"n": n, "lambda": lam}, kp.as_strings())


def cauchy_koorn(n: int, m: int, kp: KParams) -> Report:
    lhs = {}
    sw = kp.swapped()
    for lam in in_box(m, n):
        comp = rect_minus(conjugate(lam), n, m)
        sign = -1 if (m * n - lam.size) % 2 else 1
        fx = koorn_poly(n, lam, kp).terms
        fy = koorn_poly(m, comp, sw).terms
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
    return Report("koorn_cauchy", lhs, rhs, {"n": n, "m": m}, kp.as_strings())


def _pochhammer_product(n: int, u, m: int, q) -> BCPoly:
    """prod_i (u x_i, u/x_i; q)_m."""
    f = BCPoly.constant(n)
    for i in range(n):
        for k in range(m):
            a = u * power(q, k)
            f = f * BCPoly(n, {tuple(1 if r == i else 0 for r in range(n)): -a,
                               tuple(-1 if r == i else 0 for r in range(n)): -a,
                               (0,) * n: 1 + a * a})
    return f


def w8_7_integral(n: int, m: int, u, kp: KParams) -> list:
    """The integral of prod (u x, u/x; q)_m in its 4Phi3, 8W7 and primed-parameter forms."""
    u = S(u)
    q, t = kp.q, kp.t
    t0, t1, t2, t3 = kp.ts
    tn1 = power(t, n - 1)
    R = rect(m, n)
    lhs = virtual_integral(_pochhammer_product(n, u, m, q), kp)
    four = C0(R, [tn1 * t0 * u, u / t0], q, t) * phi4_3(
        [power(q, -m), tn1 * t0 * t1, tn1 * t0 * t2, tn1 * t0 * t3],
        [tn1 * tn1 * t0 * t1 * t2 * t3, tn1 * t0 * u, tn1 * power(q, 1 - m) * t0 / u], q, t, q, m, n)
    eight = C0(R, [tn1 * u * t0, tn1 * u * t1, tn1 * u * t2], q, t) / C0(R, tn1 * tn1 * u * t0 * t1 * t2, q, t)
    eight *= w8_7(tn1 * tn1 * u * t0 * t1 * t2 / q, tn1 * t0 * t1, tn1 * t0 * t2, tn1 * t1 * t2, u / t3,
                  power(q, -m), q, t, power(q, m) * u * t3, m, n)
    # primed form with t'_i = t^{(n-1)/2} t_i, u' = t^{(n-1)/2} u and t4 = q^m u
    h = power(kp.th, n - 1)
    tp = [h * x for x in kp.ts]
    up = h * u
    t4p = power(q, m) * up
    pref = ONE
    for i in range(n):
        ti = power(t, -i)
        pref *= prod(qpoch(ti * x, q, m) for x in (up * tp[0], up * tp[1], up * tp[2]))
        pref /= qpoch(ti * up * tp[0] * tp[1] * tp[2], q, m)
    primed = pref * w8_7(up * tp[0] * tp[1] * tp[2] / q, tp[0] * tp[1], tp[0] * tp[2], tp[1] * tp[2],
                         up / tp[3], up / t4p, q, t, power(t, 1 - n) * tp[3] * t4p, m, n)
    shapes = {"n": n, "m": m}
    spec = {**kp.as_strings(), "u": fmt(u)}
    return [Report("w8_7_integral_4phi3", lhs, four, shapes, spec),
            Report("w8_7_integral_8w7", lhs, eight, shapes, spec),
            Report("w8_7_integral_primed", lhs, primed, shapes, spec)]


def _ratio_series(n: int, a, b, q, order: int) -> list:
    """prod_i (a v x_i, a v/x_i; q)_inf / (b v x_i, b v/x_i; q)_inf as a v-series."""
    coeffs = []
    c = ONE
    for k in range(order + 1):
        coeffs.append(c * power(b, k))
        c = c * (1 - (a / b) * power(q, k)) / (1 - power(q, k + 1))
    series = [BCPoly.constant(n)] + [BCPoly(n)] * order
    for i in range(n):
        for sign in (1, -1):
            factor = [BCPoly(n, {tuple(sign * k if r == i else 0 for r in range(n)): c})
                      for k, c in enumerate(coeffs)]
            nxt = [BCPoly(n)] * (order + 1)
            for x, fx in enumerate(series):
                for y in range(order + 1 - x):
                    if coeffs[y] == 0 or fx.is_zero():
                        continue
                    nxt[x + y] = nxt[x + y] + fx * factor[y]
            series = nxt
    return series


def mn_symmetry_series(n: int, m: int, kp: KParams, order: int = 3) -> Report:
    """I^(n)(t^{m/2} shifted ratio) = I^(m)(t^{n/2} shifted ratio), coefficientwise in v."""
    q, th = kp.q, kp.th

    def side(a: int, b: int):
        # a variables, parameters scaled by t^{b/2}
        if a == 0:
            return [ONE] + [ZERO] * order
        k = kp.scaled([power(th, b)] * 4, power(th, 2 * b))
        series = _ratio_series(a, power(th, b), power(th, -b), q, order)
        return [virtual_integral(f, k) if not f.is_zero() else ZERO for f in series]

    return Report("mn_symmetry_series", side(n, m), side(m, n), {"n": n, "m": m, "order": order}, kp.as_strings())
