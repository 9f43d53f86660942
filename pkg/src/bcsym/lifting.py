"""Lifted and virtual interpolation and Koornwinder symmetric functions.

The lifted objects live in the ring of symmetric functions with an extra
parameter T standing in for t^n.  Specializing T = t^n and substituting the
alphabet (x_1, 1/x_1, ..., x_n, 1/x_n) recovers the BC_n polynomials.  The
virtual objects are degree-truncated power series and always carry an
explicit cap.  The T = 0 theory is built from its generating function and
the Gaussian functional rather than the binomial formula, which is singular
there.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .bcpoly import BCPoly
from .cnorm import C0, Cm, Cp, b_lambda
from .interpolation import bracket, brace, interp_poly, psi_B
from .koornwinder import KParams, koorn_poly, norm_value
from .linalg import solve
from .partitions import (EMPTY, Partition, conjugate, contains, dominance_sort_key, dominated_by,
                         is_horizontal_strip, is_vertical_strip, partitions_upto, subpartitions)
from .report import Report
from .scalar import ONE, ZERO, DegenerateParameters, S, Scalar, fmt, power
from .symfunc import (SymFunc, _m_to_p, _p_mult, e_k, g_k, gauss_moment, macdonald_P, macdonald_Q,
                      omega_tilde, one_var_weights, pairing, plethysm_scalar, plethysm_sym,
                      shift_rule, skew_P)

CAP = 12


def _spec(**kw) -> dict:
    return {k: fmt(v) for k, v in sorted(kw.items())}


def _pcoeffs(f: SymFunc) -> dict:
    return f.to("p").coeffs


@lru_cache(maxsize=None)
def _m_in_p(nu: Partition) -> dict:
    return _m_to_p({nu: ONE})


# ---------------------------------------------------------------------------
# the <mu> homomorphism

def lift_image(mu, s, T, q, t) -> Callable[[int], Scalar]:
    """k -> p_k(<mu>_{q,t,T;s})."""
    mu = Partition(mu)
    s, T, q, t = map(S, (s, T, q, t))
    sT = s * T
    cache = {}

    def image(k):
        v = cache.get(k)
        if v is None:
            v = power(s, k) * (1 - power(T, k)) / (1 - power(t, k))
            v += power(s, -k) * (1 - power(T, -k)) / (1 - power(t, -k))
            for i, part in enumerate(mu, start=1):
                v += (power(q, k * part) - 1) * power(t, -k * i) * power(sT, k)
                v += (power(q, -k * part) - 1) * power(t, k * i) * power(sT, -k)
            cache[k] = v
        return v

    return image


def lift_hom_eval(f: SymFunc, mu, s, T, q, t) -> Scalar:
    return plethysm_scalar(f, lift_image(mu, s, T, q, t))


def _eval_m(nu: Partition, image) -> Scalar:
    total = ZERO
    for lam, c in _m_in_p(nu).items():
        term = c
        for part in lam:
            term *= image(part)
        total += term
    return total


# ---------------------------------------------------------------------------
# lifted interpolation polynomials

_cache: dict = {}
_lock = threading.Lock()


def lifted_interp(lam, T, s, q, t) -> SymFunc:
    """P~*_lam(; q, t, T; s) in the m-basis, by a dense solve over extended dominance."""
    lam = Partition(lam)
    T, s, q, t = map(S, (T, s, q, t))
    key = ("interp", lam, T, s, q, t)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    basis = [mu for mu in dominated_by(lam) if mu != lam]
    coeffs = {lam: ONE}
    if basis:
        rows, rhs = [], []
        for nu in basis:
            image = lift_image(nu, s, T, q, t)
            rows.append([_eval_m(mu, image) for mu in basis])
            rhs.append(-_eval_m(lam, image))
        for mu, c in zip(basis, solve(rows, rhs)):
            if c != 0:
                coeffs[mu] = c
    f = SymFunc("m", coeffs, max(CAP, lam.size))
    with _lock:
        return _cache.setdefault(key, f)


def lifted_diagonal(lam, T, s, q, t) -> Scalar:
    """(q s T/t)^{-|lam|} t^{n(lam)} q^{-2n(lam')} C^-_lam(q) C^+_lam((sT/t)^2)."""
    lam = Partition(lam)
    T, s, q, t = map(S, (T, s, q, t))
    out = power(q * s * T / t, -lam.size) * power(t, lam.n()) * power(q, -2 * conjugate(lam).n())
    return out * Cm(lam, q, q, t) * Cp(lam, (s * T / t) ** 2, q, t)


def restrict_bc(f: SymFunc, n: int) -> BCPoly:
    """f(x_1, 1/x_1, ..., x_n, 1/x_n) as a BC_n polynomial."""
    if n == 0:
        return BCPoly.constant(0, plethysm_scalar(f, lambda k: ZERO))
    pk = {}
    out = BCPoly(n)
    for lam, c in _pcoeffs(f).items():
        term = BCPoly.constant(n, c)
        for part in lam:
            if part not in pk:
                pk[part] = BCPoly.from_m({Partition((part,)): ONE}, n)
            term = term * pk[part]
        out = out + term
    return out


def expand_peeling(f: SymFunc, element: Callable[[Partition], SymFunc]) -> dict:
    """Coefficients of f in a basis whose elements are m_nu plus lower terms."""
    rest = dict(f.to("m").coeffs)
    out = {}
    while rest:
        top = max(rest, key=dominance_sort_key)
        c = rest[top]
        out[top] = c
        for k, v in element(top).to("m").coeffs.items():
            nv = rest.get(k, ZERO) - c * v
            if nv == 0:
                rest.pop(k, None)
            else:
                rest[k] = nv
    return out


def p_expansion(f: SymFunc, q, t) -> dict:
    return f.to("P", (S(q), S(t))).coeffs


def _lin(terms, cap: int = CAP) -> SymFunc:
    out = {}
    for c, f in terms:
        if c == 0:
            continue
        for k, v in _pcoeffs(f).items():
            out[k] = out.get(k, ZERO) + c * v
    return SymFunc("p", {k: v for k, v in out.items() if v != 0}, cap)


def _m(f: SymFunc) -> dict:
    return f.to("m").coeffs


# ---------------------------------------------------------------------------
# lifted interpolation identities

def restriction(lam, n: int, s, qh, th) -> Report:
    """P~*_lam at T = t^n restricted to n variables is the interpolation polynomial or 0."""
    lam = Partition(lam)
    q, t = S(qh) ** 2, S(th) ** 2
    lhs = restrict_bc(lifted_interp(lam, power(t, n), s, q, t), n)
    rhs = interp_poly(n, lam, s, q, t) if len(lam) <= n else BCPoly(n)
    return Report("lifted_interp_restriction", lhs.coefficient_map(), rhs.coefficient_map(),
                  {"n": n, "lambda": lam}, _spec(q_half=qh, t_half=th, s=s))


def lifted_vanishing(lam, T, s, qh, th) -> list:
    """Vanishing at <mu> for mu not containing lam (|mu| <= |lam|+1) and the diagonal value."""
    lam = Partition(lam)
    q, t = S(qh) ** 2, S(th) ** 2
    f = lifted_interp(lam, T, s, q, t)
    nonzero = [mu for mu in partitions_upto(lam.size + 1)
               if not contains(lam, mu) and lift_hom_eval(f, mu, s, T, q, t) != 0]
    spec = _spec(q_half=qh, t_half=th, s=s, T=T)
    return [Report("lifted_extra_vanishing", nonzero, [], {"lambda": lam}, spec),
            Report("lifted_diagonal", lift_hom_eval(f, lam, s, T, q, t), lifted_diagonal(lam, T, s, q, t),
                   {"lambda": lam}, spec)]


def hom_sT(lam, T, T2, s, qh, th) -> Report:
    """P~*(; T; s T') = P~*([p_k + s^k (T^k - T'^k)/(1-t^k) + ...]; T'; s T)."""
    lam = Partition(lam)
    T, T2, s = S(T), S(T2), S(s)
    q, t = S(qh) ** 2, S(th) ** 2
    lhs = lifted_interp(lam, T, s * T2, q, t)
    const = lambda k: (power(s, k) * (power(T, k) - power(T2, k)) / (1 - power(t, k))
                       + power(s, -k) * (power(T, -k) - power(T2, -k)) / (1 - power(t, -k)))
    rhs = plethysm_sym(lifted_interp(lam, T2, s * T, q, t), shift_rule(const, cap=CAP))
    return Report("lifted_interp_homsT", _m(lhs), _m(rhs), {"lambda": lam},
                  _spec(q_half=qh, t_half=th, s=s, T=T, T_prime=T2))


def omega_on_macdonald(mu, qh, th) -> Report:
    mu = Partition(mu)
    qh, th = S(qh), S(th)
    q, t = qh * qh, th * th
    lhs = omega_tilde(macdonald_P(mu, q, t), qh, th)
    rhs = macdonald_P(conjugate(mu), t, q).scale(power(th / qh, mu.size) / b_lambda(mu, q, t))
    return Report("omega_tilde_macdonald", _m(lhs), _m(rhs), {"mu": mu}, _spec(q_half=qh, t_half=th))


def omega_involution(lam, qh, th) -> Report:
    """omega~_{t,q} after omega~_{q,t} is the identity on p_lam."""
    lam = Partition(lam)
    f = SymFunc("p", {lam: ONE})
    back = omega_tilde(omega_tilde(f, qh, th), th, qh)
    return Report("omega_tilde_involution", back.coeffs, f.coeffs, {"lambda": lam}, _spec(q_half=qh, t_half=th))


def duality(mu, T, s, qh, th) -> Report:
    """omega~ P~*_mu(q,t,T;s) = b_mu^{-1} (t/q)^{|mu|/2} P~*_{mu'}(t,q,1/T;-sqrt(qt)/s)."""
    mu = Partition(mu)
    qh, th, T, s = map(S, (qh, th, T, s))
    q, t = qh * qh, th * th
    lhs = omega_tilde(lifted_interp(mu, T, s, q, t), qh, th)
    rhs = lifted_interp(conjugate(mu), 1 / T, -qh * th / s, t, q)
    rhs = rhs.scale(power(th / qh, mu.size) / b_lambda(mu, q, t))
    return Report("lifted_interp_duality", _m(lhs), _m(rhs), {"mu": mu}, _spec(q_half=qh, t_half=th, s=s, T=T))


def dual_binomial(lam, mu, s, qh, th) -> list:
    """[lam mu]_{q,t,s} = [lam' mu']_{t,q,1/(sqrt(qt) s)} and the same for braces."""
    lam, mu = Partition(lam), Partition(mu)
    qh, th, s = map(S, (qh, th, s))
    q, t = qh * qh, th * th
    sd = 1 / (qh * th * s)
    lc, mc = conjugate(lam), conjugate(mu)
    shapes = {"lambda": lam, "mu": mu}
    spec = _spec(q_half=qh, t_half=th, s=s)
    return [Report("dual_bracket", bracket(lam, mu, s, q, t), bracket(lc, mc, sd, t, q), shapes, spec),
            Report("dual_brace", brace(lam, mu, s, q, t), brace(lc, mc, sd, t, q), shapes, spec)]


def e_difference(n: int, T, s, qh, th) -> Report:
    """P~*_{1^n} = (e_n - e_{n-2})[p_k - s^k (1-(T/t^{n-1})^k)/(1-t^k) - s^{-k} (...)]."""
    T, s = S(T), S(s)
    q, t = S(qh) ** 2, S(th) ** 2
    lhs = lifted_interp((1,) * n, T, s, q, t)
    f = e_k(n) - e_k(n - 2) if n >= 2 else e_k(n)
    r = T / power(t, n - 1)
    const = lambda k: (-power(s, k) * (1 - power(r, k)) / (1 - power(t, k))
                       - power(s, -k) * (1 - power(r, -k)) / (1 - power(t, -k)))
    rhs = plethysm_sym(f, shift_rule(const, cap=CAP))
    return Report("lifted_e_difference", _m(lhs), _m(rhs), {"n": n}, _spec(q_half=qh, t_half=th, s=s, T=T))


def lifted_bulk_branch(lam, u, v, T, s, qh, th) -> Report:
    lam = Partition(lam)
    u, v, T, s = map(S, (u, v, T, s))
    q, t = S(qh) ** 2, S(th) ** 2
    const = lambda k: ((power(u, k) - power(v, k)) / (1 - power(t, k))
                       + (power(u, -k) - power(v, -k)) / (1 - power(t, -k)))
    lhs = plethysm_sym(lifted_interp(lam, T * v / u, s, q, t), shift_rule(const, cap=CAP))
    rhs = _lin([(psi_B(lam, mu, u, v, s * T, q, t), lifted_interp(mu, T, s, q, t)) for mu in subpartitions(lam)])
    return Report("lifted_bulk_branch", _m(lhs), _m(rhs), {"lambda": lam},
                  _spec(q_half=qh, t_half=th, s=s, T=T, u=u, v=v))


def lifted_connection_coefficient(lam, mu, T, s, s2, q, t) -> Scalar:
    lam, mu = Partition(lam), Partition(mu)
    if not contains(mu, lam):
        return ZERO
    pl = plethysm_scalar(skew_P(lam, mu, q, t), lambda k: (power(s, k) - power(s2, k)) / (1 - power(t, k)))
    if pl == 0:
        return ZERO
    x = t / (T * s * s2)
    iq, it = 1 / q, 1 / t
    return C0(lam, T, q, t) * C0(lam, x, iq, it) / (C0(mu, T, q, t) * C0(mu, x, iq, it)) * pl


def lifted_connection(lam, T, s, s2, qh, th) -> Report:
    lam = Partition(lam)
    T, s, s2 = map(S, (T, s, s2))
    q, t = S(qh) ** 2, S(th) ** 2
    lhs = expand_peeling(lifted_interp(lam, T, s2, q, t), lambda nu: lifted_interp(nu, T, s, q, t))
    rhs = {}
    for mu in subpartitions(lam):
        c = lifted_connection_coefficient(lam, mu, T, s, s2, q, t)
        if c != 0:
            rhs[mu] = c
    lhs = {k: v for k, v in lhs.items() if v != 0}
    return Report("lifted_connection", lhs, rhs, {"lambda": lam},
                  _spec(q_half=qh, t_half=th, s=s, s_prime=s2, T=T))


def _triangular_report(name, f: SymFunc, lam, q, t, spec, lower: bool = True) -> Report:
    """Macdonald expansion has leading coefficient 1 at lam and is supported on the inclusion interval."""
    coeffs = p_expansion(f, q, t)
    if lower:
        bad = sorted(str(mu) for mu in coeffs if not contains(mu, lam))
    else:
        bad = sorted(str(mu) for mu in coeffs if not contains(lam, mu))
    return Report(name, {"leading": coeffs.get(lam, ZERO), "outside": bad},
                  {"leading": ONE, "outside": []}, {"lambda": lam}, spec)


def interp_triangularity(lam, T, s, qh, th) -> Report:
    lam = Partition(lam)
    q, t = S(qh) ** 2, S(th) ** 2
    return _triangular_report("lifted_interp_P_triangular", lifted_interp(lam, T, s, q, t), lam, q, t,
                              _spec(q_half=qh, t_half=th, s=s, T=T))


def eval_at_constant(lam, xh, yh, zh, qh, th) -> Report:
    """P~*_lam at the plethystic constant with T = 1 and s = sqrt(t/xyz)."""
    lam = Partition(lam)
    xh, yh, zh, qh, th = map(S, (xh, yh, zh, qh, th))
    q, t = qh * qh, th * th
    x, y, z = xh * xh, yh * yh, zh * zh
    s = th / (xh * yh * zh)
    image = lambda k: ((power(xh, k) - power(xh, -k)) * (power(yh, k) - power(yh, -k))
                       * (power(zh, k) - power(zh, -k)) / (power(th, k) - power(th, -k)))
    lhs = power(-xh * yh * zh * th, lam.size) * plethysm_scalar(lifted_interp(lam, ONE, s, q, t), image)
    iq, it = 1 / q, 1 / t
    rhs = power(t, -2 * lam.n()) * power(q, conjugate(lam).n()) * C0(lam, [x, y, z], iq, it) / Cm(lam, it, iq, it)
    return Report("lifted_eval_at_constant", lhs, rhs, {"lambda": lam},
                  _spec(q_half=qh, t_half=th, x_half=xh, y_half=yh, z_half=zh))


# ---------------------------------------------------------------------------
# virtual interpolation polynomials (degree-truncated)

def virtual_interp(mu, Q, s, q, t, cap: int) -> SymFunc:
    """P^*_mu(; q, t, Q; s) truncated after degree ``cap``, from its Macdonald expansion."""
    mu = Partition(mu)
    Q, s, q, t = map(S, (Q, s, q, t))
    key = ("virtual", mu, Q, s, q, t, cap)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    mc = conjugate(mu)
    out = {}
    for lam in partitions_upto(cap):
        if not contains(mu, lam):
            continue
        lc = conjugate(lam)
        coeffs = expand_peeling(macdonald_P(lc, t, q), lambda nu: lifted_interp(nu, Q, s, t, q))
        c = coeffs.get(mc, ZERO)
        if c == 0:
            continue
        c = c if (lam.size - mu.size) % 2 == 0 else -c
        for k, v in _pcoeffs(macdonald_P(lam, q, t)).items():
            out[k] = out.get(k, ZERO) + c * v
    f = SymFunc("p", {k: v for k, v in out.items() if v != 0}, cap, truncated=True)
    with _lock:
        return _cache.setdefault(key, f)


def virtual_consistency(mu, m: int, n: int, s, qh, th) -> Report:
    """At Q = q^m and n variables, P^*_mu = prod x_i^m P-bar*_{m^n - mu}(x; s)."""
    from .partitions import rect_minus
    mu = Partition(mu)
    q, t = S(qh) ** 2, S(th) ** 2
    s = S(s)
    cap = 2 * m * n
    f = virtual_interp(mu, power(q, m), s, q, t, cap)
    lhs = {k: v for k, v in _m(f).items() if len(k) <= n}
    poly = interp_poly(n, rect_minus(mu, m, n), s, q, t)
    rhs = {}
    for e, c in poly.terms.items():
        shifted = tuple(sorted((x + m for x in e), reverse=True))
        if list(shifted) == sorted(shifted, reverse=True) and tuple(x + m for x in e) == shifted:
            rhs[Partition(shifted)] = c
    return Report("virtual_interp_consistency", lhs, rhs, {"mu": mu, "m": m, "n": n},
                  _spec(q_half=qh, t_half=th, s=s))


def virtual_triangularity(mu, Q, s, qh, th, cap: int) -> Report:
    mu = Partition(mu)
    q, t = S(qh) ** 2, S(th) ** 2
    f = virtual_interp(mu, Q, s, q, t, cap)
    return _triangular_report("virtual_interp_P_triangular", f, mu, q, t,
                              _spec(q_half=qh, t_half=th, s=s, Q=Q), lower=False)


def _tensor(f: SymFunc, g: SymFunc, scale, acc: dict, cap: int):
    for a, ca in _pcoeffs(f).items():
        for b, cb in _pcoeffs(g).items():
            if a.size + b.size <= cap:
                key = (a, b)
                acc[key] = acc.get(key, ZERO) + scale * ca * cb


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v != 0}


def lifted_cauchy(T, s, qh, th, cap: int = 4) -> Report:
    """sum (-1)^|lam| P~*_lam(x;q,t,T;s) P^*_{lam'}(y;t,q,T;s) = sum (-1)^|lam| P_lam(x;q,t) P_{lam'}(y;t,q)."""
    T, s = S(T), S(s)
    q, t = S(qh) ** 2, S(th) ** 2
    lhs, rhs = {}, {}
    for lam in partitions_upto(cap):
        sign = -1 if lam.size % 2 else 1
        _tensor(lifted_interp(lam, T, s, q, t), virtual_interp(conjugate(lam), T, s, t, q, cap), sign, lhs, cap)
        if 2 * lam.size <= cap:
            _tensor(macdonald_P(lam, q, t), macdonald_P(conjugate(lam), t, q), sign, rhs, cap)
    return Report("lifted_cauchy", _clean(lhs), _clean(rhs), {"degree": cap},
                  _spec(q_half=qh, t_half=th, s=s, T=T))


def lifted_cauchy_dual(T, s, qh, th, cap: int = 4) -> Report:
    """sum b_lam (q/t)^{|lam|/2} P~*_lam(x;T;s) P^*_lam(y;1/T;sqrt(qt)/s) = sum (q/t)^{|lam|/2} P_lam Q_lam."""
    T, s, qh, th = map(S, (T, s, qh, th))
    q, t = qh * qh, th * th
    lhs, rhs = {}, {}
    for lam in partitions_upto(cap):
        w = power(qh / th, lam.size)
        _tensor(lifted_interp(lam, T, s, q, t), virtual_interp(lam, 1 / T, qh * th / s, q, t, cap),
                w * b_lambda(lam, q, t), lhs, cap)
        if 2 * lam.size <= cap:
            _tensor(macdonald_P(lam, q, t), macdonald_Q(lam, q, t), w, rhs, cap)
    return Report("lifted_cauchy_dual", _clean(lhs), _clean(rhs), {"degree": cap},
                  _spec(q_half=qh, t_half=th, s=s, T=T))


# ---------------------------------------------------------------------------
# lifted Koornwinder polynomials

def k0_ratio(lam, mu, T, kp: KParams) -> Scalar:
    """k0_lam / k0_mu with C^0_lam(T) / C^0_mu(T) taken over the skew boxes (no 0/0 at T = t^n)."""
    lam, mu = Partition(lam), Partition(mu)
    q, t, T = kp.q, kp.t, S(T)
    t0, t1, t2, t3 = kp.ts
    hat2 = t0 * t1 * t2 * t3 / q
    out = power(t0 * T / t, mu.size - lam.size) * power(t, lam.n() - mu.n())
    for i, row in enumerate(lam, start=1):
        for j in range(mu.part(i) + 1, row + 1):
            out *= 1 - power(q, j - 1) * power(t, 1 - i) * T
    args = [T * t0 * t1 / t, T * t0 * t2 / t, T * t0 * t3 / t]
    num = C0(lam, args, q, t) * Cm(mu, t, q, t) * Cp(mu, T * T * hat2 / (t * t), q, t)
    den = C0(mu, args, q, t) * Cm(lam, t, q, t) * Cp(lam, T * T * hat2 / (t * t), q, t)
    if den == 0:
        raise DegenerateParameters(f"k0 ratio undefined for {lam}/{mu}")
    return out * num / den


def lifted_koorn(lam, T, kp: KParams) -> SymFunc:
    """K~_lam(; q, t, T; t0, t1, t2, t3) by the lifted binomial formula."""
    lam = Partition(lam)
    T = S(T)
    key = ("koorn", lam, T, kp.key())
    hit = _cache.get(key)
    if hit is not None:
        return hit
    q, t = kp.q, kp.t
    s = T / t * kp.t0hat
    terms = [(bracket(lam, mu, s, q, t) * k0_ratio(lam, mu, T, kp), lifted_interp(mu, T, kp.ts[0], q, t))
             for mu in subpartitions(lam)]
    f = _lin(terms, max(CAP, lam.size)).to("m")
    with _lock:
        return _cache.setdefault(key, f)


def virtual_integral_T(f: SymFunc, T, kp: KParams) -> Scalar:
    """I_K(f; q, t, T; t0..t3): the coefficient of K~_0 = 1."""
    return expand_peeling(f, lambda nu: lifted_koorn(nu, T, kp)).get(EMPTY, ZERO)


def koorn_restriction(lam, n: int, kp: KParams) -> Report:
    lam = Partition(lam)
    lhs = restrict_bc(lifted_koorn(lam, power(kp.t, n), kp), n)
    rhs = koorn_poly(n, lam, kp) if len(lam) <= n else BCPoly(n)
    return Report("lifted_koorn_restriction", lhs.coefficient_map(), rhs.coefficient_map(),
                  {"n": n, "lambda": lam}, kp.as_strings())


def koorn_orthogonality(lam, mu, T, kp: KParams) -> Report:
    lam, mu = Partition(lam), Partition(mu)
    f = lifted_koorn(lam, T, kp) * lifted_koorn(mu, T, kp)
    rhs = norm_value(lam, T, kp) if lam == mu else ZERO
    return Report("lifted_koorn_orthogonality", virtual_integral_T(f, T, kp), rhs,
                  {"lambda": lam, "mu": mu}, {**kp.as_strings(), "T": fmt(T)})


def koorn_triangularity(lam, T, kp: KParams) -> Report:
    lam = Partition(lam)
    return _triangular_report("lifted_koorn_P_triangular", lifted_koorn(lam, T, kp), lam, kp.q, kp.t,
                              {**kp.as_strings(), "T": fmt(T)})


def koorn_duality(lam, T, kp: KParams) -> Report:
    """omega~ K~_lam(q,t,T;t_i) = b_lam^{-1} (t/q)^{|lam|/2} K~_{lam'}(t,q,1/T;-sqrt(qt)/t_i)."""
    lam = Partition(lam)
    T = S(T)
    qh, th = kp.qh, kp.th
    c = -qh * th
    dual = KParams(th, qh, tuple(c / x for x in kp.ts), qh * th / kp.t0hat)
    lhs = omega_tilde(lifted_koorn(lam, T, kp), qh, th)
    rhs = lifted_koorn(conjugate(lam), 1 / T, dual).scale(power(th / qh, lam.size) / b_lambda(lam, kp.q, kp.t))
    return Report("lifted_koorn_duality", _m(lhs), _m(rhs), {"lambda": lam}, {**kp.as_strings(), "T": fmt(T)})


def koorn_plethystic_symmetry(lam, T, kp: KParams) -> Report:
    """K~(;T;t0..t3) = K~([p_k + ((t/t0)^k + (t/t1)^k - t0^k - t1^k)/(1-t^k)]; T t0 t1/t; t/t1, t/t0, t2, t3)."""
    lam = Partition(lam)
    T = S(T)
    t = kp.t
    t0, t1, t2, t3 = kp.ts
    other = KParams(kp.qh, kp.th, (t / t1, t / t0, t2, t3), t * kp.t0hat / (t0 * t1))
    const = lambda k: (power(t / t0, k) + power(t / t1, k) - power(t0, k) - power(t1, k)) / (1 - power(t, k))
    rhs = plethysm_sym(lifted_koorn(lam, T * t0 * t1 / t, other), shift_rule(const, cap=CAP))
    return Report("lifted_koorn_plethystic_symmetry", _m(lifted_koorn(lam, T, kp)), _m(rhs),
                  {"lambda": lam}, {**kp.as_strings(), "T": fmt(T)})


def koorn_kadell(lam, T, kp: KParams) -> Report:
    lam = Partition(lam)
    T = S(T)
    q, t = kp.q, kp.t
    t0, t1, t2, t3 = kp.ts
    lhs = virtual_integral_T(lifted_interp(lam, T, t0, q, t), T, kp)
    rhs = power(-t0 * T / t, -lam.size) * power(t, 2 * lam.n()) * power(q, -conjugate(lam).n())
    rhs *= C0(lam, [T, T * t0 * t1 / t, T * t0 * t2 / t, T * t0 * t3 / t], q, t)
    rhs /= Cm(lam, t, q, t) * C0(lam, T * T * t0 * t1 * t2 * t3 / (t * t), q, t)
    return Report("lifted_kadell", lhs, rhs, {"lambda": lam}, {**kp.as_strings(), "T": fmt(T)})


# ---------------------------------------------------------------------------
# T = 0: generating function and Gaussian functional

def _exp_series(log: dict, cap: int) -> dict:
    """exp of a p-basis element without constant term, truncated after degree cap."""
    out = {EMPTY: ONE}
    term = {EMPTY: ONE}
    k = 1
    while True:
        term = _p_mult(term, log, cap)
        term = {a: c / k for a, c in term.items()}
        if not term:
            break
        for a, c in term.items():
            out[a] = out.get(a, ZERO) + c
        k += 1
    return {a: c for a, c in out.items() if c != 0}


def _add(d: dict, lam, c):
    lam = Partition(lam)
    d[lam] = d.get(lam, ZERO) + c


def t0_generating(kp: KParams, cap: int) -> SymFunc:
    """prod_{j<k} (x_j x_k;q)/(t x_j x_k;q) prod_j (t0 x_j,..,t3 x_j;q)/(t x_j^2;q)."""
    q, t = kp.q, kp.t
    log = {}
    for r in range(1, cap + 1):
        w = 1 / (r * (1 - power(q, r)))
        _add(log, (r,), -w * sum(power(x, r) for x in kp.ts))
        if 2 * r <= cap:
            _add(log, (r, r), w * (power(t, r) - 1) / 2)
            _add(log, (2 * r,), -w * (power(t, r) - 1) / 2 + w * power(t, r))
    log = {a: c for a, c in log.items() if c != 0}
    return SymFunc("p", _exp_series(log, cap), cap)


def t0_constants(kp: KParams, cap: int) -> dict:
    """K~_lam(0; q, t, 0; t0..t3) for |lam| <= cap, as the Q_lam coefficients of the generating function."""
    key = ("t0const", kp.key(), cap)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    g = t0_generating(kp, cap)
    out = {lam: pairing(g, macdonald_P(lam, kp.q, kp.t), kp.q, kp.t) for lam in partitions_upto(cap)}
    with _lock:
        return _cache.setdefault(key, out)


def lifted_koorn_t0(lam, kp: KParams) -> SymFunc:
    """K~_lam at T = 0 as sum_mu P_{lam/mu} K~_mu(0)."""
    lam = Partition(lam)
    key = ("koorn0", lam, kp.key())
    hit = _cache.get(key)
    if hit is not None:
        return hit
    consts = t0_constants(kp, lam.size)
    terms = [(consts[mu], skew_P(lam, mu, kp.q, kp.t)) for mu in subpartitions(lam)]
    f = _lin(terms, max(CAP, lam.size)).to("m")
    with _lock:
        return _cache.setdefault(key, f)


@dataclass(frozen=True)
class GaussianSpec:
    """Means and variances of independent normally distributed power sums."""
    mean: Callable[[int], Scalar]
    var: Callable[[int], Scalar]


def gaussian_moments(kp: KParams) -> GaussianSpec:
    """The Gaussian functional equal to I_K at T = 0."""
    q, t = kp.q, kp.t

    def mean(k):
        s = sum(power(x, k) for x in kp.ts)
        if k % 2:
            return s / (1 - power(t, k))
        h = k // 2
        return (s - 1 - power(t, h) - power(q, h) - power(q * t, h)) / (1 - power(t, k))

    def var(k):
        # completing the square against the symplectic base variance k
        return k * (1 - power(q, k)) / (1 - power(t, k))

    return GaussianSpec(mean, var)


def gaussian(f: SymFunc, spec: GaussianSpec) -> Scalar:
    """Expectation of f when the p_k are independent normals (polynomially extended)."""
    mean, var = spec.mean, spec.var
    total = ZERO
    for lam, c in _pcoeffs(f).items():
        term = c
        counts = {}
        for part in lam:
            counts[part] = counts.get(part, 0) + 1
        for k, a in counts.items():
            term *= gauss_moment(a, mean(k), var(k))
            if term == 0:
                break
        total += term
    return total


def virtual_integral_t0(f: SymFunc, kp: KParams) -> Scalar:
    return expand_peeling(f, lambda nu: lifted_koorn_t0(nu, kp)).get(EMPTY, ZERO)


def ik_equals_ig(lam, kp: KParams) -> Report:
    lam = Partition(lam)
    f = SymFunc("p", {lam: ONE})
    spec = gaussian_moments(kp)
    return Report("ik_equals_ig", virtual_integral_t0(f, kp), gaussian(f, spec),
                  {"lambda": lam}, kp.as_strings())


def t0_orthogonality(lam, mu, kp: KParams) -> Report:
    """I_G(K'_lam K'_mu) = delta b_lam^{-1} for the generating-function construction."""
    lam, mu = Partition(lam), Partition(mu)
    spec = gaussian_moments(kp)
    f = lifted_koorn_t0(lam, kp) * lifted_koorn_t0(mu, kp)
    rhs = 1 / b_lambda(lam, kp.q, kp.t) if lam == mu else ZERO
    return Report("t0_orthogonality", gaussian(f, spec), rhs, {"lambda": lam, "mu": mu}, kp.as_strings())


def t0_leading(lam, kp: KParams) -> Report:
    lam = Partition(lam)
    return _triangular_report("t0_koorn_P_triangular", lifted_koorn_t0(lam, kp), lam, kp.q, kp.t, kp.as_strings())


def gaussian_lemma(kp: KParams, cap: int = 4) -> list:
    """Both Gaussian integrals of Cauchy kernels, coefficientwise up to degree cap."""
    q, t = kp.q, kp.t
    spec = gaussian_moments(kp)
    lhs1, lhs2 = {}, {}
    for lam in partitions_upto(cap):
        ig = gaussian(macdonald_P(lam, q, t), spec)
        for k, v in _pcoeffs(macdonald_Q(lam, q, t)).items():
            lhs1[k] = lhs1.get(k, ZERO) + ig * v
        # prod (1 + x_j y_k) = sum_lam m_lam(x) e_lam(y)
        ie = gaussian(SymFunc("e", {lam: ONE}), spec)
        for k, v in _m_in_p(lam).items():
            lhs2[k] = lhs2.get(k, ZERO) + ie * v
    log1, log2 = {}, {}
    for r in range(1, cap + 1):
        wq = 1 / (r * (1 - power(q, r)))
        wt = 1 / (r * (1 - power(t, r)))
        _add(log1, (r,), wq * sum(power(x, r) for x in kp.ts))
        _add(log2, (r,), -wt * sum(power(-x, r) for x in kp.ts))
        if 2 * r <= cap:
            # prod_{j<k} (t x x;q)/(x x;q) and prod_j (t x^2;q)
            _add(log1, (r, r), wq * (1 - power(t, r)) / 2)
            _add(log1, (2 * r,), -wq * (1 - power(t, r)) / 2 - wq * power(t, r))
            _add(log2, (r, r), wt * (1 - power(q, r)) / 2)
            _add(log2, (2 * r,), -wt * (1 - power(q, r)) / 2 + wt)
    rhs1 = _exp_series({a: c for a, c in log1.items() if c != 0}, cap)
    rhs2 = _exp_series({a: c for a, c in log2.items() if c != 0}, cap)
    spec = kp.as_strings()
    return [Report("gaussian_lemma_q", _clean(lhs1), rhs1, {"degree": cap}, spec),
            Report("gaussian_lemma_t", _clean(lhs2), rhs2, {"degree": cap}, spec)]


def _split_alphabets(f: SymFunc) -> dict:
    """f(x, y) in p(x) (x) p(y) coordinates."""
    out = {}
    for lam, c in _pcoeffs(f).items():
        states = {(EMPTY, EMPTY): c}
        for part in lam:
            nxt = {}
            for (a, b), v in states.items():
                for key in ((Partition(sorted(a + (part,), reverse=True)), b),
                            (a, Partition(sorted(b + (part,), reverse=True)))):
                    nxt[key] = nxt.get(key, ZERO) + v
            states = nxt
        for k, v in states.items():
            out[k] = out.get(k, ZERO) + v
    return _clean(out)


def t0_branching(lam, kp: KParams) -> Report:
    """K~_lam(x, y; T=0) = sum_mu P_{lam/mu}(x) K~_mu(y; T=0)."""
    lam = Partition(lam)
    lhs = _split_alphabets(lifted_koorn_t0(lam, kp))
    rhs = {}
    for mu in subpartitions(lam):
        _tensor(skew_P(lam, mu, kp.q, kp.t), lifted_koorn_t0(mu, kp), ONE, rhs, 2 * lam.size)
    return Report("t0_branching", lhs, _clean(rhs), {"lambda": lam}, kp.as_strings())


def t0_plethystic_symmetry(lam, kp: KParams, other: KParams) -> Report:
    """K~(;0;t') = K~([p_k + (sum t_i^k - sum t'_i^k)/(1-t^k)]; 0; t)."""
    lam = Partition(lam)
    t = kp.t
    const = lambda k: (sum(power(x, k) for x in kp.ts) - sum(power(x, k) for x in other.ts)) / (1 - power(t, k))
    rhs = plethysm_sym(lifted_koorn_t0(lam, kp), shift_rule(const, cap=CAP))
    return Report("t0_plethystic_symmetry", _m(lifted_koorn_t0(lam, other)), _m(rhs), {"lambda": lam},
                  {**kp.as_strings(), **{f"new_{k}": v for k, v in other.as_strings().items()}})


def _u_series_exp(log: list) -> list:
    """exp of a u-power series without constant term, same truncation."""
    order = len(log) - 1
    out = [ONE] + [ZERO] * order
    # f' = log' f
    for k in range(1, order + 1):
        acc = ZERO
        for j in range(1, k + 1):
            acc += j * log[j] * out[k - j]
        out[k] = acc / k
    return out


def _t0_pieri(lam, kp: KParams, order: int, kind: str) -> Report:
    lam = Partition(lam)
    q, t = kp.q, kp.t
    log = [ZERO] * (order + 1)
    for r in range(1, order + 1):
        if kind == "g":
            w = 1 / (r * (1 - power(q, r)))
            log[r] += w * sum(power(x, r) for x in kp.ts)
            if 2 * r <= order:
                log[2 * r] -= w * power(t, r)
        else:
            w = 1 / (r * (1 - power(t, r)))
            log[r] -= w * sum(power(-x, r) for x in kp.ts)
            if 2 * r <= order:
                log[2 * r] += w
    pref = _u_series_exp(log)
    base = lifted_koorn_t0(lam, kp)
    lhs_terms, rhs_terms = [], []
    for N in range(order + 1):
        gen = g_k(N, q, t) if kind == "g" else e_k(N)
        lhs_terms.append(_m(gen * base))
        acc = {}
        for nu in subpartitions(lam):
            strip = is_horizontal_strip(nu, lam) if kind == "g" else is_vertical_strip(nu, lam)
            if not strip:
                continue
            w_l = one_var_weights(lam, nu, q, t)[0 if kind == "g" else 3]
            top = N - lam.size + 2 * nu.size
            for mu in partitions_upto(top + nu.size):
                e = lam.size - 2 * nu.size + mu.size
                if e > N or not contains(nu, mu):
                    continue
                strip_mu = is_horizontal_strip(nu, mu) if kind == "g" else is_vertical_strip(nu, mu)
                if not strip_mu:
                    continue
                w_m = one_var_weights(mu, nu, q, t)[1 if kind == "g" else 2]
                c = pref[N - e] * w_l * w_m
                if c == 0:
                    continue
                for k, v in _m(lifted_koorn_t0(mu, kp)).items():
                    acc[k] = acc.get(k, ZERO) + c * v
        rhs_terms.append(_clean(acc))
    return Report(f"t0_{kind}_pieri", lhs_terms, rhs_terms, {"lambda": lam, "order": order}, kp.as_strings())


def t0_g_pieri(lam, kp: KParams, order: int = 3) -> Report:
    return _t0_pieri(lam, kp, order, "g")


def t0_e_pieri(lam, kp: KParams, order: int = 3) -> Report:
    return _t0_pieri(lam, kp, order, "e")
