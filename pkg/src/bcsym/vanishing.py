"""Vanishing integrals of Macdonald and lifted Koornwinder polynomials.

Each check returns a Report comparing a virtual integral with zero or with
a closed-form value.  Integrals at T = t^n are computed in n variables, at
generic T through the lifted Koornwinder basis and at T = 0 through the
Gaussian functional.  Checks of statements that are still conjectural
are marked advisory.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bcpoly import BCPoly
from .cnorm import C0, Cm, Cp
from .koornwinder import KParams, koorn_poly, virtual_integral
from .lifting import (expand_peeling, gaussian, gaussian_moments, lifted_koorn, restrict_bc,
                      virtual_integral_T, _split_alphabets)
from .partitions import Partition, ShapeError, conjugate, double, rect, square
from .report import Report
from .scalar import ONE, ZERO, S, Scalar, fmt, power, qpoch
from .symfunc import (SymFunc, half_rule, macdonald_P, plethysm_scalar, plethysm_sym,
                      restrict_count, shift_rule)


CAPX = 12


def _spec(**kw) -> dict:
    return {k: fmt(v) for k, v in sorted(kw.items())}


# ---------------------------------------------------------------------------
# shapes

def square_root(lam) -> Partition | None:
    """mu with mu^2 = lam (each part repeated twice), or None."""
    lam = Partition(lam)
    if len(lam) % 2 or any(lam[2 * i] != lam[2 * i + 1] for i in range(len(lam) // 2)):
        return None
    return Partition(lam[0::2])


def half(lam) -> Partition | None:
    """mu with 2mu = lam, or None."""
    lam = Partition(lam)
    if any(x % 2 for x in lam):
        return None
    return Partition(tuple(x // 2 for x in lam))


# ---------------------------------------------------------------------------
# parameter families

def usp_params(qh, th) -> KParams:
    """(sqrt t, -sqrt t, sqrt(qt), -sqrt(qt))."""
    qh, th = S(qh), S(th)
    return KParams(qh, th, (th, -th, qh * th, -qh * th), th * th)


def uo_params(qh, th) -> KParams:
    """(1, -1, sqrt t, -sqrt t)."""
    qh, th = S(qh), S(th)
    return KParams(qh, th, (ONE, -ONE, th, -th), th / qh)


def uo_shifted_params(qh, th) -> KParams:
    """(t, -t, sqrt t, -sqrt t)."""
    qh, th = S(qh), S(th)
    t = th * th
    return KParams(qh, th, (t, -t, th, -th), t * th / qh)


def uo_odd_params(qh, th, sign: int) -> KParams:
    """(t, -1, +-sqrt t) for sign = 1, (1, -t, +-sqrt t) for sign = -1."""
    qh, th = S(qh), S(th)
    t = th * th
    ts = (t, -ONE, th, -th) if sign > 0 else (ONE, -t, th, -th)
    return KParams(qh, th, ts, t / qh)


# ---------------------------------------------------------------------------
# closed forms

def usp_value(lam, T, q, t) -> Scalar:
    """Conjectured I_K(P_lam; T; +-sqrt t, +-sqrt(qt)): zero unless lam = mu^2."""
    mu = square_root(lam)
    if mu is None:
        return ZERO
    T, q, t = S(T), S(q), S(t)
    t2 = t * t
    return (C0(mu, T * T, q, t2) * Cm(mu, q * t, q, t2)
            / (C0(mu, q * T * T / t, q, t2) * Cm(mu, t2, q, t2)))


def uo_value(lam, T, q, t) -> Scalar:
    """Conjectured I_K(P_lam; T; +-1, +-sqrt t): zero unless lam = 2mu."""
    mu = half(lam)
    if mu is None:
        return ZERO
    T, q, t = S(T), S(q), S(t)
    q2 = q * q
    return (C0(mu, T * T, q2, t) * Cm(mu, q, q2, t)
            / (C0(mu, q * T * T / t, q2, t) * Cm(mu, t, q2, t)))


# ---------------------------------------------------------------------------
# restriction helpers

def _restrict(f: SymFunc, n: int, const=None) -> BCPoly:
    """f(x^{+-1}, plus a constant alphabet with power sums const(k)) in n variables."""
    if const is not None:
        f = plethysm_sym(f, shift_rule(const, cap=max(f.cap, f.degree())))
    return restrict_bc(f, n)


def _integral_n(f: SymFunc, n: int, kp: KParams, const=None) -> Scalar:
    if n == 0:
        return plethysm_scalar(f, const if const is not None else (lambda k: ZERO))
    return virtual_integral(_restrict(f, n, const), kp)


# ---------------------------------------------------------------------------
# T = 0

def check_T0_props(lam, qh, th) -> list:
    """Both T = 0 integrals of P_lam through the Gaussian functional."""
    lam = Partition(lam)
    qh, th = S(qh), S(th)
    q, t = qh * qh, th * th
    P = macdonald_P(lam, q, t)
    spec = _spec(q_half=qh, t_half=th)
    mu = square_root(lam)
    v1 = ZERO if mu is None else Cm(mu, q * t, q, t * t) / Cm(mu, t * t, q, t * t)
    mu = half(lam)
    v2 = ZERO if mu is None else Cm(mu, q, q * q, t) / Cm(mu, t, q * q, t)
    return [Report("t0_usp", gaussian(P, gaussian_moments(usp_params(qh, th))), v1, {"lambda": lam}, spec),
            Report("t0_uo", gaussian(P, gaussian_moments(uo_params(qh, th))), v2, {"lambda": lam}, spec)]


# ---------------------------------------------------------------------------
# U/Sp and U/O

def check_USp(n: int, lam, qh, th) -> Report:
    """n-variable integral at (+-sqrt t, +-sqrt(qt)) against the closed form at T = t^n."""
    lam = Partition(lam)
    if len(lam) > 2 * n:
        raise ShapeError(f"{lam} has more than {2 * n} parts")
    qh, th = S(qh), S(th)
    q, t = qh * qh, th * th
    lhs = _integral_n(macdonald_P(lam, q, t), n, usp_params(qh, th))
    return Report("usp_n_variable", lhs, usp_value(lam, power(t, n), q, t), {"n": n, "lambda": lam},
                  _spec(q_half=qh, t_half=th))


def _strip_columns(lam: Partition, length: int) -> tuple:
    """(k, mu) with lam = k^length + mu and l(mu) < length."""
    k = lam.part(length)
    return k, Partition(tuple(x - k for x in lam))


def check_UO(n: int, lam, qh, th) -> list:
    """n-variable integrals at (+-1, +-sqrt t) and at (+-t, +-sqrt t) with the extra alphabet (1, -1).

    For lam = k^{2n} + mu with l(mu) < 2n both equal (up to (-1)^k) the closed
    form for mu at T = t^n.
    """
    lam = Partition(lam)
    if len(lam) > 2 * n:
        raise ShapeError(f"{lam} has more than {2 * n} parts")
    qh, th = S(qh), S(th)
    q, t = qh * qh, th * th
    k, mu = _strip_columns(lam, 2 * n)
    value = uo_value(mu, power(t, n), q, t)
    P = macdonald_P(lam, q, t)
    shapes = {"n": n, "lambda": lam}
    spec = _spec(q_half=qh, t_half=th)
    pm = lambda j: ONE + power(S(-1), j)
    sign = -1 if k % 2 else 1
    return [Report("uo_n_variable", _integral_n(P, n, uo_params(qh, th)), value, shapes, spec),
            Report("uo_n_variable_pm1", _integral_n(P, n - 1, uo_shifted_params(qh, th), pm),
                   sign * value, shapes, spec)]


def check_UO_odd(n: int, lam, qh, th) -> list:
    """The odd forms: alphabets (x^{+-1}, 1) and (x^{+-1}, -1), compared at T = t^{n+1/2}."""
    lam = Partition(lam)
    if len(lam) > 2 * n + 1:
        raise ShapeError(f"{lam} has more than {2 * n + 1} parts")
    qh, th = S(qh), S(th)
    q, t = qh * qh, th * th
    k, mu = _strip_columns(lam, 2 * n + 1)
    value = uo_value(mu, power(t, n) * th, q, t)
    P = macdonald_P(lam, q, t)
    shapes = {"n": n, "lambda": lam}
    spec = _spec(q_half=qh, t_half=th)
    sign = -1 if k % 2 else 1
    plus = _integral_n(P, n, uo_odd_params(qh, th, 1), lambda j: ONE)
    minus = _integral_n(P, n, uo_odd_params(qh, th, -1), lambda j: power(S(-1), j))
    return [Report("uo_odd_plus", plus, value, shapes, spec),
            Report("uo_odd_minus", minus, sign * value, shapes, spec)]


def check_q_equals_t(n: int, lam, th) -> list:
    """At q = t both n-variable integrals are 1 on their patterns and 0 off them."""
    lam = Partition(lam)
    th = S(th)
    t = th * th
    P = macdonald_P(lam, t, t)
    shapes = {"n": n, "lambda": lam}
    spec = _spec(q_half=th, t_half=th)
    out = []
    if len(lam) <= 2 * n:
        expect = ONE if square_root(lam) is not None else ZERO
        out.append(Report("usp_q_equals_t", _integral_n(P, n, usp_params(th, th)), expect, shapes, spec))
        _, mu = _strip_columns(lam, 2 * n)
        expect = ONE if half(mu) is not None else ZERO
        out.append(Report("uo_q_equals_t", _integral_n(P, n, uo_params(th, th)), expect, shapes, spec))
    return out


def check_T_generic(lam, T, qh, th, family: str) -> Report:
    """I_K(P_lam; q, t, T; ...) at generic T for family 'usp' or 'uo'."""
    lam = Partition(lam)
    T, qh, th = S(T), S(qh), S(th)
    q, t = qh * qh, th * th
    kp = usp_params(qh, th) if family == "usp" else uo_params(qh, th)
    value = usp_value if family == "usp" else uo_value
    lhs = virtual_integral_T(macdonald_P(lam, q, t), T, kp)
    return Report(f"{family}_generic_T", lhs, value(lam, T, q, t), {"lambda": lam},
                  _spec(q_half=qh, t_half=th, T=T))


def check_duality(lam, T, qh, th) -> Report:
    """UO(lam) at (q, t) and USp(lam') at (t, q) vanish together."""
    lam = Partition(lam)
    T, qh, th = S(T), S(qh), S(th)
    uo = virtual_integral_T(macdonald_P(lam, qh * qh, th * th), T, uo_params(qh, th))
    usp = virtual_integral_T(macdonald_P(conjugate(lam), th * th, qh * qh), 1 / T, usp_params(th, qh))
    return Report("usp_uo_duality", uo == 0, usp == 0, {"lambda": lam}, _spec(q_half=qh, t_half=th, T=T))


def schur_crosscheck(lam, T, h) -> list:
    """At q = t every integral is 0 or 1."""
    lam = Partition(lam)
    h, T = S(h), S(T)
    q = h * h
    out = []
    for family, kp, pattern in (("usp", usp_params(h, h), square_root(lam)),
                                ("uo", uo_params(h, h), half(lam))):
        lhs = virtual_integral_T(macdonald_P(lam, q, q), T, kp)
        out.append(Report(f"schur_{family}", lhs, ZERO if pattern is None else ONE, {"lambda": lam},
                          _spec(q_half=h, t_half=h, T=T)))
    return out


# ---------------------------------------------------------------------------
# orthogonal Grassmannians with a one- or two-dimensional factor

def _shifted(f: SymFunc, const) -> SymFunc:
    return plethysm_sym(f, shift_rule(const, cap=max(f.cap, f.degree())))


def check_O1_props(lam, T, qh, th, r) -> list:
    """The two O(1) integrals: zero unless l(lam) <= 1, with q-symbol values."""
    lam = Partition(lam)
    T = S(T)
    kp = KParams.from_halves(qh, th, r)
    q, t = kp.q, kp.t
    t0, t1, t2, t3 = kp.ts
    P4 = t0 * t1 * t2 * t3
    l1 = lam.part(1)
    shifted = kp.scaled((t, 1, 1, 1), kp.th)
    spec = {**kp.as_strings(), "T": fmt(T)}
    inner = _shifted(lifted_koorn(lam, t * T, kp), lambda k: power(t0, k) + power(t0, -k))
    lhs1 = virtual_integral_T(inner, T, shifted)
    if len(lam) <= 1:
        rhs1 = power(t0, -l1) * qpoch(T * t0 * t1, q, l1) * qpoch(T * t0 * t2, q, l1)
        rhs1 *= qpoch(T * t0 * t3, q, l1) * qpoch(T * P4 / t, q, l1)
        rhs1 /= qpoch(power(q, l1 - 1) * T * T * P4, q, l1) * qpoch(T * T * P4 / t, q, l1)
    else:
        rhs1 = ZERO
    lhs2 = virtual_integral_T(lifted_koorn(lam, T, shifted), T, kp)
    if len(lam) <= 1:
        rhs2 = power(t0, l1) * qpoch(T, q, l1) * qpoch(T * t1 * t2 / t, q, l1)
        rhs2 *= qpoch(T * t1 * t3 / t, q, l1) * qpoch(T * t2 * t3 / t, q, l1)
        rhs2 /= qpoch(power(q, l1 - 1) * T * T * P4 / t, q, l1) * qpoch(T * T * P4 / (t * t), q, l1)
    else:
        rhs2 = ZERO
    return [Report("o1_branch", lhs1, rhs1, {"lambda": lam}, spec),
            Report("o1_shift", lhs2, rhs2, {"lambda": lam}, spec)]


def _ab_params(qh, th, a, b, scale_a) -> KParams:
    """(c a, -c a, b, -b) with c = scale_a."""
    qh, th, a, b = map(S, (qh, th, a, b))
    x = scale_a * a
    return KParams(qh, th, (x, -x, b, -b), x * b / qh)


def check_O2_theorems(lam, T, qh, th, a, b) -> list:
    """The two O(2) integrals vanish unless l(lam) <= 2 and |lam| is even; nonzero otherwise."""
    lam = Partition(lam)
    T, a = S(T), S(a)
    t = S(th) ** 2
    inner_kp = _ab_params(qh, th, a, b, ONE)
    outer_kp = _ab_params(qh, th, a, b, t)
    const = lambda k: power(a, k) + power(-a, k) + power(a, -k) + power(-a, -k)
    inner = _shifted(lifted_koorn(lam, t * t * T, inner_kp), const)
    lhs1 = virtual_integral_T(inner, T, outer_kp)
    lhs2 = virtual_integral_T(lifted_koorn(lam, T, outer_kp), T, inner_kp)
    expect_nonzero = len(lam) <= 2 and lam.size % 2 == 0
    spec = _spec(q_half=qh, t_half=th, a=a, b=b, T=T)
    return [Report("o2_branch", lhs1 != 0, expect_nonzero, {"lambda": lam}, spec),
            Report("o2_shift", lhs2 != 0, expect_nonzero, {"lambda": lam}, spec)]


# ---------------------------------------------------------------------------
# O/Sp Grassmannians (open conjectures)

def _grass(lam, T, qh, th, a, b, kind: str) -> Report:
    lam = Partition(lam)
    T, qh, th, a, b = map(S, (T, qh, th, a, b))
    q, t = qh * qh, th * th
    inner_kp = KParams(qh, th, (a, -a, b, -b), a * b / qh)
    if kind == "o":
        outer_kp = KParams(q, t, (-ONE, -t, a * a, b * b), th * a * b / q)
    else:
        outer_kp = KParams(q, t, (-t, -q * t, a * a, b * b), t * a * b / qh)
    f = lifted_koorn(lam, T, inner_kp)
    f = plethysm_sym(f, half_rule(max(f.cap, f.degree())))
    lhs = virtual_integral_T(f, T, outer_kp)
    A, B = a * a, b * b
    args = [T, -A * T / t, -B * T / t, A * B * T / (t * t)]
    if kind == "o":
        mu = half(lam)
        if mu is None:
            rhs = ZERO
        else:
            q2 = q * q
            x = A * B * T * T / power(t, 3)
            rhs = power(S(-1), mu.size) * Cm(mu, q, q2, t) * Cp(mu, x, q2, t) * C0(mu, args, q2, t)
            rhs /= Cm(mu, t, q2, t) * Cp(mu, A * B * T * T / (q * t * t), q2, t) * C0(double(mu), x, q2, t * t)
    else:
        mu = square_root(lam)
        if mu is None:
            rhs = ZERO
        else:
            t2 = t * t
            rhs = power(S(-1), mu.size) * Cm(mu, q * t, q, t2) * Cp(mu, A * B * T * T / power(t, 4), q, t2)
            rhs *= C0(mu, args, q, t2)
            rhs /= (Cp(mu, A * B * T * T / (q * power(t, 3)), q, t2) * Cm(mu, t2, q, t2)
                    * C0(square(mu), A * B * T * T * q / t2, q * q, t2))
    return Report(f"{kind}_grass", lhs, rhs, {"lambda": lam}, _spec(q_half=qh, t_half=th, a=a, b=b, T=T),
                  advisory=True)


def check_O_grass(lam, T, qh, th, a, b) -> Report:
    return _grass(lam, T, qh, th, a, b, "o")


def check_Sp_grass(lam, T, qh, th, a, b) -> Report:
    return _grass(lam, T, qh, th, a, b, "sp")


# ---------------------------------------------------------------------------
# Laurent-Macdonald constant terms (GL_n)

@dataclass(frozen=True)
class LaurentWeight:
    """The dominant GL_n weight (mu_1, ..., mu_k, 0, ..., 0, -nu_l, ..., -nu_1)."""
    mu: Partition
    nu: Partition
    n: int

    def __post_init__(self):
        object.__setattr__(self, "mu", Partition(self.mu))
        object.__setattr__(self, "nu", Partition(self.nu))
        if len(self.mu) + len(self.nu) > self.n:
            raise ShapeError(f"weight {self.mu},{self.nu} does not fit GL_{self.n}")

    @property
    def shift(self) -> int:
        return self.nu.part(1)

    def shifted(self) -> Partition:
        """The partition weight + shift^n."""
        k = self.shift
        body = [k + x for x in self.mu] + [k] * (self.n - len(self.mu) - len(self.nu))
        body += [k - x for x in reversed(self.nu)]
        return Partition(tuple(body))


def _macdonald_coefficient(f: SymFunc, target: Partition, n: int, q, t) -> Scalar:
    """[P_target(x_1..x_n; q, t)] f(x_1..x_n)."""
    g = restrict_count(f.to("m"), n)
    if not g.coeffs:
        return ZERO
    coeffs = expand_peeling(g, lambda nu: restrict_count(macdonald_P(nu, q, t), n))
    return coeffs.get(target, ZERO)


def laurent_macdonald_ct(f: SymFunc, shift: int, n: int, q, t) -> Scalar:
    """Normalized constant term of (x_1...x_n)^{-shift} f(x) against the GL_n Macdonald density."""
    if n == 0:
        return plethysm_scalar(f, lambda k: ZERO) if shift == 0 else ZERO
    return _macdonald_coefficient(f, Partition((shift,) * n), n, S(q), S(t))


def _grass_value(mu, m: int, n: int, q, t, sign_pair: bool) -> Scalar:
    a, b = power(t, n), power(t, m)
    c, d = q * power(t, n - 1), q * power(t, m - 1)
    if sign_pair:
        b, d = -a, -c
    num = Cm(mu, q, q, t) * Cp(mu, power(t, m + n - 2) * q, q, t) * C0(mu, [a, b], q, t)
    den = Cm(mu, t, q, t) * Cp(mu, power(t, m + n - 1), q, t) * C0(mu, [c, d], q, t)
    return num / den


def check_U_grass2(n: int, mu, nu, qh, th) -> Report:
    """P_{mu nu-bar}(+-sqrt x_1, ..., +-sqrt x_n; q, t) against the GL_n (q^2, t^2) density."""
    w = LaurentWeight(mu, nu, 2 * n)
    qh, th = S(qh), S(th)
    q, t = qh * qh, th * th
    lam = w.shifted()
    k = w.shift
    if lam.size % 2:
        lhs = ZERO
    else:
        P = restrict_count(macdonald_P(lam, q, t), 2 * n)
        f = plethysm_sym(P, half_rule(max(P.cap, lam.size)))
        # prod over the 2n values +-sqrt x_i is (-1)^n prod x_i
        lhs = power(S(-1), n * k) * laurent_macdonald_ct(f, k, n, q * q, t * t)
    rhs = ZERO
    if w.mu == w.nu:
        rhs = power(S(-1), w.mu.size) * _grass_value(w.mu, n, n, q, t, True)
    return Report("u_grass2", lhs, rhs, {"n": n, "mu": w.mu, "nu": w.nu}, _spec(q_half=qh, t_half=th),
                  advisory=True)


def check_U_grass1(m: int, n: int, mu, nu, qh, th) -> Report:
    """P_{mu nu-bar}(x_1..x_m, y_1..y_n) against the product of GL_m and GL_n densities."""
    w = LaurentWeight(mu, nu, m + n)
    qh, th = S(qh), S(th)
    q, t = qh * qh, th * th
    lam = w.shifted()
    k = w.shift
    parts = _split_alphabets(restrict_count(macdonald_P(lam, q, t), m + n))
    grouped = {}
    for (a, b), c in parts.items():
        if a.size == k * m and b.size == k * n:
            grouped.setdefault(b, {})[a] = c
    lhs = ZERO
    for b, xs in grouped.items():
        cx = laurent_macdonald_ct(SymFunc("p", xs, max(CAPX, k * m)), k, m, q, t)
        if cx != 0:
            lhs += cx * laurent_macdonald_ct(SymFunc("p", {b: ONE}, max(CAPX, k * n)), k, n, q, t)
    rhs = ZERO
    if w.mu == w.nu and len(w.mu) <= m:
        rhs = _grass_value(w.mu, m, n, q, t, False)
    return Report("u_grass1", lhs, rhs, {"m": m, "n": n, "mu": w.mu, "nu": w.nu},
                  _spec(q_half=qh, t_half=th), advisory=True)



# ---------------------------------------------------------------------------
# D_m vanishing through Koornwinder combinations

def _poly_terms(f: BCPoly, shift: int) -> dict:
    return {tuple(x + shift for x in e): c for e, c in f.terms.items()}


def _times_factor(terms: dict, m: int, factor: tuple) -> dict:
    """Multiply by prod_j sum_(c, d) c x_j^d."""
    out = dict(terms)
    for j in range(m):
        nxt = {}
        for e, c in out.items():
            for coef, d in factor:
                f = list(e)
                f[j] += d
                f = tuple(f)
                nxt[f] = nxt.get(f, ZERO) + coef * c
        out = {e: c for e, c in nxt.items() if c != 0}
    return out


def dm_polynomial(m: int, n: int, qh, th) -> dict:
    """(x_1...x_m)^{n/2} P^{D_m}_{n omega_m}(1/x; q, t) as exponent -> coefficient.

    The D_m polynomial is realized as a combination of two Koornwinder
    polynomials of rectangular shape (up to an overall constant).
    """
    qh, th = S(qh), S(th)
    k = n // 2
    one = ONE
    if n % 2 == 0:
        kp1 = KParams(qh, th, (one, -one, qh, -qh), one)
        out = _poly_terms(koorn_poly(m, rect(k, m), kp1), k)
        if k:
            kp2 = KParams(qh, th, (qh * qh, -qh * qh, qh, -qh), qh * qh)
            second = _poly_terms(koorn_poly(m, rect(k - 1, m), kp2), k)
            second = _times_factor(second, m, ((one, -1), (-one, 1)))
            for e, c in second.items():
                out[e] = out.get(e, ZERO) + c
    else:
        shape = rect(k, m)
        kp1 = KParams(qh, th, (qh * qh, -one, qh, -qh), qh)
        kp2 = KParams(qh, th, (-qh * qh, one, qh, -qh), qh)
        out = _times_factor(_poly_terms(koorn_poly(m, shape, kp1), k), m, ((one, 0), (-one, 1)))
        for e, c in _times_factor(_poly_terms(koorn_poly(m, shape, kp2), k), m, ((one, 0), (one, 1))).items():
            out[e] = out.get(e, ZERO) + c
    return {e: c for e, c in out.items() if c != 0}


def dm_vanishing(m: int, n: int, qh, th) -> Report:
    """The Macdonald expansion of the twisted D_m polynomial is supported on lam = mu^2."""
    qh, th = S(qh), S(th)
    q, t = qh * qh, th * th
    terms = dm_polynomial(m, n, qh, th)
    if any(x < 0 for e in terms for x in e):
        raise ValueError("twisted D_m polynomial is not a polynomial")
    mcoeffs = {Partition(e): c for e, c in terms.items() if list(e) == sorted(e, reverse=True)}
    support = {}
    if mcoeffs:
        f = SymFunc("m", mcoeffs, max(CAPX, max(p.size for p in mcoeffs)))
        support = expand_peeling(f, lambda nu: restrict_count(macdonald_P(nu, q, t), m))
    bad = sorted(str(lam) for lam, c in support.items() if c != 0 and square_root(lam) is None)
    return Report("dm_vanishing", bad, [], {"m": m, "n": n}, _spec(q_half=qh, t_half=th),
                  note=f"{sum(1 for c in support.values() if c != 0)} terms")

