"""Named verification suites.

A suite maps a run configuration and one random specialization to a list
of Reports.  The CLI and the acceptance tests both go through this
registry, so a suite run from the command line checks exactly what the
tests check.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import cnorm, hyperg, interpolation as ip, koornwinder as kw, lifting as lf, vanishing as vn
from .bcpoly import BCPoly
from .partitions import Partition, in_box, partitions_upto, subpartitions
from .report import Report
from .scalar import DegenerateParameters, Params, S, power, random_params

FREE = ("ah", "b", "c", "d", "e", "u", "u1", "u2", "u3", "v", "w", "x", "y", "z", "s2", "T2")


@dataclass(frozen=True)
class SuiteConfig:
    max_size: int | None = None
    max_n: int | None = None
    order: int = 3
    extra: dict = field(default_factory=dict)

    def size(self, default: int) -> int:
        return default if self.max_size is None else self.max_size

    def n(self, default: int) -> int:
        return default if self.max_n is None else self.max_n


def _generic(p: Params, bound: int = 8) -> bool:
    """Reject q^i = t^j and s^2 q^i t^j = 1 for small |i|, |j| of either sign.

    The series parameters a = ah^2, b, c, d, e, u, the Koornwinder parameters
    and their product must also avoid x q^i t^j = 1 singly and in pairwise
    products and ratios.
    """
    q, t = p.q, p.t
    if p.qh in (1, -1) or p.th in (1, -1):
        return False
    shifts = [p.s * p.s, p["s2"] * p["s2"]] if "s2" in p.free else [p.s * p.s]
    hyp = [p[k] for k in ("b", "c", "d", "e", "u") if k in p.free]
    if "ah" in p.free:
        hyp.append(p["ah"] * p["ah"])
    if p.r:
        hyp += list(p.r) + list(p.ts) + [p.t0hat_half, p.t0hat_half ** 2]
    k = len(hyp)
    singles = hyp + [1 / x for x in hyp]
    # every product or ratio of two distinct entries (x * 1/x is skipped)
    pairs = [x * y for i, x in enumerate(singles) for j, y in enumerate(singles)
             if i < j and j != i + k]
    small = 4
    for i in range(-bound, bound + 1):
        for j in range(-bound, bound + 1):
            x = power(q, i) * power(t, j)
            if (i, j) != (0, 0) and x == 1:
                return False
            # interpolation points collide when s^2 q^i t^j = 1
            if any(x * s2 == 1 for s2 in shifts):
                return False
            if abs(i) <= small and abs(j) <= small:
                if any(x * y == 1 for y in singles) or any(x * y == 1 for y in pairs):
                    return False
    return True


def draw(seed: int, index: int) -> Params:
    """The index-th guarded random specialization for a seed."""
    rng = random.Random(f"bcsym:{seed}:{index}")
    while True:
        p = random_params(rng, FREE, bound=9)
        if _generic(p):
            return p


# ---------------------------------------------------------------------------
# cnorm

def s_c_lemmas(cfg, p):
    return [r for lam in partitions_upto(cfg.size(6)) for r in cnorm.verify_c_lemmas(lam, p.s, p.qt)]


def s_skew(cfg, p):
    # smallest boxes meeting each hypothesis keep the shifted shapes small
    out = []
    for lam in partitions_upto(cfg.size(6)):
        width, length = max(lam.part(1), 1), max(len(lam), 1)
        for kappa in subpartitions(lam):
            out += cnorm.verify_skew_lemma(lam, kappa, p["u"], p.qt, 1, length,
                                           ("basic", "shift", "corollary"))
            out += cnorm.verify_skew_lemma(lam, kappa, p["u"], p.qt, width, length, ("complement",))
    return out


# ---------------------------------------------------------------------------
# interpolation

def _shapes(size, n):
    return partitions_upto(size, None, n)


def s_interp_core(cfg, p):
    out = []
    for n in range(1, cfg.n(3) + 1):
        for lam in _shapes(cfg.size(5), n):
            out += ip.extra_vanishing(n, lam, p)
            out += ip.symmetry(n, lam, p)
            out.append(ip.leading_term(n, lam, p))
            out.append(ip.okounkov_rescaling(n, lam, p))
            for m in (1, 2):
                out += ip.dec_mn(n, m, lam, p)
    return out


def s_interp_identities(cfg, p):
    out = []
    for n in range(1, cfg.n(3) + 1):
        for lam in _shapes(cfg.size(4), n):
            for u in ("u1", "u2", "u3"):
                out.append(ip.difference_equation(n, lam, p[u], p))
            out.append(ip.special_difference(n, lam, p))
            for m in (1, 2):
                out.append(ip.bulk_branch(n, m, lam, p["v"], p))
                out.append(ip.bulk_pieri(n, lam, m, p["w"], p))
            out.append(ip.branch(n, lam, p["v"], p))
            out.append(ip.connection(n, lam, p["s2"], p))
            out.append(ip.eval_at_geometric(n, lam, p["x"], p))
            out.append(ip.e_pieri(n, lam, p["w"], p))
            out.append(ip.g_pieri_truncated(n, lam, cfg.order, p))
    for n in (1, 2):
        for m in (1, 2):
            out.append(ip.cauchy(n, m, p))
    return out


# ---------------------------------------------------------------------------
# hypergeometric

def _hyperg_suite(name):
    fn = hyperg.SUITE[name]

    def run(cfg, p):
        out = []
        for lam in partitions_upto(cfg.size(5)):
            for kappa in subpartitions(lam):
                r = fn(lam, kappa, p)
                out += r if isinstance(r, list) else [r]
        return out
    run.__name__ = f"s_{name}"
    return run


def s_jackson(cfg, p):
    out = []
    for m, n in ((1, 1), (1, 2), (2, 1), (2, 2)):
        out.append(hyperg.jackson(m, n, p))
        out.append(hyperg.watson_rectangle(m, n, p))
    return out


def s_binomial_values(cfg, p):
    out = []
    for lam in partitions_upto(cfg.size(5)):
        out += hyperg.binomial_special_values(lam, p)
        for mu in subpartitions(lam):
            out += hyperg.binomial_independence(lam, mu, p)
    for mm in range(4):
        for length in range(mm + 1):
            out += hyperg.binomial_one_row(mm, length, p)
    for lam in partitions_upto(3, 2, 2):
        for mu in subpartitions(lam):
            out += hyperg.binomial_shift(lam, mu, 2, 2, p)
            out += hyperg.binomial_complement(lam, mu, 2, 2, p)
    return out


# ---------------------------------------------------------------------------
# Koornwinder

def _kp(p):
    return kw.KParams.from_params(p)


def s_koorn_construction(cfg, p):
    kp = _kp(p)
    out = []
    shapes = partitions_upto(cfg.size(3), None, 2)
    for lam in shapes:
        out += kw.binomial_construction(2, lam, kp)
        out += kw.trivial_symmetries(2, lam, kp)
        out.append(kw.hat_invariance(2, lam, kp))
        for mu in shapes:
            out.append(kw.evaluation_symmetry(2, lam, mu, kp))
    return out


def s_koorn_parameter_symmetry(cfg, p):
    kp = _kp(p)
    return [kw.parameter_symmetry(2, lam, kp) for lam in partitions_upto(cfg.size(3), None, 2)]


def s_koorn_qracah(cfg, p):
    kp = kw.KParams.qracah(p.qh, p.th, p.ts[0], p.r[2], p.r[3], 2, 2)
    out = [kw.qracah_norm_check(2, 2, kp)]
    box = in_box(2, 2)
    for lam in box:
        for mu in box:
            out.append(kw.qracah_orthogonality(2, 2, lam, mu, kp))
        out.append(kw.qracah_vs_virtual(2, 2, BCPoly.from_m({lam: 1}, 2), kp, str(lam)))
    return out


def s_koorn_identities(cfg, p):
    kp = _kp(p)
    kp2 = kw.KParams.from_halves(p.qh, p.th, [p.r[0], p["b"], p["c"], p["d"]])
    out = []
    for lam in partitions_upto(4, None, 2):
        out.append(kw.kadell(2, lam, kp))
    for lam in partitions_upto(2, None, 2):
        for mu in partitions_upto(2, None, 2):
            out.append(kw.orthogonality(2, lam, mu, kp))
    for lam in partitions_upto(cfg.size(3), None, 2):
        out.append(kw.inverse_binomial(2, lam, kp))
        out.append(kw.connection(2, lam, kp, kp2))
        out.append(kw.diff_action(2, lam, kp))
        out.append(kw.special_connection(2, lam, kp))
        out.append(kw.connt(2, lam, kp))
    for lam in partitions_upto(cfg.size(3), None, 1):
        out.append(kw.brancht(1, lam, kp))
    for m, n in ((1, 1), (1, 2), (2, 1), (2, 2)):
        out.append(kw.cauchy_koorn(m, n, kp))
    for m in (1, 2):
        out += kw.w8_7_integral(2, m, p["u"], kp)
    out.append(kw.mn_symmetry_series(2, 1, kp, cfg.order))
    out.append(kw.mn_symmetry_series(1, 2, kp, cfg.order))
    return out


# ---------------------------------------------------------------------------
# lifting

def s_lift_interp(cfg, p):
    qh, th, s, T = p.qh, p.th, p.s, p.T
    out = []
    for n in (1, 2):
        for lam in partitions_upto(3):
            out.append(lf.restriction(lam, n, s, qh, th))
    for lam in partitions_upto(cfg.size(4)):
        out.append(lf.interp_triangularity(lam, T, s, qh, th))
        out.append(lf.lifted_connection(lam, T, s, p["s2"], qh, th))
        out.append(lf.omega_involution(lam, qh, th))
    for lam in partitions_upto(3):
        out += lf.lifted_vanishing(lam, T, s, qh, th)
        out.append(lf.hom_sT(lam, T, p["T2"], s, qh, th))
        out.append(lf.duality(lam, T, s, qh, th))
        out.append(lf.omega_on_macdonald(lam, qh, th))
        out.append(lf.lifted_bulk_branch(lam, p["u"], p["v"], T, s, qh, th))
        out.append(lf.eval_at_constant(lam, p["x"], p["y"], p["z"], qh, th))
        for mu in subpartitions(lam):
            out += lf.dual_binomial(lam, mu, s, qh, th)
    for n in range(1, 5):
        out.append(lf.e_difference(n, T, s, qh, th))
    return out


def s_lift_virtual(cfg, p):
    qh, th, s, T = p.qh, p.th, p.s, p.T
    out = [lf.lifted_cauchy(T, s, qh, th, 4), lf.lifted_cauchy_dual(T, s, qh, th, 4)]
    for mu in partitions_upto(2):
        out.append(lf.virtual_triangularity(mu, T, s, qh, th, 4))
    for m, n in ((1, 1), (1, 2), (2, 1), (2, 2)):
        for mu in partitions_upto(m * n, m, n):
            out.append(lf.virtual_consistency(mu, m, n, s, qh, th))
    return out


def s_lift_koorn(cfg, p):
    kp = _kp(p)
    T = p.T
    out = []
    for n in (1, 2):
        for lam in partitions_upto(3):
            out.append(lf.koorn_restriction(lam, n, kp))
    for lam in partitions_upto(2):
        for mu in partitions_upto(2):
            out.append(lf.koorn_orthogonality(lam, mu, T, kp))
    for lam in partitions_upto(cfg.size(4)):
        out.append(lf.koorn_triangularity(lam, T, kp))
    for lam in partitions_upto(3):
        out.append(lf.koorn_duality(lam, T, kp))
        out.append(lf.koorn_plethystic_symmetry(lam, T, kp))
        out.append(lf.koorn_kadell(lam, T, kp))
    return out


def s_lift_t0(cfg, p):
    kp = _kp(p)
    other = kw.KParams.from_halves(p.qh, p.th, [p["ah"], p["b"], p["c"], p["d"]])
    size = cfg.size(4)
    out = [lf.ik_equals_ig(lam, kp) for lam in partitions_upto(size)]
    for lam in partitions_upto(size // 2):
        for mu in partitions_upto(size // 2):
            out.append(lf.t0_orthogonality(lam, mu, kp))
    out += lf.gaussian_lemma(kp, size)
    for lam in partitions_upto(3):
        out.append(lf.t0_leading(lam, kp))
        out.append(lf.t0_branching(lam, kp))
        out.append(lf.t0_plethystic_symmetry(lam, kp, other))
        out.append(lf.t0_g_pieri(lam, kp, cfg.order))
        out.append(lf.t0_e_pieri(lam, kp, cfg.order))
    return out


# ---------------------------------------------------------------------------
# vanishing

def v_t0(cfg, p):
    return [r for lam in partitions_upto(cfg.size(6)) for r in vn.check_T0_props(lam, p.qh, p.th)]


def _usp_shapes(size):
    return [lam for lam in partitions_upto(size) if len(lam) <= 4]


def _uo_shapes(size):
    return [lam for lam in partitions_upto(size) if lam.part(1) <= 4]


def v_usp(cfg, p):
    out = []
    for n in range(1, cfg.n(3) + 1):
        for lam in _usp_shapes(cfg.size(6)):
            if len(lam) <= 2 * n:
                out.append(vn.check_USp(n, lam, p.qh, p.th))
    for lam in _usp_shapes(cfg.size(6)):
        out.append(vn.check_T_generic(lam, p.T, p.qh, p.th, "usp"))
    return out


def v_uo(cfg, p):
    out = []
    for n in range(1, cfg.n(3) + 1):
        for lam in _uo_shapes(cfg.size(6)):
            if len(lam) <= 2 * n:
                out += vn.check_UO(n, lam, p.qh, p.th)
            if len(lam) <= 2 * n + 1:
                out += vn.check_UO_odd(n, lam, p.qh, p.th)
    for lam in _uo_shapes(cfg.size(6)):
        out.append(vn.check_T_generic(lam, p.T, p.qh, p.th, "uo"))
        out.append(vn.check_duality(lam, p.T, p.qh, p.th))
    return out


def v_q_equals_t(cfg, p):
    return [r for n in range(1, cfg.n(3) + 1) for lam in partitions_upto(cfg.size(6))
            for r in vn.check_q_equals_t(n, lam, p.th)]


def v_schur(cfg, p):
    return [r for lam in partitions_upto(cfg.size(6)) for r in vn.schur_crosscheck(lam, p.T, p.qh)]


def v_o1(cfg, p):
    return [r for lam in partitions_upto(cfg.size(4)) for r in vn.check_O1_props(lam, p.T, p.qh, p.th, p.r)]


def v_o2(cfg, p):
    return [r for lam in partitions_upto(cfg.size(4))
            for r in vn.check_O2_theorems(lam, p.T, p.qh, p.th, p.r[0], p.r[1])]


def v_dm(cfg, p):
    return [vn.dm_vanishing(m, n, p.qh, p.th) for m in (1, 2, 3) for n in range(cfg.n(2) + 1)]


def v_ograss(cfg, p):
    return [vn.check_O_grass(lam, p.T, p.qh, p.th, p.r[0], p.r[1]) for lam in partitions_upto(cfg.size(4))]


def v_spgrass(cfg, p):
    return [vn.check_Sp_grass(lam, p.T, p.qh, p.th, p.r[0], p.r[1]) for lam in partitions_upto(cfg.size(4))]


def _weights(size, total):
    for mu in partitions_upto(size):
        for nu in partitions_upto(size):
            if len(mu) + len(nu) <= total:
                yield mu, nu


def v_ugrass2(cfg, p):
    return [vn.check_U_grass2(n, mu, nu, p.qh, p.th)
            for n in (1, 2) for mu, nu in _weights(cfg.size(2), 2 * n)]


def v_ugrass1(cfg, p):
    return [vn.check_U_grass1(m, n, mu, nu, p.qh, p.th)
            for m, n in ((1, 1), (1, 2), (2, 2)) for mu, nu in _weights(cfg.size(2), m + n)]


# ---------------------------------------------------------------------------
# registry

SUITES: dict = {
    "cnorm": {"c_lemmas": s_c_lemmas, "skew": s_skew},
    "interpolation": {"core": s_interp_core, "identities": s_interp_identities},
    "hyperg": {**{name: _hyperg_suite(name) for name in hyperg.SUITE},
               "jackson": s_jackson, "binomial_values": s_binomial_values},
    "koornwinder": {"construction": s_koorn_construction, "parameter_symmetry": s_koorn_parameter_symmetry,
                    "qracah": s_koorn_qracah, "identities": s_koorn_identities},
    "lifting": {"interp": s_lift_interp, "virtual": s_lift_virtual, "koorn": s_lift_koorn, "t0": s_lift_t0},
    "vanishing": {"t0": v_t0, "usp": v_usp, "uo": v_uo, "q_equals_t": v_q_equals_t, "schur": v_schur, "o1": v_o1, "o2": v_o2,
                  "dm": v_dm, "ograss": v_ograss, "spgrass": v_spgrass, "ugrass1": v_ugrass1,
                  "ugrass2": v_ugrass2},
}

# aliases accepted by the vanishing command
FAMILIES = SUITES["vanishing"]


def _error_report(module: str, suite: str, p: Params, exc: Exception) -> Report:
    return Report(f"{module}.{suite}", type(exc).__name__, "no error", {}, p.as_strings(),
                  note=str(exc))


def run_suite(module: str, suite: str, cfg: SuiteConfig, seed: int, index: int) -> list:
    """Run one suite at the index-th specialization; module errors become failed reports."""
    fn: Callable = SUITES[module][suite]
    p = draw(seed, index)
    try:
        reports = fn(cfg, p)
    except (DegenerateParameters, ZeroDivisionError, ArithmeticError, ValueError) as exc:
        reports = [_error_report(module, suite, p, exc)]
    for r in reports:
        r.spec = {**r.spec, "draw": str(index)}
    return reports


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("()[]")
    if not text:
        return Partition(())
    return Partition(tuple(int(x) for x in text.replace(" ", "").split(",") if x))


__all__ = ["SUITES", "FAMILIES", "SuiteConfig", "draw", "run_suite", "parse_partition", "S"]
