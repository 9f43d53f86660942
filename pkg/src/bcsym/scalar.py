"""Exact rational scalars, parameter contexts and q-Pochhammer symbols.

Scalars are ``gmpy2.mpq`` values; every quantity that would need a square
root is supplied through an exact half-parameter instead.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Mapping

import gmpy2
from gmpy2 import mpq

Scalar = type(mpq(0))

ZERO = mpq(0)
ONE = mpq(1)


class DegenerateParameters(ArithmeticError):
    """A specialization hit a non-generic point (singular solve or zero pivot)."""


def S(value) -> Scalar:
    """Coerce ints, strings like ``"3/4"`` and rationals to a Scalar."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty scalar string")
        if "." in text or "e" in text.lower():
            raise ValueError(f"decimal input is not accepted: {value!r}")
        return mpq(text)
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted")
    return mpq(value)


def fmt(x) -> str:
    """Canonical ``p/q`` string (``p`` when the denominator is one)."""
    x = S(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def power(x: Scalar, k: int) -> Scalar:
    if k >= 0:
        return x ** k
    if x == 0:
        raise ZeroDivisionError("zero to a negative power")
    return ONE / (x ** (-k))


def prod(values: Iterable) -> Scalar:
    out = ONE
    for v in values:
        out = out * v
    return out


def qpoch(a, q, k: int) -> Scalar:
    """(a;q)_k, extended to negative k by (a;q)_k = 1/(a q^k;q)_{-k}."""
    a, q = S(a), S(q)
    if k >= 0:
        out = ONE
        x = a
        for _ in range(k):
            out *= 1 - x
            x *= q
        return out
    den = qpoch(a * power(q, k), q, -k)
    if den == 0:
        raise ZeroDivisionError(f"(a;q)_{k} has a vanishing factor")
    return ONE / den


def multi_qpoch(args: Iterable, q, k: int) -> Scalar:
    return prod(qpoch(a, q, k) for a in args)


FREE_NAMES = ("u", "v", "a", "b", "c", "d", "e", "f", "z")


@dataclass(frozen=True)
class QT:
    """The base pair (q, t) carried through their exact square roots."""

    qh: Scalar
    th: Scalar

    def __post_init__(self):
        object.__setattr__(self, "qh", S(self.qh))
        object.__setattr__(self, "th", S(self.th))

    @property
    def q(self) -> Scalar:
        return self.qh * self.qh

    @property
    def t(self) -> Scalar:
        return self.th * self.th

    def inverse(self) -> "QT":
        """(1/q, 1/t)."""
        return QT(1 / self.qh, 1 / self.th)

    def swap(self) -> "QT":
        """(t, q)."""
        return QT(self.th, self.qh)

    def squared(self, which: str = "both") -> "QT":
        """(q^2, t), (q, t^2) or (q^2, t^2) depending on ``which``."""
        qh = self.q if which in ("q", "both") else self.qh
        th = self.t if which in ("t", "both") else self.th
        return QT(qh, th)

    def key(self):
        return (self.qh, self.th)


@dataclass(frozen=True)
class Params:
    """Immutable parameter context.

    ``r`` holds the Koornwinder half-parameters with t_i = r_i**2.  Free
    parameters used by individual identities live in ``free``.
    """

    qh: Scalar
    th: Scalar
    s: Scalar = ONE
    T: Scalar = ONE
    Q: Scalar = ONE
    r: tuple = (ONE, ONE, ONE, ONE)
    free: Mapping[str, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "qh", S(self.qh))
        object.__setattr__(self, "th", S(self.th))
        object.__setattr__(self, "s", S(self.s))
        object.__setattr__(self, "T", S(self.T))
        object.__setattr__(self, "Q", S(self.Q))
        r = tuple(S(x) for x in self.r)
        if len(r) != 4:
            raise ValueError("exactly four Koornwinder half-parameters are required")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "free", {k: S(v) for k, v in sorted(dict(self.free).items())})
        if self.q in (0, 1) or self.t in (0, 1):
            raise DegenerateParameters("q and t must avoid 0 and 1")

    def __hash__(self):
        return hash((self.qh, self.th, self.s, self.T, self.Q, self.r, tuple(self.free.items())))

    @cached_property
    def q(self) -> Scalar:
        return self.qh * self.qh

    @cached_property
    def t(self) -> Scalar:
        return self.th * self.th

    @cached_property
    def ts(self) -> tuple:
        return tuple(x * x for x in self.r)

    @cached_property
    def t0hat_half(self) -> Scalar:
        """The hatted parameter t^_0 = sqrt(t0 t1 t2 t3 / q)."""
        return prod(self.r) / self.qh

    @cached_property
    def sqrt_qt(self) -> Scalar:
        return self.qh * self.th

    @property
    def qt(self) -> QT:
        return QT(self.qh, self.th)

    def __getitem__(self, name: str) -> Scalar:
        return self.free[name]

    def with_(self, **changes) -> "Params":
        return replace(self, **changes)

    def with_free(self, **values) -> "Params":
        free = dict(self.free)
        free.update({k: S(v) for k, v in values.items()})
        return replace(self, free=free)

    def as_strings(self) -> dict:
        out = {"q_half": fmt(self.qh), "t_half": fmt(self.th), "s": fmt(self.s),
               "T": fmt(self.T), "Q": fmt(self.Q)}
        for i, x in enumerate(self.r):
            out[f"r{i}"] = fmt(x)
        for k, v in self.free.items():
            out[k] = fmt(v)
        return out


def genericity_check(params: Params, imax: int, jmax: int) -> bool:
    """True iff 1 - q^i t^j != 0 on the box and all parameters are nonzero."""
    q, t = params.q, params.t
    for i in range(imax + 1):
        for j in range(jmax + 1):
            if (i, j) != (0, 0) and q ** i * t ** j == 1:
                return False
    values = [q, t, params.s, params.T, *params.ts, *params.free.values()]
    return all(v != 0 for v in values)


def random_rational(rng: random.Random, bound: int = 9, avoid=(0, 1, -1)) -> Scalar:
    """Uniform-ish draw of num/den with |num|, |den| <= bound, re-drawn on ``avoid``."""
    while True:
        num = rng.randint(-bound, bound)
        den = rng.randint(1, bound)
        x = mpq(num, den)
        if x not in avoid:
            return x


def random_params(rng: random.Random, free: Iterable[str] = (), bound: int = 9,
                  check: tuple = (6, 6), **fixed) -> Params:
    """Draw a guarded random specialization; rejected draws are re-sampled."""
    free = tuple(free)
    while True:
        values = dict(
            qh=random_rational(rng, bound), th=random_rational(rng, bound),
            s=random_rational(rng, bound), T=random_rational(rng, bound),
            Q=random_rational(rng, bound),
            r=tuple(random_rational(rng, bound) for _ in range(4)),
            free={name: random_rational(rng, bound) for name in free},
        )
        values.update(fixed)
        try:
            p = Params(**values)
        except DegenerateParameters:
            continue
        if genericity_check(p, *check):
            return p


def is_scalar_like(x) -> bool:
    return isinstance(x, (Scalar, int)) or isinstance(x, type(gmpy2.mpz(0)))
