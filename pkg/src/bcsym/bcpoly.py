"""BC_n-symmetric Laurent polynomials and the q-difference operator D^(n).

A BCPoly keeps a sparse map from exponent vectors to coefficients.  For
symmetric polynomials the orbit-sum (m-basis) view is the compact form;
either representation is produced lazily from the other.
"""
from __future__ import annotations

import heapq
from functools import lru_cache
from itertools import permutations, product
from typing import Mapping, Sequence

from .partitions import Partition, ShapeError
from .scalar import ONE, ZERO, S, Scalar, fmt, power


class NotSymmetric(ValueError):
    """The polynomial is not invariant under the hyperoctahedral group."""


class NonExactDivision(ArithmeticError):
    """A division that must be exact left a remainder (an implementation bug)."""


Exp = tuple


def _clean(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if v != 0}


@lru_cache(maxsize=None)
def _distinct_perms(lam: Partition, n: int) -> tuple:
    padded = tuple(lam) + (0,) * (n - len(lam))
    return tuple(sorted(set(permutations(padded)), reverse=True))


@lru_cache(maxsize=None)
def _orbit(lam: Partition, n: int) -> tuple:
    """Distinct exponent vectors in the BC_n orbit of lam."""
    out = set()
    for perm in _distinct_perms(lam, n):
        nz = [i for i, a in enumerate(perm) if a]
        for signs in product((1, -1), repeat=len(nz)):
            e = list(perm)
            for i, sg in zip(nz, signs):
                e[i] = sg * e[i]
            out.add(tuple(e))
    return tuple(sorted(out, reverse=True))


def _dominant(e: Exp) -> Partition:
    return Partition(sorted((abs(a) for a in e), reverse=True))


class BCPoly:
    """Laurent polynomial in x_1..x_n with exact coefficients."""

    __slots__ = ("n", "_terms", "_mview")

    def __init__(self, n: int, terms: Mapping | None = None, mview: Mapping | None = None):
        self.n = n
        self._terms = None if terms is None else _clean(dict(terms))
        self._mview = None if mview is None else {Partition(k): S(v) for k, v in mview.items() if v != 0}
        if self._terms is None and self._mview is None:
            self._terms = {}
        if self._mview is not None:
            for lam in self._mview:
                if len(lam) > n:
                    raise ShapeError(f"{lam} has more than {n} parts")

    # -- constructors -------------------------------------------------------
    @classmethod
    def constant(cls, n: int, c=ONE) -> "BCPoly":
        return cls(n, mview={Partition(()): S(c)})

    @classmethod
    def from_m(cls, coeffs: Mapping, n: int) -> "BCPoly":
        return cls(n, mview=coeffs)

    @classmethod
    def variable(cls, n: int, i: int, power_: int = 1) -> "BCPoly":
        e = [0] * n
        e[i] = power_
        return cls(n, {tuple(e): ONE})

    # -- views ----------------------------------------------------------------
    @property
    def terms(self) -> dict:
        if self._terms is None:
            out = {}
            for lam, c in self._mview.items():
                for e in _orbit(lam, self.n):
                    out[e] = out.get(e, ZERO) + c
            self._terms = _clean(out)
        return self._terms

    @property
    def mview(self) -> dict:
        if self._mview is None:
            self._mview = to_mbasis(self)
        return self._mview

    def is_symmetric(self) -> bool:
        try:
            to_mbasis(self)
            return True
        except NotSymmetric:
            return False

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, BCPoly):
            other = BCPoly.constant(self.n, other)
        self._check(other)
        if self._mview is not None and other._mview is not None:
            out = dict(self._mview)
            for k, v in other._mview.items():
                out[k] = out.get(k, ZERO) + v
            return BCPoly(self.n, mview=out)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return BCPoly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, BCPoly):
            other = BCPoly.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "BCPoly":
        c = S(c)
        if self._mview is not None:
            return BCPoly(self.n, mview={k: v * c for k, v in self._mview.items()})
        return BCPoly(self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, BCPoly):
            return self.scale(other)
        self._check(other)
        out = {}
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, ZERO) + ca * cb
        return BCPoly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = BCPoly.constant(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Scalar)):
            other = BCPoly.constant(self.n, other)
        if not isinstance(other, BCPoly) or other.n != self.n:
            return NotImplemented
        if self._mview is not None and other._mview is not None:
            return self._mview == other._mview
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def _check(self, other):
        if other.n != self.n:
            raise ShapeError(f"alphabet sizes differ: {self.n} vs {other.n}")

    def is_zero(self) -> bool:
        if self._mview is not None:
            return not self._mview
        return not self.terms

    def __repr__(self):
        if self._mview is not None:
            body = " + ".join(f"({fmt(c)})m{list(l)}" for l, c in sorted(self._mview.items(), key=lambda kv: (-kv[0].size, tuple(-x for x in kv[0]))))
        else:
            body = " + ".join(f"({fmt(c)})x^{list(e)}" for e, c in sorted(self.terms.items(), reverse=True))
        return f"BCPoly[n={self.n}: {body or '0'}]"

    # -- evaluation and substitution -----------------------------------------
    def __call__(self, point: Sequence) -> Scalar:
        return evaluate(self, point)

    def scale_vars(self, factors: Sequence) -> "BCPoly":
        """x_i -> factors[i] * x_i."""
        factors = [S(f) for f in factors]
        out = {}
        for e, c in self.terms.items():
            v = c
            for f, a in zip(factors, e):
                if a:
                    v = v * power(f, a)
            out[e] = v
        return BCPoly(self.n, out)

    def invert_vars(self, signs: Sequence[int]) -> "BCPoly":
        """x_i -> x_i^{signs[i]}."""
        return BCPoly(self.n, {tuple(a * s for a, s in zip(e, signs)): c for e, c in self.terms.items()})

    def specialize_tail(self, values: Sequence) -> "BCPoly":
        """Substitute the last len(values) variables by scalars."""
        values = [S(v) for v in values]
        k = len(values)
        m = self.n - k
        out = {}
        for e, c in self.terms.items():
            v = c
            for val, a in zip(values, e[m:]):
                if a:
                    v = v * power(val, a)
            key = e[:m]
            out[key] = out.get(key, ZERO) + v
        return BCPoly(m, out)

    def embed(self, n: int) -> "BCPoly":
        """View as a polynomial in n >= self.n variables (extra exponents zero)."""
        if n == self.n:
            return self
        if self._mview is not None:
            return BCPoly(n, mview=self._mview)
        pad = (0,) * (n - self.n)
        return BCPoly(n, {e + pad: c for e, c in self.terms.items()})

    def top_component(self) -> dict:
        """m-basis coefficients of the top-degree homogeneous part."""
        mv = self.mview
        d = max((l.size for l in mv), default=0)
        return {l: c for l, c in mv.items() if l.size == d}

    def coefficient_map(self) -> dict:
        return dict(self.mview)

    def to_json(self):
        return {"n": self.n,
                "terms": [{"exponents": list(e), "coeff": fmt(c)} for e, c in sorted(self.terms.items(), reverse=True)]}


# ---------------------------------------------------------------------------

def orbit_sum(lam, n: int) -> BCPoly:
    lam = Partition(lam)
    if len(lam) > n:
        raise ShapeError(f"{lam} has more than {n} parts")
    return BCPoly(n, mview={lam: ONE})


def to_mbasis(f: BCPoly) -> dict:
    """Coefficients c_lam with f = sum c_lam m_lam; raises NotSymmetric."""
    if f._mview is not None:
        return dict(f._mview)
    terms = f.terms
    out = {}
    for e, c in terms.items():
        if all(a >= 0 for a in e) and all(e[i] >= e[i + 1] for i in range(len(e) - 1)):
            out[Partition(e)] = c
    # verify the orbit expansion reproduces f
    count = sum(len(_orbit(l, f.n)) for l in out)
    if count != len(terms):
        raise NotSymmetric("term count does not match the orbit expansion")
    for lam, c in out.items():
        for e in _orbit(lam, f.n):
            if terms.get(e) != c:
                raise NotSymmetric(f"coefficient mismatch in the orbit of {lam}")
    return out


def from_mbasis(coeffs: Mapping, n: int) -> BCPoly:
    return BCPoly(n, mview=coeffs)


def _power_sums_table(point: Sequence, top: int):
    # table[i][k] = x_i^k + x_i^-k for k >= 1
    table = []
    for x in point:
        row = [ONE]
        inv = 1 / x
        xp, ip = ONE, ONE
        for _ in range(top):
            xp *= x
            ip *= inv
            row.append(xp + ip)
        table.append(row)
    return table


def eval_m(lam: Partition, point: Sequence, table=None) -> Scalar:
    """m_lam evaluated at a point via the orbit structure."""
    n = len(point)
    if len(lam) > n:
        return ZERO
    if table is None:
        table = _power_sums_table(point, lam[0] if lam else 0)
    total = ZERO
    for perm in _distinct_perms(lam, n):
        v = ONE
        for i, a in enumerate(perm):
            if a:
                v = v * table[i][a]
        total += v
    return total


def evaluate(f: BCPoly, point: Sequence) -> Scalar:
    point = [S(x) for x in point]
    if len(point) != f.n:
        raise ShapeError("point has the wrong dimension")
    if f._mview is not None:
        top = max((l[0] for l in f._mview if l), default=0)
        table = _power_sums_table(point, top)
        return sum((c * eval_m(l, point, table) for l, c in f._mview.items()), ZERO)
    total = ZERO
    for e, c in f.terms.items():
        v = c
        for x, a in zip(point, e):
            if a:
                v = v * power(x, a)
        total += v
    return total


def partition_point(mu, n: int, s, q, t) -> list:
    """x_i = q^{mu_i} t^{n-i} s."""
    mu = Partition(mu)
    if len(mu) > n:
        raise ShapeError(f"{mu} has more than {n} parts")
    s, q, t = S(s), S(q), S(t)
    return [power(q, mu.part(i)) * power(t, n - i) * s for i in range(1, n + 1)]


def eval_at_partition(f: BCPoly, mu, s, q, t) -> Scalar:
    return evaluate(f, partition_point(mu, f.n, s, q, t))


# ---------------------------------------------------------------------------
# exact division by binomials x^a - x^b

def _divide_binomial(terms: dict, lead: Exp, tail: Exp) -> dict:
    """Exact quotient of a polynomial (nonnegative exponents) by x^lead - x^tail.

    ``lead`` must be lexicographically larger than ``tail``.
    """
    rem = dict(terms)
    heap = [tuple(-a for a in e) for e in rem]
    heapq.heapify(heap)
    quot = {}
    while heap:
        neg = heapq.heappop(heap)
        e = tuple(-a for a in neg)
        c = rem.pop(e, None)
        if c is None or c == 0:
            continue
        d = tuple(a - b for a, b in zip(e, lead))
        if any(a < 0 for a in d):
            raise NonExactDivision(f"remainder term at {e}")
        quot[d] = quot.get(d, ZERO) + c
        new = tuple(a + b for a, b in zip(d, tail))
        if new in rem:
            rem[new] += c
        else:
            rem[new] = c
            heapq.heappush(heap, tuple(-a for a in new))
    return quot


def _shift(terms: dict, by: Exp) -> dict:
    return {tuple(a + b for a, b in zip(e, by)): c for e, c in terms.items()}


def divide_by_bc_vandermonde(terms: dict, n: int) -> dict:
    """Divide by prod_i (x_i - 1/x_i) prod_{i<j} (x_i + 1/x_i - x_j - 1/x_j)."""
    if not terms:
        return {}
    low = [min(e[i] for e in terms) for i in range(n)]
    work = _shift(terms, tuple(-a for a in low))
    unit = lambda i, k=1: tuple(k if j == i else 0 for j in range(n))
    zero = (0,) * n
    for i in range(n):
        work = _divide_binomial(work, unit(i, 2), zero)
    for i in range(n):
        for j in range(i + 1, n):
            work = _divide_binomial(work, unit(i), unit(j))
            both = tuple(1 if k in (i, j) else 0 for k in range(n))
            work = _divide_binomial(work, both, zero)
    # the Vandermonde is the binomial product times prod_i x_i^{-n}
    back = [low[i] + n for i in range(n)]
    return _shift(work, tuple(back))


@lru_cache(maxsize=64)
def _d_kernel(n: int, single: tuple, t) -> dict:
    """Terms of prod_i g(x_i) prod_{i<j} [-x_j^{-1}(1-x_j/x_i)(1-t x_i x_j)].

    ``single`` lists (exponent, coefficient) pairs of the one-variable factor g.
    """
    unit = lambda i, k=1: tuple(k if j == i else 0 for j in range(n))
    poly = {(0,) * n: ONE}

    def mul(a, b):
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, ZERO) + ca * cb
        return _clean(out)

    for i in range(n):
        poly = mul(poly, {unit(i, k): c for k, c in single})
    for i in range(n):
        for j in range(i + 1, n):
            # -x_j^{-1} (1 - x_j/x_i)(1 - t x_i x_j)
            a = {unit(j, -1): -ONE, unit(i, -1): ONE}
            b = {(0,) * n: ONE, tuple(1 if k in (i, j) else 0 for k in range(n)): -t}
            poly = mul(poly, mul(a, b))
    return poly


def _apply_kernel(f: BCPoly, single: tuple, qh, t) -> BCPoly:
    n = f.n
    if n == 0:
        return f
    to_mbasis(f)  # raises NotSymmetric
    shifted = {e: c * power(qh, sum(e)) for e, c in f.terms.items()}
    kernel = _d_kernel(n, single, t)
    base = {}
    for ea, ca in kernel.items():
        for eb, cb in shifted.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            base[e] = base.get(e, ZERO) + ca * cb
    base = _clean(base)
    total = {}
    for signs in product((1, -1), repeat=n):
        sg = 1
        for s_ in signs:
            sg *= s_
        for e, c in base.items():
            key = tuple(a * s_ for a, s_ in zip(e, signs))
            total[key] = total.get(key, ZERO) + (c if sg == 1 else -c)
    total = _clean(total)
    out = BCPoly(n, divide_by_bc_vandermonde(total, n))
    to_mbasis(out)
    return out


def apply_D(f: BCPoly, u1, u2, qh, t) -> BCPoly:
    """D^(n)(u1, u2; q, t) f with q = qh^2, by clearing the BC Vandermonde.

    The one-variable factor (1-u1 x)(1-u2 x)/(1-x^2) becomes
    -x^{-1}(1-u1 x)(1-u2 x) over x - 1/x.
    """
    u1, u2 = S(u1), S(u2)
    single = ((-1, -ONE), (0, u1 + u2), (1, -u1 * u2))
    return _apply_kernel(f, single, S(qh), S(t))


def apply_D_special(f: BCPoly, qh, t) -> BCPoly:
    """The s-independent operator with one-variable factor x/(1-x^2) = -1/(x-1/x)."""
    return _apply_kernel(f, ((0, -ONE),), S(qh), S(t))


def eigenvalue(lam, n: int, u, qh, t) -> Scalar:
    """E^(n)_lam(u) = q^{-|lam|/2} prod_i (1 - q^{lam_i} t^{n-i} u)."""
    lam = Partition(lam)
    q = S(qh) ** 2
    out = power(S(qh), -lam.size)
    for i in range(1, n + 1):
        out *= 1 - power(q, lam.part(i)) * power(S(t), n - i) * S(u)
    return out
