"""Partitions, their orders and the diagram transforms used throughout."""
from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Iterator


class ShapeError(ValueError):
    """A partition failed a shape precondition (box containment, length)."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; trailing zeros are dropped."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        if isinstance(parts, str):
            parts = parse_parts(parts)
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ShapeError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ShapeError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return ",".join(str(p) for p in self)

    def part(self, i: int) -> int:
        """lambda_i with 1-based index, zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def n(self) -> int:
        """n(lambda) = sum (i-1) lambda_i."""
        return sum(i * p for i, p in enumerate(self))

    def boxes(self) -> Iterator[tuple[int, int]]:
        """Boxes (i, j) with 1-based row i and column j."""
        for i, p in enumerate(self, start=1):
            for j in range(1, p + 1):
                yield i, j


def parse_parts(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(x) for x in text.split(",") if x.strip()]


def P(*parts) -> Partition:
    """Shorthand constructor: P(2, 1) or P("2,1")."""
    if len(parts) == 1 and not isinstance(parts[0], int):
        return Partition(parts[0])
    return Partition(parts)


EMPTY = Partition(())


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def stats(lam: Partition) -> tuple[int, int, int]:
    """(|lambda|, n(lambda), n(lambda'))."""
    lam = Partition(lam)
    return lam.size, lam.n(), conjugate(lam).n()


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """Extended dominance: every prefix sum of mu is at most that of lam."""
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu[i] if i < len(mu) else 0
        b += lam[i] if i < len(lam) else 0
        if a > b:
            return False
    return True


def contains(kappa: Partition, lam: Partition) -> bool:
    """kappa is a subset of lam as diagrams."""
    if len(kappa) > len(lam):
        return False
    return all(k <= l for k, l in zip(kappa, lam))


def is_vertical_strip(kappa: Partition, lam: Partition) -> bool:
    """kappa_i <= lam_i <= kappa_i + 1 for all i (written kappa < lam)."""
    for i in range(max(len(kappa), len(lam))):
        k = kappa[i] if i < len(kappa) else 0
        l = lam[i] if i < len(lam) else 0
        if not (k <= l <= k + 1):
            return False
    return True


def is_horizontal_strip(kappa: Partition, lam: Partition) -> bool:
    """lam_{i+1} <= kappa_i <= lam_i for all i."""
    if len(kappa) > len(lam) or len(lam) > len(kappa) + 1:
        return False
    for i in range(len(lam)):
        k = kappa[i] if i < len(kappa) else 0
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        if not (nxt <= k <= lam[i]):
            return False
    return True


def strip_relations(kappa: Partition, lam: Partition) -> dict:
    return {
        "contains": contains(kappa, lam),
        "vertical_strip": is_vertical_strip(kappa, lam),
        "horizontal_strip": is_horizontal_strip(kappa, lam),
    }


def double(lam: Partition) -> Partition:
    """2 lambda."""
    return Partition(2 * p for p in lam)


def square(lam: Partition) -> Partition:
    """lambda^2, each part repeated twice."""
    return Partition(p for p in lam for _ in range(2))


def rect(m: int, n: int) -> Partition:
    return Partition([m] * n) if m > 0 else EMPTY


def rect_plus(lam: Partition, m: int, n: int) -> Partition:
    """m^n + lambda, requires l(lambda) <= n."""
    if len(lam) > n:
        raise ShapeError(f"{lam} has more than {n} parts")
    return Partition(m + lam.part(i) for i in range(1, n + 1))


def rect_minus(lam: Partition, m: int, n: int) -> Partition:
    """m^n - lambda with parts m - lambda_{n+1-i}."""
    if len(lam) > n or (lam and lam[0] > m):
        raise ShapeError(f"{lam} does not fit in the box {m}^{n}")
    return Partition(m - lam.part(n + 1 - i) for i in range(1, n + 1))


def transforms(lam: Partition, m: int, n: int) -> dict:
    out = {"double": double(lam), "square": square(lam)}
    out["rect_plus"] = rect_plus(lam, m, n)
    out["rect_minus"] = rect_minus(lam, m, n)
    return out


def _sort_key(lam: Partition):
    # graded, then reverse lexicographic within a size
    return (lam.size, tuple(-p for p in lam))


@lru_cache(maxsize=None)
def partitions_of(size: int, max_part: int | None = None, max_len: int | None = None) -> tuple:
    """Partitions of ``size`` in reverse lexicographic order."""
    if max_part is None:
        max_part = size
    if max_len is None:
        max_len = size
    out = []

    def rec(rem, cap, prefix):
        if rem == 0:
            out.append(Partition(prefix))
            return
        if len(prefix) == max_len:
            return
        for p in range(min(rem, cap), 0, -1):
            prefix.append(p)
            rec(rem - p, p, prefix)
            prefix.pop()

    rec(size, max_part, [])
    return tuple(out)


def partitions_upto(size: int, max_part: int | None = None, max_len: int | None = None) -> list:
    out = []
    for k in range(size + 1):
        out.extend(partitions_of(k, max_part, max_len))
    return out


def in_box(m: int, n: int) -> list:
    """All partitions contained in m^n."""
    return partitions_upto(m * n, m, n)


@lru_cache(maxsize=None)
def dominated_by(lam: Partition, max_len: int | None = None) -> tuple:
    """All mu <= lam (extended dominance) with l(mu) <= max_len."""
    lam = Partition(lam)
    return tuple(mu for mu in partitions_upto(lam.size, None, max_len) if dominance_leq(mu, lam))


@lru_cache(maxsize=None)
def subpartitions(lam: Partition) -> tuple:
    """All kappa contained in lam."""
    lam = Partition(lam)
    if not lam:
        return (EMPTY,)
    return tuple(mu for mu in partitions_upto(lam.size, lam[0], len(lam)) if contains(mu, lam))


def between(kappa: Partition, lam: Partition) -> list:
    """All mu with kappa within mu within lam."""
    return [mu for mu in subpartitions(lam) if contains(kappa, mu)]


def vertical_strips_below(lam: Partition) -> list:
    """All kappa with kappa < lam (lam/kappa a vertical strip)."""
    return [k for k in subpartitions(lam) if is_vertical_strip(k, lam)]


def horizontal_strips_below(lam: Partition) -> list:
    return [k for k in subpartitions(lam) if is_horizontal_strip(k, lam)]


def enumerate_partitions(kind: str, *args, **kwargs) -> list:
    """Enumerate by predicate: ``("size", N)``, ``("box", m, n)`` or ``("dominated", lam, n)``."""
    if kind == "size":
        return partitions_upto(args[0])
    if kind == "box":
        return in_box(args[0], args[1])
    if kind == "dominated":
        lam = Partition(args[0])
        n = args[1] if len(args) > 1 else kwargs.get("max_len")
        return list(dominated_by(lam, n))
    raise ValueError(f"unknown enumeration predicate {kind!r}")


def filter_partitions(pred: Callable[[Partition], bool], size: int) -> list:
    return [p for p in partitions_upto(size) if pred(p)]


def dominance_sort_key(lam: Partition):
    """A linear extension of extended dominance (size first, then lex)."""
    return (lam.size, tuple(lam))
