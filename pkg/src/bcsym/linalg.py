"""Dense exact Gaussian elimination over the rationals."""
from __future__ import annotations

from .scalar import ZERO, DegenerateParameters


def solve(matrix: list, rhs: list) -> list:
    """Solve A x = b for square A; raises DegenerateParameters if singular."""
    n = len(matrix)
    a = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise DegenerateParameters("singular linear system")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
        prow = a[col]
        inv = 1 / prow[col]
        for r in range(col + 1, n):
            row = a[r]
            f = row[col]
            if f == 0:
                continue
            f = f * inv
            for k in range(col, n + 1):
                if prow[k] != 0:
                    row[k] -= f * prow[k]
    x = [ZERO] * n
    for r in range(n - 1, -1, -1):
        row = a[r]
        acc = row[n]
        for k in range(r + 1, n):
            if row[k] != 0:
                acc -= row[k] * x[k]
        x[r] = acc / row[r]
    return x


def solve_columns(columns: list, target: dict, keys: list) -> list:
    """Express ``target`` (dict over ``keys``) in the span of ``columns`` (dicts)."""
    matrix = [[col.get(k, ZERO) for col in columns] for k in keys]
    return solve(matrix, [target.get(k, ZERO) for k in keys])
