"""Identity-check records shared by every verify routine."""
from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any

from .scalar import Scalar, fmt


def serialize(value: Any) -> Any:
    """JSON-friendly rendering of scalars, partitions, maps and polynomials."""
    if isinstance(value, Scalar) or isinstance(value, int) and not isinstance(value, bool):
        return fmt(value)
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, tuple) and all(isinstance(x, int) for x in value):
        return ",".join(str(x) for x in value)
    if isinstance(value, dict):
        return [{"key": serialize(k), "value": serialize(v)} for k, v in sorted(value.items(), key=lambda kv: str(kv[0]))]
    if isinstance(value, (list, tuple)):
        return [serialize(v) for v in value]
    return value


@dataclass
class Report:
    name: str
    lhs: Any
    rhs: Any
    shapes: dict = field(default_factory=dict)
    spec: dict = field(default_factory=dict)
    advisory: bool = False
    note: str = ""
    elapsed: float = 0.0

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self):
        return self.equal

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "identity": self.name,
            "shapes": {k: serialize(v) for k, v in sorted(self.shapes.items())},
            "specialization": dict(sorted(self.spec.items())),
            "lhs": serialize(self.lhs),
            "rhs": serialize(self.rhs),
            "equal": self.equal,
            "advisory": self.advisory,
        }
        if self.note:
            out["note"] = self.note
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    def __repr__(self):
        status = "ok" if self.equal else "FAIL"
        return f"<Report {self.name} {self.shapes} {status}>"


@contextmanager
def timed(report_list: list):
    start = time.perf_counter()
    marker = len(report_list)
    yield
    elapsed = time.perf_counter() - start
    for r in report_list[marker:]:
        r.elapsed = elapsed


def all_equal(reports) -> bool:
    return all(r.equal for r in reports)


def failures(reports) -> list:
    return [r for r in reports if not r.equal]
