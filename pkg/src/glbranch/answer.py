"""The verdict type returned by the multiplicity oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DomainError

EXACT = "exact"
BOUNDS = "bounds"
NOT_COVERED = "not_covered"


@dataclass(frozen=True)
class MultiplicityAnswer:
    """An exact Hom dimension, an interval, or nothing, plus where it came from.

    ``ext_vanishes`` is ``True`` when all higher Ext groups are known to
    vanish, ``False`` when they are known not to, and ``None`` when unknown.
    ``result`` is a short stable tag naming the result that fired and
    ``trace`` a human-readable explanation.
    """

    kind: str
    lower: Optional[int] = None
    upper: Optional[int] = None
    ext_vanishes: Optional[bool] = None
    result: str = ""
    trace: str = ""

    def __post_init__(self):
        if self.kind == EXACT:
            if self.lower is None or self.lower != self.upper or self.lower < 0:
                raise DomainError("an exact answer needs lower == upper >= 0")
        elif self.kind == BOUNDS:
            if self.lower is None or self.upper is None or not 0 <= self.lower <= self.upper:
                raise DomainError(f"invalid bounds [{self.lower}, {self.upper}]")
        elif self.kind != NOT_COVERED:
            raise DomainError(f"unknown answer kind {self.kind!r}")

    @classmethod
    def exact(cls, value, ext_vanishes=None, result="", trace=""):
        return cls(EXACT, value, value, ext_vanishes, result, trace)

    @classmethod
    def bounds(cls, lower, upper, result="", trace=""):
        return cls(BOUNDS, lower, upper, None, result, trace)

    @classmethod
    def not_covered(cls, result="", trace=""):
        return cls(NOT_COVERED, None, None, None, result, trace)

    @property
    def is_exact(self) -> bool:
        return self.kind == EXACT

    @property
    def value(self):
        return self.lower if self.is_exact else None

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.is_exact:
            out["value"] = self.value
        elif self.kind == BOUNDS:
            out["lower"] = self.lower
            out["upper"] = self.upper
        out["ext_vanishes"] = self.ext_vanishes
        out["provenance"] = {"result": self.result, "trace": self.trace}
        return out

    @classmethod
    def from_json(cls, obj: dict) -> MultiplicityAnswer:
        prov = obj.get("provenance", {})
        kind = obj["kind"]
        if kind == EXACT:
            lo = hi = obj["value"]
        else:
            lo, hi = obj.get("lower"), obj.get("upper")
        return cls(kind, lo, hi, obj.get("ext_vanishes"), prov.get("result", ""), prov.get("trace", ""))
