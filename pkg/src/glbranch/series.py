"""Ordered products of factors, the bad/good predicates, commutation classes
and the rearrangement that moves an unwanted end factor out of the way.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from . import kernels
from .core import (
    CuspidalRep,
    Segment,
    dual_segment,
    is_linked,
    rep_from_json,
    rep_to_json,
    segment_from_json,
    segment_sort_key,
    segment_to_json,
)
from .errors import DomainError

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Qseg:
    """The essentially square-integrable factor ``Q(segment)``."""

    segment: Segment


@dataclass(frozen=True)
class Zseg:
    """The factor ``Z(segment)``."""

    segment: Segment


Factor = Union[CuspidalRep, Qseg, Zseg]


def make_factor(f) -> Factor:
    """Collapse length-one ``Q``/``Z`` factors to the cuspidal they contain."""
    if isinstance(f, (Qseg, Zseg)):
        if f.segment.rel_length == 1:
            return f.segment.base
        return f
    if isinstance(f, CuspidalRep):
        return f
    if isinstance(f, Segment):
        raise DomainError("wrap segments as Qseg(...) or Zseg(...) to use them as factors")
    raise DomainError(f"not a factor: {f!r}")


def factor_segment(f: Factor) -> Segment:
    if isinstance(f, CuspidalRep):
        return Segment(f, 1)
    return f.segment


def factor_size(f: Factor) -> int:
    return factor_segment(f).abs_length


def factor_dual(f: Factor) -> Factor:
    if isinstance(f, CuspidalRep):
        return f.dual()
    return type(f)(dual_segment(f.segment))


def factor_twist(f: Factor, shift) -> Factor:
    if isinstance(f, CuspidalRep):
        return f.twist(shift)
    return type(f)(f.segment.twist(shift))


def factors_linked(f1: Factor, f2: Factor) -> bool:
    return is_linked(factor_segment(f1), factor_segment(f2))


@dataclass(frozen=True)
class PrincipalSeries:
    """``f_1 x f_2 x ... x f_k`` -- the order of the factors matters."""

    factors: tuple

    def __post_init__(self):
        facs = tuple(make_factor(f) for f in self.factors)
        if not facs:
            raise DomainError("a principal series needs at least one factor")
        object.__setattr__(self, "factors", facs)

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __getitem__(self, i):
        return self.factors[i]

    @property
    def total_size(self) -> int:
        return sum(factor_size(f) for f in self.factors)

    @property
    def is_cuspidal_induced(self) -> bool:
        return all(isinstance(f, CuspidalRep) for f in self.factors)

    def twist(self, shift) -> PrincipalSeries:
        return PrincipalSeries(tuple(factor_twist(f, shift) for f in self.factors))


def principal_series(*factors) -> PrincipalSeries:
    return PrincipalSeries(tuple(factors))


@dataclass(frozen=True, eq=False)
class GenericRep:
    """``Q(d_1) x ... x Q(d_r)`` with pairwise unlinked segments (order is irrelevant)."""

    segments: tuple = field(default_factory=tuple)

    def __post_init__(self):
        segs = tuple(sorted(self.segments, key=segment_sort_key))
        if not segs:
            raise DomainError("a generic representation needs at least one segment")
        for i in range(len(segs)):
            for j in range(i + 1, len(segs)):
                if is_linked(segs[i], segs[j]):
                    raise DomainError(f"segments {segs[i]!r} and {segs[j]!r} are linked")
        object.__setattr__(self, "segments", segs)

    def __eq__(self, other):
        if not isinstance(other, GenericRep):
            return NotImplemented
        return self.segments == other.segments

    def __hash__(self):
        return hash(self.segments)

    def __len__(self):
        return len(self.segments)

    @property
    def size(self) -> int:
        return sum(d.abs_length for d in self.segments)

    def dual(self) -> GenericRep:
        return GenericRep(tuple(dual_segment(d) for d in self.segments))

    def twist(self, shift) -> GenericRep:
        return GenericRep(tuple(d.twist(shift) for d in self.segments))


def _require_cuspidal(ps: PrincipalSeries):
    if not ps.is_cuspidal_induced:
        raise DomainError("operation needs a series of cuspidal factors")


# -- badness ------------------------------------------------------------------

def _chain_labels(ps: PrincipalSeries, d: Segment) -> list:
    """Label each factor with ``t`` when it equals ``nu^(t-1/2) a(d)``, else -1."""
    start = d.a - HALF
    top = d.rel_length  # labels 0 .. c+1 with c = rel_length - 1
    labels = []
    for f in ps.factors:
        label = -1
        if f.line == d.line:
            off = f.exponent - start
            if off.denominator == 1 and 0 <= off <= top:
                label = int(off)
        labels.append(label)
    return labels


def is_bad_to(ps: PrincipalSeries, d: Segment) -> bool:
    """Whether ``nu^(-1/2) a(d), nu^(1/2) a(d), ..., nu^(1/2) b(d)`` appear in order."""
    _require_cuspidal(ps)
    return kernels.chain_contains(_chain_labels(ps, d), d.rel_length + 1)


def bad_witness(ps: PrincipalSeries, d: Segment):
    """Leftmost factor positions spelling the bad chain, or ``None`` if good."""
    _require_cuspidal(ps)
    return kernels.chain_match_positions(_chain_labels(ps, d), d.rel_length + 1)


@dataclass(frozen=True)
class GoodPairVerdict:
    cond_a: bool
    cond_b: bool
    bad_segments: tuple = ()

    @property
    def good(self) -> bool:
        return self.cond_a and self.cond_b

    def __bool__(self):
        return self.good


def is_good_pair(ps: PrincipalSeries, pi: GenericRep) -> GoodPairVerdict:
    _require_cuspidal(ps)
    if ps.total_size != pi.size + 1:
        raise DomainError(
            f"sizes do not match: series of size {ps.total_size}, target of size {pi.size}"
        )
    starts = [d.start for d in pi.segments]
    cond_a = not any(
        starts[i].offset(starts[j]) is not None
        for i in range(len(starts))
        for j in range(i + 1, len(starts))
    )
    bad = tuple(d for d in pi.segments if is_bad_to(ps, d))
    return GoodPairVerdict(cond_a, not bad, bad)


# -- commutation classes --------------------------------------------------------

def commutation_equivalent(ps1: PrincipalSeries, ps2: PrincipalSeries) -> bool:
    """Whether ``ps2`` is reachable from ``ps1`` by swapping adjacent unlinked factors.

    Two orderings are equivalent exactly when, for every linked pair of factor
    values, the two words restricted to that pair agree.
    """
    _require_cuspidal(ps1)
    _require_cuspidal(ps2)
    if Counter(ps1.factors) != Counter(ps2.factors):
        raise DomainError("series have different factor multisets")
    values = list(dict.fromkeys(ps1.factors))
    for i, x in enumerate(values):
        for y in values[i + 1:]:
            if not factors_linked(x, y):
                continue
            pair = (x, y)
            if [f for f in ps1.factors if f in pair] != [f for f in ps2.factors if f in pair]:
                return False
    return True


# -- rearrangement -------------------------------------------------------------

@dataclass(frozen=True)
class RearrangementCertificate:
    """A reordering by adjacent swaps of unlinked factors.

    ``swaps`` lists 0-based positions ``p`` (exchange entries ``p`` and ``p+1``),
    applied in order. ``permutation[i]`` is the input position of the factor
    that ends up at position ``i``. ``satisfied`` is ``"A"`` when the first
    factor differs from ``nu^(-1/2) a(d)`` and ``"B"`` when the last factor
    differs from ``nu^(1/2) b(d)``.
    """

    permutation: tuple
    swaps: tuple
    satisfied: str
    case: str

    def apply(self, ps: PrincipalSeries) -> PrincipalSeries:
        facs = list(ps.factors)
        for p in self.swaps:
            if factors_linked(facs[p], facs[p + 1]):
                raise DomainError(f"swap at {p} exchanges linked factors")
            facs[p], facs[p + 1] = facs[p + 1], facs[p]
        return PrincipalSeries(tuple(facs))

    def to_json(self) -> dict:
        return {
            "permutation": list(self.permutation),
            "swaps": list(self.swaps),
            "satisfied": self.satisfied,
            "case": self.case,
        }


def _moves_to_front(p):
    return list(range(p - 1, -1, -1))


def _moves_to_back(p, n):
    return list(range(p, n - 1))


def _blocked(facs, p, direction):
    others = facs[:p] if direction == "front" else facs[p + 1:]
    return any(factors_linked(facs[p], g) for g in others)


def rearrange_good(ps: PrincipalSeries, d: Segment, prefer: str = "B") -> RearrangementCertificate:
    """Reorder a single-line series good to ``d`` so that it no longer starts with
    ``nu^(-1/2) a(d)`` or no longer ends with ``nu^(1/2) b(d)``.

    ``prefer`` picks which end to fix when the missing-value case leaves a choice.
    """
    if prefer not in ("A", "B"):
        raise DomainError("prefer must be 'A' or 'B'")
    _require_cuspidal(ps)
    n = len(ps)
    if n < 2:
        raise DomainError("rearrangement needs at least two factors")
    start = d.a - HALF
    labels = []
    for f in ps.factors:
        off = f.exponent - start
        if f.line != d.line or off.denominator != 1:
            raise DomainError(f"factor {f!r} is off the cuspidal line of nu^(-1/2) a(d)")
        labels.append(int(off))
    if is_bad_to(ps, d):
        raise DomainError("series is bad to the segment")

    c = d.rel_length - 1
    facs = list(ps.factors)

    if labels[0] != 0:
        return _certificate(facs, [], "A", "first-ok")
    if labels[-1] != c + 1:
        return _certificate(facs, [], "B", "last-ok")

    present = set(labels)
    missing = [i for i in range(1, c + 1) if i not in present]
    if missing:
        gap = missing[0]
        # nothing below the gap is linked to anything above it
        if prefer == "A":
            p = min(i for i, t in enumerate(labels) if t > gap)
            plan = ("front", p, "gap-front")
        else:
            p = max(i for i, t in enumerate(labels) if t < gap)
            plan = ("back", p, "gap-back")
    else:
        first = {}
        for i, t in enumerate(labels):
            first.setdefault(t, i)
        k = {t: first[t] for t in range(1, c + 1)}
        s = next(t for t in range(1, c) if k[t] > k[t + 1])
        if s + 1 != c:
            plan = ("front", k[s + 1], "descent-front")
        else:
            tail = [i for i in range(k[s + 1], n) if labels[i] <= c - 1]
            plan = ("back", max(tail), "descent-back")

    direction, p, case = plan
    if not _blocked(facs, p, direction):
        if direction == "front":
            return _certificate(facs, _moves_to_front(p), "A", case)
        return _certificate(facs, _moves_to_back(p, n), "B", case)

    # the planned factor is pinned by a linked neighbour; pick any free end factor
    for i in range(n):
        if labels[i] != 0 and not _blocked(facs, i, "front"):
            return _certificate(facs, _moves_to_front(i), "A", "fallback-front")
    for i in range(n - 1, -1, -1):
        if labels[i] != c + 1 and not _blocked(facs, i, "back"):
            return _certificate(facs, _moves_to_back(i, n), "B", "fallback-back")
    raise AssertionError(f"no admissible rearrangement found for {ps!r} and {d!r}")


def _certificate(facs, swaps, satisfied, case):
    perm = list(range(len(facs)))
    for p in swaps:
        perm[p], perm[p + 1] = perm[p + 1], perm[p]
    return RearrangementCertificate(tuple(perm), tuple(swaps), satisfied, case)


# -- the transpose-inverse involution ------------------------------------------

def theta(ps: PrincipalSeries) -> PrincipalSeries:
    """Reverse the factors and dualise each one."""
    return PrincipalSeries(tuple(factor_dual(f) for f in reversed(ps.factors)))


# -- JSON ---------------------------------------------------------------------

def factor_to_json(f: Factor) -> dict:
    if isinstance(f, CuspidalRep):
        return {"kind": "cuspidal", "rep": rep_to_json(f)}
    return {"kind": "Q" if isinstance(f, Qseg) else "Z", "segment": segment_to_json(f.segment)}


def factor_from_json(obj: dict) -> Factor:
    kind = obj["kind"]
    if kind == "cuspidal":
        return rep_from_json(obj["rep"])
    seg = segment_from_json(obj["segment"])
    if kind == "Q":
        return make_factor(Qseg(seg))
    if kind == "Z":
        return make_factor(Zseg(seg))
    raise ValueError(f"unknown factor kind {kind!r}")


def series_to_json(ps: PrincipalSeries) -> dict:
    return {"factors": [factor_to_json(f) for f in ps.factors]}


def series_from_json(obj: dict) -> PrincipalSeries:
    return PrincipalSeries(tuple(factor_from_json(f) for f in obj["factors"]))


def generic_to_json(pi: GenericRep) -> dict:
    return {"segments": [segment_to_json(d) for d in pi.segments]}


def generic_from_json(obj: dict) -> GenericRep:
    return GenericRep(tuple(segment_from_json(d) for d in obj["segments"]))
