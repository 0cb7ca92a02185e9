"""Cuspidal lines, cuspidal representations, segments and multisegments.

Everything here is exact: exponents of the unramified twist ``nu`` are
:class:`fractions.Fraction` values and every object is immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

from .errors import DomainError

Number = Union[int, Fraction, str]

TRIVIAL_LINE_ID = "1"


def default_dual_id(line_id: str) -> str:
    """Dual line id used when none is declared: toggles a trailing ``~``."""
    if line_id == TRIVIAL_LINE_ID:
        return line_id
    if line_id.endswith("~"):
        return line_id[:-1]
    return line_id + "~"


def as_fraction(value: Number) -> Fraction:
    if isinstance(value, float):
        raise TypeError("exponents must be exact; got a float")
    return Fraction(value)


@dataclass(frozen=True)
class CuspidalLine:
    """A family of cuspidal representations of ``G_size`` up to integer twists.

    Only the id, the size and the id of the dual line are modelled.
    """

    id: str
    size: int = 1
    dual_id: str = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.dual_id is None:
            object.__setattr__(self, "dual_id", default_dual_id(self.id))
        if not isinstance(self.size, int) or self.size < 1:
            raise DomainError(f"line size must be a positive integer, got {self.size!r}")
        if self.id == TRIVIAL_LINE_ID and (self.size != 1 or self.dual_id != self.id):
            raise DomainError("the trivial line has size 1 and is self-dual")

    def dual(self) -> CuspidalLine:
        return CuspidalLine(self.dual_id, self.size, self.id)

    @property
    def self_dual(self) -> bool:
        return self.dual_id == self.id


TRIVIAL = CuspidalLine(TRIVIAL_LINE_ID, 1, TRIVIAL_LINE_ID)


@dataclass(frozen=True)
class CuspidalRep:
    """The cuspidal ``nu^exponent * rho0`` where ``rho0`` is the base point of ``line``."""

    line: CuspidalLine
    exponent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "exponent", as_fraction(self.exponent))

    @property
    def size(self) -> int:
        return self.line.size

    def twist(self, shift: Number) -> CuspidalRep:
        return CuspidalRep(self.line, self.exponent + as_fraction(shift))

    def dual(self) -> CuspidalRep:
        return CuspidalRep(self.line.dual(), -self.exponent)

    def offset(self, other: CuspidalRep):
        """Integer ``m`` with ``other = nu^m self``, or ``None`` off the same cuspidal line."""
        if self.line != other.line:
            return None
        diff = other.exponent - self.exponent
        if diff.denominator != 1:
            return None
        return int(diff)

    def __repr__(self):
        if self.line == TRIVIAL:
            return f"nu({self.exponent})"
        return f"nu({self.exponent})*rho({self.line.id},{self.line.size})"


def nu(exponent: Number, line: CuspidalLine = TRIVIAL) -> CuspidalRep:
    return CuspidalRep(line, as_fraction(exponent))


def same_cuspidal_line(r1: CuspidalRep, r2: CuspidalRep) -> bool:
    return r1.offset(r2) is not None


class _Empty:
    """Marker for the empty segment (and the trivial representation of ``G_0``)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EMPTY"

    def __bool__(self):
        return False

    def __reduce__(self):
        return (_Empty, ())


EMPTY = _Empty()


@dataclass(frozen=True)
class Segment:
    """``[a(d), b(d)] = [base, nu^(rel_length-1) base]``."""

    base: CuspidalRep
    rel_length: int

    def __post_init__(self):
        if not isinstance(self.rel_length, int) or self.rel_length < 1:
            raise DomainError(f"segment length must be >= 1, got {self.rel_length!r}")

    @property
    def line(self) -> CuspidalLine:
        return self.base.line

    @property
    def a(self) -> Fraction:
        return self.base.exponent

    @property
    def b(self) -> Fraction:
        return self.base.exponent + self.rel_length - 1

    @property
    def start(self) -> CuspidalRep:
        return self.base

    @property
    def end(self) -> CuspidalRep:
        return self.base.twist(self.rel_length - 1)

    @property
    def abs_length(self) -> int:
        return self.line.size * self.rel_length

    def cuspidals(self) -> list[CuspidalRep]:
        return [self.base.twist(t) for t in range(self.rel_length)]

    def twist(self, shift: Number) -> Segment:
        return Segment(self.base.twist(shift), self.rel_length)

    def dual(self) -> Segment:
        return dual_segment(self)

    def contains(self, other: Segment) -> bool:
        m = self.base.offset(other.base)
        return m is not None and m >= 0 and m + other.rel_length <= self.rel_length

    def __repr__(self):
        return f"Segment({self.start!r}..{self.end!r})"


def segment(a: Number, b: Number, line: CuspidalLine = TRIVIAL) -> Segment:
    """The segment ``[nu^a rho0, nu^b rho0]`` on ``line``."""
    a, b = as_fraction(a), as_fraction(b)
    diff = b - a
    if diff.denominator != 1 or diff < 0:
        raise DomainError(f"segment ends {a}, {b} must differ by a nonnegative integer")
    return Segment(CuspidalRep(line, a), int(diff) + 1)


def _index_ranges(d1: Segment, d2: Segment):
    m = d1.base.offset(d2.base)
    if m is None:
        return None
    return (0, d1.rel_length - 1), (m, m + d2.rel_length - 1)


def is_linked(d1: Segment, d2: Segment) -> bool:
    """Neither contains the other and their union is again a segment."""
    ranges = _index_ranges(d1, d2)
    if ranges is None:
        return False
    (lo1, hi1), (lo2, hi2) = ranges
    if lo1 <= lo2 and hi2 <= hi1 or lo2 <= lo1 and hi1 <= hi2:
        return False
    return max(lo1, lo2) <= min(hi1, hi2) + 1


def precedes(d1: Segment, d2: Segment) -> bool:
    if not is_linked(d1, d2):
        return False
    m = d1.end.offset(d2.end)
    return m is not None and m > 0


def dual_segment(d: Segment) -> Segment:
    return Segment(CuspidalRep(d.line.dual(), -d.b), d.rel_length)


def truncate(d: Segment, k: int, side: str = "right"):
    """Drop ``k`` cuspidals from the b-end (``right``) or the a-end (``left``).

    Returns :data:`EMPTY` when everything is dropped.
    """
    if k < 0 or k > d.rel_length:
        raise DomainError(f"cannot truncate {k} from a segment of length {d.rel_length}")
    if k == d.rel_length:
        return EMPTY
    if side == "right":
        return Segment(d.base, d.rel_length - k)
    if side == "left":
        return Segment(d.base.twist(k), d.rel_length - k)
    raise DomainError(f"side must be 'left' or 'right', got {side!r}")


def segment_sort_key(d: Segment):
    # line id, then b descending, then length descending
    return (d.line.id, d.line.size, d.line.dual_id, -d.b, -d.rel_length)


def is_admissible_order(segs) -> bool:
    return not any(
        precedes(segs[i], segs[j]) for i in range(len(segs)) for j in range(i + 1, len(segs))
    )


@dataclass(frozen=True, eq=False)
class Multisegment:
    """A multiset of segments listed so that no segment precedes a later one.

    Equality is multiset equality; :func:`normalize_multisegment` gives the
    canonical listing.
    """

    segments: tuple = field(default_factory=tuple)

    def __post_init__(self):
        segs = tuple(self.segments)
        object.__setattr__(self, "segments", segs)
        for d in segs:
            if not isinstance(d, Segment):
                raise DomainError(f"multisegment entries must be segments, got {d!r}")
        if not is_admissible_order(segs):
            raise DomainError("segments are not in an admissible order")

    def canonical(self) -> tuple:
        return tuple(sorted(self.segments, key=segment_sort_key))

    def __eq__(self, other):
        if not isinstance(other, Multisegment):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __len__(self):
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    @property
    def size(self) -> int:
        return sum(d.abs_length for d in self.segments)

    def dual(self) -> Multisegment:
        return normalize_multisegment(dual_segment(d) for d in self.segments)

    def twist(self, shift: Number) -> Multisegment:
        return normalize_multisegment(d.twist(shift) for d in self.segments)


def normalize_multisegment(segs: Iterable[Segment]) -> Multisegment:
    ordered = tuple(sorted(segs, key=segment_sort_key))
    # sorting by b descending within a line already rules out precedence
    assert is_admissible_order(ordered), "precedence relation has a cycle"
    return Multisegment(ordered)


# -- canonical JSON ---------------------------------------------------------

def rep_to_json(r: CuspidalRep) -> dict:
    out = {"line": r.line.id, "size": r.line.size, "exp": str(r.exponent)}
    if r.line.dual_id != default_dual_id(r.line.id):
        out["dual"] = r.line.dual_id
    return out


def rep_from_json(obj: dict) -> CuspidalRep:
    line = CuspidalLine(str(obj["line"]), int(obj["size"]), obj.get("dual"))
    return CuspidalRep(line, Fraction(obj["exp"]))


def segment_to_json(d: Segment) -> dict:
    return {"base": rep_to_json(d.base), "len": d.rel_length}


def segment_from_json(obj: dict) -> Segment:
    return Segment(rep_from_json(obj["base"]), int(obj["len"]))


def multisegment_to_json(m: Multisegment) -> list:
    return [segment_to_json(d) for d in m.segments]


def multisegment_from_json(obj: list) -> Multisegment:
    return normalize_multisegment(segment_from_json(d) for d in obj)
