"""Parabolic subgroups by block sizes, and segment cuttings behind the
subquotient count of ``xi(n)``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .core import TRIVIAL, CuspidalLine, Multisegment, normalize_multisegment, segment
from .errors import DomainError


@dataclass(frozen=True)
class Partition:
    """Ordered block sizes of a standard parabolic of ``GL(n)``."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts or any(not isinstance(p, int) or p < 1 for p in parts):
            raise DomainError(f"parts must be positive integers, got {parts!r}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        try:
            return cls(tuple(int(tok) for tok in text.replace(" ", "").split(",")))
        except ValueError as exc:
            raise DomainError(f"cannot read partition {text!r}: {exc}") from None

    def __str__(self):
        return ",".join(map(str, self.parts))


def levi_ss_rank(p: Partition) -> int:
    return sum(part - 1 for part in p.parts)


def flag_embedding_exists(p: Partition) -> bool:
    """Whether the parabolic meets ``GL(n-1)`` in its Borel subgroup: it is the
    Borel itself or has a single block of size 2."""
    big = [part for part in p.parts if part > 1]
    return not big or big == [2]


def compositions(n: int):
    """All ordered tuples of positive integers summing to ``n``."""
    if n < 1:
        return
    for cuts in product((False, True), repeat=n - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def segment_partitions(n: int) -> list:
    """Cuttings of a length-``n`` segment into consecutive blocks, read from the
    top, of length 1 or 2 with at most one block of length 2.

    Entry ``0`` is all singletons; entry ``i`` has its length-2 block ``i``-th
    from the top.
    """
    if n < 2:
        raise DomainError("needs n >= 2")
    out = [(1,) * n]
    for i in range(1, n):
        out.append((1,) * (i - 1) + (2,) + (1,) * (n - 1 - i))
    return out


def segment_partition_count(n: int) -> int:
    return len(segment_partitions(n))


def blocks_to_multisegment(blocks, line: CuspidalLine = TRIVIAL) -> Multisegment:
    """Cut the centred length-``sum(blocks)`` segment into the given blocks, top first."""
    n = sum(blocks)
    hi = Fraction(n - 1, 2)
    segs = []
    for size in blocks:
        segs.append(segment(hi - size + 1, hi, line))
        hi -= size
    return normalize_multisegment(segs)
