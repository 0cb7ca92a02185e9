"""Derivative calculus at the level of segments.

Derivatives of ``Q``/``Z`` factors truncate their segments; derivatives of
products are expanded by the product rule into a :class:`FormalSum`, the
semisimplified shadow of the derivative filtration. Zero derivatives are
represented by ``None`` and the trivial representation of ``G_0`` by
:data:`~glbranch.core.EMPTY`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .answer import MultiplicityAnswer
from .core import EMPTY, CuspidalRep, Multisegment, Segment, truncate
from .errors import DomainError
from .series import (
    GenericRep,
    PrincipalSeries,
    Qseg,
    Zseg,
    factor_segment,
    factor_size,
    factor_to_json,
    factor_twist,
    make_factor,
)

SIDES = ("left", "right")


def _check_side(side):
    if side not in SIDES:
        raise DomainError(f"side must be 'left' or 'right', got {side!r}")


def derivative_Q(d: Segment, i: int, side: str = "right"):
    """The ``i``-th derivative of ``Q(d)``: zero unless the line size divides ``i``.

    A right derivative removes cuspidals from the a-end, a left derivative
    from the b-end.
    """
    _check_side(side)
    if i < 0:
        raise DomainError("derivative level must be nonnegative")
    if i == 0:
        return d
    r = d.line.size
    if i % r or i // r > d.rel_length:
        return None
    return truncate(d, i // r, "left" if side == "right" else "right")


def derivative_Z(d: Segment, i: int, side: str = "right"):
    """The ``i``-th derivative of ``Z(d)``: only levels 0 and the line size survive."""
    _check_side(side)
    if i < 0:
        raise DomainError("derivative level must be nonnegative")
    if i == 0:
        return d
    if i != d.line.size:
        return None
    return truncate(d, 1, "right" if side == "right" else "left")


def factor_derivative(f, i: int, side: str = "right"):
    """Derivative of a single factor: a factor, ``EMPTY`` or ``None``."""
    if isinstance(f, CuspidalRep):
        _check_side(side)
        if i == 0:
            return f
        return EMPTY if i == f.size else None
    if isinstance(f, Qseg):
        res = derivative_Q(f.segment, i, side)
    elif isinstance(f, Zseg):
        res = derivative_Z(f.segment, i, side)
    else:
        raise DomainError(f"not a factor: {f!r}")
    if res is None or res is EMPTY:
        return res
    return make_factor(type(f)(res))


def derivative_levels(f) -> list:
    """Levels at which the factor has a nonzero derivative."""
    r = factor_segment(f).line.size
    if isinstance(f, Qseg):
        return [j * r for j in range(f.segment.rel_length + 1)]
    return [0, r]


def factor_sort_key(f):
    seg = factor_segment(f)
    kind = 0 if isinstance(f, CuspidalRep) else (1 if isinstance(f, Qseg) else 2)
    return (kind, seg.line.id, seg.line.size, seg.a, seg.rel_length)


def term_sort_key(term):
    return (len(term), [factor_sort_key(f) for f in term])


@dataclass(frozen=True, eq=False)
class FormalSum:
    """A multiset of products of factors (a term may be the empty product)."""

    terms: Counter = field(default_factory=Counter)

    def __post_init__(self):
        clean = Counter({tuple(t): c for t, c in dict(self.terms).items() if c > 0})
        object.__setattr__(self, "terms", clean)

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.items())

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: term_sort_key(kv[0]))

    def coefficient(self, term) -> int:
        return self.terms.get(tuple(term), 0)

    def total(self) -> int:
        return sum(self.terms.values())

    def twist(self, shift) -> FormalSum:
        out = Counter()
        for term, c in self.terms.items():
            out[tuple(factor_twist(f, shift) for f in term)] += c
        return FormalSum(out)

    def to_json(self) -> list:
        return [
            {"coeff": c, "factors": [factor_to_json(f) for f in term]}
            for term, c in self.items()
        ]


def _as_factors(x):
    if isinstance(x, PrincipalSeries):
        return list(x.factors)
    if isinstance(x, GenericRep):
        return [make_factor(Qseg(d)) for d in x.segments]
    if isinstance(x, (list, tuple)):
        return [make_factor(f) for f in x]
    return [make_factor(x)]


def product_rule(factors, i: int, side: str = "right") -> FormalSum:
    """Semisimplified ``i``-th derivative of ``f_1 x ... x f_k``: the sum over
    all splittings ``i = i_1 + ... + i_k`` of the products of factor derivatives."""
    _check_side(side)
    facs = _as_factors(factors)
    out = Counter()
    for levels in product(*(derivative_levels(f) for f in facs)):
        if sum(levels) != i:
            continue
        term = []
        for f, lev in zip(facs, levels):
            res = factor_derivative(f, lev, side)
            if res is None:
                break
            if res is not EMPTY:
                term.append(res)
        else:
            out[tuple(term)] += 1
    return FormalSum(out)


class CuspidalSupport(Counter):
    """Multiset of cuspidal representations."""

    def twist(self, shift) -> CuspidalSupport:
        return CuspidalSupport({r.twist(shift): c for r, c in self.items()})

    def __hash__(self):
        return hash(frozenset(self.items()))


def csupp(x) -> CuspidalSupport:
    """Cuspidal support of a series, segment, multisegment, generic rep,
    factor, or derivative term (a tuple of factors)."""
    out = CuspidalSupport()
    if isinstance(x, Segment):
        out.update(x.cuspidals())
    elif isinstance(x, CuspidalRep):
        out[x] += 1
    elif isinstance(x, (Qseg, Zseg)):
        out.update(x.segment.cuspidals())
    elif isinstance(x, (Multisegment, GenericRep)):
        for d in x.segments:
            out.update(d.cuspidals())
    elif isinstance(x, PrincipalSeries) or isinstance(x, (list, tuple)):
        for f in x:
            out.update(csupp(f))
    elif x is EMPTY:
        pass
    else:
        raise DomainError(f"no cuspidal support for {x!r}")
    return out


def _support_matches(source: FormalSum, target: FormalSum) -> int:
    target_supports = Counter()
    for term, c in target.terms.items():
        target_supports[csupp(term)] += c
    total = 0
    for term, c in source.terms.items():
        total += c * target_supports.get(csupp(term), 0)
    return total


def bz_hom_upper_bound_parts(ps: PrincipalSeries, target) -> tuple:
    """Both over-counts: right derivatives of the series against left
    derivatives of the target (twist ``nu^(1/2)``), and left against right
    (twist ``nu^(-1/2)``)."""
    tfacs = _as_factors(target)
    n = ps.total_size
    if n != sum(factor_size(f) for f in tfacs) + 1:
        raise DomainError("series must have size one more than the target")
    part_a = part_b = 0
    for i in range(1, n + 1):
        src = product_rule(ps, i, "right").twist("1/2")
        part_a += _support_matches(src, product_rule(tfacs, i - 1, "left"))
        src = product_rule(ps, i, "left").twist("-1/2")
        part_b += _support_matches(src, product_rule(tfacs, i - 1, "right"))
    return part_a, part_b


def bz_hom_upper_bound(ps: PrincipalSeries, target) -> int:
    """Support-level upper bound on ``dim Hom(ps, target)``.

    Each derivative term whose cuspidal support agrees with a term of the
    complementary target derivative contributes its coefficient; the smaller of
    the two one-sided counts is returned. This over-counts, never under-counts.
    """
    return min(bz_hom_upper_bound_parts(ps, target))


def whittaker_dim(x) -> int:
    if isinstance(x, Multisegment):
        return int(all(d.rel_length == 1 for d in x.segments))
    if isinstance(x, GenericRep):
        return 1
    facs = _as_factors(x)
    # Z(d) with d of length >= 2 has no Whittaker model; Q(d) always does
    return int(not any(isinstance(f, Zseg) for f in facs))


def euler_poincare_check(ps, pi, answer: MultiplicityAnswer) -> Optional[bool]:
    """Compare ``Wh(ps) * Wh(pi)`` with the alternating Ext sum an answer implies.

    Returns ``None`` when the answer does not pin down the Ext groups.
    """
    if not answer.is_exact or answer.ext_vanishes is not True:
        return None
    return whittaker_dim(ps) * whittaker_dim(pi) == answer.value


def jacquet_shadow(d: Segment, l: int, side: str = "standard"):
    """Segments of the Jacquet module of ``Q(d)`` along the ``(n-l, l)`` parabolic.

    Returns ``None`` when it vanishes; either component may be ``EMPTY``.
    """
    if l < 0 or l > d.abs_length:
        raise DomainError(f"level {l} outside 0..{d.abs_length}")
    m = d.line.size
    if l % m:
        return None
    p = l // m
    k = d.rel_length
    if side == "standard":
        return truncate(d, p, "left"), truncate(d, k - p, "right")
    if side == "opposite":
        return truncate(d, p, "right"), truncate(d, k - p, "left")
    raise DomainError(f"side must be 'standard' or 'opposite', got {side!r}")
