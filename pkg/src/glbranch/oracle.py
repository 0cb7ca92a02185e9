"""Hom-multiplicity oracle for restricting a principal series of ``G_n`` to
``G_{n-1}`` and mapping onto an essentially square-integrable or generic target.

Every answer is a :class:`~glbranch.answer.MultiplicityAnswer` whose
``result`` tag names the classification result that produced it:

``steinberg-ascending``
    the ascending character series ``xi(n)`` against ``St_{n-1}``: exactly ``n``.
``steinberg-generic``
    any other cuspidal series against ``St_{n-1}``: one, Ext vanishes.
``generalized-steinberg``
    cuspidal series against ``Q(d)`` on a line of size >= 2: one, Ext vanishes.
``good-pair``
    cuspidal series good to a generic target: one, Ext vanishes.
``intermediate-family`` / ``intermediate-family-dual``
    ``Q(d_i) x`` ascending characters (or its image under ``theta``) against
    ``St_{n-1}``: exactly ``n - i``.
``z-target-bound``
    any series against ``Z(d)`` with ``d`` on a line of size >= 2: at most one.
``no-exact-result``
    fallback interval from derivative supports and Whittaker dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .answer import MultiplicityAnswer
from .calculus import bz_hom_upper_bound, whittaker_dim
from .core import (
    TRIVIAL,
    CuspidalLine,
    Multisegment,
    Segment,
    normalize_multisegment,
    nu,
    segment,
)
from .errors import DomainError
from .series import GenericRep, PrincipalSeries, Qseg, is_good_pair, theta


def xi(n: int, line: CuspidalLine = TRIVIAL) -> PrincipalSeries:
    """``nu^(-(n-1)/2) x nu^(-(n-3)/2) x ... x nu^((n-1)/2)``."""
    if n < 2:
        raise DomainError("xi(n) needs n >= 2")
    lo = Fraction(-(n - 1), 2)
    return PrincipalSeries(tuple(nu(lo + t, line) for t in range(n)))


def st_segment(size: int, line: CuspidalLine = TRIVIAL) -> Segment:
    """The centred segment of length ``size``; ``Q`` of it is ``St_size``."""
    if line.size != 1:
        raise DomainError("Steinberg segments live on character lines")
    half = Fraction(size - 1, 2)
    return segment(-half, half, line)


def steinberg(size: int, line: CuspidalLine = TRIVIAL) -> GenericRep:
    return GenericRep((st_segment(size, line),))


def intermediate_family(n: int, i: int, line: CuspidalLine = TRIVIAL) -> PrincipalSeries:
    """``Q([nu^(-(n-1)/2), nu^(-(n-1-2i)/2)]) x nu^(-(n-3-2i)/2) x ... x nu^((n-1)/2)``."""
    if n < 3 or not 1 <= i <= n - 2:
        raise DomainError("family defined for n >= 3 and 1 <= i <= n-2")
    lo = Fraction(-(n - 1), 2)
    head = Qseg(segment(lo, lo + i, line))
    tail = tuple(nu(lo + t, line) for t in range(i + 1, n))
    return PrincipalSeries((head,) + tail)


def intermediate_family_dual(n: int, i: int, line: CuspidalLine = TRIVIAL) -> PrincipalSeries:
    """Image of :func:`intermediate_family` under ``theta``, placed on ``line``."""
    return theta(intermediate_family(n, i, line.dual()))


def _as_generic(pi) -> GenericRep:
    if isinstance(pi, GenericRep):
        return pi
    if isinstance(pi, Segment):
        return GenericRep((pi,))
    if isinstance(pi, Qseg):
        return GenericRep((pi.segment,))
    raise DomainError(f"target must be a generic representation, got {pi!r}")


def normalize_common_twist(ps: PrincipalSeries, pi):
    """Twist both sides by one power of ``nu`` so that a single-segment target
    on a character line is centred at 0. Returns ``(ps, pi, shift)``."""
    pi = _as_generic(pi)
    shift = Fraction(0)
    if len(pi.segments) == 1 and pi.segments[0].line.size == 1:
        d = pi.segments[0]
        shift = -(d.a + d.b) / 2
    if shift == 0:
        return ps, pi, shift
    return ps.twist(shift), pi.twist(shift), shift


def _steinberg_line(pi: GenericRep) -> Optional[CuspidalLine]:
    """The line of ``pi`` when it is an (untwisted) ``St`` on a character line."""
    if len(pi.segments) != 1:
        return None
    d = pi.segments[0]
    if d.line.size == 1 and d.a + d.b == 0:
        return d.line
    return None


def multiplicity(ps: PrincipalSeries, pi) -> MultiplicityAnswer:
    """``dim Hom_{G_{n-1}}(ps, pi)`` for a generic target ``pi``."""
    pi = _as_generic(pi)
    if ps.total_size != pi.size + 1:
        raise DomainError(
            f"series of size {ps.total_size} needs a target of size {ps.total_size - 1}, "
            f"got {pi.size}"
        )
    ps, pi, shift = normalize_common_twist(ps, pi)
    n = ps.total_size
    note = f" (after common twist by nu^{shift})" if shift else ""
    st_line = _steinberg_line(pi)

    if ps.is_cuspidal_induced:
        if st_line is not None:
            # every adjacent pair of xi(n) is linked, so literal equality is the test
            if ps == xi(n, st_line):
                return MultiplicityAnswer.exact(
                    n, None, "steinberg-ascending",
                    f"ascending character series xi({n}) against St_{n - 1}{note}: "
                    f"multiplicity {n}; higher Ext not determined",
                )
            return MultiplicityAnswer.exact(
                1, True, "steinberg-generic",
                f"cuspidal series other than xi({n}) against St_{n - 1}{note}: "
                "multiplicity one, higher Ext vanish",
            )
        if len(pi.segments) == 1 and pi.segments[0].line.size >= 2:
            d = pi.segments[0]
            return MultiplicityAnswer.exact(
                1, True, "generalized-steinberg",
                f"cuspidal series against generalized Steinberg on a line of size "
                f"{d.line.size} (length {d.rel_length}): no bad ordering is possible, "
                "multiplicity one, higher Ext vanish",
            )
        verdict = is_good_pair(ps, pi)
        if verdict.good:
            return MultiplicityAnswer.exact(
                1, True, "good-pair",
                "series and target form a good pair: multiplicity one, higher Ext vanish",
            )

    if st_line is not None and not ps.is_cuspidal_induced and n >= 3:
        for i in range(1, n - 1):
            if ps == intermediate_family(n, i, st_line):
                return MultiplicityAnswer.exact(
                    n - i, None, "intermediate-family",
                    f"Q-segment of length {i + 1} followed by ascending characters, "
                    f"against St_{n - 1}{note}: multiplicity {n - i}",
                )
            if ps == intermediate_family_dual(n, i, st_line):
                return MultiplicityAnswer.exact(
                    n - i, None, "intermediate-family-dual",
                    f"theta-image of the length-{i + 1} intermediate family against "
                    f"St_{n - 1}{note}: multiplicity {n - i}",
                )

    lower = 1 if whittaker_dim(ps) == 1 and whittaker_dim(pi) == 1 else 0
    upper = bz_hom_upper_bound(ps, pi)
    assert lower <= upper, "support bound fell below the Whittaker lower bound"
    return MultiplicityAnswer.bounds(
        lower, upper, "no-exact-result",
        "no exact result applies; upper bound from derivative supports, "
        "lower bound from the Euler-Poincare pairing of Whittaker dimensions" + note,
    )


def multiplicity_Z(ps: PrincipalSeries, d: Segment) -> MultiplicityAnswer:
    """``dim Hom_{G_{n-1}}(ps, Z(d))`` for ``d`` on a line of size at least 2."""
    k = d.line.size
    if k < 2:
        raise DomainError("Z-targets on character lines are not covered")
    if ps.total_size != d.abs_length + 1:
        raise DomainError(
            f"series of size {ps.total_size} needs a segment of absolute length "
            f"{ps.total_size - 1}, got {d.abs_length}"
        )
    if d.rel_length == 1 and ps.is_cuspidal_induced:
        # Z of a single cuspidal is that cuspidal, a generalized Steinberg target
        return multiplicity(ps, GenericRep((d,)))
    return MultiplicityAnswer.bounds(
        0, 1, "z-target-bound",
        f"Z-target on a line of size {k}: multiplicity at most one",
    )


# -- irreducible subquotients of xi(n) with a Steinberg quotient -----------------

@dataclass(frozen=True)
class SubquotientDescriptor:
    """One irreducible subquotient ``pi_i`` of ``xi(n)`` mapping onto ``St_{n-1}``.

    ``embedding_params`` are the twists ``(a, b, c)`` with ``pi_i`` the unique
    irreducible submodule of ``nu^a St_{i-1} x nu^b 1_2 x nu^c St_{n-i-1}``
    (``None`` for ``i = 0``). ``langlands_note`` lists ``(twist, size)`` of the
    twisted Steinberg summands of the Langlands parameter.
    """

    index: int
    multisegment: Multisegment
    embedding_params: Optional[tuple]
    langlands_note: tuple

    @property
    def langlands_label(self) -> str:
        return " + ".join(
            f"St_{size}" if e == 0 else f"nu^({e}) St_{size}" for e, size in self.langlands_note
        )


def subquotient_multisegment(n: int, i: int, line: CuspidalLine = TRIVIAL) -> Multisegment:
    """``pi_0 = St_n`` as ``n`` singletons; for ``i >= 1`` the ``i``-th singleton
    from the top is merged with the one below it."""
    top = Fraction(n - 1, 2)
    if i == 0:
        return normalize_multisegment(segment(top - t, top - t, line) for t in range(n))
    segs = []
    for j in range(1, n):
        hi = Fraction(n - 2 * j + 1, 2)
        lo = Fraction(n - 2 * j - 1, 2)
        if j < i:
            segs.append(segment(hi, hi, line))
        elif j == i:
            segs.append(segment(lo, hi, line))
        else:
            segs.append(segment(lo, lo, line))
    return normalize_multisegment(segs)


def steinberg_subquotients(n: int, line: CuspidalLine = TRIVIAL) -> list:
    if n < 2:
        raise DomainError("needs n >= 2")
    out = [SubquotientDescriptor(0, subquotient_multisegment(n, 0, line), None, ((Fraction(0), n),))]
    for i in range(1, n):
        params = (Fraction(n - i + 1, 2), Fraction(n - 2 * i, 2), Fraction(-(i + 1), 2))
        note = ((Fraction(-i, 2), n - i), (Fraction(n - i, 2), i))
        out.append(SubquotientDescriptor(i, subquotient_multisegment(n, i, line), params, note))
    return out


def generic_length2_screen(tau: Multisegment) -> bool:
    """Necessary shape for a generic quotient: lengths at most 2, at most one of length 2."""
    lengths = [d.rel_length for d in tau.segments]
    return all(l <= 2 for l in lengths) and lengths.count(2) <= 1


def nongeneric_quotient_test(tau: Multisegment, d: Segment) -> bool:
    """Whether the non-generic irreducible ``Z(tau)`` of ``G_n`` has ``Q(d)`` as
    a quotient on restriction to ``G_{n-1}``."""
    if all(s.rel_length == 1 for s in tau.segments):
        raise DomainError("tau is generic; use multiplicity() instead")
    n = tau.size
    if d.abs_length != n - 1:
        raise DomainError(f"target must have absolute length {n - 1}, got {d.abs_length}")
    if d.line.size >= 2:
        return False
    # size 1 and absolute length n-1: after centring, d is the St_{n-1} segment
    shift = -(d.a + d.b) / 2
    tau = tau.twist(shift)
    return any(
        tau == subquotient_multisegment(n, i, d.line) for i in range(1, n)
    )
