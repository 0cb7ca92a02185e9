import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import RHO2, multisegments, reps, segments

from glbranch.core import (
    EMPTY,
    TRIVIAL,
    CuspidalLine,
    CuspidalRep,
    Multisegment,
    Segment,
    as_fraction,
    dual_segment,
    is_admissible_order,
    is_linked,
    multisegment_from_json,
    multisegment_to_json,
    normalize_multisegment,
    nu,
    precedes,
    rep_from_json,
    rep_to_json,
    same_cuspidal_line,
    segment,
    segment_from_json,
    segment_to_json,
    truncate,
)
from glbranch.errors import DomainError


def s(a, b, line=TRIVIAL):
    return segment(a, b, line)


# -- lines and cuspidals --------------------------------------------------------

def test_line_dual_is_involution():
    line = CuspidalLine("pi", 3)
    assert line.dual().id == "pi~"
    assert line.dual().dual() == line
    assert TRIVIAL.dual() == TRIVIAL


def test_line_rejects_bad_sizes():
    with pytest.raises(DomainError):
        CuspidalLine("r", 0)
    with pytest.raises(DomainError):
        CuspidalLine("1", 2)


def test_floats_are_refused():
    with pytest.raises(TypeError):
        as_fraction(0.5)
    assert as_fraction("3/4") == Fraction(3, 4)


def test_cuspidal_equality_and_lines():
    assert nu(0) == nu(Fraction(0))
    assert nu(0) != nu(0, RHO2)
    assert same_cuspidal_line(nu(-1), nu(2))
    assert not same_cuspidal_line(nu(0), nu(Fraction(1, 2)))
    assert not same_cuspidal_line(nu(0), nu(0, RHO2))


# -- linked / precedes -----------------------------------------------------------

def test_linked_examples():
    assert is_linked(s(0, 1), s(2, 3))
    assert not is_linked(s(0, 1), s(0, 1))
    assert not is_linked(s(0, 0), s(2, 2))


def test_linked_needs_integer_offset_and_same_line():
    assert not is_linked(s(0, 1), s(Fraction(3, 2), Fraction(5, 2)))
    assert not is_linked(s(0, 1), s(2, 3, RHO2))


def test_precedes_examples():
    assert precedes(s(0, 0), s(1, 1))
    assert not precedes(s(1, 1), s(0, 0))
    assert precedes(s(0, 1), s(1, 2))


@given(segments(), segments())
def test_linked_is_symmetric(d1, d2):
    assert is_linked(d1, d2) == is_linked(d2, d1)


@given(segments(), segments())
def test_precedes_is_antisymmetric(d1, d2):
    assert not (precedes(d1, d2) and precedes(d2, d1))


@given(segments(), segments())
def test_dual_reverses_precedes(d1, d2):
    assert precedes(d1, d2) == precedes(dual_segment(d2), dual_segment(d1))


@given(st.integers(-6, 6), st.integers(1, 5), st.integers(-6, 6), st.integers(1, 5))
def test_linked_against_explicit_sets(a1, l1, a2, l2):
    x = set(range(a1, a1 + l1))
    y = set(range(a2, a2 + l2))
    union = x | y
    expected = not x <= y and not y <= x and union == set(range(min(union), max(union) + 1))
    assert is_linked(s(a1, a1 + l1 - 1), s(a2, a2 + l2 - 1)) == expected


# -- duals and truncation --------------------------------------------------------

def test_dual_examples():
    half = Fraction(1, 2)
    assert dual_segment(s(-half, half)) == s(-half, half)
    assert dual_segment(s(0, 2)) == s(-2, 0)


def test_dual_moves_to_dual_line():
    d = dual_segment(s(0, 1, RHO2))
    assert d.line == RHO2.dual()
    assert (d.a, d.b) == (-1, 0)


@given(segments())
def test_dual_is_involution(d):
    assert dual_segment(dual_segment(d)) == d


def test_truncate_examples():
    assert truncate(s(0, 2), 1, "right") == s(0, 1)
    assert truncate(s(0, 2), 2, "left") == s(2, 2)
    assert truncate(s(0, 0), 1, "right") is EMPTY


def test_truncate_too_far():
    with pytest.raises(DomainError):
        truncate(s(0, 1), 3)


@given(segments(), st.data())
def test_truncation_absolute_length(d, data):
    k = data.draw(st.integers(0, d.rel_length))
    for side in ("left", "right"):
        t = truncate(d, k, side)
        rest = 0 if t is EMPTY else t.abs_length
        assert d.abs_length == rest + k * d.line.size


def test_segment_rejects_fractional_spacing():
    with pytest.raises(DomainError):
        segment(0, Fraction(1, 2))
    with pytest.raises(DomainError):
        Segment(nu(0), 0)


# -- multisegments -------------------------------------------------------------

def test_normalize_examples():
    assert normalize_multisegment([s(0, 0), s(1, 1)]).segments == (s(1, 1), s(0, 0))
    m = normalize_multisegment([s(0, 0), s(5, 5)])
    assert m == normalize_multisegment([s(5, 5), s(0, 0)])
    assert normalize_multisegment([s(-1, -1), s(0, 1)]).segments == (s(0, 1), s(-1, -1))


def test_inadmissible_listing_rejected():
    with pytest.raises(DomainError):
        Multisegment((s(0, 0), s(1, 1)))


@given(st.lists(segments(), min_size=1, max_size=6))
def test_normalize_is_admissible_and_deterministic(segs):
    m = normalize_multisegment(segs)
    assert is_admissible_order(m.segments)
    for i in range(len(m.segments)):
        for j in range(i + 1, len(m.segments)):
            assert not precedes(m.segments[i], m.segments[j])
    assert normalize_multisegment(reversed(segs)).segments == m.segments


@given(multisegments())
def test_multisegment_dual_is_involution(m):
    assert m.dual().dual() == m


# -- JSON -------------------------------------------------------------------------

def test_rep_json_shape():
    assert rep_to_json(nu(Fraction(-1, 2))) == {"line": "1", "size": 1, "exp": "-1/2"}
    sd = CuspidalLine("t", 2, "t")
    assert rep_to_json(nu(1, sd))["dual"] == "t"


@given(reps())
def test_rep_json_round_trip(r):
    assert rep_from_json(json.loads(json.dumps(rep_to_json(r)))) == r


@given(segments())
def test_segment_json_round_trip(d):
    obj = segment_to_json(d)
    assert set(obj) == {"base", "len"}
    assert segment_from_json(obj) == d


@given(multisegments())
def test_multisegment_json_round_trip(m):
    assert multisegment_from_json(multisegment_to_json(m)) == m


def test_empty_marker():
    assert not EMPTY
    assert repr(EMPTY) == "EMPTY"
    assert CuspidalRep(TRIVIAL, 0).size == 1
