import math
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import RHO2, cuspidal_series, segments, series

from glbranch.answer import MultiplicityAnswer
from glbranch.calculus import (
    CuspidalSupport,
    FormalSum,
    bz_hom_upper_bound,
    bz_hom_upper_bound_parts,
    csupp,
    derivative_levels,
    derivative_Q,
    derivative_Z,
    euler_poincare_check,
    factor_derivative,
    jacquet_shadow,
    product_rule,
    whittaker_dim,
)
from glbranch.core import (
    EMPTY,
    TRIVIAL,
    CuspidalLine,
    dual_segment,
    normalize_multisegment,
    nu,
    segment,
    truncate,
)
from glbranch.errors import DomainError
from glbranch.oracle import multiplicity, steinberg, xi
from glbranch.series import (
    GenericRep,
    PrincipalSeries,
    Qseg,
    Zseg,
    factor_size,
    is_good_pair,
    principal_series,
)

H = Fraction(1, 2)


# -- single-factor derivatives ----------------------------------------------------------

def test_derivative_q_examples():
    assert derivative_Q(segment(-1, 1), 1) == segment(0, 1)
    assert derivative_Q(segment(0, 1, RHO2), 1) is None
    assert derivative_Q(segment(0, 1, RHO2), 2) == segment(1, 1, RHO2)
    assert derivative_Q(segment(-1, 1), 0) == segment(-1, 1)
    assert derivative_Q(segment(-1, 1), 1, "left") == segment(-1, 0)
    assert derivative_Q(segment(-1, 1), 3) is EMPTY
    assert derivative_Q(segment(-1, 1), 4) is None


def test_derivative_z_examples():
    assert derivative_Z(segment(0, 2), 1) == segment(0, 1)
    assert derivative_Z(segment(0, 2), 2) is None
    assert derivative_Z(segment(0, 2), 1, "left") == segment(1, 2)
    assert derivative_Z(segment(0, 1, RHO2), 2) == segment(0, 0, RHO2)
    assert derivative_Z(segment(0, 0), 1) is EMPTY


def test_derivative_rejects_bad_arguments():
    with pytest.raises(DomainError):
        derivative_Q(segment(0, 1), 1, "up")
    with pytest.raises(DomainError):
        derivative_Z(segment(0, 1), -1)


@given(segments())
def test_z_derivative_chains_like_truncation(d):
    r = d.line.size
    once = derivative_Z(d, r)
    if once is EMPTY:
        assert d.rel_length == 1
        return
    twice = derivative_Z(once, r)
    assert twice == truncate(d, 2, "right")


def test_cuspidal_derivative_levels():
    r = nu(0, RHO2)
    assert factor_derivative(r, 0) == r
    assert factor_derivative(r, 1) is None
    assert factor_derivative(r, 2) is EMPTY
    assert derivative_levels(r) == [0, 2]
    assert derivative_levels(Qseg(segment(0, 2, RHO2))) == [0, 2, 4, 6]
    assert derivative_levels(Zseg(segment(0, 2, RHO2))) == [0, 2]


# -- product rule ------------------------------------------------------------------------

def test_product_rule_examples():
    one = product_rule([nu(0), nu(1)], 1)
    assert one.items() == [((nu(0),), 1), ((nu(1),), 1)]
    two = product_rule([nu(0), nu(1)], 2)
    assert two.items() == [((), 1)]
    assert product_rule([nu(0), nu(1)], 3).total() == 0


def test_like_terms_merge():
    fs = product_rule([nu(0), nu(0)], 1)
    assert fs.items() == [((nu(0),), 2)]


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("k", [2, 3])
def test_repeated_top_cuspidal_gives_coefficient_two(m, k):
    rho = CuspidalLine("rho", k)
    chi = nu(Fraction(1, 3))
    exps = [m - 2] + list(range(m - 2, -1, -1))
    ps = PrincipalSeries(tuple(nu(e + H, rho) for e in exps) + (chi,))
    shadow = product_rule(ps, k + 1, "left").twist(-H)
    term = tuple(nu(e, rho) for e in range(m - 2, -1, -1))
    assert shadow.coefficient(term) == 2


@given(series(max_size=5))
def test_product_rule_term_count(ps):
    total = sum(product_rule(ps, i).total() for i in range(ps.total_size + 1))
    assert total == math.prod(len(derivative_levels(f)) for f in ps.factors)


@given(series(max_size=4), st.sampled_from(["left", "right"]))
def test_product_rule_conserves_support(ps, side):
    whole = csupp(ps)
    for i in range(ps.total_size + 1):
        for term, _ in product_rule(ps, i, side):
            assert sum(factor_size(f) for f in term) + i == ps.total_size
            assert not csupp(term) - whole


def test_formal_sum_json():
    fs = product_rule([nu(0), Qseg(segment(0, 1))], 1)
    obj = fs.to_json()
    assert [t["coeff"] for t in obj] == [1, 1]
    assert FormalSum(Counter({(nu(0),): 0})).total() == 0


# -- supports ------------------------------------------------------------------------------

def test_csupp_examples():
    assert csupp(xi(3)) == CuspidalSupport({nu(-1): 1, nu(0): 1, nu(1): 1})
    assert csupp(segment(0, 2)) == CuspidalSupport({nu(0): 1, nu(1): 1, nu(2): 1})
    ps = principal_series(Qseg(segment(0, 1)), nu(3))
    assert csupp(ps) == csupp(principal_series(nu(3), Qseg(segment(0, 1))))
    assert csupp(EMPTY) == CuspidalSupport()


def test_csupp_rejects_junk():
    with pytest.raises(DomainError):
        csupp(42)


# -- BZ bound -----------------------------------------------------------------------------

def _case_one_series(m, k, chi=nu(Fraction(1, 3))):
    rho = CuspidalLine("rho", k)
    facs = tuple(nu(e + H, rho) for e in range(m - 1, -1, -1))
    return PrincipalSeries(facs + (chi,)), Zseg(segment(0, m - 1, rho))


@pytest.mark.parametrize("m,k", [(2, 2), (3, 2), (2, 3), (4, 2)])
def test_bz_bound_case_one_family(m, k):
    ps, target = _case_one_series(m, k)
    assert bz_hom_upper_bound(ps, target) == 1


def test_bz_bound_disjoint_support():
    other = CuspidalLine("other", 2)
    ps = PrincipalSeries((nu(Fraction(1, 3), RHO2), nu(Fraction(7, 3), RHO2), nu(Fraction(1, 3))))
    assert bz_hom_upper_bound(ps, Zseg(segment(0, 1, other))) == 0


def test_bz_bound_generic_target_keeps_top_term():
    # full derivatives of two generic representations always match
    ps = PrincipalSeries((nu(Fraction(1, 3), RHO2), nu(Fraction(1, 3))))
    assert bz_hom_upper_bound(ps, Qseg(segment(0, 0, CuspidalLine("other", 2)))) == 1


def test_bz_bound_xi2():
    assert bz_hom_upper_bound(xi(2), steinberg(1)) >= 2


def test_bz_bound_size_check():
    with pytest.raises(DomainError):
        bz_hom_upper_bound_parts(xi(3), steinberg(1))


@given(cuspidal_series(line=TRIVIAL, min_size=2, max_size=6, window=4), st.integers(-4, 4))
def test_bz_bound_at_least_one_for_good_pairs(ps, a2):
    n = ps.total_size - 1
    a = Fraction(a2, 2)
    pi = GenericRep((segment(a, a + n - 1),))
    if is_good_pair(ps, pi).good:
        assert bz_hom_upper_bound(ps, pi) >= 1
        assert euler_poincare_check(ps, pi, MultiplicityAnswer.exact(1, True, "good-pair")) is True


# -- Whittaker and Euler-Poincare ---------------------------------------------------------------

def test_whittaker_examples():
    assert whittaker_dim(xi(4)) == 1
    assert whittaker_dim(normalize_multisegment([segment(-H, H)])) == 0
    assert whittaker_dim(normalize_multisegment([segment(-H, -H), segment(H, H)])) == 1
    assert whittaker_dim(steinberg(3)) == 1
    assert whittaker_dim(principal_series(Qseg(segment(0, 2)), nu(5))) == 1
    assert whittaker_dim(principal_series(Zseg(segment(0, 2)), nu(5))) == 0


def test_euler_poincare_examples():
    ps = PrincipalSeries((nu(H), nu(-H)))
    pi = steinberg(1)
    assert euler_poincare_check(ps, pi, multiplicity(ps, pi)) is True
    three = PrincipalSeries((nu(0), nu(1), nu(5)))
    gen = GenericRep((segment(0, 0, RHO2),))
    assert euler_poincare_check(three, gen, multiplicity(three, gen)) is True
    fake = MultiplicityAnswer.exact(2, True, "good-pair")
    assert euler_poincare_check(ps, pi, fake) is False
    assert euler_poincare_check(xi(2), pi, multiplicity(xi(2), pi)) is None


# -- Jacquet shadows -------------------------------------------------------------------------

def test_jacquet_examples():
    d = segment(0, 2)
    assert jacquet_shadow(d, 1) == (segment(1, 2), segment(0, 0))
    assert jacquet_shadow(segment(0, 1, RHO2), 1) is None
    assert jacquet_shadow(d, 1, "opposite") == (segment(0, 1), segment(2, 2))
    assert jacquet_shadow(d, 0) == (d, EMPTY)


def test_jacquet_level_out_of_range():
    with pytest.raises(DomainError):
        jacquet_shadow(segment(0, 1), 3)


def _dual(x):
    return x if x is EMPTY else dual_segment(x)


@given(segments(), st.data())
def test_jacquet_sides_exchanged(d, data):
    l = data.draw(st.integers(0, d.abs_length))
    std = jacquet_shadow(d, l, "standard")
    if std is None:
        assert jacquet_shadow(d, l, "opposite") is None
        return
    opp = jacquet_shadow(d, d.abs_length - l, "opposite")
    assert opp == (std[1], std[0])
    dual_side = jacquet_shadow(dual_segment(d), l, "opposite")
    assert dual_side == (_dual(std[0]), _dual(std[1]))
