"""Symbolic calculator for restricting representations of GL(n) to GL(n-1).

Exact segment combinatorics, the good-pair and badness predicates, segment-level
derivatives, and a Hom-multiplicity oracle whose answers carry provenance.
"""

from .answer import MultiplicityAnswer
from .calculus import (
    FormalSum,
    bz_hom_upper_bound,
    csupp,
    derivative_Q,
    derivative_Z,
    euler_poincare_check,
    jacquet_shadow,
    product_rule,
    whittaker_dim,
)
from .core import (
    EMPTY,
    TRIVIAL,
    CuspidalLine,
    CuspidalRep,
    Multisegment,
    Segment,
    dual_segment,
    is_linked,
    normalize_multisegment,
    nu,
    precedes,
    segment,
    truncate,
)
from .errors import DomainError, ParseError, SemanticError
from .geometry import (
    Partition,
    flag_embedding_exists,
    levi_ss_rank,
    segment_partition_count,
)
from .oracle import (
    multiplicity,
    multiplicity_Z,
    nongeneric_quotient_test,
    steinberg,
    steinberg_subquotients,
    xi,
)
from .parsing import format_expression, parse_expression
from .series import (
    GenericRep,
    PrincipalSeries,
    Qseg,
    Zseg,
    commutation_equivalent,
    is_bad_to,
    is_good_pair,
    rearrange_good,
    theta,
)

__all__ = [
    "CuspidalLine",
    "CuspidalRep",
    "DomainError",
    "EMPTY",
    "FormalSum",
    "GenericRep",
    "MultiplicityAnswer",
    "Multisegment",
    "ParseError",
    "Partition",
    "PrincipalSeries",
    "Qseg",
    "Segment",
    "SemanticError",
    "TRIVIAL",
    "Zseg",
    "bz_hom_upper_bound",
    "commutation_equivalent",
    "csupp",
    "derivative_Q",
    "derivative_Z",
    "dual_segment",
    "euler_poincare_check",
    "flag_embedding_exists",
    "format_expression",
    "is_bad_to",
    "is_good_pair",
    "is_linked",
    "jacquet_shadow",
    "levi_ss_rank",
    "multiplicity",
    "multiplicity_Z",
    "nongeneric_quotient_test",
    "normalize_multisegment",
    "nu",
    "parse_expression",
    "precedes",
    "product_rule",
    "rearrange_good",
    "segment",
    "segment_partition_count",
    "steinberg",
    "steinberg_subquotients",
    "theta",
    "truncate",
    "whittaker_dim",
    "xi",
]

__version__ = "0.1.0"
