"""Exact workbench for three ring extensions of the rationals.

One computable carrier (finite power sums with periodic rational
coefficients) supports three quotient views: the cofinite-agreement ring
with its partial order, a totally ordered hyperreal view driven by residue
selectors, and the bounded quotient by the ideal of sequences vanishing
faster than 1/n, where infinitesimals are nilpotent.  Canonical maps
between the views, a text grammar, and an independent numeric oracle round
out the toolkit.
"""

from .errors import (
    DivisionNotSupported,
    DomainError,
    DomainViolation,
    InconclusiveSample,
    InfiniteElement,
    NotLittleOh,
    ParseError,
    UnboundedOperand,
    ZeroDivisor,
)
from .fermat import (
    FermatElem,
    LittleOhDecomposition,
    cmp_o,
    decompose,
    eq_o,
    in_ideal_o,
    is_little_oh,
    nilpotency_index,
    o_part,
    st_o,
    strip_o,
)
from .henle import (
    Classification,
    HenleElem,
    PartialOrder,
    classify,
    cmp_f,
    eq_f,
    st_f,
    zero_divisor_witness,
)
from .hom import HomReport, check_hom, map_i, map_j, reverse_map_witness
from .hyperreal import HyperElem, Selector, TotalOrder, cmp_u, eq_u, selector_independent, st_u
from .oracle import (
    Sample,
    Trend,
    conclusive_sample_size,
    empirical_limit_nx,
    empirical_spectrum,
    eval_at,
)
from .parser import format_seq, parse
from .seqrep import (
    PeriodicCoeff,
    Rational,
    SeqRep,
    Sign,
    SignSpectrum,
    Term,
    alternating,
    constant,
    eventually_zero,
    normalize,
    nth_power,
    one,
    periodic_seq,
    sign_spectrum,
    zero,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # carrier
    "Rational", "PeriodicCoeff", "Term", "SeqRep", "Sign", "SignSpectrum",
    "normalize", "sign_spectrum", "eventually_zero",
    "zero", "one", "constant", "nth_power", "alternating", "periodic_seq",
    # cofinite quotient
    "HenleElem", "PartialOrder", "Classification",
    "eq_f", "cmp_f", "classify", "st_f", "zero_divisor_witness",
    # hyperreal view
    "HyperElem", "Selector", "TotalOrder",
    "cmp_u", "eq_u", "selector_independent", "st_u",
    # bounded quotient
    "FermatElem", "LittleOhDecomposition",
    "in_ideal_o", "eq_o", "cmp_o", "is_little_oh", "decompose",
    "nilpotency_index", "st_o", "strip_o", "o_part",
    # homomorphisms
    "HomReport", "map_i", "map_j", "check_hom", "reverse_map_witness",
    # parser
    "parse", "format_seq",
    # oracle
    "Sample", "Trend", "eval_at", "empirical_spectrum", "empirical_limit_nx",
    "conclusive_sample_size",
    # errors
    "DomainError", "InfiniteElement", "UnboundedOperand", "NotLittleOh",
    "DomainViolation", "InconclusiveSample", "ParseError",
    "DivisionNotSupported", "ZeroDivisor",
]
