"""Generic initial ideals, fibre products, and symmetric algebraic shifting
over Q, with exact (fraction-free) linear algebra throughout."""

from .ring import (LEX, RLEX, ParseError, Poly, Ring, RingMismatch, contract,
                   order_by_name, parse_poly)
from .groebner import (GroebnerBasis, Ideal, MonomialIdeal, buchberger,
                       hilbert_dim, ideal_equal, initial_ideal,
                       macaulay_initial, normal_form, quotient_basis)
from .ginengine import (GenericChange, GinResult, GinUncertain, d_of, gin,
                        gin_membership_span, gin_slice, kernel_intersection_dim,
                        random_change)
from .constructions import (BlockViolation, Q_ideal, SplitRing,
                            fibre_product_ideal, gin_in_block,
                            is_componentwise_linear, is_strongly_stable,
                            regularity_via_gin)
from .simplicial import (ShiftOverflow, SimplicialComplex, complex_of_ideal,
                         delta_s, disjoint_union, f_vector, is_shifted,
                         stanley_reisner)
from .verify import Report, run_all, run_claim

__all__ = [
    "LEX", "RLEX", "ParseError", "Poly", "Ring", "RingMismatch", "contract",
    "order_by_name", "parse_poly",
    "GroebnerBasis", "Ideal", "MonomialIdeal", "buchberger", "hilbert_dim",
    "ideal_equal", "initial_ideal", "macaulay_initial", "normal_form",
    "quotient_basis",
    "GenericChange", "GinResult", "GinUncertain", "d_of", "gin",
    "gin_membership_span", "gin_slice", "kernel_intersection_dim",
    "random_change",
    "BlockViolation", "Q_ideal", "SplitRing", "fibre_product_ideal",
    "gin_in_block", "is_componentwise_linear", "is_strongly_stable",
    "regularity_via_gin",
    "ShiftOverflow", "SimplicialComplex", "complex_of_ideal", "delta_s",
    "disjoint_union", "f_vector", "is_shifted", "stanley_reisner",
    "Report", "run_all", "run_claim",
]

__version__ = "0.1.0"
