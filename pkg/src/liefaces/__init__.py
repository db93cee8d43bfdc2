"""Exact lower bounds on the face numbers of triangulated compact Lie groups."""

from .algebra import (
    BettiVector,
    Generator,
    GradedPresentation,
    betti_of,
    betti_vector,
    formal_dimension,
    poincare_polynomial,
    presentation,
    validate_presentation,
)
from .catalog import best_ct_bound, group_data, list_entries, presentation_of, so_mod2_heights
from .covering import (
    CtBound,
    RationalType,
    classical_ct_bound,
    kahler_ct_bound,
    rank_dim_bound,
    rational_type_bound,
    weighted_length_bound,
)
from .exact import IntPoly, binomial, poly_eval, poly_mul
from .faces import (
    FaceBoundVector,
    classical_facet_bound,
    face_bound,
    face_bound_vector,
    kahler_facet_bound,
    total_bound,
)

__version__ = "0.1.0"
