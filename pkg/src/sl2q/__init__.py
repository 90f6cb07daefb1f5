"""Exact computer algebra for the generalised Lie algebra sl(2)_q at roots of unity."""

from .algebra import (
    AlgebraElement,
    Monomial,
    Word,
    casimir_c2p,
    centre_relation_sides,
    commutator,
    dressed_chebyshev,
    is_central,
    multiply,
    normal_form,
    recursion_identity,
    rewrite_words,
)
from .classification import classify
from .cyclotomic import CycNumber, InvalidOrderError, RootOrder, chebyshev_like, minimal_l, q_number, q_pow
from .expr import parse, parse_element, print_canonical
from .representations import (
    ConstraintError,
    Representation,
    build,
    build_F,
    build_highest_weight,
    build_one_dim,
    build_periodic,
    build_semiperiodic,
    central_character,
    check_scalar_relation,
    commutant_dimension,
    decompose_case4,
    verify_relations,
)

__version__ = "0.1.0"
