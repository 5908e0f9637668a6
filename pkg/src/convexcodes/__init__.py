"""Convex realizations of binary neural codes."""

from .bounds import (
    DimensionBounds,
    embedding_dimension_bounds,
    helly_lower_bound,
    helly_violation,
)
from .code import (
    NeuralCode,
    SimplicialComplex,
    canonicalize,
    format_code,
    generate_Cn,
    is_max_intersection_complete,
    minimal_nonfaces,
    parse_code,
    random_code,
    simplicial_complex,
)
from .construction import (
    ConstructedRealization,
    SimplexAtom,
    Stimulus,
    atom_membership,
    codeword_at,
    construct,
    realized_code,
    verify_construction,
    witness_point,
)
from .intervals import (
    IntervalSet,
    Line,
    OpenifyReport,
    Realization1D,
    conjecture1_check,
    interval,
    openify,
    random_realization_1d,
    realized_code_1d,
)
from .search1d import CellAssignment, assignment_to_realization, search_dim1

__version__ = "0.1.0"
