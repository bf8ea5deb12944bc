"""Exact verification of degree bounds for intersecting k-uniform set families."""

from .core import (
    Family,
    DegreeSequence,
    ParameterError,
    PreconditionError,
    compare_sets,
    degree_sequence,
    diversity,
    is_intersecting,
    is_t_intersecting,
    link,
    mask_of,
    elements,
    parse_family,
    format_family,
)
from .constructions import ConstructionSpec, build, closed_form
from .bounds import BoundSpec, binom, evaluate, inequality_sweep

__all__ = [
    "Family", "DegreeSequence", "ParameterError", "PreconditionError",
    "compare_sets", "degree_sequence", "diversity", "is_intersecting",
    "is_t_intersecting", "link", "mask_of", "elements", "parse_family",
    "format_family", "ConstructionSpec", "build", "closed_form",
    "BoundSpec", "binom", "evaluate", "inequality_sweep",
]
