from biquandle.engine.bounds import derive_bounds, exponents_of
from biquandle.engine.invariant import Comparison, InvariantResult, compare_diagrams, compute_invariant
from biquandle.engine.normal_form import canonicalize, equal_up_to_unit
from biquandle.engine.relations import PresentationError, Relation, assemble_relations, presentation_matrix

__all__ = [
    "Comparison",
    "InvariantResult",
    "PresentationError",
    "Relation",
    "assemble_relations",
    "canonicalize",
    "compare_diagrams",
    "compute_invariant",
    "derive_bounds",
    "equal_up_to_unit",
    "exponents_of",
    "presentation_matrix",
]
