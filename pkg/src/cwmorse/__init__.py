"""Discrete Morse vector fields on surface CW complexes."""

from .builtins import BUILTIN_NAMES, builtin
from .complexes import Cell, NonRegular, RegularComplex, UnknownBuiltin, build_complex
from .enumeration import (
    EnumerationReport,
    audit_against_claims,
    classify_fields,
    enumerate_gradient_fields,
    enumerate_optimal_classes,
    family_signature,
    min_critical_count,
)
from .fields import (
    DimensionMismatch,
    FunctionNotTotal,
    InvalidField,
    NotCritical,
    NotGradient,
    NotMorse,
    VectorField,
    closed_v_path,
    count_connecting_paths,
    critical_cells,
    gradient_field_of,
    is_discrete_morse,
    is_gradient,
    make_field,
    morse_function_from_field,
    v_paths,
)
from .symmetry import (
    CellPermutation,
    NotGroupClosed,
    apply,
    are_isomorphic_fields,
    automorphisms,
    burnside_class_count,
    canonical_form,
    orbit,
    stabilizer_order,
    vertex_orbits,
    vertex_stabilizer_order,
)

__version__ = "0.1.0"
