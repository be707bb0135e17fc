"""Exact computations with Hom-Lie algebras: actions, non-abelian tensor
products, low-dimensional homology, central extensions and the first cyclic
homology of Hom-associative algebras."""

from .fields import Q, Field, PrimeField, QuadraticField, Rationals, field_from_spec
from .linalg import Matrix, PresentedQuotient, Subspace
from .algebra import (
    HomLieAlgebra,
    HomMorphism,
    center,
    derived,
    hom_lie_violations,
    is_ideal,
    perfectness_flags,
    quotient_algebra,
    subalgebra,
    validate_hom_lie,
)
from .actions import HomAction, action_violations, check_compatibility, derivation_exact_sequence, semidirect
from .tensor import psi_maps, self_tensor, swap_map, tensor_product, tensor_right_exactness, tensor_square_sequence
from .homology import chain_complex, h2_alpha, homology, homology_dims, trivial_module
from .central import five_term_sequence, uce_alpha, uce_alpha_vs_tensor, uce_via_tensor
from .cyclic import HomAssocAlgebra, cyclic_exact_sequence, cyclic_presentation, milnor_hc1, validate_assoc
from .hla import emit_hla, load_hla, parse_hla
from .errors import HomLieError, ParseError, PreconditionViolated

__version__ = "0.1.0"

__all__ = [
    "Q",
    "Field",
    "PrimeField",
    "QuadraticField",
    "Rationals",
    "field_from_spec",
    "Matrix",
    "PresentedQuotient",
    "Subspace",
    "HomLieAlgebra",
    "HomMorphism",
    "center",
    "derived",
    "hom_lie_violations",
    "is_ideal",
    "perfectness_flags",
    "quotient_algebra",
    "subalgebra",
    "validate_hom_lie",
    "HomAction",
    "action_violations",
    "check_compatibility",
    "derivation_exact_sequence",
    "semidirect",
    "psi_maps",
    "self_tensor",
    "swap_map",
    "tensor_product",
    "tensor_right_exactness",
    "tensor_square_sequence",
    "chain_complex",
    "h2_alpha",
    "homology",
    "homology_dims",
    "trivial_module",
    "five_term_sequence",
    "uce_alpha",
    "uce_alpha_vs_tensor",
    "uce_via_tensor",
    "HomAssocAlgebra",
    "cyclic_exact_sequence",
    "cyclic_presentation",
    "milnor_hc1",
    "validate_assoc",
    "emit_hla",
    "load_hla",
    "parse_hla",
    "HomLieError",
    "ParseError",
    "PreconditionViolated",
    "__version__",
]
