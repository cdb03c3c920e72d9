"""invcat: a computational toolkit for finite inverse categories.

Build or load a finite category, verify that every morphism has a unique
generalized inverse, and study the resulting structure: natural partial
order, fibred and partial actions on posets, expansions over subset posets,
the Cauchy completion, enlargements, and matrix-over-group decompositions
of the linear span.
"""

from __future__ import annotations

from .actions import (
    FibredAction,
    MomentMap,
    PartialActionBundle,
    SymmetryAction,
    canonical_self_action,
    conjugation_action,
    fibred_to_symmetry,
    natural_order_poset,
    restrict_to_ideal,
    symmetry_to_partial,
    validate_fibred,
    validate_partial,
    validate_symmetry,
)
from .algebra import (
    Decomposition,
    GroupTable,
    IdempotentClass,
    MoritaVerdict,
    StructureConstants,
    decompose,
    group_iso,
    idempotent_classes,
    isotropy_group,
    morita_check,
    structure_constants,
)
from .bernoulli import (
    BernoulliPoset,
    PCElement,
    bernoulli_global,
    bernoulli_partial,
    build_bernoulli,
)
from .completion import (
    CauchyCompletion,
    EnlargementReport,
    EquivalenceReport,
    cauchy_completion,
    completion_inclusion,
    enlargement_check,
    equivalence_check,
    restriction_groupoid,
)
from .core import (
    FiniteCategory,
    Functor,
    InverseCategory,
    RelationClasses,
    ValidationReport,
    Violation,
    compose_functors,
    find_inverse_structure,
    generalized_inverses,
    identity_functor,
    idempotents,
    idempotents_at,
    inclusion_functor,
    inner_outer,
    invertible_morphisms,
    isomorphic_objects,
    natural_leq,
    relation_classes,
    validate_category,
    validate_functor,
)
from .errors import (
    DimensionMismatch,
    NotAFunctor,
    NotASubcategory,
    NotComposable,
    NotGlobal,
    NotIdeal,
    NotIdempotent,
    NotInverseCategory,
    NotParallel,
    ParseError,
    PreconditionFailed,
    SizeCapExceeded,
    ToolkitError,
    UndeclaredName,
)
from .expansion import (
    InnerExpansion,
    SzCategory,
    classical_group_expansion,
    corestriction,
    expansion_functor,
    inner_expansion,
    product_order_leq,
    projection,
    pseudo_product,
    restriction,
    szendrei,
    validate_inverse_semigroup,
    wedge,
)
from .fixtures import (
    antichain2_poset,
    chain2_poset,
    cyclic_group_2,
    full_transformation_monoid_2,
    point_poset,
    symmetric_inverse_monoid_2,
    trivial_category,
    two_object_groupoid,
)
from .poset import (
    PartialOrderIso,
    Poset,
    build_Iic,
    chain_poset,
    ideals,
    is_ideal,
    order_isos_between,
    poset_from_function,
)
from .specfile import dump_category, load_category, parse_category, save_category

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "ToolkitError",
    "UndeclaredName",
    "NotInverseCategory",
    "NotParallel",
    "SizeCapExceeded",
    "NotAFunctor",
    "NotGlobal",
    "NotIdeal",
    "NotComposable",
    "NotIdempotent",
    "PreconditionFailed",
    "NotASubcategory",
    "DimensionMismatch",
    "ParseError",
    # core
    "FiniteCategory",
    "InverseCategory",
    "Functor",
    "Violation",
    "ValidationReport",
    "RelationClasses",
    "validate_category",
    "find_inverse_structure",
    "generalized_inverses",
    "natural_leq",
    "idempotents",
    "idempotents_at",
    "idempotent_classes",
    "inner_outer",
    "relation_classes",
    "validate_functor",
    "compose_functors",
    "identity_functor",
    "inclusion_functor",
    "invertible_morphisms",
    "isomorphic_objects",
    # posets
    "Poset",
    "PartialOrderIso",
    "poset_from_function",
    "chain_poset",
    "ideals",
    "is_ideal",
    "order_isos_between",
    "build_Iic",
    # actions
    "MomentMap",
    "FibredAction",
    "SymmetryAction",
    "PartialActionBundle",
    "natural_order_poset",
    "canonical_self_action",
    "conjugation_action",
    "fibred_to_symmetry",
    "symmetry_to_partial",
    "validate_fibred",
    "validate_symmetry",
    "validate_partial",
    "restrict_to_ideal",
    # Bernoulli
    "PCElement",
    "BernoulliPoset",
    "build_bernoulli",
    "bernoulli_global",
    "bernoulli_partial",
    # expansions
    "SzCategory",
    "InnerExpansion",
    "szendrei",
    "pseudo_product",
    "wedge",
    "restriction",
    "corestriction",
    "inner_expansion",
    "validate_inverse_semigroup",
    "expansion_functor",
    "product_order_leq",
    "projection",
    "classical_group_expansion",
    # completion
    "CauchyCompletion",
    "cauchy_completion",
    "restriction_groupoid",
    "EnlargementReport",
    "enlargement_check",
    "EquivalenceReport",
    "equivalence_check",
    "completion_inclusion",
    # algebra
    "StructureConstants",
    "structure_constants",
    "GroupTable",
    "isotropy_group",
    "group_iso",
    "IdempotentClass",
    "Decomposition",
    "decompose",
    "MoritaVerdict",
    "morita_check",
    # files
    "parse_category",
    "load_category",
    "dump_category",
    "save_category",
    # fixtures
    "trivial_category",
    "cyclic_group_2",
    "two_object_groupoid",
    "symmetric_inverse_monoid_2",
    "full_transformation_monoid_2",
    "point_poset",
    "chain2_poset",
    "antichain2_poset",
]
