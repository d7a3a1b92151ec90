"""Finite partial-algebra workbench: models, axiom checkers, constructions,
fieldoid decomposition and coherent-unit-system search."""

from .axioms import (
    FIELDOID_AXIOMS,
    PAF_AXIOMS,
    Structure,
    check_fieldoid_axioms,
    check_fieldoid_lemmas,
    check_paf_axioms,
    check_paf_lemmas,
    is_fieldoid,
    is_paf,
)
from .coherence import (
    CoherentSearch,
    check_no_dimensionful_roots,
    check_root_indistinguishability,
    find_coherent_system,
    group_exponent,
    is_coherent_selection,
    search_coherent_systems,
    summability_classes,
)
from .construct import (
    ExtensionData,
    canonical_model,
    cyclic_extension,
    cyclic_extension_model,
    disjoint_union,
    model_from_extension,
    partial_field_model,
    primitive_root,
    split_extension,
    truncated_free_model,
    z4_extension_model,
)
from .fieldoid import decompose_fieldoid, multipliability_classes
from .model import MAX_ELEMENTS, UNDEF, UNDEF_TEXT, FiniteModel, load_model

__all__ = [name for name in dir() if not name.startswith("_")]
