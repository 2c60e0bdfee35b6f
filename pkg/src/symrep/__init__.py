"""Exact irreducible representations and characters of the symmetric groups."""
from .characters import (
    CharacterTable,
    GroupAlgebraElement,
    central_idempotent,
    character_table,
    convolve,
    hook_cycle_character,
    mn_character,
    restriction_multiplicities,
)
from .combinatorics import (
    Node,
    Partition,
    Permutation,
    SkewShape,
    addable_nodes,
    class_representative,
    class_size,
    coxeter_length,
    cycle_type,
    hook_dimension,
    partitions_of,
    reduced_word,
    removable_nodes,
    skew,
)
from .fock import FockVector, boson_image_residual, fock_character, heisenberg_residual, lambda_op
from .kernels import BACKEND
from .repforms import (
    hecke_iso_check,
    hecke_L,
    jm_matrix,
    natural_module_check,
    orthogonal_rep,
    rep_matrix,
    seminormal_rep,
)
from .symfunc import (
    GradedPolynomial,
    contravariant_form,
    elementary_schur,
    frobenius_expand,
    power_monomial,
    schur_in_monomials,
    schur_poly,
)
from .tableaux import (
    StandardTableau,
    admissible_transposition,
    canonical_tableau,
    content_vector,
    is_valid_weight,
    path_to_canonical,
    standard_tableaux,
    weight_to_tableau,
)

__version__ = "0.1.0"
