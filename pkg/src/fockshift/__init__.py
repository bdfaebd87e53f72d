"""Exact finite-truncation toolkit for periodic weighted shifts on Fock space."""

from .classify import (
    DivisorSequence,
    K0Order,
    SupernaturalNumber,
    d_divides_iff,
    expansion_witness,
    k0_isomorphic,
    k0_order,
    supernatural_eq,
    supernatural_from_sequence,
)
from .decomposition import (
    BlockMatrix,
    DecompositionUnitaries,
    SubspacePartition,
    aligned_length,
    build_unitaries,
    compare_blocks,
    conjugate_shift,
    predicted_blocks,
    subspace_partition,
    verify_theorem,
)
from .errors import FockShiftError, NotBoundedBelow
from .fock import (
    FockSpace,
    Operator,
    apply_to_vector,
    basis_vector,
    check_ct_relations,
    creation_operator,
    creation_operators,
    equality_on_subspace,
    export_operator,
    identity,
    import_operator,
    vacuum_projection,
)
from .periodicity import (
    FockTree,
    WeightTop,
    detect_period,
    distinct_path_tuples,
    example_top,
    export_tree,
    periodic_weight,
    random_top,
    verify_containment,
)
from .scalars import Gaussian
from .shift import (
    WeightFunction,
    build_shift,
    is_bounded_below,
    normalize_weights,
    recover_creation,
    row_norm,
    shift_norm,
    weight_operator,
)
from .words import (
    Word,
    dimension_d,
    enumerate_words,
    periodic_decompose,
    phi,
    phi_extended,
    phi_inverse,
    word_index,
)

__version__ = "0.1.0"

__all__ = [
    "aligned_length",
    "apply_to_vector",
    "basis_vector",
    "BlockMatrix",
    "build_shift",
    "build_unitaries",
    "check_ct_relations",
    "compare_blocks",
    "conjugate_shift",
    "creation_operator",
    "creation_operators",
    "d_divides_iff",
    "DecompositionUnitaries",
    "detect_period",
    "dimension_d",
    "distinct_path_tuples",
    "DivisorSequence",
    "enumerate_words",
    "equality_on_subspace",
    "example_top",
    "expansion_witness",
    "export_operator",
    "export_tree",
    "FockShiftError",
    "FockSpace",
    "FockTree",
    "Gaussian",
    "identity",
    "import_operator",
    "is_bounded_below",
    "k0_isomorphic",
    "k0_order",
    "K0Order",
    "normalize_weights",
    "NotBoundedBelow",
    "Operator",
    "periodic_decompose",
    "periodic_weight",
    "phi",
    "phi_extended",
    "phi_inverse",
    "predicted_blocks",
    "random_top",
    "recover_creation",
    "row_norm",
    "shift_norm",
    "subspace_partition",
    "SubspacePartition",
    "supernatural_eq",
    "supernatural_from_sequence",
    "SupernaturalNumber",
    "vacuum_projection",
    "verify_containment",
    "verify_theorem",
    "weight_operator",
    "WeightFunction",
    "WeightTop",
    "Word",
    "word_index",
]
