"""Multipartite entanglement detection from Weyl-basis correlation tensors.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._core import (
    Bipartition,
    BipartitionRecord,
    CorrelationTensor,
    CriterionReport,
    DensityMatrix,
    FMatrix,
    aggregate_t,
    bipartition_check,
    check_algebra,
    detect,
    enumerate_bipartitions,
    extract_tensor,
    f_matrix,
    ghz_state,
    is_permutation_invariant,
    j_threshold,
    k_threshold,
    load_state,
    make_bipartition,
    parse_bipartition,
    partial_trace,
    primitive_root,
    product_state,
    random_density,
    reconstruct,
    s_matrix,
    save_state,
    t_vector,
    threshold_w,
    trace_norm,
    validate,
    vector_norm_bound,
    w_state,
    weyl_basis,
    weyl_op,
    white_noise_mix,
)

__all__ = [
    "Bipartition",
    "BipartitionRecord",
    "CorrelationTensor",
    "CriterionReport",
    "DensityMatrix",
    "FMatrix",
    "aggregate_t",
    "bipartition_check",
    "check_algebra",
    "detect",
    "enumerate_bipartitions",
    "extract_tensor",
    "f_matrix",
    "ghz_state",
    "is_permutation_invariant",
    "j_threshold",
    "k_threshold",
    "load_state",
    "make_bipartition",
    "parse_bipartition",
    "partial_trace",
    "primitive_root",
    "product_state",
    "random_density",
    "reconstruct",
    "s_matrix",
    "save_state",
    "t_vector",
    "threshold_w",
    "trace_norm",
    "validate",
    "vector_norm_bound",
    "w_state",
    "weyl_basis",
    "weyl_op",
    "white_noise_mix",
]

__version__ = "0.1.0"
