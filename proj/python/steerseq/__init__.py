"""Sequential steering of shared entangled states.

Analytic visibility recursion for chains of independent unsharp observers,
with brute-force density-matrix verification of the underlying channels.
"""

from ._core import (
    AnonymousGridPoint,
    AnonymousReport,
    Family,
    KrausSet,
    MubSet,
    NoisyBasisMeasurement,
    ScalingRow,
    SequenceEntry,
    SequenceReport,
    SymmetricState,
    TheoryGapError,
    ThresholdKind,
    VerificationReport,
    VerifyMode,
    __version__,
    anonymous_count,
    anonymous_optimum,
    apply_luders_step,
    count_bobs,
    extract_p,
    f_ano,
    haar_averaged_step,
    haar_unitary,
    is_density_matrix,
    is_prime_power,
    kron,
    luders_kraus,
    max_entangled_vector,
    mub_averaged_step,
    mub_bases,
    partial_trace_b,
    povm_elements,
    qubit_merit,
    ratio,
    saturating_sequence,
    scaling_table,
    swap_operator,
    threshold,
    to_density_matrix,
    trace_distance,
    verify_projective_2design,
    verify_sequence,
)

__all__ = [
    "AnonymousGridPoint",
    "AnonymousReport",
    "Family",
    "KrausSet",
    "MubSet",
    "NoisyBasisMeasurement",
    "ScalingRow",
    "SequenceEntry",
    "SequenceReport",
    "SymmetricState",
    "TheoryGapError",
    "ThresholdKind",
    "VerificationReport",
    "VerifyMode",
    "__version__",
    "anonymous_count",
    "anonymous_optimum",
    "apply_luders_step",
    "count_bobs",
    "extract_p",
    "f_ano",
    "haar_averaged_step",
    "haar_unitary",
    "is_density_matrix",
    "is_prime_power",
    "kron",
    "luders_kraus",
    "max_entangled_vector",
    "mub_averaged_step",
    "mub_bases",
    "partial_trace_b",
    "povm_elements",
    "qubit_merit",
    "ratio",
    "saturating_sequence",
    "scaling_table",
    "swap_operator",
    "threshold",
    "to_density_matrix",
    "trace_distance",
    "verify_projective_2design",
    "verify_sequence",
]
