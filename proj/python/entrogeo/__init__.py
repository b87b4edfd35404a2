"""Entropy of discrete distributions and density operators via the
boundary of a ball-separation region, with monotonicity and separation
oracles. Thin wrapper over the C++ core."""

from ._entrogeo import (
    BlockStructure,
    Breakpoint,
    DensityOperator,
    DiscreteDistribution,
    EntrogeoError,
    EntropyProfile,
    HermitianMatrix,
    MonotonicityReport,
    Partition,
    RealSequence,
    SequenceMap,
    Spectrum,
    apply_map,
    build_profile,
    clip_decomposition,
    cond_exp_partition,
    entropy_boundary,
    entropy_direct,
    entropy_quadrature,
    eval_F,
    in_region,
    induced_norm_1,
    induced_norm_inf,
    jordan_decompose,
    monotonicity_report,
    norm_inf,
    norm_one,
    oracle_consistency,
    pairing,
    parse_state_json,
    pinch,
    profile_csv,
    profile_dominates,
    profile_from_csv,
    project_blocks,
    project_partition,
    random_doubly_stochastic,
    spectrum_of,
    state_to_json,
    witness_search,
)

__all__ = [
    "BlockStructure",
    "Breakpoint",
    "DensityOperator",
    "DiscreteDistribution",
    "EntrogeoError",
    "EntropyProfile",
    "HermitianMatrix",
    "MonotonicityReport",
    "Partition",
    "RealSequence",
    "SequenceMap",
    "Spectrum",
    "apply_map",
    "build_profile",
    "clip_decomposition",
    "cond_exp_partition",
    "entropy_boundary",
    "entropy_direct",
    "entropy_quadrature",
    "eval_F",
    "in_region",
    "induced_norm_1",
    "induced_norm_inf",
    "jordan_decompose",
    "monotonicity_report",
    "norm_inf",
    "norm_one",
    "oracle_consistency",
    "pairing",
    "parse_state_json",
    "pinch",
    "profile_csv",
    "profile_dominates",
    "profile_from_csv",
    "project_blocks",
    "project_partition",
    "random_doubly_stochastic",
    "spectrum_of",
    "state_to_json",
    "witness_search",
]

__version__ = "0.1.0"
