"""Distance-dependent worst-case interference and SIR bounds for CSMA networks."""

from csmabound._core import (
    BoundCurve,
    BoundCurvePoint,
    InterferenceSetCover,
    RadioEnvironment,
    RngStream,
    SirDistribution,
    bound_curve,
    build_config1,
    build_config2,
    build_interflow_class1,
    build_interflow_class2,
    build_intraflow,
    chord_length,
    correction_factor,
    dense_candidates,
    from_db,
    generate_random_cover,
    interference_free_lower_bound,
    interference_no_fading,
    max_interferer_count,
    mean_power,
    robots_for_flow,
    sample_power,
    sample_sir,
    select_code_count,
    select_dmax,
    to_db,
    validate_cover,
)

__all__ = [
    "BoundCurve",
    "BoundCurvePoint",
    "InterferenceSetCover",
    "RadioEnvironment",
    "RngStream",
    "SirDistribution",
    "bound_curve",
    "build_config1",
    "build_config2",
    "build_interflow_class1",
    "build_interflow_class2",
    "build_intraflow",
    "chord_length",
    "correction_factor",
    "dense_candidates",
    "from_db",
    "generate_random_cover",
    "interference_free_lower_bound",
    "interference_no_fading",
    "max_interferer_count",
    "mean_power",
    "robots_for_flow",
    "sample_power",
    "sample_sir",
    "select_code_count",
    "select_dmax",
    "to_db",
    "validate_cover",
]
