from .filtration import (
    FiltrationSpec,
    SubsheafCandidate,
    StabilityVerdict,
    as_fraction,
    admissible_c,
    tau_slope,
    is_stable,
    s2_pair_window,
    banfield_reduction_check,
    projective_pair_condition,
    bogomolov_filtration,
)
