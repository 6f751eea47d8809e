from .fields import (
    TorusLattice,
    LinkField,
    HiggsField,
    CentralParam,
    central_value,
    check_shapes,
    gauge_transform,
    snapshot_to_json,
    snapshot_from_json,
)
from .geometry import (
    plaquette_angle,
    plaquette_curvature,
    total_curvature,
    background_connection,
    covariant_derivative,
    dbar,
    del_holomorphic,
    moment_map_linear,
)
from .energy import (
    EnergyBreakdown,
    ymh_energy,
    holomorphic_energy_split,
    kahler_term,
    topological_term,
    energy_identity_defect,
    bogomolov_value,
    equation_residuals,
    integrated_obstruction,
)
from .samples import smooth_fields
