from .maximal import (
    MaxWeight,
    WeightedPoint,
    PsiValue,
    max_weight_linear,
    max_weight_projective,
    lambda_t_projective,
    moment_pairing_projective,
    psi_projective,
    max_weight_s2,
    moment_s2,
)
from .kempf_ness import KempfNessResult, is_analytically_stable, kempf_ness_find_zero
from .grassmann import GrassData, matrix_rank, intersection_dimension, max_weight_grassmann, lambda_t_grassmann
