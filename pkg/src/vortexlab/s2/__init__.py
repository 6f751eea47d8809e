from .cohomology import EquivClass, ClassB, ring_mul, tangent_class, pair_with_B
from .moduli import (
    moduli_dimension,
    hyperplane_intersection,
    invariant_phibar,
    sylvester_matrix,
    divisor_pair_check,
    divisor_coefficients,
    window_examples,
)
