from .config import SolverConfig, SolveReport, LINE_SEARCHES, STATUSES
from .gradient import ymh_gradient, finite_difference_check
from .vortices import count_vortices, vortex_winding, higgs_modulus
from .flow import initial_fields, sobolev_precondition, solve, FlowState
from .refine import pack_fields, unpack_fields, equation_vector, jacobian_sparsity, refine_solution
