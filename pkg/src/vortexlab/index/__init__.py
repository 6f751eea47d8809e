from .weight_data import Group, Summand, SplitBundle, WeightData
from .formulas import (
    index_s1,
    index_cyclic,
    index_cyclic_fraction,
    roots_of_unity_sums,
    virtual_dimension,
    bubble_codim_check,
)
from .oracle import index_oracle, circle_cohomology_weights
from .sweep import sweep_split_bundles, sweep_weight_data, summand_types, cyclic_groups
