"""Exact conjugacy growth series of wreath products H wr Sym(X) and H wr Alt(X).

The main entry points are re-exported here; see the submodules for the rest.
"""

from .asymptotics import (
    cdf_estimate,
    cdf_params,
    classify_ratio,
    ratio_estimate,
    sym_estimate,
    alt_estimate,
)
from .growth import (
    ALT_BASE,
    SYM_BASE,
    GroupSpec,
    Kind,
    alt_summand,
    fhat_eval,
    fhat_polynomial,
    gamma_alt_recurrence,
    gamma_sym_recurrence,
    growth_rate,
    growth_series,
    no_coefficient,
)
from .kernels import BACKEND
from .partitions import (
    enumerate_partitions,
    even_parts_count,
    generalized_partition_series,
    hook_multiset,
    partition_count,
    sigma,
)
from .qseries import (
    EulerProduct,
    Series,
    expand_product,
    series_add,
    series_inv,
    series_mul,
    series_pow,
)

__version__ = "0.1.0"
