"""Simulation and verification laboratory for lattice spin systems driven by
white symmetric alpha-stable noise."""

from .errors import ConfigError, QuadratureError, SimulationError, StableSpinError
from .stable import (
    CosineModes,
    FourierIntegrable,
    KernelGrid,
    OUKernelQuery,
    StableParams,
    TailBound,
    compute_c_alpha,
    fractional_generator_apply,
    kernel_tv_distance,
    ou_abs_moment,
    ou_apply,
    ou_kernel,
    ou_stationary_density,
    sample_standard_stable,
    stable_cdf_table,
    stable_density,
)

__version__ = "0.1.0"
