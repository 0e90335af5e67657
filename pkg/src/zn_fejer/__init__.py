"""Fejer-type triangular kernel and smoothed discrepancy on Z/NZ."""
__version__ = "0.1.0"

from .exceptions import DimensionError, InvariantViolation, ParameterError
from .group_signal import (
    as_signal,
    convolve,
    delta,
    dft,
    idft,
    inner,
    is_mean_zero,
    l2_norm,
    least_abs_representative,
    least_abs_residues,
    linf_norm,
    mean,
)
from .fejer_kernel import (
    KernelSpec,
    boxcar,
    build_kernel,
    kernel_l2_squared_closed_form,
    kernel_l2_squared_upper_bound,
    kernel_via_autocorrelation,
    symbol,
    symbol_closed_form,
)
from .discrepancy import (
    BoundReport,
    SubsetIndicator,
    effective_constant,
    fA_l2_squared_closed_form,
    interval_discrepancy,
    l2_linf_bound,
    mean_zero_indicator,
    smoothed_deviation,
    worst_case_bound,
)
from .experiments import (
    ExperimentConfig,
    TrialReport,
    dump_kernel,
    emit_report,
    random_subset,
    run_experiment,
)
