"""Chaotic Boolean iterations, their real-interval conjugate, Lyapunov
exponents, and the derived LSB watermarking scheme."""

from .conjugacy import (
    DigitReal,
    decode,
    encode,
    interval_of,
    local_slope,
    nondifferentiable_points,
    on_grid,
    real_step,
    real_step_float,
    verify_semiconjugacy,
)
from .dynamics import (
    BoolState,
    Strategy,
    SystemPoint,
    identity_update,
    mix,
    negate_all,
    orbit,
    parity_mask,
    step,
    update_cell,
)
from .errors import ChaosmarkError
from .lyapunov import (
    LyapunovReport,
    analytic_exponent,
    derivative_product_estimate,
    divergence_rate_estimate,
    is_exceptional_initial,
)
from .metrics import (
    comparison_table,
    fraction_distance,
    integral_distance,
    point_distance,
    real_distance,
    render_comparison_csv,
    state_distance,
    strategy_distance,
)
from .pgm import GrayImage, read_pgm, write_pgm
from .watermark import (
    WatermarkKey,
    detect,
    embed,
    extract,
    key_to_strategy,
    select_coefficients,
)

__version__ = "0.1.0"
