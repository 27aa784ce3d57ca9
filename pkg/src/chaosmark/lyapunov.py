"""Lyapunov exponent of the conjugate interval map.

The map is piecewise linear with slope N wherever it is differentiable, so
the exponent is ln N for every orbit that avoids the 1/N-pitch grid. Three
views of that fact live here: the closed-form value, an exact
derivative-product run over a digit representation, and a floating
two-orbit divergence estimator with renormalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .conjugacy import DigitReal, real_step, real_step_float
from .errors import DegenerateRunError, DomainError, ExceptionalOrbitError


@dataclass
class LyapunovReport:
    """Per-run record: per-step log-slopes, their mean, and the analytic value."""

    n_steps: int
    per_step_logs: list
    estimate: float
    analytic: float
    skipped_steps: int = 0

    def error(self) -> float:
        return abs(self.estimate - self.analytic)

    def to_csv(self) -> str:
        lines = ["step,log_slope"]
        lines.extend(f"{i + 1},{v!r}" for i, v in enumerate(self.per_step_logs))
        lines.append(
            f"# estimate={self.estimate!r} analytic={self.analytic!r} skipped={self.skipped_steps}"
        )
        return "\n".join(lines) + "\n"


def analytic_exponent(n_cells: int) -> float:
    """ln N, the exponent shared by every admissible initial condition."""
    if not isinstance(n_cells, int) or n_cells < 2:
        raise DomainError("n_cells must be an integer >= 2")
    return math.log(n_cells)


def derivative_product_estimate(x0: DigitReal, n: int) -> LyapunovReport:
    """Average of per-step ln|slope| along n exact steps from x0.

    The slope is N wherever defined, so every per-step log is ln N and the
    estimate carries zero variance. An iterate whose remaining digits are all
    zero (or exhausted) sits exactly on the non-differentiable grid; the run
    aborts there, naming the offending step.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    log_slope = math.log(x0.n_cells)
    x = x0
    logs = []
    for step_index in range(1, n + 1):
        if not any(x.fraction):
            raise ExceptionalOrbitError(step_index)
        logs.append(log_slope)
        x = real_step(x)
    estimate = math.fsum(logs) / n
    return LyapunovReport(n, logs, estimate, log_slope, skipped_steps=0)


def is_exceptional_initial(x0: DigitReal) -> bool:
    """True iff the stored digits end in zero (a terminating expansion).

    Only such representations can produce an iterate that visibly lands on
    the grid, so the exact estimator fails only when this returns True.
    """
    return not x0.fraction or x0.fraction[-1] == 0


def divergence_rate_estimate(
    x0: float, delta: float, n: int, n_cells: int = 10
) -> LyapunovReport:
    """Two-orbit floating estimator with per-step renormalization.

    Advances x0 and x0+delta together; each step records ln(|separation|/delta)
    and rescales the separation back to delta along its current sign. Steps
    where the pair straddles a linearity boundary are skipped (their log term
    reflects the branch jump, not the slope) and counted.
    """
    top = float(1 << n_cells)
    if not delta > 0.0:
        raise DomainError("delta must be > 0")
    if n < 1:
        raise DomainError("n must be >= 1")
    if not (0.0 <= x0 < top and 0.0 <= x0 + delta < top):
        raise DomainError("x0 and x0+delta must lie in [0, 2^N)")
    a, b = x0, x0 + delta
    logs = []
    skipped = 0
    for _ in range(n):
        straddle = math.floor(a * n_cells) != math.floor(b * n_cells)
        a2 = real_step_float(a, n_cells)
        b2 = real_step_float(b, n_cells)
        sep = b2 - a2
        if straddle or sep == 0.0:
            skipped += 1
        else:
            logs.append(math.log(abs(sep) / delta))
        direction = 1.0 if sep >= 0.0 else -1.0
        a = a2
        b = a2 + direction * delta
        if not 0.0 <= b < top:
            b = a2 - direction * delta
    if not logs:
        raise DegenerateRunError("every step straddled a boundary")
    estimate = math.fsum(logs) / len(logs)
    return LyapunovReport(n, logs, estimate, math.log(n_cells), skipped_steps=skipped)
