"""Distances on the Boolean phase space and on its real-interval image.

Both metrics share the same shape: an integer part counting disagreeing
cells/bits (a Hamming distance) plus a fractional part that geometrically
weights disagreements along the strategy/digit tails. All arithmetic is
exact rational; floats appear only when rendering output, because the tail
weights underflow doubles long before they stop mattering to the
iff-style semantics tested here.
"""

from __future__ import annotations

from fractions import Fraction

from .conjugacy import DigitReal
from .dynamics import BoolState, Strategy, SystemPoint
from .errors import DimensionError, DomainError


def state_distance(a: BoolState, b: BoolState) -> int:
    """Hamming distance between two states."""
    if a.n_cells != b.n_cells:
        raise DimensionError("states have different cell counts")
    return sum(x != y for x, y in zip(a.bits, b.bits))


def strategy_distance(a: Strategy, b: Strategy, base_n_weights: bool = False) -> Fraction:
    """Weighted tail distance between two strategy truncations.

    Default weights follow the printed formula for ten cells: term k (0-based)
    contributes (9/N) * |a_k - b_k| / 10^(k+1). With base_n_weights=True the
    decimal base is replaced by N (and the prefactor by (N-1)/N), which keeps
    the value inside [0, 1) for any N.
    """
    if a.n_cells != b.n_cells:
        raise DimensionError("strategies have different cell counts")
    if len(a.terms) != len(b.terms):
        raise DimensionError("strategies have different truncation lengths")
    n = a.n_cells
    if base_n_weights:
        base, prefactor = n, Fraction(n - 1, n)
    else:
        base, prefactor = 10, Fraction(9, n)
    acc = Fraction(0)
    weight = Fraction(1, base)
    for x, y in zip(a.terms, b.terms):
        acc += abs(x - y) * weight
        weight /= base
    return prefactor * acc


def point_distance(a: SystemPoint, b: SystemPoint, base_n_weights: bool = False) -> Fraction:
    """State Hamming distance plus the strategy tail distance.

    The floor recovers the number of disagreeing cells exactly.
    """
    return state_distance(a.state, b.state) + strategy_distance(
        a.strategy, b.strategy, base_n_weights
    )


def integral_distance(x: DigitReal, y: DigitReal) -> int:
    """Hamming distance between the N binary digits of the integral parts."""
    if x.n_cells != y.n_cells:
        raise DimensionError("points have different cell counts")
    return (x.integral ^ y.integral).bit_count()


def fraction_distance(x: DigitReal, y: DigitReal) -> Fraction:
    """Digit-wise tail distance: digit k contributes |s_k - t_k| / N^(k+1).

    Every digit is counted, including the first one, so the value is zero
    exactly when the digit lists coincide.
    """
    if x.n_cells != y.n_cells:
        raise DimensionError("points have different cell counts")
    if len(x.fraction) != len(y.fraction):
        raise DimensionError("points have different fractional depths")
    n = x.n_cells
    acc = Fraction(0)
    weight = Fraction(1, n)
    for s, t in zip(x.fraction, y.fraction):
        acc += abs(s - t) * weight
        weight /= n
    return acc


def real_distance(x: DigitReal, y: DigitReal) -> Fraction:
    """Integral-bit Hamming distance plus the fractional digit distance."""
    return integral_distance(x, y) + fraction_distance(x, y)


def format_sig12(q) -> str:
    """Decimal rendering with 12 significant digits, used by all CSV output."""
    return format(float(q), ".12g")


def comparison_table(
    reference: DigitReal,
    grid_lo,
    grid_hi,
    steps: int,
    depth: int = 8,
):
    """Sample [grid_lo, grid_hi) and tabulate the exact metric next to |x - ref|.

    Each grid sample is canonicalized to a DigitReal at the given fractional
    depth before either column is computed. Returns (sample, metric, euclid)
    triples with exact rational columns.
    """
    grid_lo, grid_hi = Fraction(grid_lo), Fraction(grid_hi)
    if steps < 2:
        raise DomainError("steps must be >= 2")
    if not grid_lo < grid_hi:
        raise DomainError("grid_lo must be < grid_hi")
    ref_value = reference.value()
    pitch = (grid_hi - grid_lo) / steps
    rows = []
    for i in range(steps):
        sample = DigitReal.from_value(grid_lo + i * pitch, reference.n_cells, depth)
        rows.append(
            (
                sample,
                real_distance(sample, _padded(reference, sample.depth)),
                abs(sample.value() - ref_value),
            )
        )
    return rows


def _padded(x: DigitReal, depth: int) -> DigitReal:
    """Extend (or truncate) the fraction with zeros to the requested depth."""
    digits = (x.fraction + (0,) * depth)[:depth]
    return DigitReal(x.n_cells, x.integral, digits)


def render_comparison_csv(rows) -> str:
    lines = ["x,D,euclid"]
    for sample, metric, euclid in rows:
        lines.append(
            f"{format_sig12(sample.value())},{format_sig12(metric)},{format_sig12(euclid)}"
        )
    return "\n".join(lines) + "\n"
