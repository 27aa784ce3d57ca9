"""Exact encoding of system points as reals, and the conjugate interval map.

A point (strategy, state) over N cells is encoded as a real in [0, 2^N):
the state's bits become the binary digits of the integral part (cell 0 is
the most significant bit) and the strategy terms become the base-N
fractional digits. On that interval the dynamics turn into a piecewise
linear map of slope N: one step flips the bit selected by the first
fractional digit and shifts the remaining digits left.

Everything theorem-bearing here is exact: reals are (integer, digit list)
pairs and arithmetic uses fractions.Fraction. A floating mirror of the
interval map is provided for numerical experiments only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .dynamics import BoolState, Strategy, SystemPoint, negate_all, step
from .errors import (
    CellRangeError,
    CrossBoundaryError,
    DegeneratePairError,
    DimensionError,
    DomainError,
    ExhaustedDigitsError,
    NormalizationError,
)

_DIGIT_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class DigitReal:
    """Exact real in [0, 2^N): an N-bit integral part plus base-N fractional digits.

    The digit list is a finite truncation; digit k carries weight N^-(k+1).
    """

    n_cells: int
    integral: int
    fraction: tuple

    def __post_init__(self):
        if self.n_cells < 1:
            raise DomainError("n_cells must be >= 1")
        if not 0 <= self.integral < (1 << self.n_cells):
            raise DomainError(
                f"integral part {self.integral} outside [0, 2^{self.n_cells})"
            )
        object.__setattr__(self, "fraction", tuple(int(d) for d in self.fraction))
        for d in self.fraction:
            if not 0 <= d < self.n_cells:
                raise CellRangeError(f"fraction digit {d} outside [0, {self.n_cells - 1}]")

    @property
    def depth(self):
        return len(self.fraction)

    def value(self) -> Fraction:
        """The exact rational this representation denotes."""
        n = self.n_cells
        acc = Fraction(0)
        for d in reversed(self.fraction):
            acc = (acc + d) / n
        return acc + self.integral

    @classmethod
    def from_value(cls, value, n_cells: int = 10, depth: int = 8) -> "DigitReal":
        """Canonicalize an exact rational (or float) to a fixed fractional depth.

        Digits past `depth` are truncated, so the result is the largest
        depth-digit representation not exceeding `value`.
        """
        value = Fraction(value)
        if not 0 <= value < (1 << n_cells):
            raise DomainError(f"value {value} outside [0, 2^{n_cells})")
        integral = int(value)
        rem = value - integral
        digits = []
        for _ in range(depth):
            rem *= n_cells
            d = int(rem)
            digits.append(d)
            rem -= d
        return cls(n_cells, integral, tuple(digits))

    @classmethod
    def parse(cls, text: str, n_cells: int = 10) -> "DigitReal":
        """Parse "<integral>.<digits>"; each digit char is validated against N."""
        text = text.strip()
        head, dot, tail = text.partition(".")
        try:
            integral = int(head) if head else 0
        except ValueError as exc:
            raise DomainError(f"bad integral part in {text!r}") from exc
        digits = []
        if dot:
            for c in tail.lower():
                idx = _DIGIT_CHARS.find(c)
                if not 0 <= idx < n_cells:
                    raise DomainError(f"bad base-{n_cells} fraction digit {c!r} in {text!r}")
                digits.append(idx)
        return cls(n_cells, integral, tuple(digits))

    def to_string(self) -> str:
        if not self.fraction:
            return str(self.integral)
        return str(self.integral) + "." + "".join(_DIGIT_CHARS[d] for d in self.fraction)

    def __str__(self):
        return self.to_string()


def encode(point: SystemPoint) -> DigitReal:
    """State bits -> binary integral part (cell 0 is the MSB); strategy -> digits."""
    n = point.n_cells
    integral = 0
    for k, bit in enumerate(point.state.bits):
        integral += bit << (n - 1 - k)
    return DigitReal(n, integral, point.strategy.terms)


def decode(x: DigitReal) -> SystemPoint:
    """Inverse of encode at equal truncation depth.

    A fraction made entirely of the digit N-1 denotes the other, infinite-tail
    decomposition of the same real and is rejected as non-normalizable.
    """
    n = x.n_cells
    if x.fraction and all(d == n - 1 for d in x.fraction):
        raise NormalizationError("all-(N-1) fraction tail has no canonical preimage")
    bits = tuple((x.integral >> (n - 1 - k)) & 1 for k in range(n))
    return SystemPoint(Strategy(x.fraction, n), BoolState(bits))


def real_step(x: DigitReal) -> DigitReal:
    """One step of the conjugate interval map, exactly.

    Flips the integral-part bit selected by the first fractional digit and
    shifts the remaining digits left by one.
    """
    if not x.fraction:
        raise ExhaustedDigitsError("fractional digits are exhausted")
    s0 = x.fraction[0]
    integral = x.integral ^ (1 << (x.n_cells - 1 - s0))
    return DigitReal(x.n_cells, integral, x.fraction[1:])


def verify_semiconjugacy(point: SystemPoint) -> bool:
    """Exact commuting-square check: encoding then stepping on the interval
    equals stepping the Boolean system then encoding."""
    return encode(step(point, negate_all)) == real_step(encode(point))


def interval_of(x: DigitReal) -> int:
    """Index n of the linearity interval [n/N, (n+1)/N) containing x."""
    s0 = x.fraction[0] if x.fraction else 0
    return x.n_cells * x.integral + s0


def on_grid(x: DigitReal) -> bool:
    """True iff x is exactly a grid point n/N (where the map is not differentiable)."""
    return all(d == 0 for d in x.fraction[1:])


def nondifferentiable_points(n_cells: int):
    """Count of grid points of [0, 2^N] at pitch 1/N, plus a membership predicate."""
    if n_cells < 1:
        raise DomainError("n_cells must be >= 1")
    count = n_cells * (1 << n_cells) + 1

    def predicate(x: DigitReal) -> bool:
        if x.n_cells != n_cells:
            raise DimensionError("point has a different cell count")
        return on_grid(x)

    return count, predicate


def local_slope(x: DigitReal, y: DigitReal) -> Fraction:
    """Exact difference quotient of the interval map across a same-interval pair.

    Always equals N: within one interval the map multiplies by N and adds a
    per-interval constant.
    """
    if x.n_cells != y.n_cells:
        raise DimensionError("points have different cell counts")
    vx, vy = x.value(), y.value()
    if vx == vy:
        raise DegeneratePairError("points coincide")
    if interval_of(x) != interval_of(y):
        raise CrossBoundaryError(
            f"points lie in intervals {interval_of(x)} and {interval_of(y)}"
        )
    gx, gy = real_step(x), real_step(y)
    return (gy.value() - gx.value()) / (vy - vx)


def real_step_float(x: float, n_cells: int = 10) -> float:
    """Floating approximation of the interval map via digit extraction.

    Approximate by nature; real_step on DigitReal is the authoritative path.
    """
    if not 0 <= x < (1 << n_cells):
        raise DomainError(f"x={x} outside [0, 2^{n_cells})")
    integral = math.floor(x)
    frac = x - integral
    # the nudge keeps exact decimals such as 0.3 on their own digit despite
    # binary rounding (0.3 * 10 is slightly below 3 in doubles)
    s0 = min(math.floor(frac * n_cells + 1e-9), n_cells - 1)
    integral ^= 1 << (n_cells - 1 - s0)
    frac = frac * n_cells - s0
    if frac < 0.0:
        frac = 0.0
    elif frac >= 1.0:
        frac = math.nextafter(1.0, 0.0)
    return integral + frac
