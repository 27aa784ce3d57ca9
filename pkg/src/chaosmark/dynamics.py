"""Asynchronous Boolean dynamics: one chosen cell is updated per step.

A system holds N Boolean cells. A strategy is the (finite, truncated)
sequence of cell indices saying which single cell gets refreshed at each
step; all other cells are carried over unchanged. The built-in update rule
is the vectorial negation, which under this scheme flips exactly one bit
per step.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import (
    CellRangeError,
    DimensionError,
    DomainError,
    ExhaustedStrategyError,
)


@dataclass(frozen=True)
class BoolState:
    """Immutable vector of N Boolean cells, stored as a tuple of 0/1 ints."""

    bits: tuple

    def __post_init__(self):
        if len(self.bits) < 1:
            raise DomainError("a state needs at least one cell")
        if any(b not in (0, 1) for b in self.bits):
            raise DomainError("state bits must be 0 or 1")
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))

    @property
    def n_cells(self):
        return len(self.bits)

    @classmethod
    def from_string(cls, text: str) -> "BoolState":
        """Parse a bit string such as "0101", first character = cell 0."""
        if not text or any(c not in "01" for c in text):
            raise DomainError(f"not a bit string: {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def zeros(cls, n_cells: int) -> "BoolState":
        return cls((0,) * n_cells)

    def to_string(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __str__(self):
        return self.to_string()


@dataclass(frozen=True)
class Strategy:
    """Finite truncation of a cell-index sequence; terms are 0-based."""

    terms: tuple
    n_cells: int

    def __post_init__(self):
        if self.n_cells < 1:
            raise DomainError("n_cells must be >= 1")
        object.__setattr__(self, "terms", tuple(int(t) for t in self.terms))
        for t in self.terms:
            if not 0 <= t < self.n_cells:
                raise CellRangeError(f"strategy term {t} outside [0, {self.n_cells - 1}]")

    def __len__(self):
        return len(self.terms)

    @classmethod
    def from_string(cls, text: str, n_cells: int) -> "Strategy":
        """Parse comma-separated decimal indices; empty string = empty strategy."""
        text = text.strip()
        if not text:
            return cls((), n_cells)
        try:
            terms = tuple(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise DomainError(f"bad strategy string: {text!r}") from exc
        return cls(terms, n_cells)

    def to_string(self) -> str:
        return ",".join(str(t) for t in self.terms)

    def __str__(self):
        return self.to_string()


@dataclass(frozen=True)
class SystemPoint:
    """A point of the phase space: a strategy paired with a state."""

    strategy: Strategy
    state: BoolState

    def __post_init__(self):
        if self.strategy.n_cells != self.state.n_cells:
            raise DimensionError(
                f"strategy is over {self.strategy.n_cells} cells, state has {self.state.n_cells}"
            )

    @property
    def n_cells(self):
        return self.state.n_cells


UpdateFunction = Callable[[BoolState], BoolState]


def negate_all(state: BoolState) -> BoolState:
    """Vectorial negation: flip every bit. An involution."""
    return BoolState(tuple(1 - b for b in state.bits))


def identity_update(state: BoolState) -> BoolState:
    return state


def update_cell(cell: int, state: BoolState, f: UpdateFunction = negate_all) -> BoolState:
    """Refresh only `cell` from f(state); every other cell is carried over."""
    if not 0 <= cell < state.n_cells:
        raise CellRangeError(f"cell {cell} outside [0, {state.n_cells - 1}]")
    image = f(state)
    if image.n_cells != state.n_cells:
        raise DimensionError("update function changed the cell count")
    bits = list(state.bits)
    bits[cell] = image.bits[cell]
    return BoolState(tuple(bits))


def step(point: SystemPoint, f: UpdateFunction = negate_all) -> SystemPoint:
    """One iteration: consume the first strategy term, refresh that cell."""
    if not point.strategy.terms:
        raise ExhaustedStrategyError("strategy is exhausted")
    cell = point.strategy.terms[0]
    rest = Strategy(point.strategy.terms[1:], point.strategy.n_cells)
    return SystemPoint(rest, update_cell(cell, point.state, f))


def orbit(point: SystemPoint, f: UpdateFunction = negate_all, n: int = None) -> list:
    """States x^0 .. x^n produced by n steps (default: consume the whole strategy)."""
    if n is None:
        n = len(point.strategy)
    if n < 0:
        raise DomainError("step count must be >= 0")
    if n > len(point.strategy):
        raise ExhaustedStrategyError(
            f"{n} steps requested but the strategy holds {len(point.strategy)} terms"
        )
    states = [point.state]
    current = point
    for _ in range(n):
        current = step(current, f)
        states.append(current.state)
    return states


def parity_mask(strategy: Strategy) -> BoolState:
    """Bit i is 1 iff cell i occurs an odd number of times in the strategy."""
    bits = [0] * strategy.n_cells
    for t in strategy.terms:
        bits[t] ^= 1
    return BoolState(tuple(bits))


def mix(state: BoolState, strategy: Strategy) -> BoolState:
    """Closed form of a negation-driven orbit endpoint: XOR with the parity mask.

    Involution for a fixed strategy; equals the last element of
    orbit((strategy, state), negate_all, len(strategy)).
    """
    if state.n_cells != strategy.n_cells:
        raise DimensionError("state and strategy disagree on the cell count")
    mask = parity_mask(strategy)
    return BoolState(tuple(b ^ m for b, m in zip(state.bits, mask.bits)))
