"""LSB watermarking driven by the Boolean dynamics.

The watermark bits form the initial state of the dynamical system, the key
derives the strategy, and the chaotically mixed state is written into the
least significant bits of a keyed selection of pixels. Because each
negation-driven step flips exactly one cell, the whole mixing collapses to
an XOR with the strategy's parity mask, which makes extraction an exact
involution: replay the same strategy on the read-back LSBs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dynamics import BoolState, Strategy, mix
from .errors import CapacityError, DimensionError, DomainError
from .pgm import GrayImage
from .rng import SplitMix64, fnv1a64, keyed_permutation

SELECTION_TWEAK = 0xA5A5A5A5A5A5A5A5


@dataclass(frozen=True)
class WatermarkKey:
    """Secret key; the 64-bit seed is the FNV-1a hash of the key bytes."""

    key_string: bytes

    def __post_init__(self):
        if isinstance(self.key_string, str):
            object.__setattr__(self, "key_string", self.key_string.encode("utf-8"))
        else:
            object.__setattr__(self, "key_string", bytes(self.key_string))

    @property
    def derived_seed(self) -> int:
        return fnv1a64(self.key_string)


def key_to_strategy(key: WatermarkKey, length: int, n_cells: int) -> Strategy:
    """Deterministic strategy of uniform cell indices drawn from the key stream."""
    if length < 1:
        raise DomainError("strategy length must be >= 1")
    if n_cells < 1:
        raise DomainError("n_cells must be >= 1")
    stream = SplitMix64(key.derived_seed)
    return Strategy(tuple(stream.below(n_cells) for _ in range(length)), n_cells)


def select_coefficients(key: WatermarkKey, image: GrayImage, count: int) -> list:
    """`count` distinct pixel indices: the prefix of a keyed shuffle of all
    indices, on a stream domain-separated from the strategy stream."""
    if count < 1:
        raise DomainError("count must be >= 1")
    if count > image.n_pixels:
        raise CapacityError(
            f"{count} coefficients requested but the image has {image.n_pixels} pixels"
        )
    perm = keyed_permutation(key.derived_seed ^ SELECTION_TWEAK, image.n_pixels)
    return perm[:count]


def embed(
    cover: GrayImage, payload: BoolState, key: WatermarkKey, iterations: int
) -> GrayImage:
    """Mix the payload through `iterations` keyed chaotic steps and write the
    result into the LSBs of the keyed pixel selection.

    Only selected pixels change, each by at most 1 intensity level.
    """
    if iterations < 1:
        raise DomainError("iterations must be >= 1")
    selection = select_coefficients(key, cover, payload.n_cells)
    strategy = key_to_strategy(key, iterations, payload.n_cells)
    mixed = mix(payload, strategy)
    pixels = bytearray(cover.pixels)
    for idx, bit in zip(selection, mixed.bits):
        pixels[idx] = (pixels[idx] & 0xFE) | bit
    return GrayImage(cover.width, cover.height, bytes(pixels))


def extract(
    stego: GrayImage, key: WatermarkKey, payload_length: int, iterations: int
) -> BoolState:
    """Read LSBs at the keyed selection and undo the mixing by replaying the
    strategy (mixing is an involution)."""
    if iterations < 1:
        raise DomainError("iterations must be >= 1")
    selection = select_coefficients(key, stego, payload_length)
    strategy = key_to_strategy(key, iterations, payload_length)
    lsbs = BoolState(tuple(stego.pixels[i] & 1 for i in selection))
    return mix(lsbs, strategy)


def detect(
    stego: GrayImage,
    key: WatermarkKey,
    expected: BoolState,
    iterations: int,
    threshold: float = 0.05,
):
    """Extract and compare against the expected payload.

    Returns (bit error rate, present). Present means the BER is below the
    threshold; an unrelated image or key gives a BER near one half.
    """
    recovered = extract(stego, key, expected.n_cells, iterations)
    if recovered.n_cells != expected.n_cells:
        raise DimensionError("payload length mismatch")
    errors = sum(a != b for a, b in zip(recovered.bits, expected.bits))
    ber = errors / expected.n_cells
    return ber, ber < threshold
