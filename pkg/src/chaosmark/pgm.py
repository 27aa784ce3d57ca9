"""Bit-exact reader/writer for binary 8-bit PGM (P5) images."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, PgmFormatError


@dataclass(frozen=True)
class GrayImage:
    """8-bit grayscale raster; pixels are row-major bytes."""

    width: int
    height: int
    pixels: bytes
    comments: tuple = ()

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise DomainError("image dimensions must be positive")
        object.__setattr__(self, "pixels", bytes(self.pixels))
        if len(self.pixels) != self.width * self.height:
            raise DomainError(
                f"expected {self.width * self.height} pixels, got {len(self.pixels)}"
            )

    @property
    def n_pixels(self):
        return self.width * self.height


def parse_pgm(data: bytes) -> GrayImage:
    """Parse binary PGM bytes. Header comments are kept on the image record
    but never written back."""
    if not data.startswith(b"P5"):
        raise PgmFormatError("not a binary PGM (missing P5 magic)")
    pos = 2
    comments = []
    fields = []
    while len(fields) < 3:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos >= len(data):
            raise PgmFormatError("truncated PGM header")
        if data[pos] == ord("#"):
            end = data.find(b"\n", pos)
            if end < 0:
                raise PgmFormatError("unterminated header comment")
            comments.append(data[pos + 1 : end].decode("latin-1").strip())
            pos = end + 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        token = data[start:pos]
        if not token.isdigit():
            raise PgmFormatError(f"bad header token {token!r}")
        fields.append(int(token))
    width, height, maxval = fields
    if maxval != 255:
        raise PgmFormatError(f"only maxval 255 is supported, got {maxval}")
    pos += 1  # single whitespace byte after maxval
    raster = data[pos : pos + width * height]
    if len(raster) != width * height:
        raise PgmFormatError("truncated PGM raster")
    return GrayImage(width, height, raster, tuple(comments))


def read_pgm(path) -> GrayImage:
    with open(path, "rb") as fh:
        return parse_pgm(fh.read())


def serialize_pgm(image: GrayImage) -> bytes:
    return b"P5\n%d %d\n255\n" % (image.width, image.height) + image.pixels


def write_pgm(image: GrayImage, path) -> None:
    with open(path, "wb") as fh:
        fh.write(serialize_pgm(image))
