"""8-bit image planes, binary PGM/PPM codec, channel plumbing, size metric."""

from __future__ import annotations

import zlib
from dataclasses import dataclass

import numpy as np


class NetpbmError(ValueError):
    """Malformed PGM/PPM input; the message names the offending field."""


@dataclass(frozen=True, eq=False)
class ImagePlane:
    """One 8-bit channel, stored as a read-only (height, width) uint8 array."""

    pixels: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.pixels)
        if arr.ndim != 2 or arr.size == 0:
            raise ValueError(f"plane must be a nonempty 2-D array, got shape {arr.shape}")
        if arr.dtype != np.uint8:
            if not np.issubdtype(arr.dtype, np.integer):
                raise ValueError(f"plane values must be integers, got dtype {arr.dtype}")
            if arr.min() < 0 or arr.max() > 255:
                raise ValueError(
                    f"plane values must lie in [0, 255], got range "
                    f"[{arr.min()}, {arr.max()}]"
                )
            arr = arr.astype(np.uint8)
        else:
            arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "pixels", arr)

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def as_float(self) -> np.ndarray:
        return self.pixels.astype(np.float64)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ImagePlane):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and bool(
            np.array_equal(self.pixels, other.pixels)
        )


@dataclass(frozen=True, eq=False)
class RgbImage:
    """Three equally sized planes (red, green, blue)."""

    r: ImagePlane
    g: ImagePlane
    b: ImagePlane

    def __post_init__(self) -> None:
        shape = self.r.pixels.shape
        for name in ("g", "b"):
            plane = getattr(self, name)
            if plane.pixels.shape != shape:
                raise ValueError(
                    f"{name} plane is {plane.width}x{plane.height}, "
                    f"does not match r plane {self.width}x{self.height}"
                )

    @property
    def width(self) -> int:
        return self.r.width

    @property
    def height(self) -> int:
        return self.r.height

    def __eq__(self, other) -> bool:
        if not isinstance(other, RgbImage):
            return NotImplemented
        return self.r == other.r and self.g == other.g and self.b == other.b


def split_channels(img: RgbImage) -> tuple[ImagePlane, ImagePlane, ImagePlane]:
    return img.r, img.g, img.b


def merge_channels(r: ImagePlane, g: ImagePlane, b: ImagePlane) -> RgbImage:
    return RgbImage(r, g, b)


def _interleaved(img: RgbImage) -> bytes:
    """Row-major interleaved R,G,B byte stream."""
    return np.stack([img.r.pixels, img.g.pixels, img.b.pixels], axis=-1).tobytes()


class _HeaderScanner:
    """Token scanner for Netpbm headers: whitespace-separated, '#' comments."""

    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def _skip_filler(self) -> None:
        while self.pos < len(self.data):
            c = self.data[self.pos:self.pos + 1]
            if c.isspace():
                self.pos += 1
            elif c == b"#":
                nl = self.data.find(b"\n", self.pos)
                self.pos = len(self.data) if nl < 0 else nl + 1
            else:
                return

    def token(self, field: str) -> bytes:
        self._skip_filler()
        start = self.pos
        while self.pos < len(self.data):
            c = self.data[self.pos:self.pos + 1]
            if c.isspace() or c == b"#":
                break
            self.pos += 1
        if self.pos == start:
            raise NetpbmError(f"missing {field} in header")
        return self.data[start:self.pos]

    def int_token(self, field: str) -> int:
        tok = self.token(field)
        try:
            value = int(tok)
        except ValueError:
            raise NetpbmError(f"invalid {field} {tok!r}") from None
        if value <= 0:
            raise NetpbmError(f"invalid {field} {value}; must be positive")
        return value

    def payload(self) -> bytes:
        # exactly one whitespace byte separates maxval from the raster
        if self.pos >= len(self.data) or not self.data[self.pos:self.pos + 1].isspace():
            raise NetpbmError("missing whitespace before payload")
        self.pos += 1
        return self.data[self.pos:]


def read_image(data: bytes) -> RgbImage:
    """Decode binary PPM (P6) or PGM (P5, promoted to RGB), maxval 255."""
    scanner = _HeaderScanner(data)
    magic = scanner.token("magic")
    if magic not in (b"P5", b"P6"):
        raise NetpbmError(f"unsupported magic {magic!r}; expected P5 or P6")
    width = scanner.int_token("width")
    height = scanner.int_token("height")
    maxval = scanner.int_token("maxval")
    if maxval != 255:
        raise NetpbmError(f"unsupported maxval {maxval}; only 255 is supported")
    channels = 3 if magic == b"P6" else 1
    raw = scanner.payload()
    expected = width * height * channels
    if len(raw) < expected:
        raise NetpbmError(
            f"truncated payload: expected {expected} bytes, got {len(raw)}"
        )
    pixels = np.frombuffer(raw[:expected], dtype=np.uint8)
    if channels == 1:
        plane = ImagePlane(pixels.reshape(height, width))
        return RgbImage(plane, plane, plane)
    rgb = pixels.reshape(height, width, 3)
    return RgbImage(
        ImagePlane(rgb[:, :, 0]), ImagePlane(rgb[:, :, 1]), ImagePlane(rgb[:, :, 2])
    )


def write_image(img: RgbImage) -> bytes:
    """Encode as binary PPM (P6, maxval 255); inverse of read_image."""
    header = f"P6\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + _interleaved(img)


def encoded_size(img: RgbImage) -> int:
    """DEFLATE byte count of the interleaved pixel stream (fixed default level).

    A deterministic codec-independent size proxy for comparing how
    compressible reconstructions are.
    """
    return len(zlib.compress(_interleaved(img)))
