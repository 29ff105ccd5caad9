"""End-to-end per-image processing and quality metrics.

Per channel: forward DWT, threshold every detail sub-band of every level
with its own statistics (the approximation is never touched), inverse DWT,
round half away from zero, clamp to [0, 255].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .filters import WaveletName, get_filter
from .image import ImagePlane, RgbImage, encoded_size, merge_channels, split_channels
from .quantize import threshold_subband
from .transform import Decomposition, SubbandTriple, dwt2d, idwt2d

PEAK = 255.0

THRESHOLD_LEVEL_CHOICES = (3, 5, 7)


@dataclass(frozen=True)
class PipelineConfig:
    wavelet: WaveletName
    depth: int = 1
    levels: int = 3

    def __post_init__(self) -> None:
        if self.levels not in THRESHOLD_LEVEL_CHOICES:
            raise ValueError(
                f"levels must be in {set(THRESHOLD_LEVEL_CHOICES)}, got {self.levels}"
            )
        if self.depth < 1:
            raise ValueError(f"depth must be >= 1, got {self.depth}")


@dataclass(frozen=True)
class MetricsRecord:
    image_id: str
    wavelet: WaveletName
    levels: int
    psnr_db: float
    size_bytes: int


def _to_uint8(values: np.ndarray) -> np.ndarray:
    # round half away from zero, then clamp
    rounded = np.floor(np.abs(values) + 0.5) * np.sign(values)
    return np.clip(rounded, 0.0, 255.0).astype(np.uint8)


def process_plane(plane: ImagePlane, cfg: PipelineConfig) -> ImagePlane:
    """Transform, threshold all detail sub-bands, reconstruct one channel."""
    fb = get_filter(cfg.wavelet)
    dec = dwt2d(plane.as_float(), fb, cfg.depth)
    thresholded = Decomposition(
        approx=dec.approx,
        levels=tuple(
            SubbandTriple(
                h=threshold_subband(t.h, cfg.levels),
                v=threshold_subband(t.v, cfg.levels),
                d=threshold_subband(t.d, cfg.levels),
            )
            for t in dec.levels
        ),
        depth=dec.depth,
        source_width=dec.source_width,
        source_height=dec.source_height,
    )
    return ImagePlane(_to_uint8(idwt2d(thresholded, fb)))


def process_image(img: RgbImage, cfg: PipelineConfig) -> RgbImage:
    """process_plane applied independently to R, G and B."""
    r, g, b = split_channels(img)
    return merge_channels(
        process_plane(r, cfg), process_plane(g, cfg), process_plane(b, cfg)
    )


def psnr(orig: RgbImage, recon: RgbImage) -> float:
    """Peak signal-to-noise ratio in dB, MSE pooled over all three channels.

    Returns math.inf for identical images.
    """
    if (orig.width, orig.height) != (recon.width, recon.height):
        raise ValueError(
            f"image dimensions differ: {orig.width}x{orig.height} vs "
            f"{recon.width}x{recon.height}"
        )
    sq = 0.0
    for a, b in zip(split_channels(orig), split_channels(recon)):
        diff = a.as_float() - b.as_float()
        sq += float(np.sum(diff * diff))
    mse = sq / (3.0 * orig.width * orig.height)
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(PEAK * PEAK / mse)


def run_experiment(
    img: RgbImage,
    image_id: str,
    wavelets: Sequence[WaveletName],
    levels_list: Sequence[int],
    depth: int,
    on_reconstruction: Callable[[MetricsRecord, RgbImage], None] | None = None,
) -> list[MetricsRecord]:
    """One MetricsRecord per (wavelet, levels) pair, wavelets outer, levels inner.

    Any per-combination failure aborts the whole run, annotated with the
    offending (image, wavelet, levels) combination.
    """
    if not wavelets or not levels_list:
        raise ValueError("wavelets and levels lists must be nonempty")
    records = []
    for wavelet in wavelets:
        for levels in levels_list:
            try:
                cfg = PipelineConfig(wavelet=wavelet, depth=depth, levels=levels)
                recon = process_image(img, cfg)
                record = MetricsRecord(
                    image_id=image_id,
                    wavelet=wavelet,
                    levels=levels,
                    psnr_db=psnr(img, recon),
                    size_bytes=encoded_size(recon),
                )
            except Exception as err:
                raise RuntimeError(
                    f"processing failed for image={image_id} wavelet={wavelet} "
                    f"levels={levels}: {err}"
                ) from err
            records.append(record)
            if on_reconstruction is not None:
                on_reconstruction(record, recon)
    return records
