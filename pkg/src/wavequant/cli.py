"""Benchmark CLI: run the thresholding pipeline over a PGM/PPM corpus and
write a CSV report (PSNR and compressed-size per wavelet/level combination)
plus optional plot data and reconstructed images.

Exit codes: 0 success, 1 runtime failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .filters import ALL_WAVELETS, SUPPORTED_WAVELETS, WaveletName
from .image import NetpbmError, read_image, write_image
from .pipeline import THRESHOLD_LEVEL_CHOICES, MetricsRecord, run_experiment

DEFAULT_LEVELS = list(THRESHOLD_LEVEL_CHOICES)


@dataclass
class CliConfig:
    inputs: list[Path]
    report_path: Path
    wavelets: list[WaveletName] = field(default_factory=lambda: list(ALL_WAVELETS))
    levels: list[int] = field(default_factory=lambda: list(DEFAULT_LEVELS))
    depth: int = 1
    plot_path: Path | None = None
    emit_images: Path | None = None


def _wavelet_list(text: str) -> list[WaveletName]:
    names = []
    for part in text.split(","):
        try:
            names.append(WaveletName.parse(part))
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"unknown wavelet {part.strip()!r}; supported: "
                f"{', '.join(SUPPORTED_WAVELETS)}"
            ) from None
    if not names:
        raise argparse.ArgumentTypeError("empty wavelet list")
    return names


def _level_list(text: str) -> list[int]:
    levels = []
    for part in text.split(","):
        try:
            value = int(part)
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"invalid level {part.strip()!r}; levels must be in {{3, 5, 7}}"
            ) from None
        if value not in THRESHOLD_LEVEL_CHOICES:
            raise argparse.ArgumentTypeError(f"levels must be in {{3, 5, 7}}, got {value}")
        levels.append(value)
    if not levels:
        raise argparse.ArgumentTypeError("empty level list")
    return levels


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid depth {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"depth must be >= 1, got {value}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wavequant",
        description=(
            "Multilevel thresholding of wavelet detail coefficients over an "
            "image corpus, reporting PSNR and compressed size per wavelet "
            "and threshold-level count."
        ),
    )
    parser.add_argument(
        "inputs", nargs="+", metavar="IMAGE", help="input binary PGM/PPM files"
    )
    parser.add_argument(
        "--wavelets",
        type=_wavelet_list,
        default=list(ALL_WAVELETS),
        metavar="NAMES",
        help=f"comma-separated wavelets (default: all of {', '.join(SUPPORTED_WAVELETS)})",
    )
    parser.add_argument(
        "--levels",
        type=_level_list,
        default=list(DEFAULT_LEVELS),
        metavar="LIST",
        help="comma-separated threshold-level counts from {3, 5, 7} (default: 3,5,7)",
    )
    parser.add_argument(
        "--depth",
        type=_positive_int,
        default=1,
        help="decomposition depth (default: 1)",
    )
    parser.add_argument(
        "--report",
        default="report.csv",
        metavar="CSV",
        help="output CSV report path (default: report.csv)",
    )
    parser.add_argument(
        "--plot",
        metavar="DAT",
        default=None,
        help="optional PSNR-vs-levels plot data file (single input image only)",
    )
    parser.add_argument(
        "--emit-images",
        metavar="DIR",
        default=None,
        help="optional directory for reconstructed PPMs",
    )
    return parser


def parse_args(argv: Sequence[str]) -> CliConfig:
    ns = _build_parser().parse_args(argv)
    return CliConfig(
        inputs=[Path(p) for p in ns.inputs],
        report_path=Path(ns.report),
        wavelets=list(ns.wavelets),
        levels=list(ns.levels),
        depth=ns.depth,
        plot_path=Path(ns.plot) if ns.plot else None,
        emit_images=Path(ns.emit_images) if ns.emit_images else None,
    )


def write_report(records: Sequence[MetricsRecord], path: Path) -> None:
    """CSV report: image,wavelet,levels,psnr_db,size_bytes (PSNR to 2 decimals)."""
    if not records:
        raise ValueError("no records to report")
    lines = ["image,wavelet,levels,psnr_db,size_bytes"]
    for rec in records:
        lines.append(
            f"{rec.image_id},{rec.wavelet},{rec.levels},"
            f"{rec.psnr_db:.2f},{rec.size_bytes}"
        )
    try:
        path.write_bytes(("\n".join(lines) + "\n").encode("utf-8"))
    except OSError as err:
        raise OSError(f"cannot write report {path}: {err}") from err


def write_plot_data(records: Sequence[MetricsRecord], path: Path) -> None:
    """PSNR-vs-levels columns for one image: level, then one column per wavelet."""
    if not records:
        raise ValueError("no records to plot")
    image_ids = {rec.image_id for rec in records}
    if len(image_ids) != 1:
        raise ValueError(
            f"plot data needs records of exactly one image, got {sorted(image_ids)}"
        )
    wavelets: list[str] = []
    levels: list[int] = []
    table: dict[tuple[str, int], float] = {}
    for rec in records:
        name = str(rec.wavelet)
        if name not in wavelets:
            wavelets.append(name)
        if rec.levels not in levels:
            levels.append(rec.levels)
        table[(name, rec.levels)] = rec.psnr_db
    levels.sort()
    missing = [
        f"{name}/{lvl}" for name in wavelets for lvl in levels if (name, lvl) not in table
    ]
    if missing:
        raise ValueError(f"incomplete wavelet/level grid; missing: {', '.join(missing)}")
    lines = ["level " + " ".join(wavelets)]
    for lvl in levels:
        lines.append(f"{lvl} " + " ".join(f"{table[(w, lvl)]:.2f}" for w in wavelets))
    try:
        path.write_bytes(("\n".join(lines) + "\n").encode("utf-8"))
    except OSError as err:
        raise OSError(f"cannot write plot data {path}: {err}") from err


def _run(cfg: CliConfig) -> None:
    emit_dir = cfg.emit_images
    if emit_dir is not None:
        emit_dir.mkdir(parents=True, exist_ok=True)
    if cfg.plot_path is not None and len(cfg.inputs) != 1:
        raise ValueError(
            f"--plot expects exactly one input image, got {len(cfg.inputs)}"
        )
    records: list[MetricsRecord] = []
    for input_path in cfg.inputs:
        try:
            img = read_image(input_path.read_bytes())
        except OSError as err:
            raise OSError(f"cannot read {input_path}: {err}") from err
        except NetpbmError as err:
            raise NetpbmError(f"{input_path}: {err}") from err
        stem = input_path.stem

        def emit(record: MetricsRecord, recon) -> None:
            out = emit_dir / f"{stem}_{record.wavelet}_L{record.levels}.ppm"
            out.write_bytes(write_image(recon))

        records.extend(
            run_experiment(
                img,
                stem,
                cfg.wavelets,
                cfg.levels,
                cfg.depth,
                on_reconstruction=emit if emit_dir is not None else None,
            )
        )
    write_report(records, cfg.report_path)
    if cfg.plot_path is not None:
        write_plot_data(records, cfg.plot_path)


def main(argv: Sequence[str] | None = None) -> int:
    cfg = parse_args(sys.argv[1:] if argv is None else argv)
    try:
        _run(cfg)
    except Exception as err:
        print(f"wavequant: error: {err}", file=sys.stderr)
        return 1
    return 0
