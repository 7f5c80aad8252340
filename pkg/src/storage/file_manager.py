"""
Artifact writing for the amoeba toolkit.

Handles raster images (PPM, SVG overlays), JSON reports and point
clouds, and CSV tables.
"""

import base64
import io
import json
from pathlib import Path
from typing import Any, Optional, Sequence, Union

import numpy as np
import pandas as pd
from PIL import Image

from models.amoeba_model import AmoebaReport, RasterImage
from models.tropical_model import TropicalCurve
from utils.config import Config
from utils.logger_config import get_logger


logger = get_logger("amoeba.files")

PathLike = Union[str, Path]

OVERLAY_COLOR = "#d62728"


class FileManager:
    """
    Writes every artifact the toolkit produces.

    Relative paths are used as given; :meth:`default_path` places
    unnamed artifacts in the configured output directory.
    """

    def __init__(self, config: Optional[Config] = None):
        """
        Initialize file manager.

        Args:
            config: Configuration instance (uses default if not provided)
        """
        self.config = config or Config()

    def default_path(self, stem: str, suffix: str) -> Path:
        """``<output_dir>/<stem>.<suffix>``, creating the directory."""
        return self.config.ensure_output_dir() / f"{stem}.{suffix}"

    def _prepare(self, path: PathLike) -> Path:
        path = Path(path)
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        return path

    # ------------------------------------------------------------------
    # Images

    def write_ppm(self, image: RasterImage, path: PathLike) -> Path:
        """
        Binary PPM (P6, maxval 255).

        The file is the header ``P6\\n<w> <h>\\n255\\n`` followed by
        exactly 3·w·h bytes of RGB data, rows top to bottom.
        """
        path = self._prepare(path)
        Image.fromarray(image.pixels, mode="RGB").save(path, format="PPM")
        logger.info(f"Wrote image: {path} ({image.width}x{image.height})")
        return path

    def _canvas(self, image: RasterImage, points: np.ndarray) -> np.ndarray:
        """Continuous pixel coordinates (x right, y down) of plane points."""
        (x0, x1), (y0, y1) = image.domain.intervals
        points = np.asarray(points, dtype=float).reshape(-1, 2)
        return np.column_stack([
            (points[:, 0] - x0) / (x1 - x0) * image.width,
            (y1 - points[:, 1]) / (y1 - y0) * image.height,
        ])

    def write_svg(
        self,
        image: RasterImage,
        path: PathLike,
        curve: Optional[TropicalCurve] = None,
    ) -> Path:
        """
        SVG 1.1 with the raster embedded and one polyline per curve edge.

        Rays are cut where they certainly leave the picture.
        """
        path = self._prepare(path)
        buffer = io.BytesIO()
        Image.fromarray(image.pixels, mode="RGB").save(buffer, format="PNG")
        encoded = base64.b64encode(buffer.getvalue()).decode("ascii")

        lines = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" xmlns:xlink="http://www.w3.org/1999/xlink" '
            f'version="1.1" width="{image.width}" height="{image.height}" '
            f'viewBox="0 0 {image.width} {image.height}">',
            f'<image x="0" y="0" width="{image.width}" height="{image.height}" '
            f'xlink:href="data:image/png;base64,{encoded}"/>',
        ]
        if curve is not None:
            reach = 2.0 * float(np.linalg.norm(image.domain.widths)) + float(
                np.abs(np.concatenate([image.domain.lows, image.domain.highs])).max()
            )
            for edge in curve.edges:
                start, end = edge.clipped(reach)
                canvas = self._canvas(image, np.array([start, end]))
                coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in canvas)
                lines.append(
                    f'<polyline points="{coords}" fill="none" stroke="{OVERLAY_COLOR}" stroke-width="1.5"/>'
                )
            for vertex in curve.vertices:
                (cx, cy), = self._canvas(image, np.array([vertex]))
                lines.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="2.5" fill="{OVERLAY_COLOR}"/>')
        lines.append("</svg>")
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        logger.info(f"Wrote overlay: {path}")
        return path

    def write_image(
        self,
        image: RasterImage,
        path: PathLike,
        fmt: str = "ppm",
        curve: Optional[TropicalCurve] = None,
    ) -> Path:
        """Write an image as ``ppm`` or ``svg``."""
        if fmt == "ppm":
            return self.write_ppm(image, path)
        if fmt == "svg":
            return self.write_svg(image, path, curve)
        raise ValueError(f"unsupported image format '{fmt}'")

    # ------------------------------------------------------------------
    # JSON and tables

    def write_json(self, data: Any, path: PathLike) -> Path:
        """Pretty-printed JSON; key order is taken from ``data``."""
        path = self._prepare(path)
        path.write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")
        logger.info(f"Wrote JSON: {path}")
        return path

    def emit_report(self, report: AmoebaReport, path: PathLike) -> Path:
        """Component report with its fixed field order."""
        return self.write_json(report.to_dict(), path)

    def write_points(self, points: np.ndarray, path: PathLike, sort: bool = True) -> Path:
        """Point cloud as a JSON array of coordinate lists."""
        points = np.asarray(points, dtype=float)
        if points.ndim == 1:
            points = points.reshape(-1, 1)
        if sort and len(points):
            points = points[np.lexsort(points.T[::-1])]
        return self.write_json([[float(v) for v in row] for row in points], path)

    def write_table(self, frame: pd.DataFrame, path: PathLike) -> Path:
        """CSV without the index column."""
        path = self._prepare(path)
        frame.to_csv(path, index=False, encoding="utf-8")
        logger.info(f"Wrote table: {path} ({len(frame)} rows)")
        return path


def write_image(
    image: RasterImage,
    path: PathLike,
    fmt: str = "ppm",
    curve: Optional[TropicalCurve] = None,
) -> Path:
    """Write an image with the default file manager."""
    return FileManager().write_image(image, path, fmt, curve)


def emit_report(report: AmoebaReport, path: PathLike) -> Path:
    """Write a component report with the default file manager."""
    return FileManager().emit_report(report, path)


def write_points(points: Sequence[Sequence[float]], path: PathLike) -> Path:
    """Write a point cloud with the default file manager."""
    return FileManager().write_points(np.asarray(points, dtype=float), path)
