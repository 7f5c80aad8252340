"""
Data models for amoeba computations.

Defines domain boxes, point classifications, complement components,
the component report and raster images.
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from models.polynomial_model import LaurentPolynomial, LogPoint


OrderVector = Tuple[int, ...]


class MembershipStatus(Enum):
    """Verdict of the membership test at one point."""
    COMPLEMENT = "complement"
    AMOEBA = "amoeba"
    UNDECIDED = "undecided"

    @property
    def code(self) -> int:
        """Compact integer code used in batched arrays."""
        return _STATUS_CODES[self]

    @classmethod
    def from_code(cls, code: int) -> "MembershipStatus":
        """Inverse of :attr:`code`."""
        return _STATUS_FROM_CODE[int(code)]


_STATUS_CODES = {
    MembershipStatus.COMPLEMENT: 0,
    MembershipStatus.AMOEBA: 1,
    MembershipStatus.UNDECIDED: 2,
}
_STATUS_FROM_CODE = {v: k for k, v in _STATUS_CODES.items()}


@dataclass(frozen=True)
class DomainBox:
    """Axis-aligned box Ω = Π [lo_j, hi_j]."""
    intervals: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        if not self.intervals:
            raise ValueError("domain needs at least one axis")
        for lo, hi in self.intervals:
            if not lo < hi:
                raise ValueError(f"invalid interval [{lo}, {hi}]")

    @classmethod
    def cube(cls, lo: float, hi: float, dimension: int) -> "DomainBox":
        """Box [lo, hi]ⁿ."""
        return cls(tuple((float(lo), float(hi)) for _ in range(dimension)))

    @classmethod
    def from_string(cls, text: str) -> "DomainBox":
        """
        Parse ``"x:lo:hi,y:lo:hi"`` (axis labels are positional).

        Args:
            text: Comma separated ``label:lo:hi`` triples

        Returns:
            DomainBox
        """
        intervals = []
        for chunk in text.split(","):
            match = re.fullmatch(r"\s*[A-Za-z0-9_]*\s*:\s*([^:]+?)\s*:\s*([^:]+?)\s*", chunk)
            if not match:
                raise ValueError(f"cannot read domain axis '{chunk}'")
            intervals.append((float(match.group(1)), float(match.group(2))))
        return cls(tuple(intervals))

    @property
    def dimension(self) -> int:
        """Number of axes."""
        return len(self.intervals)

    @property
    def lows(self) -> np.ndarray:
        """Lower corner."""
        return np.array([lo for lo, _ in self.intervals])

    @property
    def highs(self) -> np.ndarray:
        """Upper corner."""
        return np.array([hi for _, hi in self.intervals])

    @property
    def widths(self) -> np.ndarray:
        """Edge lengths."""
        return self.highs - self.lows

    @property
    def center(self) -> LogPoint:
        """Box centre."""
        return tuple(float(v) for v in (self.lows + self.highs) / 2)

    def contains(self, point: Sequence[float]) -> bool:
        """Closed-box membership."""
        return all(lo <= x <= hi for x, (lo, hi) in zip(point, self.intervals))

    def to_dict(self) -> List[List[float]]:
        """Convert to nested lists for JSON output."""
        return [[lo, hi] for lo, hi in self.intervals]

    def __str__(self) -> str:
        labels = ("x", "y", "z")
        return ",".join(f"{labels[j]}:{lo:g}:{hi:g}" for j, (lo, hi) in enumerate(self.intervals))


@dataclass
class PointClassification:
    """Membership verdict at one point of ℝⁿ."""
    status: MembershipStatus
    order: Optional[OrderVector] = None
    samples_used: int = 0
    agreement: float = 1.0
    lopsided: bool = False

    @property
    def is_complement(self) -> bool:
        """True for Complement(ν) verdicts."""
        return self.status is MembershipStatus.COMPLEMENT

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output."""
        return {
            "status": self.status.value,
            "order": list(self.order) if self.order is not None else None,
            "samples_used": self.samples_used,
            "agreement": self.agreement,
            "lopsided": self.lopsided,
        }


@dataclass
class ClassificationBatch:
    """
    Membership verdicts for many points, stored column-wise.

    ``status`` holds :attr:`MembershipStatus.code` values and ``reasons``
    indexes ``DivergentOrderError.REASONS`` (-1 when not undecided).
    """
    status: np.ndarray
    orders: np.ndarray
    agreement: np.ndarray
    samples_used: np.ndarray
    lopsided: np.ndarray
    reasons: np.ndarray

    def __len__(self) -> int:
        return int(len(self.status))

    @classmethod
    def concatenate(cls, batches: Sequence["ClassificationBatch"]) -> "ClassificationBatch":
        """Join batches in order."""
        return cls(*(np.concatenate([getattr(b, name) for b in batches]) for name in (
            "status", "orders", "agreement", "samples_used", "lopsided", "reasons",
        )))

    @property
    def complement_mask(self) -> np.ndarray:
        """Points classified Complement."""
        return self.status == MembershipStatus.COMPLEMENT.code

    def at(self, index: int) -> PointClassification:
        """Verdict of one point."""
        status = MembershipStatus.from_code(self.status[index])
        order = tuple(int(v) for v in self.orders[index]) if status is MembershipStatus.COMPLEMENT else None
        return PointClassification(
            status=status,
            order=order,
            samples_used=int(self.samples_used[index]),
            agreement=float(self.agreement[index]),
            lopsided=bool(self.lopsided[index]),
        )


@dataclass
class ComplementComponent:
    """
    One detected connected component of the amoeba complement.

    ``cells`` cover the detected region; the component is unbounded
    when a cell touches the domain boundary.
    """
    order: OrderVector
    representative: LogPoint
    cells: List[DomainBox] = field(default_factory=list)
    bounded: bool = False
    diameter_lb: float = 0.0
    in_support: bool = True
    lattice_kind: str = "vertex"

    @property
    def cell_count(self) -> int:
        """Number of cells."""
        return len(self.cells)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output."""
        return {
            "order": list(self.order),
            "representative": list(self.representative),
            "bounded": self.bounded,
            "diameter_lb": self.diameter_lb,
            "cell_count": self.cell_count,
            "in_support": self.in_support,
            "lattice_kind": self.lattice_kind,
        }


@dataclass
class AmoebaReport:
    """
    Classified region set over a domain box.

    ``amoeba_boxes`` and ``timings`` are kept for rendering and the
    command-line summary; they are not serialized, so JSON output stays
    reproducible.
    """
    polynomial: LaurentPolynomial
    domain: DomainBox
    algorithm: str
    params: Dict[str, Any]
    components: List[ComplementComponent] = field(default_factory=list)
    amoeba_cells: int = 0
    undecided_cells: int = 0
    bounds: Tuple[int, int] = (0, 0)
    solid: bool = False
    optimal: bool = False
    warnings: List[str] = field(default_factory=list)
    cell_size: float = 0.0
    amoeba_boxes: List[DomainBox] = field(default_factory=list, repr=False)
    timings: Dict[str, float] = field(default_factory=dict, repr=False)

    @property
    def component_count(self) -> int:
        """Number of detected components."""
        return len(self.components)

    @property
    def bounded_components(self) -> List[ComplementComponent]:
        """Components that do not touch the domain boundary."""
        return [c for c in self.components if c.bounded]

    @property
    def orders(self) -> List[OrderVector]:
        """Orders of all components."""
        return [c.order for c in self.components]

    @property
    def unsupported_bounded_orders(self) -> List[OrderVector]:
        """Bounded orders that match no monomial of the polynomial."""
        return [c.order for c in self.bounded_components if not c.in_support]

    @property
    def min_bounded_diameter(self) -> Optional[float]:
        """Smallest diameter lower bound over bounded components."""
        diameters = [c.diameter_lb for c in self.bounded_components]
        return min(diameters) if diameters else None

    def component_for(self, order: Sequence[int]) -> Optional[ComplementComponent]:
        """Component with the given order, if detected."""
        order = tuple(order)
        for component in self.components:
            if component.order == order:
                return component
        return None

    def summary(self) -> str:
        """One-line human summary."""
        return (
            f"{self.component_count} components "
            f"({len(self.bounded_components)} bounded), "
            f"bounds {self.bounds[0]}..{self.bounds[1]}, "
            f"solid={self.solid}, optimal={self.optimal}"
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary with a fixed field order."""
        return {
            "polynomial": str(self.polynomial),
            "domain": self.domain.to_dict(),
            "algorithm": self.algorithm,
            "params": dict(self.params),
            "components": [c.to_dict() for c in self.components],
            "counts": {
                "components": self.component_count,
                "bounded": len(self.bounded_components),
                "complement_cells": sum(c.cell_count for c in self.components),
                "amoeba_cells": self.amoeba_cells,
                "undecided_cells": self.undecided_cells,
            },
            "bounds": {"min": self.bounds[0], "max": self.bounds[1]},
            "flags": {"solid": self.solid, "optimal": self.optimal},
            "warnings": list(self.warnings),
            "unsupported_bounded_orders": [list(o) for o in self.unsupported_bounded_orders],
            "small_components": {
                "min_bounded_diameter": self.min_bounded_diameter,
                "cell_size": self.cell_size,
            },
        }


@dataclass
class RasterImage:
    """
    RGB raster with an affine pixel ↔ plane map.

    Row 0 is the top of the picture (largest second coordinate).
    """
    pixels: np.ndarray
    domain: DomainBox
    stats: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.pixels.ndim != 3 or self.pixels.shape[2] != 3:
            raise ValueError("pixels must have shape (height, width, 3)")
        if self.pixels.shape[0] < 1 or self.pixels.shape[1] < 1:
            raise ValueError("image needs at least one pixel")
        if self.domain.dimension != 2:
            raise ValueError("raster domain must be two dimensional")
        self.pixels = np.ascontiguousarray(self.pixels, dtype=np.uint8)

    @classmethod
    def blank(cls, width: int, height: int, domain: DomainBox,
              color: Tuple[int, int, int] = (255, 255, 255)) -> "RasterImage":
        """Uniformly coloured image."""
        pixels = np.empty((height, width, 3), dtype=np.uint8)
        pixels[:, :] = color
        return cls(pixels=pixels, domain=domain)

    @property
    def width(self) -> int:
        """Width in pixels."""
        return int(self.pixels.shape[1])

    @property
    def height(self) -> int:
        """Height in pixels."""
        return int(self.pixels.shape[0])

    def pixel_centers(self) -> np.ndarray:
        """Plane coordinates of every pixel centre, shape (height, width, 2)."""
        (x0, x1), (y0, y1) = self.domain.intervals
        xs = x0 + (np.arange(self.width) + 0.5) / self.width * (x1 - x0)
        ys = y1 - (np.arange(self.height) + 0.5) / self.height * (y1 - y0)
        grid_x, grid_y = np.meshgrid(xs, ys)
        return np.stack([grid_x, grid_y], axis=-1)

    def pixel_to_point(self, row: int, col: int) -> Tuple[float, float]:
        """Plane coordinates of one pixel centre."""
        (x0, x1), (y0, y1) = self.domain.intervals
        return (
            x0 + (col + 0.5) / self.width * (x1 - x0),
            y1 - (row + 0.5) / self.height * (y1 - y0),
        )

    def point_to_pixel(self, points: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Map plane points to pixel indices.

        Args:
            points: Array of shape (m, 2)

        Returns:
            Tuple (rows, cols, inside) where ``inside`` masks points in the
            closed domain box; points on the right or bottom edge land in
            the last column or row.
        """
        points = np.asarray(points, dtype=float).reshape(-1, 2)
        (x0, x1), (y0, y1) = self.domain.intervals
        with np.errstate(invalid="ignore"):
            inside = (
                (points[:, 0] >= x0) & (points[:, 0] <= x1)
                & (points[:, 1] >= y0) & (points[:, 1] <= y1)
            )
        safe = np.where(inside[:, None], points, [x0, y1])
        cols = np.floor((safe[:, 0] - x0) / (x1 - x0) * self.width)
        rows = np.floor((y1 - safe[:, 1]) / (y1 - y0) * self.height)
        cols = np.clip(cols, 0, self.width - 1).astype(np.int64)
        rows = np.clip(rows, 0, self.height - 1).astype(np.int64)
        rows = np.where(inside, rows, 0)
        cols = np.where(inside, cols, 0)
        return rows, cols, inside
