"""
Data models for random polynomial families and solidity scans.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from models.polynomial_model import Exponent


class SupportRule(Enum):
    """How the support of a random polynomial is chosen."""
    FULL_SIMPLEX = "full-simplex"
    VERTICES_ONLY = "vertices-only"
    EXPLICIT = "explicit"
    RANDOM_HULL = "random-hull"


class PhaseLaw(Enum):
    """Coefficient phase distribution."""
    REAL = "real"
    UNIFORM = "uniform"


@dataclass
class FamilySpec:
    """
    A reproducible family of random polynomials.

    Coefficient magnitudes are log-uniform on ``magnitude_range``.
    ``support`` is used by the explicit rule and ``hull_points`` is the
    number of lattice points drawn by the random-hull rule.
    """
    arity: int = 2
    degree: int = 3
    support_rule: SupportRule = SupportRule.VERTICES_ONLY
    magnitude_range: Tuple[float, float] = (0.1, 10.0)
    phase: PhaseLaw = PhaseLaw.REAL
    count: int = 1
    seed: int = 0
    support: Tuple[Exponent, ...] = ()
    hull_points: int = 6

    def __post_init__(self):
        if isinstance(self.support_rule, str):
            self.support_rule = SupportRule(self.support_rule)
        if isinstance(self.phase, str):
            self.phase = PhaseLaw(self.phase)
        self.magnitude_range = tuple(float(v) for v in self.magnitude_range)
        self.support = tuple(tuple(int(a) for a in alpha) for alpha in self.support)
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        if self.count < 1:
            raise ValueError("count must be at least 1")
        lo, hi = self.magnitude_range
        if not 0 < lo <= hi:
            raise ValueError("magnitude range must be positive and ordered")
        if self.support_rule is SupportRule.EXPLICIT and not self.support:
            raise ValueError("explicit support rule needs a support")

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output."""
        return {
            "arity": self.arity,
            "degree": self.degree,
            "support_rule": self.support_rule.value,
            "magnitude_range": list(self.magnitude_range),
            "phase": self.phase.value,
            "count": self.count,
            "seed": self.seed,
            "support": [list(alpha) for alpha in self.support],
            "hull_points": self.hull_points,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "FamilySpec":
        """Create from dictionary."""
        return cls(
            arity=data.get("arity", 2),
            degree=data.get("degree", 3),
            support_rule=SupportRule(data.get("support_rule", "vertices-only")),
            magnitude_range=tuple(data.get("magnitude_range", (0.1, 10.0))),
            phase=PhaseLaw(data.get("phase", "real")),
            count=data.get("count", 1),
            seed=data.get("seed", 0),
            support=tuple(tuple(a) for a in data.get("support", ())),
            hull_points=data.get("hull_points", 6),
        )


@dataclass
class ScanItem:
    """Outcome of the solidity check for one generated polynomial."""
    index: int
    polynomial: str
    vertices: int
    detected_components: int = 0
    bounded_orders: List[Tuple[int, ...]] = field(default_factory=list)
    min_diameter_lb: Optional[float] = None
    flagged: bool = False
    confirmed: bool = False
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output."""
        return {
            "index": self.index,
            "polynomial": self.polynomial,
            "vertices": self.vertices,
            "detected_components": self.detected_components,
            "bounded_orders": [list(o) for o in self.bounded_orders],
            "min_diameter_lb": self.min_diameter_lb,
            "confirmed": self.confirmed,
            "flagged": self.flagged,
            "error": self.error,
        }


@dataclass
class ScanReport:
    """All items of a scan, in index order."""
    spec: FamilySpec
    params: Dict[str, Any]
    items: List[ScanItem] = field(default_factory=list)

    @property
    def candidates(self) -> List[ScanItem]:
        """Items with at least one bounded component at working depth."""
        return [item for item in self.items if item.flagged]

    @property
    def confirmed(self) -> List[ScanItem]:
        """Candidates that survived the re-check."""
        return [item for item in self.items if item.confirmed]

    @property
    def failures(self) -> List[ScanItem]:
        """Items that could not be processed."""
        return [item for item in self.items if item.error is not None]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output."""
        return {
            "spec": self.spec.to_dict(),
            "params": dict(self.params),
            "items": [item.to_dict() for item in self.items],
            "candidates": [item.index for item in self.candidates],
            "confirmed": [item.index for item in self.confirmed],
        }

    def to_frame(self) -> pd.DataFrame:
        """Tabular view, one row per item."""
        rows = []
        for item in self.items:
            row = item.to_dict()
            row["bounded_orders"] = ";".join(
                ",".join(str(v) for v in order) for order in item.bounded_orders
            )
            rows.append(row)
        columns = [
            "index", "polynomial", "vertices", "detected_components",
            "bounded_orders", "min_diameter_lb", "confirmed", "flagged", "error",
        ]
        return pd.DataFrame(rows, columns=columns)
