"""
Command-line run configuration.
"""

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional, Tuple


class Command(Enum):
    """Subcommands of the command-line tool."""
    INFO = "info"
    DRAW = "draw"
    COMPONENTS = "components"
    SPINE = "spine"
    COAMOEBA = "coamoeba"
    COMPACTIFIED = "compactified"
    CONTOUR = "contour"
    MEMBER = "member"
    SCAN = "scan"


class Algorithm(Enum):
    """Depiction algorithms."""
    NAIVE = "naive"
    GRID = "grid"
    GREEDY = "greedy"
    ARCHIMEDEAN = "archimedean"
    DICHOTOMOUS = "dichotomous"


class OutputFormat(Enum):
    """Artifact formats."""
    PPM = "ppm"
    SVG = "svg"
    JSON = "json"


@dataclass
class RunConfig:
    """
    Parsed options of one command-line invocation.

    Exactly one of ``poly_text``, ``poly_file`` and ``fixture`` is set
    for commands that need a polynomial. ``domain`` is None for the
    automatic domain.
    """
    command: Command
    poly_text: Optional[str] = None
    poly_file: Optional[Path] = None
    fixture: Optional[str] = None
    domain: Optional[str] = None
    algorithm: Optional[Algorithm] = None
    grid: int = 100
    resolution: Tuple[int, int] = (800, 800)
    depth: int = 8
    samples: int = 8
    seed: int = 0
    threads: int = 1
    out: Optional[Path] = None
    report: Optional[Path] = None
    output_format: Optional[OutputFormat] = None
    point: Optional[Tuple[float, ...]] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def polynomial_sources(self) -> int:
        """How many polynomial sources were given."""
        return sum(v is not None for v in (self.poly_text, self.poly_file, self.fixture))

    def params(self) -> Dict[str, Any]:
        """Algorithm parameters echoed into reports."""
        return {
            "depth": self.depth,
            "samples": self.samples,
            "seed": self.seed,
            "grid": self.grid,
            "resolution": list(self.resolution),
        }
