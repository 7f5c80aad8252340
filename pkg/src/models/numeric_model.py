"""
Results of numerical kernels: root sets, zero-locus samples and
Ronkin quadrature estimates.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List

import numpy as np


@dataclass
class UnivariateSlice:
    """
    Dense coefficients b_m..b_M of q(w) = p restricted to one variable.

    ``coefficients[k]`` multiplies w^(m + k).
    """
    coefficients: np.ndarray
    min_exponent: int
    degenerate: bool = False

    @property
    def degree(self) -> int:
        """Degree of the polynomial part w^(-m)·q(w)."""
        return int(len(self.coefficients) - 1)


@dataclass
class RootSet:
    """All roots of a univariate polynomial, with a scaled residual."""
    roots: np.ndarray
    residual: float
    converged: bool = True

    @property
    def degree(self) -> int:
        """Number of roots (degree of the polynomial part)."""
        return int(len(self.roots))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output."""
        return {
            "roots": [[float(r.real), float(r.imag)] for r in self.roots],
            "residual": self.residual,
            "converged": self.converged,
        }


@dataclass
class ZeroSample:
    """
    Points of the zero locus in (ℂ*)², with per-point residuals.

    ``parameters`` holds, per point, the slice that produced it:
    (role, log-modulus, argument) of the fixed coordinate.
    """
    points: np.ndarray
    residuals: np.ndarray
    parameters: np.ndarray
    skipped: int = 0

    def __len__(self) -> int:
        return int(len(self.points))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output."""
        return {
            "points": [[[float(z.real), float(z.imag)] for z in row] for row in self.points],
            "skipped": self.skipped,
        }


@dataclass
class RonkinEstimate:
    """Trapezoidal estimate of the Ronkin function at one point."""
    value: float
    nodes_per_axis: int
    converged: bool
    history: List[float] = field(default_factory=list)
