"""
Validation utilities for the amoeba toolkit.

Checks command-line run configurations before any work is started.
"""

import re
from dataclasses import dataclass
from typing import Optional, Tuple

from models.amoeba_model import DomainBox
from models.run_model import Command, RunConfig
from utils.config import Config


@dataclass
class ValidationResult:
    """Result of a validation check."""
    is_valid: bool
    message: str
    details: Optional[dict] = None


POLYNOMIAL_COMMANDS = frozenset(Command) - {Command.SCAN}


def parse_resolution(text: str) -> Tuple[int, int]:
    """
    Read ``"WxH"`` or a single ``"N"`` (square).

    Raises:
        ValueError: If the text is not a resolution
    """
    match = re.fullmatch(r"\s*(\d+)\s*(?:[xX]\s*(\d+))?\s*", text)
    if not match:
        raise ValueError(f"cannot read resolution '{text}'")
    width = int(match.group(1))
    height = int(match.group(2)) if match.group(2) else width
    return width, height


def parse_point(text: str) -> Tuple[float, ...]:
    """Read ``"x,y[,z]"`` into a tuple of floats."""
    try:
        values = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise ValueError(f"cannot read point '{text}'") from None
    if not 1 <= len(values) <= 3:
        raise ValueError(f"point needs 1 to 3 coordinates, got {len(values)}")
    return values


class RunConfigValidator:
    """
    Validator for command-line runs.

    Enforces the hard limits from the configuration and the shape of
    each option.
    """

    def __init__(self, config: Optional[Config] = None):
        """
        Initialize validator with configuration.

        Args:
            config: Configuration instance (uses default if not provided)
        """
        self.config = config or Config()

    def validate(self, run: RunConfig) -> ValidationResult:
        """
        Validate a parsed run.

        Checks:
        - exactly one polynomial source for polynomial commands
        - depth, resolution, samples and budget limits
        - domain and point syntax

        Args:
            run: Parsed run configuration

        Returns:
            ValidationResult with status and message
        """
        checks = (
            self.validate_source(run),
            self.validate_depth(run.depth),
            self.validate_resolution(run.resolution),
            self.validate_samples(run.samples),
            self.validate_budget(self.config.cell_budget),
            self.validate_threads(run.threads),
            self.validate_domain(run.domain),
            self.validate_point(run),
        )
        for result in checks:
            if not result.is_valid:
                return result
        return ValidationResult(is_valid=True, message="Run configuration is valid")

    def validate_source(self, run: RunConfig) -> ValidationResult:
        """Exactly one of inline text, file and fixture."""
        if run.command not in POLYNOMIAL_COMMANDS:
            return ValidationResult(is_valid=True, message="No polynomial needed")
        count = run.polynomial_sources
        if count != 1:
            return ValidationResult(
                is_valid=False,
                message="Give exactly one polynomial source (text, --poly-file or --fixture)",
                details={"sources": count},
            )
        if run.poly_file is not None and not run.poly_file.exists():
            return ValidationResult(
                is_valid=False,
                message="Polynomial file does not exist",
                details={"path": str(run.poly_file)},
            )
        return ValidationResult(is_valid=True, message="Polynomial source OK")

    def validate_depth(self, depth: int) -> ValidationResult:
        if not 0 <= depth <= self.config.max_depth:
            return ValidationResult(
                is_valid=False,
                message=f"Depth must be between 0 and {self.config.max_depth}",
                details={"depth": depth},
            )
        return ValidationResult(is_valid=True, message="Depth OK")

    def validate_resolution(self, resolution: Tuple[int, int]) -> ValidationResult:
        width, height = resolution
        limit = self.config.max_resolution
        if not (1 <= width <= limit and 1 <= height <= limit):
            return ValidationResult(
                is_valid=False,
                message=f"Resolution must be within 1x1 and {limit}x{limit}",
                details={"resolution": [width, height]},
            )
        return ValidationResult(is_valid=True, message="Resolution OK")

    def validate_samples(self, samples: int) -> ValidationResult:
        if samples < 1:
            return ValidationResult(
                is_valid=False,
                message="Samples must be at least 1",
                details={"samples": samples},
            )
        return ValidationResult(is_valid=True, message="Samples OK")

    def validate_budget(self, budget: int) -> ValidationResult:
        if budget < 1:
            return ValidationResult(
                is_valid=False,
                message="AMOEBA_BUDGET must be at least 1",
                details={"budget": budget},
            )
        return ValidationResult(is_valid=True, message="Budget OK")

    def validate_threads(self, threads: int) -> ValidationResult:
        if threads < 1:
            return ValidationResult(
                is_valid=False,
                message="Threads must be at least 1",
                details={"threads": threads},
            )
        return ValidationResult(is_valid=True, message="Threads OK")

    def validate_domain(self, domain: Optional[str]) -> ValidationResult:
        """Explicit domains must parse as ``x:lo:hi,y:lo:hi``."""
        if domain is None or domain == "auto":
            return ValidationResult(is_valid=True, message="Automatic domain")
        try:
            box = DomainBox.from_string(domain)
        except ValueError as e:
            return ValidationResult(is_valid=False, message=f"Invalid domain: {e}")
        return ValidationResult(
            is_valid=True,
            message="Domain OK",
            details={"dimension": box.dimension},
        )

    def validate_point(self, run: RunConfig) -> ValidationResult:
        """``member`` needs a point."""
        if run.command is Command.MEMBER and run.point is None:
            return ValidationResult(is_valid=False, message="member needs --point x,y[,z]")
        return ValidationResult(is_valid=True, message="Point OK")
