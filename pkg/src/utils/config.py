"""
Settings for the amoeba toolkit.

Every knob is an ``AMOEBA_*`` environment variable; a ``.env`` file at
the project root (or ``.env.example`` when there is none) supplies
values that are not already set in the process environment.
"""

import os
from pathlib import Path
from typing import Optional, Tuple
from dotenv import load_dotenv

ROOT_MARKERS: Tuple[str, ...] = ("pytest.ini", "requirements.txt", ".env")

def _project_root() -> Path:
    """Nearest ancestor of this file holding a root marker, else the cwd."""
    here = Path(__file__).resolve()
    for candidate in here.parents:
        if any((candidate / marker).exists() for marker in ROOT_MARKERS):
            return candidate
    return Path.cwd()

class Config:
    """
    Shared settings object.

    ``Config()`` always returns the same instance; ``Config.reload()``
    re-reads the environment into it, which tests use after patching
    variables.
    """

    _instance: Optional["Config"] = None
    _initialized: bool = False

    def __new__(cls) -> "Config":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self) -> None:
        if Config._initialized:
            return

        self.root = _project_root()
        for name in (".env", ".env.example"):
            dotenv_file = self.root / name
            if dotenv_file.exists():
                load_dotenv(dotenv_file)
                break

        self._load()
        Config._initialized = True

    def _load(self) -> None:
        """Read every setting from the environment."""
        # Work limits
        self.cell_budget: int = int(os.getenv("AMOEBA_BUDGET", str(2 ** 22)))
        self.chunk_size: int = int(os.getenv("AMOEBA_CHUNK_SIZE", "2048"))
        self.threads: int = int(os.getenv("AMOEBA_THREADS", "1"))

        # Algorithm defaults
        self.default_depth: int = int(os.getenv("AMOEBA_DEPTH", "8"))
        self.min_depth: int = int(os.getenv("AMOEBA_MIN_DEPTH", "3"))
        self.default_samples: int = int(os.getenv("AMOEBA_SAMPLES", "8"))
        self.default_resolution: int = int(os.getenv("AMOEBA_RESOLUTION", "800"))
        self.default_grid: int = int(os.getenv("AMOEBA_GRID", "100"))
        self.seed: int = int(os.getenv("AMOEBA_SEED", "0"))
        self.domain_padding: float = float(os.getenv("AMOEBA_PADDING", "2.0"))

        # Numerical tolerances
        self.root_tolerance: float = float(os.getenv("AMOEBA_ROOT_TOL", "1e-10"))
        self.circle_tolerance: float = float(os.getenv("AMOEBA_CIRCLE_TOL", "1e-6"))
        self.ronkin_tolerance: float = float(os.getenv("AMOEBA_RONKIN_TOL", "1e-4"))

        # Hard limits
        self.max_depth: int = 14
        self.max_resolution: int = 4096

        # Output
        self.output_dir: Path = self.root / os.getenv(
            "AMOEBA_OUTPUT_DIR", "output"
        )
        self.log_level: str = os.getenv("AMOEBA_LOG_LEVEL", "INFO").upper()
        log_file = os.getenv("AMOEBA_LOG_FILE", "")
        self.log_file: Optional[Path] = Path(log_file) if log_file else None

    @classmethod
    def reload(cls) -> "Config":
        """Re-read the environment into the shared instance."""
        instance = cls()
        instance._load()
        return instance

    def ensure_output_dir(self) -> Path:
        """Create the default output directory on demand."""
        self.output_dir.mkdir(parents=True, exist_ok=True)
        return self.output_dir
