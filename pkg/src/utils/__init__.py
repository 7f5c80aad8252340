"""
Utility modules for the amoeba toolkit.

Validators depend on ``models`` and are imported from
``utils.validators`` directly; this package only re-exports modules
that ``models`` itself can import.
"""

from utils.config import Config
from utils.logger_config import setup_logger, get_logger, ProcessingLogger

__all__ = [
    "Config",
    "setup_logger",
    "get_logger",
    "ProcessingLogger",
]
