"""
Artifact storage for the amoeba toolkit.
"""

from storage.file_manager import FileManager, emit_report, write_image, write_points

__all__ = ["FileManager", "emit_report", "write_image", "write_points"]
