"""Command handlers for the amoeba command-line tool."""

from models import Command

from .geometry import run_components, run_info, run_member, run_spine
from .pictures import run_coamoeba, run_compactified, run_contour, run_draw
from .scan import run_scan

HANDLERS = {
    Command.INFO: run_info,
    Command.DRAW: run_draw,
    Command.COMPONENTS: run_components,
    Command.SPINE: run_spine,
    Command.COAMOEBA: run_coamoeba,
    Command.COMPACTIFIED: run_compactified,
    Command.CONTOUR: run_contour,
    Command.MEMBER: run_member,
    Command.SCAN: run_scan,
}

__all__ = [
    "HANDLERS",
    "run_info",
    "run_draw",
    "run_components",
    "run_spine",
    "run_coamoeba",
    "run_compactified",
    "run_contour",
    "run_member",
    "run_scan",
]
