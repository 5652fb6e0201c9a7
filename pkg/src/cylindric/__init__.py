"""Cylindric Young diagrams inside the affine type A root system."""
from .diagrams import CylindricDiagram, Ideal, bottom_set, content, window
from .hooks import d_set_window, hk, hkr, leq_modified, pi_set, predominant_weight
from .lattice import Cell, CylCell, Period, leq_cyl, project
from .roots import RootVector
from .weyl import WeylElement

__all__ = [
    "Cell", "CylCell", "CylindricDiagram", "Ideal", "Period", "RootVector", "WeylElement",
    "bottom_set", "content", "d_set_window", "hk", "hkr", "leq_cyl", "leq_modified", "pi_set",
    "predominant_weight", "project", "window",
]
