"""Exact equivariant log canonical thresholds of del Pezzo surfaces."""
from .engine import classify, LctResult
from .germ import germ_from_poly, newton_lct, resolve_and_lct
from .specfile import parse_spec, catalog_entry, catalog_keys

__version__ = "0.1.0"
