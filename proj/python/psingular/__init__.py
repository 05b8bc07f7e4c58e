"""Spectra, energy and p-block structure of Cayley graphs on the p-singular
elements of a finite group, computed from exact character data."""

from psingular._core import (
    PsingularError,
    analyze,
    blocks,
    catalog_names,
    character_table,
    group_info,
    mn_table,
)

__all__ = [
    "PsingularError",
    "analyze",
    "blocks",
    "catalog_names",
    "character_table",
    "group_info",
    "mn_table",
]
