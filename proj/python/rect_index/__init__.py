"""Rectangular pattern index over 2D texts."""

from ._core import (
    FormatError,
    Grid,
    Index2D,
    SpaceStats,
    naive_search,
    parse_grid,
    random_grid,
    read_grid_file,
)

__all__ = [
    "FormatError",
    "Grid",
    "Index2D",
    "SpaceStats",
    "naive_search",
    "parse_grid",
    "random_grid",
    "read_grid_file",
]
