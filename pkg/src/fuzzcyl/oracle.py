"""Brute-force grid oracle: rasterizes cylinder sets at levels k/N and
cross-checks symbolic results cell-for-cell.

The grid samples only rational points of the form k/N, so it cannot see
open/closed endpoint distinctions off the grid; endpoint flags are covered
by the symbolic unit tests instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cylinder import CylinderOpen, cyl_contains
from .fuzzy import GroundSet


@dataclass(frozen=True)
class GridOracle:
    """A boolean raster of a cylinder subset, one vector per ground element."""

    ground: GroundSet
    resolution: int
    cells: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        if self.resolution < 2:
            raise ValueError("resolution must be at least 2")
        if len(self.cells) != len(self.ground.elements):
            raise ValueError("one cell vector per ground element required")
        for vec in self.cells:
            if len(vec) != self.resolution:
                raise ValueError("cell vector length must equal the resolution")

    def cell(self, x: str, k: int) -> bool:
        return self.cells[self.ground.index(x)][k]

    def to_json(self) -> dict:
        return {"resolution": self.resolution,
                "cells": {x: [int(b) for b in vec]
                          for x, vec in zip(self.ground.elements, self.cells)}}


def oracle_rasterize(c: CylinderOpen, resolution: int) -> GridOracle:
    """Cell (x, k/N) is true iff the point lies in the set."""
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    cells = tuple(
        tuple(cyl_contains(c, x, Fraction(k, resolution))
              for k in range(resolution))
        for x in c.ground.elements)
    return GridOracle(c.ground, resolution, cells)


def oracle_compare(symbolic: CylinderOpen, brute: GridOracle) -> bool:
    """True iff the rasterization of the symbolic set matches cell-for-cell."""
    return oracle_rasterize(symbolic, brute.resolution) == brute


def first_mismatch(symbolic: CylinderOpen,
                   brute: GridOracle) -> Optional[tuple[str, Fraction]]:
    raster = oracle_rasterize(symbolic, brute.resolution)
    for x in brute.ground.elements:
        for k in range(brute.resolution):
            if raster.cell(x, k) != brute.cell(x, k):
                return (x, Fraction(k, brute.resolution))
    return None
