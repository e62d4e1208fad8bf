"""Sparse three-way contingency cube over (municipality, size class, tech group).

Counts are kept separately for domestic and foreign ownership so downstream
decompositions can split every marginal. Cells are sparse maps keyed by
(g, o, t) tuples; axis category lists are data driven and sorted, which makes
cube construction independent of input row order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

from .ingest import ClassifiedFirm, Ownership

DIMS = ("G", "O", "T")  # geography, organization (size), technology
Cell = tuple


class EmptyDataset(ValueError):
    """No firms to build a cube from."""


@dataclass(frozen=True)
class ContingencyCube:
    """Immutable-by-convention sparse cube. Do not mutate the dicts.

    axes maps each dimension letter to its sorted category tuple; domestic
    and foreign map (g, o, t) cells to counts; total is the firm count and
    always equals the sum of both maps.
    """

    axes: dict[str, tuple]
    domestic: dict[Cell, int]
    foreign: dict[Cell, int]
    total: int

    def combined(self) -> dict[Cell, int]:
        out = dict(self.domestic)
        for cell, count in self.foreign.items():
            out[cell] = out.get(cell, 0) + count
        return out


@dataclass(frozen=True)
class MarginalCounts:
    """Counts projected onto a dimension subset, ownership split preserved.

    Keys are tuples of the kept coordinates in G, O, T order (1-tuples for a
    single dimension), so the full projection compares equal to the cube's
    own cell maps.
    """

    dims: tuple[str, ...]
    domestic: dict[Cell, int]
    foreign: dict[Cell, int]

    def combined(self) -> dict[Cell, int]:
        out = dict(self.domestic)
        for key, count in self.foreign.items():
            out[key] = out.get(key, 0) + count
        return out

    def total(self) -> int:
        return sum(self.domestic.values()) + sum(self.foreign.values())


def build_cube(firms: Sequence[ClassifiedFirm]) -> ContingencyCube:
    """Aggregate classified firms into a cube.

    Raises EmptyDataset on an empty input. Axis categories are exactly the
    values observed in the data, sorted.
    """
    if not firms:
        raise EmptyDataset("no firms")
    domestic: dict[Cell, int] = {}
    foreign: dict[Cell, int] = {}
    gs, os_, ts = set(), set(), set()
    for firm in firms:
        cell = (firm.municipality, firm.size_class, firm.tech_group)
        gs.add(cell[0])
        os_.add(cell[1])
        ts.add(cell[2])
        target = foreign if firm.ownership is Ownership.FOREIGN else domestic
        target[cell] = target.get(cell, 0) + 1
    axes = {"G": tuple(sorted(gs)), "O": tuple(sorted(os_)), "T": tuple(sorted(ts))}
    return ContingencyCube(axes=axes, domestic=domestic, foreign=foreign, total=len(firms))


def normalize_dims(dims: Iterable[str]) -> tuple[str, ...]:
    """Validate a dimension subset and return it in canonical G, O, T order."""
    wanted = set(dims)
    unknown = wanted - set(DIMS)
    if unknown:
        raise ValueError(f"unknown dimension(s): {sorted(unknown)}")
    if not wanted:
        raise ValueError("dimension subset must not be empty")
    return tuple(d for d in DIMS if d in wanted)


def _project(counts: dict[Cell, int], indices: tuple[int, ...]) -> dict[Cell, int]:
    out: dict[Cell, int] = {}
    for cell, count in counts.items():
        key = tuple(cell[i] for i in indices)
        out[key] = out.get(key, 0) + count
    return out


def marginalize(cube: ContingencyCube, dims: Iterable[str]) -> MarginalCounts:
    """Project the cube onto a non-empty subset of its dimensions.

    Cell totals are preserved: the projected counts always sum to cube.total.
    """
    kept = normalize_dims(dims)
    indices = tuple(DIMS.index(d) for d in kept)
    return MarginalCounts(
        dims=kept,
        domestic=_project(cube.domestic, indices),
        foreign=_project(cube.foreign, indices),
    )


# --- JSON fixture format ----------------------------------------------------

def cube_to_dict(cube: ContingencyCube) -> dict:
    """Documented JSON shape: axes, total and a sorted sparse cell list."""
    cells = []
    for cell in sorted(set(cube.domestic) | set(cube.foreign)):
        cells.append({
            "g": cell[0],
            "o": cell[1],
            "t": cell[2],
            "domestic": cube.domestic.get(cell, 0),
            "foreign": cube.foreign.get(cell, 0),
        })
    return {
        "schema_version": 1,
        "axes": {d: list(cube.axes[d]) for d in DIMS},
        "total": cube.total,
        "cells": cells,
    }


def cube_from_dict(payload: dict) -> ContingencyCube:
    axes = {d: tuple(payload["axes"][d]) for d in DIMS}
    domestic: dict[Cell, int] = {}
    foreign: dict[Cell, int] = {}
    for entry in payload["cells"]:
        cell = (entry["g"], entry["o"], entry["t"])
        if entry["domestic"]:
            domestic[cell] = int(entry["domestic"])
        if entry["foreign"]:
            foreign[cell] = int(entry["foreign"])
    total = int(payload["total"])
    check = sum(domestic.values()) + sum(foreign.values())
    if check != total:
        raise ValueError(f"cell counts sum to {check}, total says {total}")
    return ContingencyCube(axes=axes, domestic=domestic, foreign=foreign, total=total)


def dump_cube(cube: ContingencyCube, fp: IO[str]) -> None:
    json.dump(cube_to_dict(cube), fp, indent=2, sort_keys=False)
    fp.write("\n")


def load_cube(fp: IO[str]) -> ContingencyCube:
    return cube_from_dict(json.load(fp))
