"""Shared helpers bridging dense oracle tensors and the package's cubes."""
from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent))  # make `import oracles` work

from thsynergy.cube import ContingencyCube


def cube_from_tensors(nat: np.ndarray, forn: np.ndarray) -> ContingencyCube:
    """Build a package cube from dense (domestic, foreign) count tensors.

    Axis labels mirror production shapes: municipality and size class are
    strings, technology group is a 1-based int.
    """
    nat = np.asarray(nat)
    forn = np.asarray(forn)
    shape = nat.shape
    domestic: dict = {}
    foreign: dict = {}
    for idx in np.ndindex(shape):
        cell = (f"g{idx[0]}", f"o{idx[1]}", idx[2] + 1)
        if nat[idx]:
            domestic[cell] = int(nat[idx])
        if forn[idx]:
            foreign[cell] = int(forn[idx])
    axes = {
        "G": tuple(f"g{i}" for i in range(shape[0])),
        "O": tuple(f"o{j}" for j in range(shape[1])),
        "T": tuple(k + 1 for k in range(shape[2])),
    }
    total = int(nat.sum() + forn.sum())
    return ContingencyCube(axes=axes, domestic=domestic, foreign=foreign, total=total)
