"""Plug-in Shannon entropies and the signed three-way information measure.

The measure is the alternating sum of the seven marginal entropies,

    h(G) + h(O) + h(T) - h(GO) - h(GT) - h(OT) + h(GOT)

and can take either sign. Negative values indicate that the three
dimensions jointly carry more structure than their pairwise views explain,
which is the regime of interest for firm populations. Entropies are plain
plug-in estimates with no bias correction; results depend on the empirical
counts only.

Summation is always over sorted cell keys, so results are bit-for-bit
reproducible regardless of dict insertion order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .cube import ContingencyCube, marginalize


class ZeroTotal(ValueError):
    """Entropy requested against a non-positive total."""


def _plugin_entropy(counts: Mapping, total: int, base: float = 2.0) -> float:
    # 0 * log 0 is taken as 0: zero-count cells contribute nothing.
    acc = 0.0
    for key in sorted(counts):
        c = counts[key]
        if c:
            p = c / total
            acc -= p * math.log2(p)
    if base != 2.0:
        acc /= math.log2(base)
    return acc


def shannon_entropy(counts: Mapping, total: int, base: float = 2.0) -> float:
    """Entropy of a count map against an externally supplied total.

    Arguments:
        counts: map from hashable, mutually sortable keys to counts >= 0.
        total: the denominator, usually the full population size. May exceed
            the sum of counts when scoring a subgroup against the whole.
        base: logarithm base, 2 (bits, default), e or 10.
    """
    if total <= 0:
        raise ZeroTotal(f"total must be positive, got {total}")
    if any(c < 0 for c in counts.values()):
        raise ValueError("counts must be non-negative")
    return _plugin_entropy(counts, total, base)


@dataclass(frozen=True)
class EntropyProfile:
    """The seven marginal entropies of a cube, in the configured log base."""

    h_g: float
    h_o: float
    h_t: float
    h_go: float
    h_gt: float
    h_ot: float
    h_got: float


# dimension subsets in the fixed order the profile fields use
SUBSETS = (("G",), ("O",), ("T",), ("G", "O"), ("G", "T"), ("O", "T"), ("G", "O", "T"))


def entropy_profile(cube: ContingencyCube, base: float = 2.0) -> EntropyProfile:
    """Compute all seven marginal entropies of the full population."""
    if cube.total <= 0:
        raise ZeroTotal("cube has no observations")
    values = []
    for dims in SUBSETS:
        marginal = marginalize(cube, dims)
        values.append(_plugin_entropy(marginal.combined(), cube.total, base))
    return EntropyProfile(*values)


def ternary_information(profile: EntropyProfile) -> float:
    """Signed three-way measure from a profile. Negative means synergy."""
    return (
        profile.h_g + profile.h_o + profile.h_t
        - profile.h_go - profile.h_gt - profile.h_ot
        + profile.h_got
    )


def cube_ternary_information(cube: ContingencyCube, base: float = 2.0) -> float:
    """Convenience: profile + alternating sum in one call."""
    return ternary_information(entropy_profile(cube, base))
