"""Seeded synthetic firm populations and foreign-share sweeps.

All randomness flows from one numpy PCG64 generator per seed, split into
two independent child streams: one for the population (categories and
turnover), one for the ownership labeling order. Regenerating with a
different foreign share therefore keeps every firm's coordinates and
turnover fixed and only moves the domestic/foreign boundary, and the
foreign sets are nested as the share grows.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field, replace
from typing import IO, Sequence

import numpy as np

from .decomp import RegionReport, region_report
from .ingest import ClassifiedFirm, Ownership


@dataclass(frozen=True)
class SynthParams:
    """Generator knobs. coupling is the probability that a firm's size and
    technology labels are deterministic functions (index modulo class count)
    of its municipality; otherwise they are independent uniform draws."""

    n_firms: int = 500
    n_municipalities: int = 30
    n_size_classes: int = 8
    n_tech_groups: int = 10
    coupling: float = 0.5
    foreign_share_target: float = 0.1
    turnover_law: str = "uniform"  # uniform on [1e6, 1e9) or lognormal(mu, sigma)
    lognormal_mu: float = 16.0
    lognormal_sigma: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.n_firms < 1:
            raise ValueError("n_firms must be at least 1")
        for name in ("n_municipalities", "n_size_classes", "n_tech_groups"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")
        if not 0.0 <= self.coupling <= 1.0:
            raise ValueError("coupling must be in [0, 1]")
        if not 0.0 <= self.foreign_share_target <= 1.0:
            raise ValueError("foreign_share_target must be in [0, 1]")
        if self.turnover_law not in ("uniform", "lognormal"):
            raise ValueError(f"unknown turnover_law {self.turnover_law!r}")


def foreign_count(n_firms: int, share: float) -> int:
    """Number of foreign firms for a target share, ties rounded half up."""
    return min(n_firms, int(math.floor(n_firms * share + 0.5)))


def generate(params: SynthParams) -> list[ClassifiedFirm]:
    """Draw a deterministic synthetic population for the given parameters."""
    children = np.random.SeedSequence(params.seed).spawn(2)
    rng_pop = np.random.default_rng(children[0])
    rng_label = np.random.default_rng(children[1])

    n = params.n_firms
    g_idx = rng_pop.integers(0, params.n_municipalities, n)
    coupled = rng_pop.random(n) < params.coupling
    o_free = rng_pop.integers(0, params.n_size_classes, n)
    t_free = rng_pop.integers(0, params.n_tech_groups, n)
    if params.turnover_law == "uniform":
        turnover = rng_pop.uniform(1e6, 1e9, n)
    else:
        turnover = rng_pop.lognormal(params.lognormal_mu, params.lognormal_sigma, n)

    o_idx = np.where(coupled, g_idx % params.n_size_classes, o_free)
    t_idx = np.where(coupled, g_idx % params.n_tech_groups, t_free)

    labeling_order = rng_label.permutation(n)
    is_foreign = np.zeros(n, dtype=bool)
    is_foreign[labeling_order[: foreign_count(n, params.foreign_share_target)]] = True

    firms = []
    for i in range(n):
        firms.append(ClassifiedFirm(
            municipality=f"m{int(g_idx[i])}",
            size_class=f"s{int(o_idx[i])}",
            tech_group=int(t_idx[i]) + 1,
            ownership=Ownership.FOREIGN if is_foreign[i] else Ownership.DOMESTIC,
            turnover=float(turnover[i]),
        ))
    return firms


@dataclass(frozen=True)
class SweepPoint:
    share: float
    turnover_share: float
    synergy_share: float | None
    report: RegionReport


@dataclass(frozen=True)
class SweepCurve:
    params: SynthParams
    points: tuple[SweepPoint, ...] = field(default_factory=tuple)

    def synergy_share_violations(self) -> int:
        """How often the synergy share strictly decreases along the curve.

        Monotonicity is an empirical tendency of this generator, not a
        theorem, so the count is measured and reported rather than assumed.
        Pairs with an undefined share are skipped.
        """
        count = 0
        previous = None
        for point in self.points:
            if point.synergy_share is None:
                continue
            if previous is not None and point.synergy_share < previous:
                count += 1
            previous = point.synergy_share
        return count

    def to_csv(self, fp: IO[str]) -> None:
        # column names are the on-disk contract; an undefined synergy share
        # serializes as an empty field
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(["share", "r_ratio", "t_ratio"])
        for point in self.points:
            writer.writerow([
                repr(point.share),
                repr(point.turnover_share),
                "" if point.synergy_share is None else repr(point.synergy_share),
            ])


def sweep_foreign_share(params: SynthParams, shares: Sequence[float]) -> SweepCurve:
    """Evaluate the share -> (turnover share, synergy share) curve.

    shares must be strictly increasing within [0, 1]. Each point regenerates
    the population with the same seed, so only the ownership labels move.
    """
    if not shares:
        raise ValueError("shares must not be empty")
    if any(not 0.0 <= s <= 1.0 for s in shares):
        raise ValueError("shares must lie in [0, 1]")
    if any(b <= a for a, b in zip(shares, shares[1:])):
        raise ValueError("shares must be strictly increasing")
    points = []
    for share in shares:
        report = region_report(generate(replace(params, foreign_share_target=share)))
        points.append(SweepPoint(
            share=float(share),
            turnover_share=report.foreign_turnover_share,
            synergy_share=report.foreign_synergy_share,
            report=report,
        ))
    return SweepCurve(params=params, points=tuple(points))
