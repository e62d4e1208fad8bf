"""Ownership split of the signed three-way measure, and region-level reporting.

Every marginal entropy of the full population splits exactly into three
parts against the same denominator N:

    h_total = h_domestic + h_foreign + h_cross

where h_domestic sums -(n/N) log(n/N) over domestic cell counts, h_foreign
does the same over foreign counts, and h_cross is the remainder. The cross
part is never positive and vanishes when the two groups occupy disjoint
cells. Pushing the three parts through the alternating seven-term sum gives
an additive decomposition of the signed measure:

    total = domestic + foreign_only + cross

The combined foreign contribution reported downstream is foreign_only +
cross, i.e. everything that goes away if the foreign firms are removed and
the remaining counts are left untouched.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .cube import ContingencyCube, EmptyDataset, build_cube, marginalize
from .infotheory import SUBSETS, _plugin_entropy, ZeroTotal
from .ingest import ClassifiedFirm, Ownership


@dataclass(frozen=True)
class SplitEntropyTerm:
    """One marginal entropy split by ownership, all against the full total.

    domestic and foreign are each non-negative; cross is <= 0 and the three
    sum exactly to total.
    """

    domestic: float
    foreign: float
    cross: float
    total: float


def split_entropy(domestic: Mapping, foreign: Mapping, total: int, base: float = 2.0) -> SplitEntropyTerm:
    """Split one marginal's entropy by ownership group.

    Arguments:
        domestic: cell -> count map for domestically owned firms.
        foreign: cell -> count map for foreign owned firms.
        total: full population size N. Both maps are scored against N, not
            against their own subtotals; combined counts must not exceed N.
        base: logarithm base (2, e or 10).

    The cross part is computed as the residual total - (domestic + foreign),
    which keeps the additivity identity exact in floating point and is
    symmetric under swapping the two groups.
    """
    if total <= 0:
        raise ZeroTotal(f"total must be positive, got {total}")
    combined: dict = dict(domestic)
    for key, count in foreign.items():
        combined[key] = combined.get(key, 0) + count
    h_total = _plugin_entropy(combined, total, base)
    h_domestic = _plugin_entropy(domestic, total, base)
    h_foreign = _plugin_entropy(foreign, total, base)
    return SplitEntropyTerm(
        domestic=h_domestic,
        foreign=h_foreign,
        cross=h_total - (h_domestic + h_foreign),
        total=h_total,
    )


@dataclass(frozen=True)
class SynergyDecomposition:
    """Additive ownership decomposition of the signed three-way measure.

    total     signed measure of the whole population
    domestic  contribution carried by domestic cell counts alone
    foreign_only  contribution carried by foreign cell counts alone
    cross     mixing term between the two groups
    foreign   foreign_only + cross, the combined foreign contribution
    """

    total: float
    domestic: float
    foreign_only: float
    cross: float
    foreign: float


def _alternating(values: Sequence[float]) -> float:
    # same association order as infotheory.ternary_information
    g, o, t, go, gt, ot, got = values
    return g + o + t - go - gt - ot + got


def decompose(cube: ContingencyCube, base: float = 2.0) -> SynergyDecomposition:
    """Split the cube's signed measure into ownership contributions."""
    terms = []
    for dims in SUBSETS:
        marginal = marginalize(cube, dims)
        terms.append(split_entropy(marginal.domestic, marginal.foreign, cube.total, base))
    total = _alternating([t.total for t in terms])
    domestic = _alternating([t.domestic for t in terms])
    foreign_only = _alternating([t.foreign for t in terms])
    cross = _alternating([t.cross for t in terms])
    return SynergyDecomposition(
        total=total,
        domestic=domestic,
        foreign_only=foreign_only,
        cross=cross,
        foreign=foreign_only + cross,
    )


def subgroup_synergy(cube: ContingencyCube, ownership: Ownership, base: float = 2.0) -> float:
    """Signed measure of one ownership group renormalized by its own size.

    Secondary diagnostic only. The additive decomposition keeps the full
    population denominator; this instead treats the chosen group as a
    population of its own, so its value is NOT a term of decompose().
    """
    counts = cube.foreign if ownership is Ownership.FOREIGN else cube.domestic
    subtotal = sum(counts.values())
    if subtotal == 0:
        raise EmptyDataset(f"no {ownership.value} firms in cube")
    values = []
    for dims in SUBSETS:
        marginal = marginalize(cube, dims)
        part = marginal.foreign if ownership is Ownership.FOREIGN else marginal.domestic
        values.append(_plugin_entropy(part, subtotal, base))
    return _alternating(values)


# --- ratio arithmetic -------------------------------------------------------

def synergy_share(total: float, foreign: float) -> float | None:
    """Foreign fraction of the signed measure; None when total is zero."""
    if total == 0:
        return None
    # + 0.0 canonicalizes -0.0 so serialized ratios never carry a sign on zero
    return foreign / total + 0.0


def efficiency_ratio(turnover_share: float, syn_share: float | None) -> float | None:
    """Turnover share per unit of synergy share; None when undefined.

    Undefined when the synergy share itself is undefined or zero. None is
    used deliberately instead of NaN so serialization stays explicit.
    """
    if syn_share is None or syn_share == 0:
        return None
    return turnover_share / syn_share + 0.0


# --- region-level report ----------------------------------------------------

@dataclass(frozen=True)
class RegionReport:
    """Everything a region summary needs: decomposition, turnover, ratios.

    Turnover figures are in the currency of the input data (NOK for the
    register this was built for). foreign_turnover_share is foreign turnover
    over all turnover; foreign_to_domestic_turnover is the same numerator
    over domestic turnover only. Both are reported because aggregate
    statements about "foreign versus domestic turnover" are ambiguous
    between the two.
    """

    synergy: SynergyDecomposition
    turnover_total: float
    turnover_domestic: float
    turnover_foreign: float
    foreign_turnover_share: float
    foreign_to_domestic_turnover: float | None
    foreign_synergy_share: float | None
    efficiency: float | None
    firm_count: int
    foreign_count: int

    def to_dict(self) -> dict:
        """Documented JSON shape, units annotated."""
        return {
            "units": {"information": "bits unless another log base was set", "turnover": "input currency (NOK)"},
            "firms": {"count": self.firm_count, "foreign": self.foreign_count},
            "synergy": {
                "total": self.synergy.total,
                "domestic": self.synergy.domestic,
                "foreign_only": self.synergy.foreign_only,
                "cross": self.synergy.cross,
                "foreign": self.synergy.foreign,
            },
            "turnover": {
                "total": self.turnover_total,
                "domestic": self.turnover_domestic,
                "foreign": self.turnover_foreign,
            },
            "ratios": {
                "foreign_turnover_share": self.foreign_turnover_share,
                "foreign_to_domestic_turnover": self.foreign_to_domestic_turnover,
                "foreign_synergy_share": self.foreign_synergy_share,
                "efficiency": self.efficiency,
            },
        }


def region_report(firms: Sequence[ClassifiedFirm], base: float = 2.0) -> RegionReport:
    """Build the full region summary from classified firms.

    Raises EmptyDataset on empty input. The turnover sums run in firm order;
    the foreign share of an all-foreign population is exactly 1.0.
    """
    if not firms:
        raise EmptyDataset("no firms")
    cube = build_cube(firms)
    dec = decompose(cube, base)
    turnover_total = sum(f.turnover for f in firms)
    turnover_foreign = sum(f.turnover for f in firms if f.ownership is Ownership.FOREIGN)
    turnover_domestic = sum(f.turnover for f in firms if f.ownership is Ownership.DOMESTIC)
    # zero total turnover means zero foreign turnover too; report share 0
    share = turnover_foreign / turnover_total if turnover_total > 0 else 0.0
    syn_share = synergy_share(dec.total, dec.foreign)
    return RegionReport(
        synergy=dec,
        turnover_total=turnover_total,
        turnover_domestic=turnover_domestic,
        turnover_foreign=turnover_foreign,
        foreign_turnover_share=share,
        foreign_to_domestic_turnover=(turnover_foreign / turnover_domestic if turnover_domestic > 0 else None),
        foreign_synergy_share=syn_share,
        efficiency=efficiency_ratio(share, syn_share),
        firm_count=len(firms),
        foreign_count=sum(1 for f in firms if f.ownership is Ownership.FOREIGN),
    )
