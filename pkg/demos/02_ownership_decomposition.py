"""Split the signed measure into domestic, foreign and mixing contributions.

Every marginal entropy splits exactly against the full population total, so
the alternating sum splits too:

    total = domestic + foreign_only + cross

The combined foreign contribution (foreign_only + cross) is what the region
loses if its foreign-owned firms disappear and nothing else moves.
"""
from thsynergy import (
    ClassifiedFirm,
    Ownership,
    build_cube,
    decompose,
    marginalize,
    split_entropy,
    subgroup_synergy,
)

# A toy region: domestic firms concentrated in two municipality/size/tech
# niches, foreign firms bridging a third combination.
firms = []
for _ in range(6):
    firms.append(ClassifiedFirm("west", "1-4", 2, Ownership.DOMESTIC, 8e6))
for _ in range(6):
    firms.append(ClassifiedFirm("east", "20-49", 5, Ownership.DOMESTIC, 30e6))
for _ in range(3):
    firms.append(ClassifiedFirm("west", "20-49", 5, Ownership.FOREIGN, 90e6))
for _ in range(3):
    firms.append(ClassifiedFirm("east", "1-4", 2, Ownership.FOREIGN, 12e6))

cube = build_cube(firms)
dec = decompose(cube)

print(f"{cube.total} firms, {sum(cube.foreign.values())} foreign")
print(f"  total measure:     {dec.total:+.6f}")
print(f"  domestic part:     {dec.domestic:+.6f}")
print(f"  foreign-only part: {dec.foreign_only:+.6f}")
print(f"  cross part:        {dec.cross:+.6f}")
print(f"  combined foreign:  {dec.foreign:+.6f}")
print()
resummed = dec.domestic + dec.foreign_only + dec.cross
print(f"additivity: parts re-sum to {resummed:.12f}, total is {dec.total:.12f}")
print(f"  gap {abs(resummed - dec.total):.1e} (re-summing uses a different accumulation order)")
print()

# The same split seen on one marginal: the municipality axis alone.
marginal = marginalize(cube, ("G",))
term = split_entropy(marginal.domestic, marginal.foreign, cube.total)
print("municipality marginal entropy split")
print(f"  domestic {term.domestic:.6f} + foreign {term.foreign:.6f} "
      f"+ cross {term.cross:.6f} = {term.total:.6f}")
print()

# Renormalizing a subgroup by its own size answers a different question
# (how synergistic are the foreign firms among themselves?) and is kept
# apart from the additive split.
print("foreign firms as their own population:",
      f"{subgroup_synergy(cube, Ownership.FOREIGN):+.6f}")
print("additive foreign term (full denominator):", f"{dec.foreign:+.6f}")
