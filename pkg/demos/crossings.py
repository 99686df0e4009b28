"""Turning a crosses-over relation into levels, or into a cyclic witness."""

from levelgraph import CrossRelation, level_partition_from_crossings

# Four fragments: 2 crosses over 0, 3 crosses over 2, 1 is free.
stack = CrossRelation(4, [(2, 0), (3, 2)])
print("levels:", level_partition_from_crossings(stack).levels)

# A cyclic relation has no level partition; the witness lists fragments
# so that each one crosses under the next.
loop = CrossRelation(4, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 0)])
out = level_partition_from_crossings(loop)
print("witness:", out.witness)
