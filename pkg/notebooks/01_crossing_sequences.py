# %% [markdown]
# # Crossing sequences in the triangulated plane
#
# The plane is cut by the lines `y = k` (label 1), `x = k` (label 2) and
# `x + y = k` (label 3).  A segment between lattice points is recorded by
# the labels of the edges it crosses.

# %%
from markov_distance.lattice import (
    Side, base_crossing_sequence, deformed_crossing_sequence, fan_sequence,
    peg_path_crossing_sequence, primitive_decomposition,
)

for d in [(1, 0), (1, 1), (2, 1), (3, 2), (5, 3)]:
    print(d, base_crossing_sequence((0, 0), d))

# %% [markdown]
# A segment through intermediate lattice points is pushed slightly to one
# side.  Each bypassed point adds a short "fan" of edges around it.

# %%
print(primitive_decomposition((0, 0), (4, 2)))
print("fan left ", fan_sequence((2, 1), Side.LEFT))
print("fan right", fan_sequence((2, 1), Side.RIGHT))
for side in Side:
    print(side.name, deformed_crossing_sequence((0, 0), (4, 2), side))

# %% [markdown]
# The fan rule can be cross-checked with an explicit path that hugs each
# bypassed point on a tiny hexagon, crossing edges computed exactly.

# %%
pegs = [((2, 1), Side.LEFT)]
print(peg_path_crossing_sequence((0, 0), pegs, (4, 2)))
print(peg_path_crossing_sequence((0, 0), [((1, 1), Side.LEFT)], (2, 1)))
