# %% [markdown]
# # Identities and inequalities
#
# Sides of an empty lattice triangle form a Markov triple, and an empty
# convex quadrilateral satisfies Ptolemy's relation with equality.  Larger
# convex quadrilaterals satisfy it as an inequality.

# %%
from markov_distance import (
    check_log_triangle, check_markov_equation, check_ptolemy_equality,
    check_ptolemy_inequality, check_shortest_path, Side,
)
from markov_distance.relations import check_parallelogram, parallelogram_auxiliary_convex

print(check_markov_equation((0, 0), (2, 1), (3, 2)))
print(check_ptolemy_equality((0, 0), (2, 1), (3, 2), (1, 1)))
print(check_ptolemy_inequality((0, 0), (4, 3), (5, 3), (5, 2)))

# %% [markdown]
# Bending a path around lattice points only makes it longer.

# %%
print(check_shortest_path((0, 0), [((1, 1), Side.LEFT)], (2, 1)))
print(check_shortest_path((0, 0), [((1, 0), Side.LEFT)], (2, 0)))

# %% [markdown]
# The triangle inequality fails, but `3|AB||BC| >= |AC|` holds; equality
# needs two equal primitive steps.

# %%
print(check_log_triangle((0, 0), (1, 0), (2, 0)))
print(check_log_triangle((0, 0), (1, 1), (2, 1)))

# %% [markdown]
# The parallelogram comparison needs the auxiliary quadrilateral to be
# convex (`s < t + 1`).  Outside that range it can fail.

# %%
# s = t = 1: F' = F + (O - E) + (F - O)
good = ((0, 0), (1, 2), (3, 1), (5, 0))
print(parallelogram_auxiliary_convex(*good), check_parallelogram(*good))
bad = ((3, -2), (-2, -4), (-3, -4), (6, 0))
print(parallelogram_auxiliary_convex(*bad), check_parallelogram(*bad))
