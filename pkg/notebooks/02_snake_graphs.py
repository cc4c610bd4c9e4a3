# %% [markdown]
# # Snake graphs and perfect matchings
#
# Every crossing sequence determines a chain of square tiles.  The number
# of perfect matchings of that chain is the length of the segment.

# %%
from markov_distance.snake import (
    SnakeGraph, build_snake_graph, continued_fraction_of, count_matchings_bruteforce,
    count_matchings_fast,
)

g = build_snake_graph((3, 1, 3, 2, 3))
print(g.serialize())
print("tile corners:", g.tile_positions())

# %% [markdown]
# The linear-time count agrees with exhaustive enumeration of matchings.

# %%
print(count_matchings_fast(g), count_matchings_bruteforce(g))

# %% [markdown]
# Straight strips give Fibonacci numbers; turns change the count.

# %%
for n in range(1, 9):
    strip = SnakeGraph.from_glues("N" * (n - 1))
    print(n, count_matchings_fast(strip))

zigzag = SnakeGraph.from_glues("NENENE")
print("zigzag", count_matchings_fast(zigzag))

# %% [markdown]
# The shape of the snake is also a continued fraction whose numerator is
# the matching count.

# %%
cf = continued_fraction_of(g)
print(cf, cf.value, cf.numerator)
