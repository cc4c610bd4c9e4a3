# %% [markdown]
# # Markov numbers as distances
#
# `markov_distance(A, B)` counts matchings of the snake graph of the segment
# `AB`, pushed left around intermediate lattice points.  From the origin to
# a coprime `(q, p)` it gives the Markov number of slope `p/q`.

# %%
from math import gcd

from markov_distance import (
    classical_value, m, markov_distance, markov_number, multiplicity_value,
    stern_brocot_oracle,
)

for p, q in [(1, 1), (1, 2), (1, 3), (2, 3), (3, 5), (1, 24)]:
    print(f"m_{p}/{q} =", markov_number(p, q))

# %% [markdown]
# An independent route: walk down the Stern-Brocot tree, updating Markov
# triples by the exchange relation.

# %%
bad = [(p, q) for q in range(2, 21) for p in range(1, q)
       if gcd(p, q) == 1 and markov_number(p, q) != stern_brocot_oracle(p, q)]
print("disagreements:", bad)

# %% [markdown]
# Off the coprime lattice the distance still makes sense.  Collinear points
# show it is not a metric: |OA| = |AB| = 1 but |OB| = 3.

# %%
print(markov_distance((0, 0), (1, 0)), markov_distance((1, 0), (2, 0)),
      markov_distance((0, 0), (2, 0)), markov_distance((0, 0), (3, 0)))
# multiples of (3, 2) via f_n = 3 f_1 f_(n-1) - f_(n-2)
print([multiplicity_value(3 * k, 2 * k) for k in range(1, 4)])

# %% [markdown]
# Along the edges of the domain the numbers are odd-indexed Fibonacci and
# Pell numbers.

# %%
print([m(q, 1) for q in range(1, 8)])
print([classical_value("fibonacci", 2 * q + 1) for q in range(1, 8)])
print([m(n + 1, n) for n in range(1, 8)])
print([classical_value("pell", 2 * n + 1) for n in range(1, 8)])
