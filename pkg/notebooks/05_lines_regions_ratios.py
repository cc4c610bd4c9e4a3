# %% [markdown]
# # Monotonicity along lines, neighbourhoods and ratio limits

# %%
from fractions import Fraction

from markov_distance import classify_neighborhood, ratio_fibonacci_limit, ratio_pell_bound, scan_line

# %% [markdown]
# Shallow lines increase with `x`, steep ones decrease.  In between there
# are lines with a dip.

# %%
print(scan_line(0, 1, 2, 10).verdict)
print(scan_line(Fraction(-5, 4), 16, 5, 60).verdict)
dip = scan_line(Fraction(-6, 5), Fraction(149, 5), 14, 24)
print(dip.to_csv())

# %% [markdown]
# Region map around a center: `<` smaller, `>` larger, `.` outside the domain.

# %%
region = classify_neighborhood((7, 4), 3)
mark = {"smaller": "<", "larger": ">", "equal": "=", "center": "*", "out": "."}
for y in range(7, 0, -1):
    print(" ".join(mark[region.cells[(x, y)].value] for x in range(4, 11)))

# %% [markdown]
# Ratio sequences decrease toward closed-form limits computed to 60 digits.

# %%
for a in range(3, 8):
    r = ratio_fibonacci_limit(a, a + 1, 40)
    print(a, str(r.samples[-1][1])[:12], str(r.target)[:12], r.monotone_weakly_decreasing)

pell = ratio_pell_bound(11, 40)
print(pell.constant)
print(pell.constant_exceeds_bound, pell.consequence_holds)
