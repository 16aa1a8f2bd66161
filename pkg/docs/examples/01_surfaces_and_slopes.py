# %% [markdown]
# # Surfaces and boundary slopes
#
# A two-bridge knot K(alpha, beta) has finitely many incompressible surfaces,
# one for each continued fraction expansion of beta/alpha or (beta - alpha)/alpha
# whose entries all have absolute value at least 2.

# %%
from fractions import Fraction

from twobridge import TwoBridgeKnot, all_surfaces, enumerate_expansions, seifert_expansion

# %%
# 6_2 is K(11,4). Its two expansion families:
for r in (Fraction(4, 11), Fraction(4 - 11, 11)):
    print(r, [str(cf) for cf in enumerate_expansions(r)])

# %%
# The all-even expansion belongs to the Seifert surface; its slope is 0.
k = TwoBridgeKnot(11, 4)
print("Seifert expansion:", seifert_expansion(k))

# %%
for s in all_surfaces(k):
    print(f"{str(s.expansion):16} slope {s.boundary_slope:>3}  weight {s.weight}"
          + ("  (Seifert)" if s.is_seifert else ""))

# %%
# Weights always add up to (alpha - 1)/2.
print(sum(s.weight for s in all_surfaces(k)), Fraction(k.alpha - 1, 2))
