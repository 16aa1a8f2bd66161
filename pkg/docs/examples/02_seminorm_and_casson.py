# %% [markdown]
# # Seminorm and the SL(2,C) Casson invariant of 8_11
#
# The total Culler-Shalen seminorm is a weighted sum of |p - N q| over boundary
# slopes N. Half of it, minus a parity correction, is the Casson invariant of
# p/q surgery when the slope is admissible.

# %%
from twobridge import Slope, TwoBridgeKnot, build_table, casson_invariant, eval_seminorm

k = TwoBridgeKnot(27, 10)
table = build_table(k)
print("doubled weights by slope:", table.terms)

# %%
# so ||p/q|| = 2|p| + 3|p + 4q| + 5|p - 6q| + 3|p - 12q|
print("||1/2|| =", eval_seminorm(table, Slope(1, 2)))

# %%
res = casson_invariant(k, Slope(1, 2))
print("lambda(M_1/2) =", res.value, " correction", res.correction, " admissible", res.applicable)

# %%
# A strict boundary slope is not admissible; the formula value is still reported.
fig8 = TwoBridgeKnot(5, 2)
res = casson_invariant(fig8, Slope(4, 1))
print(res.value, res.diagnostics)

# %%
# lambda' is the stable difference lambda(p/(q+1)) - lambda(p/q).
from twobridge import lambda_prime, surgery_formula

print(lambda_prime(k), [str(surgery_formula(k, 3, q + 1) - surgery_formula(k, 3, q)) for q in range(20, 24)])
