# %% [markdown]
# # Double twist knots
#
# J(l, m) is K(lm + 1, m) for J(l, -m) and K(lm - 1, m) for J(l, m). For these
# knots the seminorm has a closed form; here it is compared with the surface
# enumeration on a grid of slopes.

# %%
from twobridge import DoubleTwistKnot, build_table, double_twist_seminorm, from_double_twist
from twobridge.seminorm import lattice_seminorm

# %%
mismatches = 0
for l in range(2, 7):
    for m in range(2, 7):
        if l % 2 and m % 2:
            continue  # a two-component link
        for sign in (-1, 1):
            j = DoubleTwistKnot(l, sign * m)
            t = build_table(from_double_twist(j))
            for p in range(-10, 11):
                for q in range(0, 11):
                    if (p, q) != (0, 0) and double_twist_seminorm(j, p, q) != lattice_seminorm(t, p, q):
                        mismatches += 1
print("mismatches:", mismatches)

# %%
# Excluded slopes of the nontriviality theorem
from twobridge import exceptional_slopes

for spec in ((2, -2), (4, -2), (4, 2), (4, 4), (3, -4), (5, 6)):
    j = DoubleTwistKnot(*spec)
    print(j, from_double_twist(j), sorted(s.p for s in exceptional_slopes(j)))
