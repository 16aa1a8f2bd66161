# %% [markdown]
# # Degrees of the A-hat polynomial
#
# deg_M is ||0/1|| and deg_L is ||1/0|| = (alpha - 1)/2. For the (2, a) torus
# knots they can be read off the known factorization as well.

# %%
from twobridge import TwoBridgeKnot, ahat_degrees, torus_ahat_degrees

for a in (3, 5, 7, 9):
    print(a, ahat_degrees(TwoBridgeKnot(a, 1)), torus_ahat_degrees(2, a))

# %%
# 7_4 = J(4,4): M-degree 30, L-degree 7
from twobridge import DoubleTwistKnot, double_twist_degM

print(ahat_degrees(TwoBridgeKnot(15, 11)), double_twist_degM(DoubleTwistKnot(4, 4)))
