"""
The weight fan of the Airy operator
===================================

For one variable pair a weight (w1, w2) only matters through its slope
w2/w1.  The slopes split into three classes for the Airy ideal.
"""

from weylfan import parse_weyl
from weylfan.fan import chi, fan_1d, gamma, ugb
from weylfan.parse import format_element

gens = [parse_weyl("d^2 - x", 1)]

fan = fan_1d(gens)
for cone in fan:
    ideal = ", ".join(format_element(p) for p in cone.ideal)
    print(f"{cone.interval():12s} weight {cone.weight}  ideal <{ideal}>")

# one operator is a Groebner basis for every order, so it is universal
basis = ugb(gens, fan)
print("universal basis:", [str(g) for g in basis])

count, bound = chi(gens, fan, basis)
print("distinct initial ideals:", count, "bound:", bound)

# gamma scales linearly in nu and is monotone
for nu in [(1, 1), (2, 2), (1, 0), (0, 1), (2, 3)]:
    print("gamma at", nu, "=", gamma(gens, nu, basis))

# a second example with three cones
cubic = [parse_weyl("d^3 - x*d - 1", 1)]
for cone in fan_1d(cubic):
    print(cone.interval(), [format_element(p) for p in cone.ideal])
