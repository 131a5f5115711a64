"""
Arithmetic in the Weyl algebra
==============================

Operators are stored with every x to the left of every d.  Products are
normalized with the commutation rule d*x = x*d + 1.
"""

from weylfan import PolyX, apply, parse_weyl, symbol

# d*x is not already normal: moving d past x produces an extra 1
u = parse_weyl("d*x", 1)
print("d*x       =", u)
print("d^2*x     =", parse_weyl("d^2*x", 1))

# with two variable pairs only matching indices fail to commute
print("d1*x2     =", parse_weyl("d1*x2", 2))
print("d1*x1     =", parse_weyl("d1*x1", 2))

# an operator acts on polynomials; the product is composition
airy = parse_weyl("d^2 - x", 1)
p = PolyX.monomial((4,))
print("(d^2 - x) X^4 =", apply(airy, p).terms)

v = parse_weyl("x*d + 2", 1)
lhs = apply(airy * v, p)
rhs = apply(airy, apply(v, p))
print("composition check:", lhs == rhs)

# the top-weight part of an operator lives in the commutative ring Q[X, Y]
for w in [(0, 1), (2, 1), (1, 0)]:
    print(f"symbol at {w}:", symbol(w, airy))
