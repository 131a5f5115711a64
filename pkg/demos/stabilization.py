"""
Iterated initial ideals
=======================

Taking the nu-initial ideal of the omega-initial ideal gives the same ideal as
a single initial ideal at nu + s*omega, once s exceeds gamma.  Smaller s
sometimes work too.
"""

from itertools import product

from weylfan import is_in_region, parse_weyl
from weylfan.charvar import (
    char_ideal,
    common_dimension,
    critical_cone_ideal,
    kappa_hat,
    stabilization_check,
    verify_stabilization,
)
from weylfan.parse import format_element

airy = [parse_weyl("d^2 - x", 1)]
grid = [w for w in product(range(8), repeat=2) if is_in_region(w)]

reports = verify_stabilization(airy, (1, 1), grid, tail=5)
print("weights checked:", len(reports))
print("all pass beyond gamma:", all(r.all_pass_beyond_gamma for r in reports))
late = {r.omega: r.onset for r in reports if r.onset > 1}
print("weights needing s >= 2:", late)
print("estimated threshold:", kappa_hat(reports))

# s = 1 fails for omega = (1, 0): (1,1) + (1,0) lands on the wall slope 1/2
print("s=1 at (1,0):", stabilization_check(airy, (1, 1), (1, 0), 1))
print("s=2 at (1,0):", stabilization_check(airy, (1, 1), (1, 0), 2))

# the critical cone ideal is the total degree leading form ideal
for w in [(0, 1), (2, 1), (1, 0)]:
    c = char_ideal(airy, w)
    cone = critical_cone_ideal(airy, w)
    print(w, [format_element(p) for p in c.reduced_gb], "->", [format_element(p) for p in cone])

print("dimension of the characteristic variety:", common_dimension(airy, grid))

# two variable pairs: this ideal is everything, since [d2, d1^2 - x2] = -1
w2 = [parse_weyl("d1^2 - x2", 2), parse_weyl("d2", 2)]
print("W2 example is the unit ideal:", char_ideal(w2, (1, 1, 1, 1)).is_unit())
