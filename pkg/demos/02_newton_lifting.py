"""From F_p to Z/p^K: lifting the root without lifting anything else.

The residue-field root Y is refined by the Newton step
    alpha <- alpha - s^(-1) (alpha^s - 1) alpha (2 - alpha^s),
doubling the number of correct p-adic digits each time. The modulus F can
stay any lift of f; only alpha moves.
"""

import random

from padicfft import build_root_of_unity, expand_lifted_factor, newton_lift_root

# Watch the precision double. The trace records, per step, the working
# precision 2^i and the p-adic valuation of alpha^s - 1 there.
tower = build_root_of_unity(3, 104, random.Random(1))
trace = []
lift = newton_lift_root(tower.modulus, 104, 5, 3, trace=trace)
print("lifting a 104th root of unity over Z/3^32:")
print("  step  precision  valuation(alpha^s - 1)")
for step, prec, val in trace:
    print(f"  {step:4d}  {prec:9d}  {val}")
print(f"  cost: {lift.base_mults} base multiplications")
print()

# The lifted root pins down a factor of Y^s - 1 with plain integer
# coefficients: the product of (Y - alpha^(p^j)) over the conjugates.
lift = newton_lift_root([1, 5, 1], 5, 1, 19)
factor = expand_lifted_factor(lift.ring, lift.root)
print(f"over Z/361, the factor of Y^5 - 1 above Y^2+5Y+1 is {factor}")

# "Some freedom in the choice of F": perturb the modulus by multiples of p
# and the expanded factor does not move.
rng = random.Random(2)
for trial in range(3):
    other = [c + 19 * rng.randrange(19) for c in (1, 5)] + [1]
    lift2 = newton_lift_root([1, 5, 1], 5, 1, 19, lift_coeffs=other)
    assert expand_lifted_factor(lift2.ring, lift2.root) == factor
    print(f"  modulus {other}: same factor")
