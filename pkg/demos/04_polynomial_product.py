"""Exact polynomial products, including where floats would lie.

poly_multiply embeds coefficients in the extension ring, transforms,
multiplies pointwise, and transforms back. Every coefficient of the result
is exact mod p^K, so products of huge coefficients survive untouched.
"""

import random

from padicfft import build_pipeline, poly_multiply

# (1 + Y)^2 = 1 + 2Y + Y^2, the smallest smoke test
print("(1 + Y)^2 =", poly_multiply([1, 1], [1, 1], 3, 8))

# coefficients near 3^32: the exact answer needs every one of the 64 digits
m = 3**32
rng = random.Random(1)
f = [rng.randrange(m) for _ in range(40)]
g = [rng.randrange(m) for _ in range(40)]
school = [0] * 79
for i, a in enumerate(f):
    for j, b in enumerate(g):
        school[i + j] = (school[i + j] + a * b) % m
got = poly_multiply(f, g, 3, 32)
print(f"degree-39 squares over Z/3^32 match schoolbook: {got == school}")

# a float FFT of the same data has no chance: each pairwise product is
# about twice the coefficient width, far past what a double can hold
print(f"pairwise products reach {max(f).bit_length() + max(g).bit_length()} bits "
      f"(float mantissa: 53)")

# reusing one plan across many products amortizes the setup
plan = build_pipeline(3, 16, s=104).plan
products = [poly_multiply([1, c], [c, 1], 3, 16, plan=plan) for c in range(1, 6)]
print("five products from one plan:", products)
