"""The automorphism group of the truncated algebra.

Automorphisms are substitutions with invertible linear part; linearly
trivial ones form a filtered unipotent group, and each factors uniquely
into a complement part (moving generators by polynomials in x1 only) and
a part stabilizing the base ideal.
"""

import random

from nilmoduli import (NilPolynomial, apply_automorphism, base_ideal,
                       automorphism_from_images, compose, filtration_level,
                       gamma_factor, invert, lift_linear, make_context)

ctx = make_context(2, 4)
x1 = NilPolynomial.variable(ctx, 1)
x2 = NilPolynomial.variable(ctx, 2)

print("== exact inversion ==")
sigma = automorphism_from_images(
    ctx, [x1 + x2 ** 2, x2 + (x1 ** 2).scale(3) - x1 ** 3])
print("sigma:   ", sigma.fwd)
print("sigma^-1:", invert(sigma).fwd)
print("sigma o sigma^-1 is the identity:",
      compose(sigma, invert(sigma)).fwd.is_identity())

print()
print("== the filtration by order of the defect ==")
for images in ([x1, x2 + x1 ** 2], [x1, x2 + x1 ** 3], [x1 + x2 ** 3, x2]):
    s = automorphism_from_images(ctx, images)
    print(f"level {filtration_level(s)}:", s.fwd)
swap = lift_linear(ctx, [[0, 1], [1, 0]])
print("a non-trivial linear part has no level:", filtration_level(swap))

print()
print("== factorization through the base-ideal stabilizer ==")
ctx3 = make_context(3, 4)
rng = random.Random(1)
gens = [NilPolynomial.variable(ctx3, i + 1) for i in range(3)]
sigma = automorphism_from_images(
    ctx3, [gens[0] + gens[1] * gens[2],
           gens[1] + (gens[0] ** 2).scale(2) + gens[0] ** 3,
           gens[2] - gens[0] * gens[1]])
gamma, h = gamma_factor(sigma)
print("gamma (x1 fixed, pure-power moves):")
for i, img in enumerate(gamma.images):
    print(f"  x{i+1} -> {img}")
print("h stabilizes the base ideal:",
      apply_automorphism(h, base_ideal(ctx3)) == base_ideal(ctx3))
print("gamma o h == sigma:", compose(gamma, h).fwd == sigma.fwd)
