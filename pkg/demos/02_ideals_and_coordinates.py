"""Ideals of the truncated algebra and the coordinate round trip.

Ideals are canonical echelon subspaces; regular-annihilator ideals of
colength n correspond one-to-one to moduli points (chart, covector,
fiber matrix), and the correspondence is exact in both directions.
"""

import random

from nilmoduli import (NilPolynomial, apply_automorphism, associated_graded,
                       base_ideal, base_point, fiber_coordinates,
                       ideal_from_generators, ideal_from_point, is_arr,
                       lift_linear, make_context, moduli_point,
                       power_of_max_ideal, random_point, truncate)

ctx = make_context(2, 4)
x1 = NilPolynomial.variable(ctx, 1)
x2 = NilPolynomial.variable(ctx, 2)

print("== the ideal <x2 - 2 x1^2 - 3 x1^3> ==")
ideal = ideal_from_generators(ctx, [x2 - (x1 ** 2).scale(2) - (x1 ** 3).scale(3)])
print("colength:", ideal.colength)
print("echelon basis:")
for row in ideal.basis_polynomials():
    print("  ", row)
print("annihilates a regular tuple:", is_arr(ideal))
print("base covector:", base_point(ideal))
print("fiber coordinates:", fiber_coordinates(ideal))

print()
print("== moving the ideal by a linear change of variables ==")
sigma = lift_linear(ctx, [[1, 1], [1, -1]])
moved = apply_automorphism(sigma, ideal)
print("new base covector:", base_point(moved))
pt = moduli_point(moved)
print("moduli point:", pt)
print("round trip recovers the ideal:", ideal_from_point(pt) == moved)

print()
print("== random round trips over Q ==")
rng = random.Random(0)
ok = 0
for _ in range(20):
    p = random_point(ctx, rng)
    ok += moduli_point(ideal_from_point(p)) == p
print(f"{ok}/20 random points round-trip exactly")

print()
print("== associated graded and truncation ==")
gr = associated_graded(ideal)
print("associated graded of <x2 - 2x1^2 - 3x1^3>:", gr.basis_polynomials()[:2], "...")
print("equal to <x2>:", gr == base_ideal(ctx))
cut = truncate(ideal, 3)
print("image in the degree-3 truncation:", cut.basis_polynomials()[0])

print()
print("== subspace calculus ==")
q1 = base_ideal(ctx)
m = power_of_max_ideal(ctx, 1)
m2 = power_of_max_ideal(ctx, 2)
print("dim m =", m.rank, " dim m^2 =", m2.rank, " dim q1 =", q1.rank)
print("q1 * m has dimension", q1.product(m).rank)
print("q1 cap m^2 == q1 * m:", q1.intersect(m2) == q1.product(m))
