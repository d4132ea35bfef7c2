"""Classify commuting nilpotent tuples up to simultaneous conjugation.

Two commuting nilpotent tuples are simultaneously conjugate exactly when
they share the same annihilator ideal, and for regular tuples that ideal
is encoded by a small coordinate pair (base covector, fiber matrix).
This script builds a few 3x3 and 4x4 examples, classifies them, and
recovers explicit conjugators.
"""

from nilmoduli import (NilTuple, annihilator, conjugate, is_cyclic,
                       is_regular, make_context, moduli_point,
                       multiplication_matrices, recover_conjugator)


def shift(field, n, power=1):
    m = [[field.zero] * n for _ in range(n)]
    for i in range(n - power):
        m[i + power][i] = field.one
    return m


ctx = make_context(2, 3)
f = ctx.field

print("== the pair (J, J^2) with J the 3x3 shift ==")
t = NilTuple(ctx, [shift(f, 3), shift(f, 3, 2)])
print("regular:", is_regular(t)[0], " cyclic:", is_cyclic(t))
ideal = annihilator(t)
print("annihilator basis:", ideal.basis_polynomials())
print("moduli point:", moduli_point(ideal))

print()
print("== conjugation does not change the point ==")
g = [[1, 2, 0], [0, 1, -1], [0, 0, 1]]
t2 = conjugate(t, g)
print("t2 = g t g^-1 has the same annihilator:", annihilator(t2) == ideal)
h = recover_conjugator(t, t2)
print("recovered conjugator:", h)
print("verified:", conjugate(t, h) == t2)

print()
print("== a cyclic tuple that is not regular ==")
e21 = [[f.zero] * 3 for _ in range(3)]
e21[1][0] = f.one
e31 = [[f.zero] * 3 for _ in range(3)]
e31[2][0] = f.one
c = NilTuple(ctx, [e21, e31])
print("regular:", is_regular(c)[0], " cyclic:", is_cyclic(c))
print("its annihilator is the square of the maximal ideal:",
      annihilator(c).basis_polynomials())
print("so it has a colength-3 invariant but no moduli point")

print()
print("== distinct points are never conjugate ==")
ctx4 = make_context(2, 4)
f4 = ctx4.field
a = NilTuple(ctx4, [shift(f4, 4), shift(f4, 4, 2)])
b = NilTuple(ctx4, [shift(f4, 4), shift(f4, 4, 3)])
pa = moduli_point(annihilator(a))
pb = moduli_point(annihilator(b))
print("point of (J, J^2):", pa)
print("point of (J, J^3):", pb)
print("conjugator exists:", recover_conjugator(a, b) is not None)

print()
print("== every regular tuple is conjugate to its canonical model ==")
model = multiplication_matrices(annihilator(a))
print("canonical model recovered conjugator:",
      recover_conjugator(a, model) is not None)
