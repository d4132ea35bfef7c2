"""Degenerate parameter edges: one variable, truncation at degree two."""

import random

from nilmoduli import (NilTuple, annihilator, base_ideal, ideal_from_point,
                       is_arr, is_cyclic, make_context, moduli_point,
                       multiplication_matrices, random_point,
                       random_regular_tuple, recover_conjugator, zero_ideal)

from conftest import shift_matrix


def test_single_variable_moduli():
    # one matrix: the only regular class is the shift, the only
    # regular-annihilator ideal is zero, and the moduli space is a point
    ctx = make_context(1, 4)
    z = zero_ideal(ctx)
    assert base_ideal(ctx) == z
    assert is_arr(z)
    pt = moduli_point(z)
    assert pt.chart == 1 and pt.b == ()
    assert ideal_from_point(pt) == z
    t = multiplication_matrices(z)
    assert [list(r) for r in t.mats[0]] == shift_matrix(ctx.field, 4)
    s = random_regular_tuple(ctx, 5)
    assert recover_conjugator(s, t) is not None


def test_degree_two_truncation_moduli():
    # n = 2: the fiber is empty and points are exactly base covectors
    ctx = make_context(3, 2)
    rng = random.Random(6)
    for _ in range(10):
        pt = random_point(ctx, rng)
        assert pt.b == ((), ())
        assert moduli_point(ideal_from_point(pt)) == pt
    t = random_regular_tuple(ctx, 8)
    assert moduli_point(annihilator(t)).b == ((), ())


def test_cyclicity_is_colength(ctx23):
    # annihilator colength equals n exactly for cyclic tuples
    f = ctx23.field
    zero = [[f.zero] * 3 for _ in range(3)]
    t = NilTuple(ctx23, [zero, zero])
    assert not is_cyclic(t)
    assert annihilator(t).colength == 1  # the maximal ideal, not colength n
    s = random_regular_tuple(ctx23, 12)
    assert is_cyclic(s)
    assert annihilator(s).colength == 3


def test_classification_ignores_the_conjugator(ctx24):
    # tuples built from one point with different random conjugators
    # classify to the same point
    rng = random.Random(7)
    pt = random_point(ctx24, rng)
    points = {moduli_point(annihilator(random_regular_tuple(ctx24, seed, point=pt)))
              for seed in (1, 2, 3)}
    assert points == {pt}
