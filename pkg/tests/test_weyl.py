from fractions import Fraction as F

import pytest

from cmleaves.roots import InvalidInput, build_mckay_graph, level, p_framed, vec_scale
from cmleaves.weyl import (
    apply_word, dual_reflect, finite_weyl_orbit, reduce_pair, reduce_to_standard,
    reflect, star_reflect, translation_dual, translation_star, weight_test,
)

A1 = build_mckay_graph("CyclicA(2)")


def bcv(*xs):
    return tuple(F(x) for x in xs)


def test_reduce_to_standard_examples():
    word, bc, J = reduce_to_standard(A1, bcv(1, -2))
    assert word.letters == (0,) and bc == bcv(-1, 0) and J == (1,)
    word, bc, J = reduce_to_standard(A1, bcv(2, -3))
    assert word.letters == (0, 1) and bc == bcv(0, -1) and J == (0,)


def test_reduce_to_standard_keeps_scale_and_level():
    g = build_mckay_graph("CyclicA(3)")
    bc = bcv("5/2", -1, "-7/2")
    word, out, J = reduce_to_standard(g, bc)
    assert level(g, out) == level(g, bc)
    assert apply_word(g, word, bc=bc)[1] == out
    # standard: no entry has the sign opposite to the level
    assert all(x * level(g, bc) >= 0 for x in out)


def test_reduce_to_standard_rejects_level_zero():
    with pytest.raises(InvalidInput):
        reduce_to_standard(A1, bcv(1, -1))


def test_reflections_refuse_loops():
    j = build_mckay_graph("Jordan")
    with pytest.raises(InvalidInput):
        reflect(j, 0, (1,))


def test_weight_test():
    r = weight_test(A1, (1, 0))
    assert r.is_weight and r.m == 0 and r.nu == (0, 1)
    assert not weight_test(A1, (2, 0)).is_weight
    assert weight_test(A1, (3, 3)).m == 3


@pytest.mark.parametrize("m", range(0, 4))
@pytest.mark.parametrize("k", range(0, 3))
def test_reduce_pair_type_b(m, k):
    # c_gamma = m: bc = (m-1, -m), the leaf beta = k * eta with eta = m e0 + (m-1) e1
    if m == 0:
        eta = (0, 1)
    else:
        eta = (m, m - 1)
    n = k * (k + m) + 2
    alpha = tuple(n - k * x for x in eta)
    word, mm, bc2 = reduce_pair(A1, alpha, bcv(m - 1, -m))
    assert mm == n - k * (k + m)
    assert bc2 == bcv(m + 2 * k - 1, -m - 2 * k)


def test_reduce_pair_rejects_non_weight():
    with pytest.raises(InvalidInput):
        reduce_pair(A1, (2, 0), bcv(1, -2))


def test_translation_dual_type_b():
    for m in range(1, 4):
        for k in range(0, 4):
            eta = (m, m - 1)
            assert translation_dual(A1, vec_scale(-k, eta), bcv(m - 1, -m)) == bcv(m + 2 * k - 1, -m - 2 * k)


def test_translation_star_preserves_p():
    g = build_mckay_graph("CyclicA(3)")
    for beta in [(1, 0, -1), (0, 2, -2), (1, 1, -2)]:
        for alpha in [(2, 2, 2), (3, 1, 2)]:
            out = translation_star(g, beta, alpha)
            assert p_framed(g, out) == p_framed(g, alpha)


def test_finite_weyl_orbit_type_b():
    assert finite_weyl_orbit(A1, bcv(2, -3)) == {bcv(2, -3), bcv(-4, 3)}


def test_star_and_dual_are_involutions_on_examples():
    g = build_mckay_graph("AffineD(4)")
    w = (1, 0, 0, 0, 0)
    a = (2, 1, 3, 1, 2)
    bc = bcv(1, -2, "1/3", 0, 4)
    for i in g.vertices:
        assert star_reflect(g, w, i, star_reflect(g, w, i, a)) == a
        assert dual_reflect(g, i, dual_reflect(g, i, bc)) == bc
