from fractions import Fraction as F
from itertools import product

import pytest
from oracles import brute_codim2, brute_xi, q_value

from cmleaves.leaves import codim2_count, enumerate_leaves, normalization_of_closure, xi_elements
from cmleaves.roots import ISOTROPIC, NOT_A_ROOT, REAL, build_mckay_graph, cartan_pair, is_root, level
from cmleaves.weyl import finite_weyl_orbit, reduce_pair


def params(g, lo=-3, hi=3):
    for bc in product(range(lo, hi + 1), repeat=g.size):
        if sum(d * x for d, x in zip(g.delta, bc)) != 0:
            yield tuple(F(x) for x in bc)


@pytest.mark.parametrize("kind", ["CyclicA(2)", "CyclicA(3)"])
def test_xi_matches_definition(kind):
    g = build_mckay_graph(kind)
    for bc in params(g):
        want = brute_xi(g, bc, 6)
        for n in range(7):
            got = set(xi_elements(g, bc, n))
            assert got == {b for b in want if q_value(g, b) <= n}, (bc, n)


@pytest.mark.parametrize("kind", ["CyclicA(2)", "CyclicA(3)", "AffineD(4)"])
def test_root_classifier_matches_norm_test(kind):
    g = build_mckay_graph(kind)
    for v in product(range(13), repeat=g.size):
        if not any(v) or sum(v) > 12:
            continue
        norm = cartan_pair(g, v, v)
        k = v[0]
        if norm == 2:
            want = REAL
        elif k and v == tuple(k * d for d in g.delta):
            want = ISOTROPIC
        else:
            want = NOT_A_ROOT
        assert is_root(g, v) == want, v


@pytest.mark.parametrize("kind", ["CyclicA(2)", "CyclicA(3)"])
def test_reduce_pair_parameter_matches_translation(kind):
    g = build_mckay_graph(kind)
    for bc in params(g, -2, 2):
        L = level(g, bc)
        for n in range(5):
            for leaf in enumerate_leaves(g, n, bc):
                beta = leaf.label
                alpha = tuple(n * d - b for d, b in zip(g.delta, beta))
                _, m, bc2 = reduce_pair(g, alpha, bc)
                assert m == n - q_value(g, beta)
                bar = [cartan_pair(g, beta, tuple(int(j == i) for j in g.vertices)) for i in g.vertices]
                translated = tuple(b - L * x for b, x in zip(bc, bar))
                assert bc2 in finite_weyl_orbit(g, translated)
                assert normalization_of_closure(g, bc, leaf).factors[0]["bc"] == translated


@pytest.mark.parametrize("kind", ["CyclicA(2)", "CyclicA(3)"])
def test_codim2_count_matches_xi(kind):
    g = build_mckay_graph(kind)
    for bc in params(g):
        assert codim2_count(g, bc) == brute_codim2(g, bc), bc
