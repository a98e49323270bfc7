from fractions import Fraction as F

import pytest

from cmleaves.leaves import enumerate_leaves
from cmleaves.params import TypeB, to_bc
from cmleaves.roots import InvalidInput, build_mckay_graph
from cmleaves.slices import (
    affine_kind_for, break_at_vertex, dominance_reduce, embed_finite_slice,
    ext_graph, piece_descriptor, strip_loops, transverse_slice,
)

A1 = build_mckay_graph("CyclicA(2)")


@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("m", range(1, 4))
def test_type_b_ext_graph_and_slice(m, sign):
    n = 11
    bc = to_bc(TypeB(F(1), F(sign * m)))
    for L in enumerate_leaves(A1, n, bc):
        k = L.coords[0] if L.coords else 0
        flat = 2 * (n - k * (k + m))
        eg = ext_graph(A1, L.rep_type)
        if k:
            assert eg.dims == (k, 1)
            assert eg.edge_count(0, 1) == 2 * k + m
            assert eg.loops == (0, n - k * (k + m))
        else:
            assert eg.dims == (1,) and eg.loops == (n,)
        stripped, inc = strip_loops(eg)
        assert inc == flat and not any(stripped.loops)
        s = transverse_slice(A1, n, bc, L)
        assert s.flat == flat
        if k:
            assert s.orbit == (k, 2 * k + m)
            assert piece_descriptor(stripped) == f"O({k},{2 * k + m})"
        else:
            assert not any(s.v)


def test_zero_level_star():
    bc = to_bc(TypeB(F(0), F(1)))  # c1 = 0, c_gamma != 0: smooth surface
    leaves = {L.label: L for L in enumerate_leaves(A1, 5, bc)}
    L = leaves[((3, 2), ())]
    eg, inc = strip_loops(ext_graph(A1, L.rep_type))
    assert eg.dims == (3, 2, 1)
    assert eg.loops == (1, 1, 0)
    pieces = break_at_vertex(eg, eg.framed_vertex)
    assert sorted(piece_descriptor(p) for p in pieces) == ["C^4/S_2", "C^6/S_3"]


def test_zero_level_affine_piece():
    g = build_mckay_graph("AffineD(4)")
    zero = (F(0),) * 5
    leaves = {L.label: L for L in enumerate_leaves(g, 2, zero)}
    L = leaves[((), (2,))]
    eg = ext_graph(g, L.rep_type)
    # constituents delta - theta, e_1..e_4: the affine D4 diagram with dims 2 * delta
    assert sorted(eg.dims[:-1]) == sorted(2 * d for d in g.delta)
    assert sum(k for _, _, k in eg.edges) == 4 + 1


def test_real_root_repeated_is_rejected():
    with pytest.raises(InvalidInput):
        ext_graph(A1, ((0, 0), ((1, (1, 0)), (1, (1, 0)))))


def test_break_requires_dimension_one():
    eg = ext_graph(A1, ((2, 2), ((2, (0, 1)),)))
    with pytest.raises(InvalidInput):
        break_at_vertex(eg, 0)
    with pytest.raises(InvalidInput):
        break_at_vertex(eg, eg.framed_vertex)  # still carries loops
    eg, _ = strip_loops(eg)
    assert len(break_at_vertex(eg, eg.framed_vertex)) == 1


def test_affine_kind_for():
    assert affine_kind_for("A2") == "CyclicA(3)"
    assert affine_kind_for("D4") == "AffineD(4)"
    assert affine_kind_for("E8") == "AffineE8"
    with pytest.raises(InvalidInput):
        affine_kind_for("B2")


def test_embed_a1_examples():
    kind, n, bc, leaf, vp = embed_finite_slice("A1", (2,), (1,))
    assert (kind, n, bc, leaf.label, vp) == ("CyclicA(2)", 1, (F(1), F(0)), (0, 1), (1,))
    s = transverse_slice(A1, n, bc, leaf)
    assert s.orbit == (1, 2) and s.w == (2,) and s.v == (1,)
    kind, n, bc, leaf, vp = embed_finite_slice("A1", (3,), (0,))
    assert n == 0 and leaf.label == (0, 0)
    assert embed_finite_slice("A1", (1,), (2,))[4] == (0,)


def test_dominance_reduce_a1():
    from cmleaves.roots import Graph
    fin = Graph(1, ())
    assert dominance_reduce(fin, (2,), (2,)) == (1,)
    assert dominance_reduce(fin, (1,), (2,)) == (0,)
    assert dominance_reduce(fin, (4,), (2,)) == (2,)
