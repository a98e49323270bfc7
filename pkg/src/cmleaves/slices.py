"""Transverse slices through ext-graphs, and embedding finite quiver data into a CM variety."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .leaves import (
    LeafDescriptor, _delta_data, combine, delta_coordinates, enumerate_leaves,
)
from .roots import (
    Graph, InvalidInput, InvariantViolation, build_mckay_graph, cartan_pair,
    connected_components, deframe, framing_lambda0, level, p_form, q_form,
    vec_add, vec_scale,
)
from .roots import REAL, is_root


@dataclass(frozen=True)
class ExtGraph:
    """Vertices carry a root, a dimension and a loop count; edges are multiplicities."""

    roots: tuple
    dims: tuple
    loops: tuple
    edges: tuple  # ((i, j, multiplicity), ...) with i < j
    flat: int = 0
    framed_vertex: int | None = None

    def edge_count(self, i: int, j: int) -> int:
        a, b = min(i, j), max(i, j)
        return sum(k for s, t, k in self.edges if (s, t) == (a, b))

    def __len__(self):
        return len(self.dims)

    def to_json(self) -> dict:
        return {
            "vertices": [{"root": list(r), "dim": d, "loops": l}
                         for r, d, l in zip(self.roots, self.dims, self.loops)],
            "edges": [list(e) for e in self.edges],
            "flat": self.flat,
        }


@dataclass(frozen=True)
class SliceData:
    graph: Graph
    roots: tuple
    w: tuple
    v: tuple
    flat: int
    orbit: tuple | None = None

    def to_json(self) -> dict:
        return {
            "graph": self.graph.to_json(),
            "w": list(self.w),
            "v": list(self.v),
            "flat": self.flat,
            "orbit": {"k": self.orbit[0], "N": self.orbit[1]} if self.orbit else None,
        }


def ext_graph(g: Graph, tau, framed: bool = True) -> ExtGraph:
    """Ext-graph of a representation type tau = (beta0, ((mult, root), ...)).

    With ``framed`` the framing vertex e_inf + beta0 comes last with dimension 1.
    """
    beta0, parts = tau
    roots = [tuple(r) for _, r in parts]
    dims = [k for k, _ in parts]
    if any(k <= 0 for k in dims):
        raise InvalidInput("multiplicities must be positive")
    seen = set()
    for r in roots:
        if is_root(g, r) == REAL:
            if r in seen:
                raise InvalidInput(f"real root {r} repeated in representation type")
            seen.add(r)
    d = deframe(g, framing_lambda0(g), tuple(beta0))
    h = d.graph
    verts = [r + (0,) for r in roots]
    if framed:
        verts.append(d.vector)
        dims.append(1)
    loops = tuple(p_form(h, v) for v in verts)
    edges = []
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            k = -cartan_pair(h, verts[i], verts[j])
            if k < 0:
                raise InvariantViolation("negative edge multiplicity in ext-graph")
            if k:
                edges.append((i, j, k))
    return ExtGraph(tuple(verts), tuple(dims), loops, tuple(edges), 0,
                    len(verts) - 1 if framed else None)


def strip_loops(eg: ExtGraph, vertex: int | None = None):
    """Remove loops at dimension-1 vertices; each removed loop adds 2 to the flat factor."""
    targets = range(len(eg)) if vertex is None else [vertex]
    loops = list(eg.loops)
    inc = 0
    for i in targets:
        if eg.dims[i] != 1:
            if vertex is not None:
                raise InvalidInput("loops can only be stripped at a vertex of dimension 1")
            continue
        inc += 2 * loops[i]
        loops[i] = 0
    out = ExtGraph(eg.roots, eg.dims, tuple(loops), eg.edges, eg.flat + inc, eg.framed_vertex)
    return out, inc


def break_at_vertex(eg: ExtGraph, vertex: int) -> list:
    """Split at a loopless dimension-1 vertex; every piece keeps its own copy of it."""
    if eg.dims[vertex] != 1 or eg.loops[vertex]:
        raise InvalidInput("can only break at a loopless vertex of dimension 1")
    others = [i for i in range(len(eg)) if i != vertex]
    comps = connected_components(others, lambda a, b: eg.edge_count(a, b) > 0)
    pieces = []
    for comp in comps:
        keep = sorted(comp) + [vertex]
        index = {old: new for new, old in enumerate(keep)}
        edges = tuple((min(index[s], index[t]), max(index[s], index[t]), k)
                      for s, t, k in eg.edges if s in index and t in index)
        pieces.append(ExtGraph(tuple(eg.roots[i] for i in keep), tuple(eg.dims[i] for i in keep),
                               tuple(eg.loops[i] for i in keep), edges, 0, len(keep) - 1))
    return pieces


def piece_descriptor(eg: ExtGraph) -> str:
    """Name the quiver variety of a small piece when it has a closed form."""
    if len(eg) == 1 and eg.dims[0] == 1:
        return f"T*C^{eg.loops[0]}" if eg.loops[0] else "point"
    if len(eg) == 2 and eg.framed_vertex is not None:
        o = 1 - eg.framed_vertex
        k, N = eg.dims[o], eg.edge_count(0, 1)
        if eg.loops[eg.framed_vertex] == 0:
            if eg.loops[o] == 1 and N == 1:
                return f"C^{2 * k}/S_{k}"
            if eg.loops[o] == 0:
                k = min(k, N // 2)  # dominance reduction
                return f"O({k},{N})" if k else "point"
    return "M0(" + ",".join(map(str, eg.dims)) + ")"


def transverse_slice(g: Graph, n: int, bc, leaf: LeafDescriptor) -> SliceData:
    bc = tuple(Fraction(x) for x in bc)
    if level(g, bc) == 0 or leaf.zero_level:
        raise InvalidInput("transverse_slice needs non-zero level; use ext_graph at level zero")
    D, G, _ = _delta_data(g, bc)
    beta = tuple(leaf.label)
    v = delta_coordinates(g, D, beta)
    if v is None or any(x < 0 for x in v):
        raise InvalidInput("leaf label is not in the cone spanned by the vanishing simple roots")
    w = tuple(cartan_pair(g, beta, eta) + eta[0] for eta in D)
    edges = tuple((i, j) for i in range(len(D)) for j in range(i + 1, len(D))
                  for _ in range(-G[i][j]))
    sg = Graph(len(D), edges, "slice")
    flat = 2 * (n - q_form(g, beta))
    supp = [i for i, x in enumerate(v) if x]
    orbit = (v[supp[0]], w[supp[0]]) if len(supp) == 1 else None
    return SliceData(sg, tuple(D), w, v, flat, orbit)


# ---------------------------------------------------------------- embedding

_FINITE_TO_AFFINE = {"A": "CyclicA({})", "D": "AffineD({})", "E": "AffineE{}"}


def affine_kind_for(finite_kind: str) -> str:
    t, r = finite_kind[0], int(finite_kind[1:])
    if t not in _FINITE_TO_AFFINE or r < 1:
        raise InvalidInput(f"unknown finite Dynkin type {finite_kind!r}")
    return _FINITE_TO_AFFINE[t].format(r + 1 if t == "A" else r)


def dominance_reduce(fin: Graph, w: Sequence[int], v: Sequence[int]) -> tuple:
    """Largest v' <= v with every defect w_i - sum_j v'_j (e_i, e_j) nonnegative."""
    v = list(v)
    while True:
        defect = [w[i] - sum(v[j] * fin.pair_simple(i, j) for j in fin.vertices) for i in fin.vertices]
        i = next((i for i in fin.vertices if defect[i] < 0), None)
        if i is None:
            return tuple(v)
        v[i] -= 1


def embed_finite_slice(finite_kind: str, w: Sequence[int], v: Sequence[int]):
    """Realize M0(G, w, v) as a slice: returns (affine kind, n, bc, leaf, v')."""
    g = build_mckay_graph(affine_kind_for(finite_kind))
    r = g.size - 1
    if len(w) != r or len(v) != r or any(x < 0 for x in list(w) + list(v)):
        raise InvalidInput(f"w and v must be nonnegative vectors of length {r}")
    fin = Graph(r, tuple((i - 1, j - 1) for i, j in g.edges if i and j))
    vp = dominance_reduce(fin, w, v)
    k = [w[i] - sum(vp[j] * fin.pair_simple(i, j) for j in fin.vertices) for i in fin.vertices]
    bc = (Fraction(1 + sum(g.delta[i + 1] * k[i] for i in range(r))),) + tuple(Fraction(-x) for x in k)
    etas = [vec_add((0,) + tuple(1 if j == i else 0 for j in range(r)), vec_scale(k[i], g.delta))
            for i in range(r)]
    beta = combine(etas, vp, g.size)
    n = q_form(g, beta)
    leaf = next((L for L in enumerate_leaves(g, n, bc) if L.label == beta), None)
    if leaf is None:
        raise InvariantViolation(f"{beta} is not a leaf label for the constructed parameter")
    return g.kind, n, bc, leaf, vp
