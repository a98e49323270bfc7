"""Affine ADE root-system arithmetic.

Graphs are stored as a vertex count plus an edge multiset.  Dimension
vectors are plain tuples of ints, parameter vectors are tuples of
``Fraction``.  Vertex 0 is always the extending vertex of an affine graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


class InvalidInput(ValueError):
    """Raised for malformed or out-of-domain input."""


class InvariantViolation(RuntimeError):
    """Raised when an internal consistency check fails."""


@dataclass(frozen=True)
class Graph:
    """A finite unoriented graph, loops and parallel edges allowed.

    ``labels`` are display names for vertices, ``delta`` is the minimal
    imaginary root for affine graphs and ``None`` otherwise.
    """

    size: int
    edges: tuple = ()
    kind: str = "custom"
    delta: tuple | None = None
    labels: tuple | None = None
    _adj: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        adj = [[0] * self.size for _ in range(self.size)]
        for i, j in self.edges:
            if not (0 <= i < self.size and 0 <= j < self.size):
                raise InvalidInput(f"edge {(i, j)} outside vertex range")
            if i == j:
                adj[i][i] += 2
            else:
                adj[i][j] += 1
                adj[j][i] += 1
        object.__setattr__(self, "_adj", tuple(tuple(r) for r in adj))

    @property
    def vertices(self):
        return range(self.size)

    def loops(self, i: int) -> int:
        return self._adj[i][i] // 2

    def edge_count(self, i: int, j: int) -> int:
        """Number of edges between distinct vertices, or loops when i == j."""
        return self.loops(i) if i == j else self._adj[i][j]

    def pair_simple(self, i: int, j: int) -> int:
        return (2 if i == j else 0) - self._adj[i][j]

    def cartan_matrix(self):
        return [[self.pair_simple(i, j) for j in self.vertices] for i in self.vertices]

    def neighbours(self, i: int):
        return [j for j in self.vertices if j != i and self._adj[i][j]]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": self.size,
            "edges": [list(e) for e in self.edges],
            "delta": list(self.delta) if self.delta is not None else None,
        }


# ---------------------------------------------------------------- vectors

def vec_add(a: Sequence[int], b: Sequence[int]) -> tuple:
    _check_len(a, b)
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence[int], b: Sequence[int]) -> tuple:
    _check_len(a, b)
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(k, a: Sequence[int]) -> tuple:
    return tuple(k * x for x in a)


def unit(size: int, i: int) -> tuple:
    return tuple(1 if j == i else 0 for j in range(size))


def is_nonneg(a: Sequence[int]) -> bool:
    return all(x >= 0 for x in a)


def _check_len(a, b):
    if len(a) != len(b):
        raise InvalidInput(f"vector length mismatch: {len(a)} vs {len(b)}")


def as_params(values: Iterable) -> tuple:
    return tuple(Fraction(v) for v in values)


def evaluate(bc: Sequence[Fraction], alpha: Sequence[int]) -> Fraction:
    """bc(alpha) = sum alpha_i bc_i."""
    _check_len(bc, alpha)
    return sum((Fraction(b) * a for b, a in zip(bc, alpha)), Fraction(0))


def level(g: Graph, bc: Sequence[Fraction]) -> Fraction:
    if g.delta is None:
        raise InvalidInput("level is only defined on affine graphs")
    return evaluate(bc, g.delta)


# ---------------------------------------------------------------- graphs

_KIND_RE = re.compile(r"^\s*(Jordan|CyclicA\((\d+)\)|AffineD\((\d+)\)|AffineE([678]))\s*$")


def parse_kind(kind: str) -> tuple:
    """Normalize a kind string to ('Jordan',), ('CyclicA', l), ('AffineD', n) or ('AffineE', r).

    Short forms A<l-1>, D<n>, E<r> (the finite type of the affine graph)
    are accepted as well.
    """
    s = kind.strip()
    m = _KIND_RE.match(s)
    if m:
        if m.group(1) == "Jordan":
            return ("Jordan",)
        if m.group(2):
            return ("CyclicA", int(m.group(2)))
        if m.group(3):
            return ("AffineD", int(m.group(3)))
        return ("AffineE", int(m.group(4)))
    m = re.match(r"^([ADE])(\d+)$", s)
    if m:
        t, r = m.group(1), int(m.group(2))
        if t == "A":
            return ("CyclicA", r + 1)
        if t == "D":
            return ("AffineD", r)
        return ("AffineE", r)
    raise InvalidInput(f"unknown graph kind {kind!r}")


def _kind_name(p: tuple) -> str:
    if p[0] == "Jordan":
        return "Jordan"
    if p[0] == "AffineE":
        return f"AffineE{p[1]}"
    return f"{p[0]}({p[1]})"


def _chain(vs):
    return [(vs[k], vs[k + 1]) for k in range(len(vs) - 1)]


def _affine_edges(p: tuple):
    if p[0] == "Jordan":
        return 1, [(0, 0)]
    if p[0] == "CyclicA":
        l = p[1]
        if l < 1:
            raise InvalidInput("cyclic graph needs l >= 1")
        if l == 1:
            return 1, [(0, 0)]
        if l == 2:
            return 2, [(0, 1), (0, 1)]
        return l, [(i, (i + 1) % l) for i in range(l)]
    if p[0] == "AffineD":
        n = p[1]
        if n < 4:
            raise InvalidInput("affine D needs n >= 4")
        edges = [(0, 2), (1, 2)] + _chain(list(range(2, n - 1))) + [(n - 2, n - 1), (n - 2, n)]
        return n + 1, edges
    r = p[1]
    if r == 6:
        return 7, _chain([0, 1, 2, 3, 4]) + _chain([2, 5, 6])
    if r == 7:
        return 8, _chain([0, 1, 2, 3, 4, 5, 6]) + [(3, 7)]
    if r == 8:
        return 9, _chain([0, 1, 2, 3, 4, 5, 6, 7]) + [(5, 8)]
    raise InvalidInput(f"affine E{r} does not exist")


def radical_vector(g: Graph) -> tuple:
    """Primitive kernel vector of the pairing with coefficient 1 at vertex 0."""
    C = DomainMatrix([[QQ(x) for x in row] for row in g.cartan_matrix()], (g.size, g.size), QQ)
    kernel = C.nullspace()
    if kernel.shape[0] != 1:
        raise InvariantViolation(f"radical of {g.kind} has dimension {kernel.shape[0]}")
    row = [Fraction(int(x.numerator), int(x.denominator)) for x in kernel.to_Matrix().row(0)]
    if row[0] == 0:
        raise InvariantViolation("radical vector vanishes at the extending vertex")
    row = [x / row[0] for x in row]
    if any(x.denominator != 1 for x in row):
        raise InvariantViolation("radical vector is not integral after normalization")
    return tuple(int(x) for x in row)


def build_mckay_graph(kind: str) -> Graph:
    p = parse_kind(kind)
    size, edges = _affine_edges(p)
    g = Graph(size, tuple(tuple(e) for e in edges), _kind_name(p))
    return Graph(size, g.edges, g.kind, radical_vector(g))


def finite_part(g: Graph) -> Graph:
    """The finite Dynkin graph obtained by deleting the extending vertex (relabelled 0..r-1)."""
    edges = tuple((i - 1, j - 1) for i, j in g.edges if i != 0 and j != 0)
    return Graph(g.size - 1, edges, f"finite({g.kind})")


# ---------------------------------------------------------------- forms

def cartan_pair(g: Graph, a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != g.size or len(b) != g.size:
        raise InvalidInput(f"vectors must have {g.size} coordinates")
    total = 0
    for i in g.vertices:
        if a[i] == 0:
            continue
        for j in g.vertices:
            if b[j]:
                total += a[i] * b[j] * g.pair_simple(i, j)
    return total


def pair_with_simple(g: Graph, a: Sequence[int], i: int) -> int:
    return sum(a[j] * g.pair_simple(j, i) for j in g.vertices if a[j])


def p_form(g: Graph, a: Sequence[int]) -> int:
    return 1 - cartan_pair(g, a, a) // 2


def q_form(g: Graph, b: Sequence[int]) -> int:
    return b[0] + cartan_pair(g, b, b) // 2


def gamma(g: Graph, m: int, nu: Sequence[int]) -> tuple:
    """gamma(m, nu) = m delta + (nu,nu)/2 delta - nu."""
    c = m + cartan_pair(g, nu, nu) // 2
    return vec_sub(vec_scale(c, g.delta), nu)


# ---------------------------------------------------------------- roots

def support_connected(g: Graph, a: Sequence[int]) -> bool:
    supp = [i for i in g.vertices if a[i]]
    if not supp:
        return False
    seen, stack = {supp[0]}, [supp[0]]
    while stack:
        i = stack.pop()
        for j in g.neighbours(i):
            if a[j] and j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(supp)


def in_fundamental_region(g: Graph, a: Sequence[int]) -> bool:
    if not is_nonneg(a) or not any(a):
        return False
    if not support_connected(g, a):
        return False
    return all(pair_with_simple(g, a, i) <= 0 for i in g.vertices)


REAL, ISOTROPIC, ANISOTROPIC, NOT_A_ROOT = "real", "isotropic-imaginary", "anisotropic-imaginary", "not-a-root"


def is_root(g: Graph, a: Sequence[int]) -> str:
    """Classify a nonzero integral vector by reflecting towards the fundamental region."""
    a = tuple(a)
    if not any(a):
        raise InvalidInput("zero vector")
    if not is_nonneg(a):
        if all(x <= 0 for x in a):
            a = tuple(-x for x in a)
        else:
            return NOT_A_ROOT
    while True:
        supp = [i for i in g.vertices if a[i]]
        if len(supp) == 1 and a[supp[0]] == 1:
            i = supp[0]
            if g.loops(i) == 0:
                return REAL
            return ISOTROPIC if g.loops(i) == 1 else ANISOTROPIC
        if in_fundamental_region(g, a):
            return ISOTROPIC if p_form(g, a) == 1 else ANISOTROPIC
        step = next((i for i in g.vertices
                     if g.loops(i) == 0 and pair_with_simple(g, a, i) > 0), None)
        if step is None:
            return NOT_A_ROOT
        k = pair_with_simple(g, a, step)
        a = a[:step] + (a[step] - k,) + a[step + 1:]
        if not is_nonneg(a) or not any(a):
            return NOT_A_ROOT


def positive_roots_from_gram(gram: Sequence[Sequence[int]]) -> list:
    """Positive roots of a finite simply-laced system, as coordinates in its simple roots.

    Uses the string property: for positive roots a != e_i, a + e_i is a root
    iff (a, e_i) = -1.  Sorted by height, then lexicographically.
    """
    r = len(gram)
    simple = [unit(r, i) for i in range(r)]
    found, frontier = set(simple), list(simple)
    while frontier:
        nxt = []
        for a in frontier:
            for i in range(r):
                pr = sum(a[j] * gram[j][i] for j in range(r))
                if pr == -1:
                    b = a[:i] + (a[i] + 1,) + a[i + 1:]
                    if b not in found:
                        found.add(b)
                        nxt.append(b)
        frontier = nxt
    return sorted(found, key=lambda v: (sum(v), v))


def finite_positive_roots(g: Graph) -> list:
    """Positive roots of the finite system on vertices 1..r, as vectors over all vertices."""
    fin = finite_part(g)
    return [(0,) + v for v in positive_roots_from_gram(fin.cartan_matrix())]


def connected_components(vertices: Sequence, adjacent) -> list:
    """Connected components of a graph given by an adjacency predicate, in input order."""
    rest, comps = list(vertices), []
    while rest:
        comp = [rest.pop(0)]
        stack = list(comp)
        while stack:
            u = stack.pop()
            for v in list(rest):
                if adjacent(u, v):
                    rest.remove(v)
                    comp.append(v)
                    stack.append(v)
        comps.append(comp)
    return comps


# ---------------------------------------------------------------- framing

@dataclass(frozen=True)
class Deframed:
    """Result of adding a framing vertex: the graph, e_inf + alpha and the original alpha."""

    graph: Graph
    vector: tuple
    alpha: tuple

    @property
    def infinity(self) -> int:
        return self.graph.size - 1

    def extend(self, bc: Sequence[Fraction]) -> tuple:
        """Extend bc to the framed vertex by bc(e_inf) = -bc(alpha)."""
        return tuple(Fraction(x) for x in bc) + (-evaluate(bc, self.alpha),)


def framing_lambda0(g: Graph) -> tuple:
    return unit(g.size, 0)


def deframe(g: Graph, w: Sequence[int], alpha: Sequence[int]) -> Deframed:
    if len(w) != g.size or len(alpha) != g.size:
        raise InvalidInput("framing and dimension vectors must match the graph")
    if not is_nonneg(w) or not any(w):
        raise InvalidInput("framing vector must be nonnegative and nonzero")
    inf = g.size
    edges = g.edges + tuple((i, inf) for i in g.vertices for _ in range(w[i]))
    labels = tuple(str(i) for i in g.vertices) + ("inf",)
    h = Graph(g.size + 1, edges, f"framed({g.kind})", None, labels)
    return Deframed(h, tuple(alpha) + (1,), tuple(alpha))


def p_framed(g: Graph, alpha: Sequence[int], w: Sequence[int] | None = None) -> int:
    """p(e_inf + alpha) in the deframed graph; framing defaults to Lambda_0."""
    w = framing_lambda0(g) if w is None else w
    d = deframe(g, w, alpha)
    return p_form(d.graph, d.vector)
