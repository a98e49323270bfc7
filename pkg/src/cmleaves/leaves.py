"""Vanishing roots, leaf labels, closure order and normalizations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .partitions import partitions
from .roots import (
    Graph, InvalidInput, cartan_pair, connected_components, evaluate,
    finite_positive_roots, level, positive_roots_from_gram, vec_add,
    vec_scale, vec_sub,
)
from .weyl import bar, descends_to_zero, normalize_level, weight_test


@dataclass(frozen=True)
class Factor:
    """An irreducible factor of the finite vanishing system at level zero."""

    simple_roots: tuple
    highest_root: tuple
    marks: tuple

    @property
    def support(self) -> tuple:
        return tuple(sorted({i for r in self.simple_roots for i, x in enumerate(r) if x}))


@dataclass(frozen=True)
class RootSetReport:
    level: Fraction
    positive_vanishing_roots: tuple
    minimal_roots: tuple
    sigma_c: tuple
    factors: tuple = ()


@dataclass(frozen=True)
class LeafDescriptor:
    label: tuple
    dimension: int
    parabolic: tuple
    rep_type: tuple
    n: int
    zero_level: bool = False
    coords: tuple = ()
    basis: tuple = ()

    def to_json(self) -> dict:
        beta0, parts = self.rep_type
        if self.zero_level:
            lam, rho = self.label
            label = {"lambda": list(lam), "rho": list(rho)}
        else:
            label = list(self.label)
        return {
            "label": label,
            "dim": self.dimension,
            "parabolic": {"m": self.parabolic[0], "lambda": list(self.parabolic[1])},
            "rep_type": [list(beta0)] + [[k, list(r)] for k, r in parts],
        }

    def name(self) -> str:
        if self.zero_level:
            lam, rho = self.label
            return f"L({','.join(map(str, lam)) or '-'}|{','.join(map(str, rho)) or '-'})"
        return "L(" + ",".join(map(str, self.label)) + ")"


@dataclass(frozen=True)
class NormalizationReport:
    factors: tuple
    is_normal: str

    def to_json(self) -> dict:
        return {
            "factors": [dict(f, bc=[str(x) for x in f["bc"]]) for f in self.factors],
            "is_normal": self.is_normal,
        }


# ---------------------------------------------------------------- roots

def _indecomposable(vectors: Sequence[tuple]) -> list:
    vs = set(vectors)
    out = []
    for v in vectors:
        if not any(vec_sub(v, a) in vs for a in vectors if a != v):
            out.append(v)
    return out


def _all_finite_roots(g: Graph) -> list:
    pos = finite_positive_roots(g)
    return pos + [vec_scale(-1, r) for r in pos]


def _factors(g: Graph, simple: Sequence[tuple]) -> list:
    comps = connected_components(list(simple), lambda a, b: cartan_pair(g, a, b) != 0)
    out = []
    for comp in comps:
        gram = [[cartan_pair(g, a, b) for b in comp] for a in comp]
        coords = positive_roots_from_gram(gram)[-1]
        theta = tuple(sum(c * r[i] for c, r in zip(coords, comp)) for i in g.vertices)
        out.append(Factor(tuple(comp), theta, tuple(coords)))
    out.sort(key=lambda f: f.support)
    return out


def vanishing_roots(g: Graph, bc: Sequence[Fraction]) -> RootSetReport:
    bc = tuple(Fraction(x) for x in bc)
    L = level(g, bc)
    if L != 0:
        bcn, _ = normalize_level(g, bc)
        pos = []
        for b in _all_finite_roots(g):
            k = evaluate(bcn, b)
            if k.denominator != 1:
                continue
            k = int(k)
            if k > 0 or (k == 0 and all(x >= 0 for x in b)):
                pos.append(vec_add(b, vec_scale(k, g.delta)))
        pos.sort(key=lambda v: (sum(v), v))
        minimal = tuple(_indecomposable(pos))
        return RootSetReport(L, tuple(pos), minimal, minimal)
    phi = [b for b in finite_positive_roots(g) if evaluate(bc, b) == 0]
    simple = _indecomposable(phi)
    facs = _factors(g, simple)
    sigma = [tuple(s) for f in facs for s in f.simple_roots]
    sigma.append(tuple(g.delta))
    sigma += [vec_sub(g.delta, f.highest_root) for f in facs]
    return RootSetReport(L, tuple(phi), tuple(s for f in facs for s in f.simple_roots),
                         tuple(sigma), tuple(facs))


def gram_matrix(g: Graph, roots: Sequence[tuple]) -> list:
    return [[cartan_pair(g, a, b) for b in roots] for a in roots]


# ---------------------------------------------------------------- lattice points

def _inverse(M):
    n = len(M)
    if n == 0:
        return []
    D = DomainMatrix([[QQ(int(x)) for x in row] for row in M], (n, n), QQ).inv()
    return [[Fraction(int(x.numerator), int(x.denominator)) for x in row]
            for row in D.to_Matrix().tolist()]


def lattice_points(G: Sequence[Sequence[int]], c: Sequence[int], N: int) -> list:
    """All x in N^s with x.Gx/2 + c.x <= N, for G positive definite.

    Depth-first over coordinates; a partial assignment is pruned by the exact
    minimum of the quadratic over real completions (a Schur complement).
    """
    s = len(c)
    if s == 0:
        return [()] if N >= 0 else []
    tails = [_inverse([row[t:] for row in G[t:]]) for t in range(s + 1)]
    out = []

    def bound(a):
        t = len(a)
        val = Fraction(sum(a[i] * G[i][j] * a[j] for i in range(t) for j in range(t)), 2)
        val += sum(c[i] * a[i] for i in range(t))
        if t == s:
            return val
        g = [sum(G[j][i] * a[i] for i in range(t)) + c[j] for j in range(t, s)]
        D = tails[t]
        val -= Fraction(1, 2) * sum(g[i] * D[i][j] * g[j] for i in range(s - t) for j in range(s - t))
        return val

    def walk(a):
        if len(a) == s:
            out.append(tuple(a))
            return
        prev, x = None, 0
        while True:
            lb = bound(a + [x])
            if lb <= N:
                walk(a + [x])
            elif prev is not None and lb > prev:
                break
            prev = lb
            x += 1

    walk([])
    return out


def _q_coords(G, c, x) -> int:
    s = len(x)
    return sum(c[i] * x[i] for i in range(s)) + sum(
        x[i] * G[i][j] * x[j] for i in range(s) for j in range(s)) // 2


def _dominates(y, x) -> bool:
    return y != x and all(a >= b for a, b in zip(y, x))


def _delta_data(g: Graph, bc):
    rep = vanishing_roots(g, bc)
    if rep.level == 0:
        raise InvalidInput("this operation needs non-zero level")
    D = list(rep.minimal_roots)
    G = gram_matrix(g, D)
    c = [r[0] for r in D]
    return D, G, c


def xi_coordinates(g: Graph, bc, n: int) -> list:
    """Delta-coordinates of the Xi-elements with q <= n."""
    D, G, c = _delta_data(g, bc)
    pts = lattice_points(G, c, n)
    qs = {x: _q_coords(G, c, x) for x in pts}
    out = [x for x in pts if not any(_dominates(y, x) and qs[y] <= qs[x] for y in pts)]
    return sorted(out, key=lambda x: (qs[x], x))


def combine(roots: Sequence[tuple], coords: Sequence[int], size: int) -> tuple:
    out = (0,) * size
    for k, r in zip(coords, roots):
        out = vec_add(out, vec_scale(k, r))
    return out


def xi_elements(g: Graph, bc, n: int) -> list:
    D, _, _ = _delta_data(g, bc)
    return [combine(D, x, g.size) for x in xi_coordinates(g, bc, n)]


def delta_coordinates(g: Graph, roots: Sequence[tuple], beta: Sequence[int]):
    """Coordinates of beta in the linearly independent roots, or None if outside their Z-span."""
    if not roots:
        return () if not any(beta) else None
    G = gram_matrix(g, roots)
    rhs = [cartan_pair(g, beta, r) for r in roots]
    Gi = _inverse(G)
    x = [sum(Gi[i][j] * rhs[j] for j in range(len(roots))) for i in range(len(roots))]
    if any(v.denominator != 1 for v in x):
        return None
    x = tuple(int(v) for v in x)
    return x if combine(roots, x, g.size) == tuple(beta) else None


def is_xi(g: Graph, bc, beta) -> bool:
    D, G, c = _delta_data(g, bc)
    x = delta_coordinates(g, D, beta)
    if x is None or any(v < 0 for v in x):
        return False
    qb = _q_coords(G, c, x)
    return not any(_dominates(y, x) for y in lattice_points(G, c, qb))


def is_in_E(g: Graph, bc, alpha) -> bool:
    alpha = tuple(alpha)
    wt = weight_test(g, alpha)
    if not wt.is_weight:
        return False
    if level(g, bc) == 0:
        return wt.m == 0 and descends_to_zero(g, alpha, bc)
    bcn, _ = normalize_level(g, bc)
    n = -evaluate(bcn, alpha)
    if n.denominator != 1 or n < 0:
        return False
    beta = vec_sub(vec_scale(int(n), g.delta), alpha)
    return is_xi(g, bc, beta)


# ---------------------------------------------------------------- leaves

def compositions(total: int, parts: int):
    """Tuples of `parts` nonnegative ints summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _zero_level_rep_type(g: Graph, facs, lam, rho):
    parts = [(k, tuple(g.delta)) for k in lam]
    for f, r in zip(facs, rho):
        if r == 0:
            continue
        parts.append((r, vec_sub(g.delta, f.highest_root)))
        parts += [(r * h, s) for h, s in zip(f.marks, f.simple_roots)]
    return ((0,) * g.size, tuple(parts))


def enumerate_leaves(g: Graph, n: int, bc) -> list:
    if n < 0:
        raise InvalidInput("n must be nonnegative")
    bc = tuple(Fraction(x) for x in bc)
    if level(g, bc) != 0:
        D, G, c = _delta_data(g, bc)
        out = []
        for x in xi_coordinates(g, bc, n):
            beta = combine(D, x, g.size)
            m = n - _q_coords(G, c, x)
            rt = (vec_sub(vec_scale(n, g.delta), beta),
                  tuple((k, r) for k, r in zip(x, D) if k))
            out.append(LeafDescriptor(beta, 2 * m, (m, ()), rt, n, False, x, tuple(D)))
        return out
    facs = vanishing_roots(g, bc).factors
    out = []
    for k in range(n + 1):
        if k and not facs:
            break
        for lam in partitions(n - k):
            for rho in compositions(k, len(facs)):
                out.append(LeafDescriptor((lam, rho), 2 * len(lam), (k, lam),
                                          _zero_level_rep_type(g, facs, lam, rho), n, True))
    out.sort(key=lambda L: (-L.dimension, L.label))
    return out


def _pack(rows, bins) -> bool:
    """Can the rows be split into groups whose sums fill every bin exactly?"""
    bins = [b for b in bins if b]
    if sum(rows) != sum(bins):
        return False
    rows = sorted(rows, reverse=True)

    def go(i, rem):
        if i == len(rows):
            return all(r == 0 for r in rem)
        tried = set()
        for j, cap in enumerate(rem):
            if cap >= rows[i] and cap not in tried:
                tried.add(cap)
                rem[j] -= rows[i]
                ok = go(i + 1, rem)
                rem[j] += rows[i]
                if ok:
                    return True
        return False

    return go(0, list(bins))


def zero_level_less(small, large) -> bool:
    """(eta, zeta) < (lam, rho): merge rows of lam into rows of eta, absorb the rest into zeta."""
    (eta, zeta), (lam, rho) = small, large
    if small == large or len(zeta) != len(rho):
        return False
    extra = [z - r for z, r in zip(zeta, rho)]
    if any(e < 0 for e in extra):
        return False
    return _pack(list(lam), list(eta) + extra)


def closure_less(L1: LeafDescriptor, L2: LeafDescriptor) -> bool:
    """True when L1 lies in the closure of L2 and L1 != L2."""
    if L1.zero_level != L2.zero_level or L1.n != L2.n:
        raise InvalidInput("leaves come from different enumerations")
    if L1.zero_level:
        return zero_level_less(L1.label, L2.label)
    if L1.basis != L2.basis:
        raise InvalidInput("leaves come from different enumerations")
    return _dominates(L1.coords, L2.coords)


def hasse_diagram(leaves: Sequence[LeafDescriptor]) -> list:
    """Covering pairs (i, j): leaves[i] is maximal among leaves strictly below leaves[j]."""
    k = len(leaves)
    less = [[closure_less(leaves[i], leaves[j]) for j in range(k)] for i in range(k)]
    return [(i, j) for i in range(k) for j in range(k)
            if less[i][j] and not any(less[i][t] and less[t][j] for t in range(k))]


def hasse_dot(leaves: Sequence[LeafDescriptor], covers=None) -> str:
    covers = hasse_diagram(leaves) if covers is None else covers
    lines = ["digraph leaves {"]
    for L in leaves:
        lines.append(f'  "{L.name()}" [label="{L.name()} dim {L.dimension}"];')
    for i, j in covers:
        lines.append(f'  "{leaves[i].name()}" -> "{leaves[j].name()}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _is_rectangular(lam) -> bool:
    return len(set(lam)) <= 1


def normalization_of_closure(g: Graph, bc, leaf: LeafDescriptor) -> NormalizationReport:
    bc = tuple(Fraction(x) for x in bc)
    L = level(g, bc)
    if not leaf.zero_level:
        if L == 0:
            raise InvalidInput("leaf and parameter levels differ")
        new = tuple(b - L * x for b, x in zip(bc, bar(g, leaf.label)))
        m = leaf.parabolic[0]
        return NormalizationReport(({"group": "Gamma", "rank": m, "bc": new},), "yes")
    lam, _ = leaf.label
    mult = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    factors = tuple({"group": "Gamma", "rank": k, "bc": bc, "part": p}
                    for p, k in sorted(mult.items(), reverse=True))
    normal = "unknown"
    if g.kind == "Jordan" and all(x == 0 for x in bc):
        normal = "yes" if _is_rectangular(lam) else "no"
    return NormalizationReport(factors, normal)


def codim2_count(g: Graph, bc) -> int:
    """Number of irreducible factors of the finite system of roots killed by bc."""
    bc = tuple(Fraction(x) for x in bc)
    if level(g, bc) == 0:
        raise InvalidInput("codim2_count needs non-zero level")
    phi = [b for b in finite_positive_roots(g) if evaluate(bc, b) == 0]
    return len(_factors(g, _indecomposable(phi)))


def is_smooth(g: Graph, n: int, bc) -> bool:
    return len(enumerate_leaves(g, n, bc)) == 1
