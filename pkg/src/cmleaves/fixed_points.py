"""Fixed-point representations A_mu of the framed cyclic quiver.

A representation stores, for each vertex i of Z/l, the basis of V_i and
the matrices X_i: V_{i+1} -> V_i, Y_i: V_i -> V_{i+1}, x: C -> V_0 and
y: V_0 -> C.  Matrices are lists of rows of ``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .partitions import (
    boxes, content, frobenius_form, is_j_core, j_core,
    partitions_with_core, residues,
)
from .roots import InvalidInput, build_mckay_graph
from .weyl import reduce_to_standard


@dataclass
class QuiverRep:
    ell: int
    dims: tuple
    X: list
    Y: list
    x: list
    y: list
    grading: list | None = None  # per vertex, the degree of each basis vector

    def copy(self) -> "QuiverRep":
        return QuiverRep(self.ell, tuple(self.dims), [_cp(m) for m in self.X], [_cp(m) for m in self.Y],
                         _cp(self.x), _cp(self.y), None if self.grading is None else [list(g) for g in self.grading])

    def to_json(self) -> dict:
        enc = lambda M: [[[q.numerator, q.denominator] for q in row] for row in M]
        return {
            "ell": self.ell,
            "dims": list(self.dims),
            "X": [enc(m) for m in self.X],
            "Y": [enc(m) for m in self.Y],
            "x": enc(self.x),
            "y": enc(self.y),
            "grading": self.grading,
        }


@dataclass(frozen=True)
class SemisimpleDecomposition:
    core_part: tuple
    loop_multiset: tuple


def _cp(M):
    return [list(r) for r in M]


def zeros(r: int, c: int):
    return [[Fraction(0)] * c for _ in range(r)]


def matmul(A, B, rows: int, cols: int):
    inner = len(B)
    return [[sum((A[i][k] * B[k][j] for k in range(inner)), Fraction(0)) for j in range(cols)]
            for i in range(rows)]


def _bc_at(bc, i: int) -> Fraction:
    return Fraction(bc[i % len(bc)])


def check_j_standard(bc, ell: int):
    """Return J for a J-standard bc (level-normalized alcove walk is trivial), else raise."""
    g = build_mckay_graph(f"CyclicA({ell})")
    word, _, J = reduce_to_standard(g, bc)
    if len(word):
        raise InvalidInput(f"parameter {tuple(bc)} is not J-standard")
    return J


def build_A_mu(mu: Sequence[int], bc, ell: int, check: bool = True) -> QuiverRep:
    mu = tuple(mu)
    bc = tuple(Fraction(b) for b in bc)
    if len(bc) != ell:
        raise InvalidInput("parameter length must equal l")
    if check:
        check_j_standard(bc, ell)
    k, arms, legs = frobenius_form(mu)
    seg = lambda lo, hi: sum((_bc_at(bc, i) for i in range(lo, hi + 1)), Fraction(0))
    betas = [seg(-legs[r], arms[r]) for r in range(k)]

    basis = [(r, j) for r in range(k) for j in range(-legs[r], arms[r] + 1)]
    pos = {b: t for t, b in enumerate(basis)}
    N = len(basis)
    Xg, Yg = zeros(N, N), zeros(N, N)  # column = source basis vector
    for (r, j), t in pos.items():
        if j > -legs[r]:
            Xg[pos[(r, j - 1)]][t] += 1
        if j <= -1:
            if (r, j + 1) in pos:
                Yg[pos[(r, j + 1)]][t] += seg(-legs[r], j)
            for s in range(r + 1, k):
                if (s, j + 1) in pos:
                    Yg[pos[(s, j + 1)]][t] += betas[s]
        else:
            if j < arms[r]:
                Yg[pos[(r, j + 1)]][t] -= seg(j + 1, arms[r])
            for s in range(r):
                if (s, j + 1) in pos:
                    Yg[pos[(s, j + 1)]][t] -= betas[s]
    xg = [[Fraction(0)] for _ in range(N)]
    yg = [[Fraction(0)] * N]
    for r in range(k):
        t = pos[(r, 0)]
        xg[t][0] = betas[r]
        yg[0][t] = Fraction(1)
    return fold(basis, Xg, Yg, xg, yg, ell)


def fold(basis, Xg, Yg, xg, yg, ell: int) -> QuiverRep:
    """Collapse the Z-graded representation to Z/l by grouping degrees mod l."""
    per = [[t for t, (_, j) in enumerate(basis) if j % ell == i] for i in range(ell)]
    dims = tuple(len(p) for p in per)
    sub = lambda M, rows, cols: [[M[a][b] for b in cols] for a in rows]
    X = [sub(Xg, per[i], per[(i + 1) % ell]) for i in range(ell)]
    Y = [sub(Yg, per[(i + 1) % ell], per[i]) for i in range(ell)]
    x = [xg[a] for a in per[0]]
    y = [[yg[0][b] for b in per[0]]]
    grading = [[basis[t][1] for t in p] for p in per]
    return QuiverRep(ell, dims, X, Y, x, y, grading)


def moment_map_check(rep: QuiverRep, bc) -> bool:
    """X_i Y_i - Y_{i-1} X_{i-1} + [i = 0] x y == bc_i Id at every vertex."""
    l, d = rep.ell, rep.dims
    for i in range(l):
        n = d[i]
        XY = matmul(rep.X[i], rep.Y[i], n, n)
        YX = matmul(rep.Y[(i - 1) % l], rep.X[(i - 1) % l], n, n)
        for a in range(n):
            for b in range(n):
                val = XY[a][b] - YX[a][b]
                if i == 0:
                    val += rep.x[a][0] * rep.y[0][b]
                if val != (Fraction(bc[i]) if a == b else 0):
                    return False
    return True


def graded_dimension(rep: QuiverRep) -> dict:
    out = {}
    for degs in rep.grading or []:
        for j in degs:
            out[j] = out.get(j, 0) + 1
    return dict(sorted(out.items()))


# ---------------------------------------------------------------- linear algebra

def _dm(M, rows: int, cols: int):
    return DomainMatrix([[QQ(q.numerator, q.denominator) for q in row] for row in M], (rows, cols), QQ)


def _to_fracs(D):
    return [[Fraction(int(q.numerator), int(q.denominator)) for q in row] for row in D.to_Matrix().tolist()]


def kernel(M, rows: int, cols: int) -> list:
    """Basis of {v : M v = 0} as a list of column vectors."""
    if cols == 0:
        return []
    if rows == 0:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    ns = _dm(M, rows, cols).nullspace()
    if ns.shape[0] == 0:
        return []
    return _to_fracs(ns)


def _maps_out(rep: QuiverRep, i: int):
    """Stack of all maps leaving V_i (as one matrix with dims[i] columns)."""
    l = rep.ell
    rows = list(rep.X[(i - 1) % l]) + list(rep.Y[i])
    if i == 0:
        rows += rep.y
    return rows


def _maps_in_transposed(rep: QuiverRep, i: int):
    """Rows are functionals on V_i killed exactly when orthogonal to all images into V_i."""
    l = rep.ell
    cols = []
    src = [(rep.X[i], rep.dims[(i + 1) % l]), (rep.Y[(i - 1) % l], rep.dims[(i - 1) % l])]
    if i == 0:
        src.append((rep.x, 1))
    for M, c in src:
        for b in range(c):
            cols.append([M[a][b] for a in range(rep.dims[i])])
    return cols


def find_simple_socle(rep: QuiverRep, J) -> tuple | None:
    """(i, v) with v in V_i spanning a subrepresentation L(e_i), i in J; else None."""
    for i in sorted(j % rep.ell for j in J):
        if rep.dims[i] == 0:
            continue
        rows = _maps_out(rep, i)
        ker = kernel(rows, len(rows), rep.dims[i])
        if ker:
            return i, ker[0]
    return None


def find_simple_quotient(rep: QuiverRep, J) -> tuple | None:
    """(i, f) with f a functional on V_i vanishing on every image into V_i, i in J; else None."""
    for i in sorted(j % rep.ell for j in J):
        if rep.dims[i] == 0:
            continue
        cols = _maps_in_transposed(rep, i)
        ker = kernel(cols, len(cols), rep.dims[i])
        if ker:
            return i, ker[0]
    return None


def _complement_basis(v, n: int):
    """Invertible change of basis P whose first column is v."""
    piv = next(t for t in range(n) if v[t] != 0)
    cols = [list(v)] + [[Fraction(int(a == t)) for a in range(n)] for t in range(n) if t != piv]
    P = [[cols[c][r] for c in range(n)] for r in range(n)]
    return P


def _inverse(P, n: int):
    return _to_fracs(_dm(P, n, n).inv())


def _change_basis(rep: QuiverRep, i: int, P, Pinv) -> QuiverRep:
    """New basis of V_i given by the columns of P."""
    l, d = rep.ell, rep.dims
    r = rep.copy()
    r.X[i] = matmul(Pinv, rep.X[i], d[i], d[(i + 1) % l])
    r.Y[(i - 1) % l] = matmul(Pinv, rep.Y[(i - 1) % l], d[i], d[(i - 1) % l])
    r.X[(i - 1) % l] = matmul(r.X[(i - 1) % l], P, d[(i - 1) % l], d[i])
    r.Y[i] = matmul(r.Y[i], P, d[(i + 1) % l], d[i])
    if i == 0:
        r.x = matmul(Pinv, rep.x, d[0], 1)
        r.y = matmul(rep.y, P, 1, d[0])
    r.grading = None
    return r


def _drop(rep: QuiverRep, i: int, index: int) -> QuiverRep:
    """Delete basis vector `index` of V_i from every matrix."""
    l = rep.ell
    r = rep.copy()
    dr = lambda M: [row for a, row in enumerate(M) if a != index]
    dc = lambda M: [[q for b, q in enumerate(row) if b != index] for row in M]
    # rows indexed by V_i: X_i, Y_{i-1}, x ; columns indexed by V_i: X_{i-1}, Y_i, y
    if l == 1:
        r.X[0] = dc(dr(r.X[0]))
        r.Y[0] = dc(dr(r.Y[0]))
    else:
        r.X[i] = dr(r.X[i])
        r.Y[(i - 1) % l] = dr(r.Y[(i - 1) % l])
        r.X[(i - 1) % l] = dc(r.X[(i - 1) % l])
        r.Y[i] = dc(r.Y[i])
    if i == 0:
        r.x = dr(r.x)
        r.y = dc(r.y)
    r.dims = tuple(x - (1 if t == i else 0) for t, x in enumerate(rep.dims))
    r.grading = None
    return r


def quotient_by_socle(rep: QuiverRep, i: int, v) -> QuiverRep:
    n = rep.dims[i]
    P = _complement_basis(v, n)
    return _drop(_change_basis(rep, i, P, _inverse(P, n)), i, 0)


def restrict_to_kernel(rep: QuiverRep, i: int, f) -> QuiverRep:
    """Subrepresentation ker(f) in V_i (f kills every image into V_i, so it is a quotient map)."""
    n = rep.dims[i]
    Q = _complement_basis(f, n)  # rows of Q^T: f first
    Pinv = [[Q[c][r] for c in range(n)] for r in range(n)]  # new coordinates: f(v) first
    P = _inverse(Pinv, n)
    return _drop(_change_basis(rep, i, P, Pinv), i, 0)


def strip_to_simple(rep: QuiverRep, J):
    """Peel L(e_i) socles (then quotients) until none is left.  Returns (rep, residues peeled)."""
    peeled = []
    while True:
        s = find_simple_socle(rep, J)
        if s is not None:
            rep = quotient_by_socle(rep, *s)
            peeled.append(s[0])
            continue
        q = find_simple_quotient(rep, J)
        if q is not None:
            rep = restrict_to_kernel(rep, *q)
            peeled.append(q[0])
            continue
        return rep, tuple(sorted(peeled))


def semisimplify(mu: Sequence[int], bc, J, ell: int) -> SemisimpleDecomposition:
    core = j_core(mu, J, ell)
    removed = list(boxes(mu))
    for b in boxes(core):
        removed.remove(b)
    return SemisimpleDecomposition(core, tuple(sorted(content(b) % ell for b in removed)))


def dim_reg(mu: Sequence[int], bc, J, ell: int) -> tuple:
    return residues(j_core(mu, J, ell), ell)


def fixed_points(alpha: Sequence[int], bc, J, ell: int) -> list:
    """One (J-core, representation) pair per fixed point of X_bc(alpha)."""
    from .partitions import decompose_residue
    nu, n = decompose_residue(alpha, ell)
    if n < 0 or not is_j_core(nu, J, ell):
        raise InvalidInput("alpha is not Res(nu) + n delta with nu a J-core")
    out = {}
    for mu in partitions_with_core(nu, ell, sum(nu) + n * ell):
        c = j_core(mu, J, ell)
        if c not in out:
            out[c] = (mu, build_A_mu(mu, bc, ell))
    return [(c, mu, rep) for c, (mu, rep) in sorted(out.items())]
