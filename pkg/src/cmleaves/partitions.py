"""Partitions, residues, cores and the cyclic leaf combinatorics.

Partitions are weakly decreasing tuples of positive ints; ``()`` is the
empty partition.  Boxes use 0-indexed (row, column) coordinates, and the
residue of box (r, s) is s - r, reduced mod l when l is finite.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .roots import InvalidInput, InvariantViolation, build_mckay_graph
from .weyl import star_reflect

INFINITY = None


def make_partition(parts: Iterable[int]) -> tuple:
    p = tuple(int(x) for x in parts if int(x) != 0)
    if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise InvalidInput(f"{tuple(parts)} is not a partition")
    return p


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple:
    """All partitions of n, in reverse lexicographic order."""
    if n < 0:
        return ()

    def gen(rest, top):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, top), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def conjugate(lam: Sequence[int]) -> tuple:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > c) for c in range(lam[0]))


def boxes(lam: Sequence[int]):
    for r, row in enumerate(lam):
        for s in range(row):
            yield r, s


def content(box) -> int:
    return box[1] - box[0]


def residues(lam: Sequence[int], l):
    """Residue counts: a tuple of length l, or a dict content -> count when l is None."""
    if l is INFINITY:
        out = {}
        for b in boxes(lam):
            out[content(b)] = out.get(content(b), 0) + 1
        return dict(sorted(out.items()))
    if l < 1:
        raise InvalidInput("l must be positive")
    out = [0] * l
    for b in boxes(lam):
        out[content(b) % l] += 1
    return tuple(out)


def removable_boxes(lam: Sequence[int]) -> list:
    return [(r, lam[r] - 1) for r in range(len(lam))
            if r == len(lam) - 1 or lam[r + 1] < lam[r]]


def addable_boxes(lam: Sequence[int]) -> list:
    out = []
    for r in range(len(lam) + 1):
        cur = lam[r] if r < len(lam) else 0
        if r == 0 or lam[r - 1] > cur:
            out.append((r, cur))
    return out


def remove_box(lam: Sequence[int], box) -> tuple:
    r, _ = box
    return make_partition(lam[:r] + (lam[r] - 1,) + tuple(lam[r + 1:]))


def add_box(lam: Sequence[int], box) -> tuple:
    r, _ = box
    lam = tuple(lam)
    if r == len(lam):
        return lam + (1,)
    return lam[:r] + (lam[r] + 1,) + lam[r + 1:]


def hook_length(lam: Sequence[int], box) -> int:
    r, s = box
    return (lam[r] - s - 1) + (conjugate(lam)[s] - r - 1) + 1


def remove_rim_hook(lam: Sequence[int], box) -> tuple:
    """Remove the rim hook whose hook-box is ``box``."""
    r, s = box
    last = conjugate(lam)[s] - 1
    new = list(lam)
    for i in range(r, last):
        new[i] = lam[i + 1] - 1
    new[last] = s
    return make_partition(new)


def rim_hooks(lam: Sequence[int], l: int) -> list:
    return [b for b in boxes(lam) if hook_length(lam, b) == l]


def ell_core_by_hooks(lam: Sequence[int], l: int) -> tuple:
    """l-core by repeatedly removing the first rim l-hook found."""
    if l < 1:
        raise InvalidInput("l must be positive")
    lam = tuple(lam)
    while True:
        hooks = rim_hooks(lam, l)
        if not hooks:
            return lam
        lam = remove_rim_hook(lam, hooks[0])


@lru_cache(maxsize=200000)
def ell_core(lam: Sequence[int], l: int) -> tuple:
    """l-core via beta-numbers: push every bead up its runner of the l-abacus."""
    if l < 1:
        raise InvalidInput("l must be positive")
    lam = tuple(lam)
    k = len(lam)
    beads = [lam[i] + k - 1 - i for i in range(k)]
    runners = [0] * l
    for b in beads:
        runners[b % l] += 1
    pushed = sorted((r + l * j for r in range(l) for j in range(runners[r])), reverse=True)
    return make_partition(pushed[i] - (k - 1 - i) for i in range(k))


def is_ell_core(lam: Sequence[int], l: int) -> bool:
    return not rim_hooks(lam, l)


def j_removable(lam: Sequence[int], J, l: int) -> list:
    J = {j % l for j in J}
    return [b for b in removable_boxes(lam) if content(b) % l in J]


def j_core(lam: Sequence[int], J, l: int) -> tuple:
    lam = tuple(lam)
    while True:
        rem = j_removable(lam, J, l)
        if not rem:
            return lam
        lam = remove_box(lam, rem[0])


def is_j_core(lam: Sequence[int], J, l: int) -> bool:
    return not j_removable(lam, J, l)


def frobenius_form(mu: Sequence[int]):
    """(k, arms, legs) of the diagonal hooks."""
    mu = tuple(mu)
    conj = conjugate(mu)
    k = sum(1 for r in range(len(mu)) if mu[r] > r)
    arms = tuple(mu[r] - r - 1 for r in range(k))
    legs = tuple(conj[r] - r - 1 for r in range(k))
    return k, arms, legs


def from_frobenius(arms: Sequence[int], legs: Sequence[int]) -> tuple:
    k = len(arms)
    if len(legs) != k:
        raise InvalidInput("arms and legs must have equal length")
    rows = [arms[r] + r + 1 for r in range(k)]
    conj_cols = [legs[r] + r + 1 for r in range(k)]
    height = max(conj_cols, default=0)
    for i in range(k, height):
        rows.append(sum(1 for c in conj_cols if c > i))
    return make_partition(rows)


def waff_on_core(nu: Sequence[int], i: int, l: int) -> tuple:
    """Action of s_i on an l-core: add every i-addable box or remove every i-removable box."""
    nu = tuple(nu)
    if not is_ell_core(nu, l):
        raise InvalidInput(f"{nu} is not a {l}-core")
    add = [b for b in addable_boxes(nu) if content(b) % l == i % l]
    rem = [b for b in removable_boxes(nu) if content(b) % l == i % l]
    if add and rem:
        raise InvariantViolation("an l-core cannot have both addable and removable i-boxes")
    out = nu
    if add:
        for b in sorted(add, key=lambda b: b[0]):
            out = add_box(out, b)
    elif rem:
        for b in sorted(rem, key=lambda b: -b[0]):
            out = remove_box(out, b)
    return out


def decompose_residue(alpha: Sequence[int], l: int):
    """Unique (l-core nu, n) with alpha = Res_l(nu) + n delta."""
    if l < 1 or len(alpha) != l:
        raise InvalidInput("residue vector must have length l")
    g = build_mckay_graph(f"CyclicA({l})")
    w = (1,) + (0,) * (l - 1)
    v, word = tuple(alpha), []
    for _ in range(10 * (sum(abs(x) for x in alpha) + l) ** 2 + 100):
        i = next((j for j in range(l) if star_reflect(g, w, j, v)[j] < v[j]), None)
        if i is None:
            break
        v = star_reflect(g, w, i, v)
        word.append(i)
    if len(set(v)) != 1:
        raise InvalidInput(f"{tuple(alpha)} does not reduce to a multiple of delta")
    nu = ()
    for i in reversed(word):
        nu = waff_on_core(nu, i, l)
    n = v[0]
    if tuple(x + n for x in residues(nu, l)) != tuple(alpha):
        raise InvariantViolation("residue decomposition does not reconstruct its input")
    return nu, n


@lru_cache(maxsize=None)
def _with_core(nu: tuple, l: int, N: int) -> tuple:
    return tuple(lam for lam in partitions(N) if ell_core(lam, l) == nu)


def partitions_with_core(nu: Sequence[int], l: int, N: int) -> list:
    return list(_with_core(tuple(nu), l, N))


def staircase(t: int) -> tuple:
    return tuple(range(t, 0, -1))


def cyclic_order_geq(first, second, J, l: int) -> bool:
    (nu1, r1), (nu2, r2) = first, second
    if r1 < r2:
        return False
    N = len(tuple(boxes(nu1))) + l * (r1 - r2)
    return any(j_core(lam, J, l) == tuple(nu2) for lam in partitions_with_core(nu1, l, N))


def cyclic_leaves(alpha: Sequence[int], J, l: int) -> list:
    """Leaf labels (nu', r') for X_bc(alpha) with bc J-standard.

    nu' = Core_l(Core_J(lam)) over lam in P_nu(n' l + |nu|), 0 <= n' <= n;
    r' is the delta-multiplicity of the leaf's dimension vector
    Res_l(Core_J(lam)) + (n - n') delta.
    """
    nu, n = decompose_residue(alpha, l)
    if n < 0 or not is_j_core(nu, J, l):
        raise InvalidInput("alpha is not of the form Res(nu) + n delta with nu a J-core, n >= 0")
    size = sum(nu)
    labels = set()
    for k in range(n + 1):
        for lam in partitions_with_core(nu, l, size + k * l):
            jc = j_core(lam, J, l)
            core = ell_core(jc, l)
            r = (sum(jc) - sum(core)) // l + (n - k)
            labels.add((core, r))
    return sorted(labels, key=lambda p: (-p[1], p[0]))
