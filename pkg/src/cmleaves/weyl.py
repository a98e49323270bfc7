"""Affine Weyl group actions and the reductions built on them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .roots import (
    Graph, InvalidInput, InvariantViolation, cartan_pair, deframe,
    finite_positive_roots, framing_lambda0, level, pair_with_simple,
    vec_add, vec_scale, vec_sub,
)


@dataclass(frozen=True)
class ReflectionWord:
    """Simple reflections in application order, each flagged admissible or not."""

    letters: tuple = ()
    admissible: tuple = ()

    def __len__(self):
        return len(self.letters)

    def reversed(self) -> "ReflectionWord":
        return ReflectionWord(self.letters[::-1], self.admissible[::-1])

    def to_json(self) -> list:
        return list(self.letters)


@dataclass(frozen=True)
class WeightTestResult:
    is_weight: bool
    m: int | None
    nu: tuple


def _loopfree(g: Graph, i: int):
    if not 0 <= i < g.size:
        raise InvalidInput(f"vertex {i} out of range")
    if g.loops(i):
        raise InvalidInput(f"cannot reflect at vertex {i}, it carries a loop")


def reflect(g: Graph, i: int, alpha: Sequence[int]) -> tuple:
    _loopfree(g, i)
    k = pair_with_simple(g, alpha, i)
    return tuple(alpha[j] - k if j == i else alpha[j] for j in g.vertices)


def dual_reflect(g: Graph, i: int, bc: Sequence[Fraction]) -> tuple:
    _loopfree(g, i)
    b = Fraction(bc[i])
    return tuple(Fraction(bc[j]) - g.pair_simple(i, j) * b for j in g.vertices)


def star_reflect(g: Graph, w: Sequence[int], i: int, alpha: Sequence[int]) -> tuple:
    r = reflect(g, i, alpha)
    return r[:i] + (r[i] + w[i],) + r[i + 1:]


def apply_word(g: Graph, word, alpha=None, bc=None, w=None):
    """Apply a word (iterable of vertices) to a dimension vector via star and/or to parameters."""
    letters = word.letters if isinstance(word, ReflectionWord) else tuple(word)
    w = framing_lambda0(g) if w is None else w
    for i in letters:
        if alpha is not None:
            alpha = star_reflect(g, w, i, alpha)
        if bc is not None:
            bc = dual_reflect(g, i, bc)
    return alpha, bc


def is_admissible(bc: Sequence[Fraction], i: int) -> bool:
    return Fraction(bc[i]) != 0


def normalize_level(g: Graph, bc: Sequence[Fraction]) -> tuple:
    """Rescale bc to level -1.  Returns (scaled bc, scalar s) with bc = s * scaled."""
    L = level(g, bc)
    if L == 0:
        raise InvalidInput("parameter has level zero")
    s = -L
    return tuple(Fraction(x) / s for x in bc), s


def reduce_to_standard(g: Graph, bc: Sequence[Fraction], cap: int = 100000):
    """Greedy alcove walk to a J-standard parameter.

    Returns (word, bc', J) with bc' = word*(bc) in the original scale and
    J the vertices where bc' vanishes.
    """
    bcn, s = normalize_level(g, bc)
    letters = []
    for _ in range(cap):
        i = next((j for j in g.vertices if bcn[j] > 0 and not g.loops(j)), None)
        if i is None:
            break
        bcn = dual_reflect(g, i, bcn)
        letters.append(i)
    else:
        raise InvariantViolation("alcove walk did not terminate")
    out = tuple(x * s for x in bcn)
    J = tuple(j for j in g.vertices if out[j] == 0)
    return ReflectionWord(tuple(letters), (True,) * len(letters)), out, J


def weight_test(g: Graph, alpha: Sequence[int]) -> WeightTestResult:
    a0 = alpha[0]
    nu = tuple(-(x - a0 * d) for x, d in zip(alpha, g.delta))
    m = a0 - cartan_pair(g, nu, nu) // 2
    return WeightTestResult(m >= 0, m if m >= 0 else None, nu)


def bar(g: Graph, beta: Sequence[int]) -> tuple:
    return tuple(Fraction(pair_with_simple(g, beta, i)) for i in g.vertices)


def _descend(g: Graph, alpha: Sequence[int], bc: Sequence[Fraction], cap: int):
    """Admissible descent of e_inf + alpha.  Returns (letters, final alpha, final bc)."""
    d = deframe(g, framing_lambda0(g), alpha)
    h, v = d.graph, d.vector
    bc = tuple(Fraction(x) for x in bc)
    letters = []
    for _ in range(cap):
        i = next((j for j in g.vertices
                  if not g.loops(j) and bc[j] != 0 and pair_with_simple(h, v, j) > 0), None)
        if i is None:
            break
        v = reflect(h, i, v)
        bc = dual_reflect(g, i, bc)
        letters.append(i)
        if any(x < 0 for x in v):
            break
    return letters, v[:-1], bc


def reduce_pair(g: Graph, alpha: Sequence[int], bc: Sequence[Fraction]):
    """Admissible word w with w * alpha = m delta.  Returns (word, m, w*(bc))."""
    if level(g, bc) == 0:
        raise InvalidInput("reduce_pair needs non-zero level")
    wt = weight_test(g, alpha)
    if not wt.is_weight:
        raise InvalidInput("Lambda_0 - alpha is not a weight")
    nroots = max(1, len(finite_positive_roots(g)))
    cap = 4 * (max(alpha[0], 0) + 1) * nroots + 4 * sum(abs(x) for x in alpha) + 16
    letters, final, bc2 = _descend(g, alpha, bc, cap)
    m = final[0]
    if final != vec_scale(m, g.delta):
        raise InvalidInput("vector is not in E_bc: admissible descent stopped at "
                           f"{final}")
    return ReflectionWord(tuple(letters), (True,) * len(letters)), m, bc2


def descends_to_zero(g: Graph, alpha: Sequence[int], bc: Sequence[Fraction]) -> bool:
    """Whether admissible reflections carry e_inf + alpha to e_inf (used at level zero)."""
    cap = 4 * sum(abs(x) for x in alpha) + 16
    _, final, _ = _descend(g, alpha, bc, cap)
    return not any(final)


def finite_weyl_orbit(g: Graph, bc: Sequence[Fraction], limit: int = 100000) -> set:
    """Orbit of bc under the dual action of the finite Weyl group (vertices 1..r)."""
    start = tuple(Fraction(x) for x in bc)
    seen, stack = {start}, [start]
    while stack:
        b = stack.pop()
        for i in range(1, g.size):
            c = dual_reflect(g, i, b)
            if c not in seen:
                seen.add(c)
                stack.append(c)
                if len(seen) > limit:
                    raise InvalidInput("finite Weyl orbit too large")
    return seen


def _require_cyclic(g: Graph):
    if not (g.kind.startswith("CyclicA") or g.kind == "Jordan"):
        raise InvalidInput("translations are implemented for cyclic graphs only")


def translation_dual(g: Graph, beta: Sequence[int], bc: Sequence[Fraction]) -> tuple:
    """t_beta*(bc) = bc + bc(delta) * bar(beta)."""
    _require_cyclic(g)
    L = level(g, bc)
    return tuple(Fraction(x) + L * y for x, y in zip(bc, bar(g, beta)))


def translation_star(g: Graph, beta: Sequence[int], alpha: Sequence[int]) -> tuple:
    """alpha - beta shifted along delta so that p(e_inf + .) is preserved."""
    _require_cyclic(g)
    target = alpha[0] - cartan_pair(g, alpha, alpha) // 2
    base = vec_sub(alpha, beta)
    t = target - base[0] + cartan_pair(g, base, base) // 2
    return vec_add(base, vec_scale(t, g.delta))
