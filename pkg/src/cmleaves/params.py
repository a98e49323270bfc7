"""Dictionaries between reflection-algebra parameters and quiver parameters."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .roots import InvalidInput


@dataclass(frozen=True)
class TypeB:
    c1: Fraction
    cgamma: Fraction


@dataclass(frozen=True)
class CyclicK:
    a: Fraction
    k: tuple

    def __post_init__(self):
        if sum(self.k, Fraction(0)) != 0:
            raise InvalidInput("k-parameters must sum to zero")
        if not self.k:
            raise InvalidInput("need at least one k-parameter")


@dataclass(frozen=True)
class DirectBC:
    bc: tuple


CMParams = TypeB | CyclicK | DirectBC


def parse_rational(text) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, float):
        raise InvalidInput("floating point parameters are not accepted")
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidInput(f"cannot read {text!r} as a rational number") from e


def parse_vector(text: str) -> tuple:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    return tuple(parse_rational(t) for t in text.replace(";", ",").split(","))


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def to_bc(p: CMParams) -> tuple:
    if isinstance(p, TypeB):
        return (-p.c1 + p.cgamma, -p.cgamma)
    if isinstance(p, CyclicK):
        l, k = len(p.k), p.k
        return tuple(-p.a + k[0] - k[1 % l] if i == 0 else k[-i % l] - k[(1 - i) % l]
                     for i in range(l))
    if isinstance(p, DirectBC):
        return tuple(Fraction(x) for x in p.bc)
    raise InvalidInput(f"unknown parameter variant {type(p).__name__}")


def cyclic_from_bc(bc: Sequence[Fraction]) -> CyclicK:
    """Exact inverse of to_bc on the cyclic dictionary."""
    bc = tuple(Fraction(x) for x in bc)
    l = len(bc)
    a = -sum(bc, Fraction(0))
    # k_{j+1} = k_j - bc_{-j}; start from k_1 = 0 and shift to make the sum vanish
    raw = {1 % l: Fraction(0)}
    j = 1
    for _ in range(l - 1):
        raw[(j + 1) % l] = raw[j % l] - bc[-j % l]
        j += 1
    shift = sum(raw.values(), Fraction(0)) / l
    return CyclicK(a, tuple(raw[i] - shift for i in range(l)))


def from_leaf_bc(bc: Sequence[Fraction], variant: str) -> CMParams:
    """Read a quiver parameter back as reflection-algebra parameters.

    For type B the finite Weyl group flips the sign of c_gamma, so the
    representative with c_gamma >= 0 is returned.
    """
    bc = tuple(Fraction(x) for x in bc)
    if variant == "typeB":
        if len(bc) != 2:
            raise InvalidInput("type B parameters have two entries")
        return TypeB(-bc[0] - bc[1], abs(bc[1]))
    if variant == "cyclic":
        return cyclic_from_bc(bc)
    if variant == "direct":
        return DirectBC(bc)
    raise InvalidInput(f"unknown parameter variant {variant!r}")


def cyclic_leaf_k(p: CyclicK, alpha: Sequence[int]) -> CyclicK:
    """Parameters of the leaf closure for the leaf alpha: a' = a and
    k'_i = k_i - a (alpha_{1-i} - alpha_{-i}), up to permuting the k'_i.
    """
    l = len(p.k)
    return CyclicK(p.a, tuple(p.k[i] - p.a * (alpha[(1 - i) % l] - alpha[-i % l]) for i in range(l)))
