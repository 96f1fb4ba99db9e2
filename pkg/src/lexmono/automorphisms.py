"""Automorphisms built from a level permutation and conjugation by a unit.

``apply(f, a) = u . P(a) . u^-1`` where ``P(a)`` has ``a``'s coordinate
``perm[i]`` at level ``i`` and ``u`` is the translation by ``f.unit``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .product import Element, compose_el, embed_factor, inverse_el, unit_from_vector
from . import core


@dataclass(frozen=True)
class Automorphism:
    perm: tuple[int, ...]
    unit: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(self, "unit", tuple(self.unit))
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise DomainError(f"{self.perm} is not a permutation of 1..{len(self.perm)}")
        if len(self.unit) != len(self.perm):
            raise DomainError("perm and unit lengths differ")

    @property
    def n(self) -> int:
        return len(self.perm)


def identity_auto(n: int) -> Automorphism:
    return Automorphism(tuple(range(1, n + 1)), (0,) * n)


def inner(shifts: Sequence[int]) -> Automorphism:
    """Conjugation by the unit translating level ``j`` by ``shifts[j-1]``."""
    return Automorphism(tuple(range(1, len(shifts) + 1)), tuple(shifts))


def swap(n: int = 2, i: int = 1, j: int = 2) -> Automorphism:
    perm = list(range(1, n + 1))
    perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
    return Automorphism(tuple(perm), (0,) * n)


def _same_n(f: Automorphism, n: int) -> None:
    if f.n != n:
        raise DomainError(f"automorphism is on n={f.n}, got n={n}")


def apply(f: Automorphism, a: Element) -> Element:
    _same_n(f, a.n)
    permuted = Element(a.n, tuple(a.comps[p - 1] for p in f.perm))
    u = unit_from_vector(f.unit)
    return compose_el(compose_el(u, permuted), inverse_el(u))


def compose_auto(f: Automorphism, g: Automorphism) -> Automorphism:
    """``f`` first, then ``g``."""
    _same_n(g, f.n)
    perm = tuple(f.perm[q - 1] for q in g.perm)
    unit = tuple(ug + f.unit[q - 1] for ug, q in zip(g.unit, g.perm))
    return Automorphism(perm, unit)


def inverse_auto(f: Automorphism) -> Automorphism:
    perm = [0] * f.n
    for i, p in enumerate(f.perm, start=1):
        perm[p - 1] = i
    unit = tuple(-f.unit[q - 1] for q in perm)
    return Automorphism(tuple(perm), unit)


def moved_unit(f: Automorphism) -> tuple[Element, Element] | None:
    """A unit that ``f`` does not fix, with its image; None when ``f`` fixes all units.

    Units commute, so conjugation fixes them all and only the permutation can
    move one: the translation on the first level ``i`` with ``perm[i] != i``
    lands on the level ``k`` with ``perm[k] == i``.
    """
    for i, p in enumerate(f.perm, start=1):
        if p != i:
            u = embed_factor(core.translation(1), i, f.n)
            return u, apply(f, u)
    return None


def fixes_all_units(f: Automorphism) -> bool:
    return moved_unit(f) is None
