"""Seeded pseudo-random elements.

The generator is SplitMix64 (Steele, Lea and Flood), chosen so that a seed
produces the same elements in any language:

    state += 0x9E3779B97F4A7C15                     (mod 2**64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9        (mod 2**64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB        (mod 2**64)
    return z ^ (z >> 31)

Bounded draws use ``next() % m``.  A level is drawn as: number of domain
holes in ``[0, excl]``, then that many distinct points in ``[-span, span]``
(redrawing repeats), the same for range holes, then the shift in
``[-shift, shift]``; the points are then sorted.
"""

from __future__ import annotations

from .core import CofiniteMonotoneMap
from .generators import Budget
from .product import Element

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        return self.next() % m

    def between(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def choice(self, seq):
        return seq[self.below(len(seq))]


def _points(rng: SplitMix64, count: int, span: int) -> tuple[int, ...]:
    count = min(count, 2 * span + 1)
    pts: set[int] = set()
    while len(pts) < count:
        pts.add(rng.between(-span, span))
    return tuple(sorted(pts))


def rand_map(rng: SplitMix64, budget: Budget) -> CofiniteMonotoneMap:
    D = _points(rng, rng.below(budget.excl + 1), budget.span)
    R = _points(rng, rng.below(budget.excl + 1), budget.span)
    return CofiniteMonotoneMap(D, R, rng.between(-budget.shift, budget.shift))


def rand_idempotent_map(rng: SplitMix64, budget: Budget) -> CofiniteMonotoneMap:
    D = _points(rng, rng.below(budget.excl + 1), budget.span)
    return CofiniteMonotoneMap(D, D, 0)


def random_element(rng: SplitMix64, n: int, budget: Budget) -> Element:
    return Element(n, tuple(rand_map(rng, budget) for _ in range(n)))


def random_idempotent(rng: SplitMix64, n: int, budget: Budget) -> Element:
    return Element(n, tuple(rand_idempotent_map(rng, budget) for _ in range(n)))


def rand_element(seed: int, n: int, budget: Budget) -> Element:
    """The element drawn first from a fresh generator seeded with ``seed``."""
    return random_element(SplitMix64(seed), n, budget)
