"""All solutions of ``a x = b`` and ``x a = b``.

On each level ``x`` is forced on the image of ``dom b`` under ``a`` and must
miss the image of ``dom a \\ dom b``.  The only freedom sits on the holes of
``ran a``: each may stay out of ``dom x`` or take an unused value of ``b``'s
range holes lying strictly between the values of its forced neighbours.
Scanning the free points in increasing order and threading a lower bound
keeps the choices jointly monotone.
"""

from __future__ import annotations

import itertools
import math
from bisect import bisect_left
from dataclasses import dataclass

from . import core
from .core import CofiniteMonotoneMap
from .errors import DomainError
from .product import Element, _same_n, compose_el, inverse_el


@dataclass(frozen=True)
class SolutionSet:
    side: str
    solutions: tuple[Element, ...]

    def __len__(self):
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)


def _free_gaps(a: CofiniteMonotoneMap, b: CofiniteMonotoneMap):
    """For each hole ``y`` of ``ran a``: the values of ``R_b`` it could take."""
    out = []
    for y in a.R:
        # nearest forced points: y -/+ t is forced iff it lies in a(dom b)
        below = y - 1
        while not _forced(a, b, below):
            below -= 1
        above = y + 1
        while not _forced(a, b, above):
            above += 1
        lo = core.evaluate(b, core.evaluate_inverse(a, below))
        hi = core.evaluate(b, core.evaluate_inverse(a, above))
        lo_i, hi_i = bisect_left(b.R, lo), bisect_left(b.R, hi)
        out.append((y, b.R[lo_i:hi_i]))
    return out


def _forced(a: CofiniteMonotoneMap, b: CofiniteMonotoneMap, y: int) -> bool:
    x = core.evaluate_inverse(a, y)
    return x is not None and core.evaluate(b, x) is not None


def _solve_level(a: CofiniteMonotoneMap, b: CofiniteMonotoneMap) -> list[CofiniteMonotoneMap]:
    if not set(a.D) <= set(b.D):
        return []
    blocked = {core.evaluate(a, x) for x in b.D if x not in a.D}
    c = b.c - a.c
    gaps = _free_gaps(a, b)
    results = []

    def walk(index: int, floor: int | None, chosen: dict[int, int]):
        if index == len(gaps):
            D = blocked | {y for y, _ in gaps if y not in chosen}
            R = set(b.R) - set(chosen.values())
            results.append(CofiniteMonotoneMap.from_sets(D, R, c))
            return
        y, values = gaps[index]
        walk(index + 1, floor, chosen)
        for v in values:
            if floor is None or v > floor:
                chosen[y] = v
                walk(index + 1, v, chosen)
                del chosen[y]

    walk(0, None, {})
    return results


def solution_bound(a: Element, b: Element) -> int:
    """Product over free points of (number of candidate values + 1)."""
    _same_n(a, b)
    total = 1
    for x, y in zip(a.comps, b.comps):
        if set(x.D) <= set(y.D):
            total *= math.prod(len(vals) + 1 for _, vals in _free_gaps(x, y))
    return total


def solve_right(a: Element, b: Element) -> SolutionSet:
    """Every ``x`` with ``a x = b``, sorted."""
    _same_n(a, b)
    per_level = [_solve_level(x, y) for x, y in zip(a.comps, b.comps)]
    sols = sorted(Element(a.n, combo) for combo in itertools.product(*per_level))
    for x in sols:
        if compose_el(a, x) != b:
            raise AssertionError(f"solver produced a non-solution {x!r}")
    return SolutionSet("right", tuple(sols))


def solve_left(a: Element, b: Element) -> SolutionSet:
    """Every ``x`` with ``x a = b``: invert ``a^-1 x^-1 = b^-1``."""
    _same_n(a, b)
    mirrored = solve_right(inverse_el(a), inverse_el(b))
    sols = sorted(inverse_el(x) for x in mirrored)
    for x in sols:
        if compose_el(x, a) != b:
            raise AssertionError(f"solver produced a non-solution {x!r}")
    return SolutionSet("left", tuple(sols))


def solve(a: Element, b: Element, side: str) -> SolutionSet:
    if side == "right":
        return solve_right(a, b)
    if side == "left":
        return solve_left(a, b)
    raise DomainError(f"side must be 'left' or 'right', not {side!r}")
