"""Green's relations, idempotents as finite sets, and bisimplicity witnesses."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import core
from .core import CofiniteMonotoneMap
from .errors import DomainError
from .product import (Element, LexPoint, _same_n, excluded_dom, excluded_ran,
                      inverse_el, is_idempotent)


@dataclass(frozen=True)
class IdempotentFinset:
    """The finite complement of an idempotent's domain."""

    n: int
    excluded: frozenset[LexPoint]

    def __post_init__(self):
        pts = frozenset(LexPoint(*p) for p in self.excluded)
        object.__setattr__(self, "excluded", pts)
        for p in pts:
            if not 1 <= p.level <= self.n:
                raise DomainError(f"point {p} outside levels 1..{self.n}")

    def __or__(self, other: IdempotentFinset) -> IdempotentFinset:
        if self.n != other.n:
            raise DomainError("chain lengths differ")
        return IdempotentFinset(self.n, self.excluded | other.excluded)


def _need_idempotent(*es: Element) -> None:
    for e in es:
        if not is_idempotent(e):
            raise DomainError(f"{e!r} is not idempotent")


def r_related(a: Element, b: Element) -> bool:
    _same_n(a, b)
    return excluded_dom(a) == excluded_dom(b)


def l_related(a: Element, b: Element) -> bool:
    _same_n(a, b)
    return excluded_ran(a) == excluded_ran(b)


def h_related(a: Element, b: Element) -> bool:
    return r_related(a, b) and l_related(a, b)


def d_related(a: Element, b: Element) -> bool:
    # The monoid is bisimple; dclass_witness produces the connecting pair.
    _same_n(a, b)
    return True


GREEN = {"r": r_related, "l": l_related, "h": h_related, "d": d_related}


def order_iso(A_excl: Sequence[Iterable[int]], B_excl: Sequence[Iterable[int]],
              shifts: Sequence[int]) -> Element:
    """An order isomorphism between two cofinite subsets of ``{1..n} x Z``.

    ``shifts`` picks one of the infinitely many choices on each level.
    """
    if not len(A_excl) == len(B_excl) == len(shifts):
        raise DomainError("per-level inputs must have equal length")
    comps = tuple(CofiniteMonotoneMap.from_sets(A, B, c)
                  for A, B, c in zip(A_excl, B_excl, shifts))
    return Element(len(comps), comps)


def dclass_witness(e: Element, f: Element,
                   shifts: Sequence[int] | None = None) -> tuple[Element, Element]:
    """Return ``(a, b)`` with ``a b = e`` and ``b a = f``."""
    _same_n(e, f)
    _need_idempotent(e, f)
    if shifts is None:
        shifts = (0,) * e.n
    a = order_iso(excluded_dom(e), excluded_dom(f), shifts)
    return a, inverse_el(a)


def to_finset(e: Element) -> IdempotentFinset:
    _need_idempotent(e)
    pts = {LexPoint(level, p) for level, comp in enumerate(e.comps, 1) for p in comp.D}
    return IdempotentFinset(e.n, frozenset(pts))


def from_finset(s: IdempotentFinset) -> Element:
    comps = tuple(core.idempotent_on(p.pos for p in s.excluded if p.level == level)
                  for level in range(1, s.n + 1))
    return Element(s.n, comps)


def upset(e: Element) -> set[Element]:
    """All idempotents above ``e`` in the natural order."""
    fs = to_finset(e)
    pts = sorted(fs.excluded)
    return {from_finset(IdempotentFinset(e.n, frozenset(sub)))
            for r in range(len(pts) + 1)
            for sub in itertools.combinations(pts, r)}


def natural_leq_el(e: Element, f: Element) -> bool:
    _same_n(e, f)
    _need_idempotent(e, f)
    return to_finset(e).excluded >= to_finset(f).excluded


def descend_chain(e: Element, m: int) -> list[Element]:
    """``m`` strictly decreasing idempotents starting at ``e``.

    Each step removes the least point ``(level, pos)`` with ``pos >= 0`` that
    is still in the domain, scanning level 1 first.
    """
    _need_idempotent(e)
    if m < 1:
        raise DomainError("chain length must be positive")
    chain = [e]
    excluded = set(to_finset(e).excluded)
    while len(chain) < m:
        level, pos = 1, 0
        while LexPoint(level, pos) in excluded:
            pos += 1
        excluded.add(LexPoint(level, pos))
        chain.append(from_finset(IdempotentFinset(e.n, frozenset(excluded))))
    return chain
