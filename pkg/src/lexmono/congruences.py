"""The congruences sigma_S, the least group congruence and its quotient map.

``sigma_S`` relates two elements that coincide on every level outside ``S``
and share both tail offsets on every level in ``S``.  ``S = {1..n}`` gives the
least group congruence, whose quotient is ``Z^(2n)`` through
:func:`sigma_image`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import core
from .core import CofiniteMonotoneMap
from .errors import DomainError
from .product import Element, _check_level, _same_n, compose_el, embed_factor


@dataclass(frozen=True)
class CongruenceSpec:
    n: int
    S: frozenset[int]

    def __post_init__(self):
        S = frozenset(self.S)
        object.__setattr__(self, "S", S)
        for i in S:
            _check_level(i, self.n)

    @classmethod
    def of(cls, n: int, S: Iterable[int]) -> CongruenceSpec:
        return cls(n, frozenset(S))

    @classmethod
    def full(cls, n: int) -> CongruenceSpec:
        return cls(n, frozenset(range(1, n + 1)))


@dataclass(frozen=True)
class SigmaImage:
    pairs: tuple[tuple[int, int], ...]

    def __add__(self, other: SigmaImage) -> SigmaImage:
        if len(self.pairs) != len(other.pairs):
            raise DomainError("images of different length")
        return SigmaImage(tuple((a + c, b + d)
                                for (a, b), (c, d) in zip(self.pairs, other.pairs)))

    def __neg__(self) -> SigmaImage:
        return SigmaImage(tuple((-a, -b) for a, b in self.pairs))

    def flat(self) -> tuple[int, ...]:
        return tuple(v for pair in self.pairs for v in pair)


def sigma_image(a: Element) -> SigmaImage:
    """Left and right tail offsets of every level."""
    return SigmaImage(tuple((x.c_left, x.c_right) for x in a.comps))


def sigma_preimage(image: SigmaImage) -> Element:
    """Some element mapping to ``image``: a translation followed by skips."""
    comps = []
    for left, right in image.pairs:
        skips = right - left
        step = core.eps(0) if skips >= 0 else core.inverse(core.eps(0))
        comp = core.translation(left)
        for _ in range(abs(skips)):
            comp = core.compose(comp, step)
        comps.append(comp)
    return Element(len(comps), tuple(comps))


def sigma_s_related(a: Element, b: Element, spec: CongruenceSpec) -> bool:
    _same_n(a, b)
    if spec.n != a.n:
        raise DomainError(f"congruence is on n={spec.n}, elements have n={a.n}")
    for i, (x, y) in enumerate(zip(a.comps, b.comps), start=1):
        if i in spec.S:
            if (x.c_left, x.c_right) != (y.c_left, y.c_right):
                return False
        elif x != y:
            return False
    return True


def sigma_related(a: Element, b: Element) -> bool:
    return sigma_s_related(a, b, CongruenceSpec.full(a.n))


def _disagreement_box(x: CofiniteMonotoneMap, y: CofiniteMonotoneMap) -> int:
    """Half-width of a symmetric interval holding every image where x and y differ."""
    dx, ux, _, _ = core.eventual_offsets(x)
    dy, uy, _, _ = core.eventual_offsets(y)
    pts = [abs(p) for p in x.D + x.R + y.D + y.R]
    for k in range(min(dx, dy) + 1, max(ux, uy)):
        vx, vy = core.evaluate(x, k), core.evaluate(y, k)
        if vx != vy:
            pts += [abs(v) for v in (vx, vy) if v is not None]
    return max(pts, default=0)


def sigma_s_witness(a: Element, b: Element, spec: CongruenceSpec) -> Element:
    """An idempotent ``e``, the identity off ``S``, with ``a e = b e``."""
    if not sigma_s_related(a, b, spec):
        raise DomainError(f"elements are not related by sigma_{sorted(spec.S)}")
    comps = []
    for x, y in zip(a.comps, b.comps):
        if x == y:
            comps.append(core.identity())
        else:
            M = _disagreement_box(x, y)
            comps.append(core.idempotent_on(range(-M, M + 1)))
    e = Element(a.n, tuple(comps))
    assert compose_el(a, e) == compose_el(b, e)
    return e


def sigma_witness(a: Element, b: Element) -> Element:
    return sigma_s_witness(a, b, CongruenceSpec.full(a.n))


def spec_compose(s1: CongruenceSpec, s2: CongruenceSpec) -> CongruenceSpec:
    if s1.n != s2.n:
        raise DomainError("chain lengths differ")
    return CongruenceSpec(s1.n, s1.S | s2.S)


def spec_leq(s1: CongruenceSpec, s2: CongruenceSpec) -> bool:
    if s1.n != s2.n:
        raise DomainError("chain lengths differ")
    return s1.S <= s2.S


def chain_witness(a: Element, b: Element, S1: Iterable[int],
                  S2: Iterable[int]) -> Element | None:
    """``g`` with ``a sigma_S1 g`` and ``g sigma_S2 b``, or None if none exists.

    ``g`` takes ``b``'s coordinates on ``S1`` and ``a``'s elsewhere.
    """
    S1, S2 = frozenset(S1), frozenset(S2)
    if not sigma_s_related(a, b, CongruenceSpec(a.n, S1 | S2)):
        return None
    g = Element(a.n, tuple(y if i in S1 else x
                           for i, (x, y) in enumerate(zip(a.comps, b.comps), start=1)))
    return g


def relation_compose_witness(a: Element, b: Element, i: int, j: int) -> Element | None:
    if i == j:
        raise DomainError("indices must be distinct")
    return chain_witness(a, b, {i}, {j})


def pi_projection(a: Element, i: int) -> Element:
    """Keep level ``i`` of ``a``, identity elsewhere."""
    _check_level(i, a.n)
    return embed_factor(a.comps[i - 1], i, a.n)


def pi_min_related(a: Element, b: Element, i: int) -> bool:
    _check_level(i, a.n)
    return sigma_s_related(a, b, CongruenceSpec(a.n, frozenset(range(1, a.n + 1)) - {i}))


def pi_min_witness(a: Element, b: Element, i: int) -> Element | None:
    """Idempotent ``e``, the identity on level ``i``, with ``a e = b e``; None if absent."""
    _check_level(i, a.n)
    spec = CongruenceSpec(a.n, frozenset(range(1, a.n + 1)) - {i})
    if not sigma_s_related(a, b, spec):
        return None
    return sigma_s_witness(a, b, spec)

