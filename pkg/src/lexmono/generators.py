"""Generator words, their evaluation, and factorization into generators.

Symbols are the skip ``E(k,j)`` (fixes ``x <= k`` on level ``j`` and pushes
larger points up by one), its inverse ``Einv(k,j)`` and the translation
``S(k,j)``.  A word is read left to right, like every product here.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from . import core
from .core import CofiniteMonotoneMap
from .errors import DomainError, ParseError
from .product import Element, compose_el, embed_factor, inverse_el


class Kind(enum.Enum):
    EPS = "E"
    EPS_INV = "Einv"
    SHIFT = "S"


class GenSymbol(NamedTuple):
    kind: Kind
    k: int
    j: int = 1

    def __str__(self):
        return f"{self.kind.value}({self.k},{self.j})"

    def to_map(self) -> CofiniteMonotoneMap:
        if self.kind is Kind.EPS:
            return core.eps(self.k)
        if self.kind is Kind.EPS_INV:
            return core.inverse(core.eps(self.k))
        return core.translation(self.k)

    def inverse(self) -> GenSymbol:
        if self.kind is Kind.SHIFT:
            return GenSymbol(Kind.SHIFT, -self.k, self.j)
        flipped = Kind.EPS_INV if self.kind is Kind.EPS else Kind.EPS
        return GenSymbol(flipped, self.k, self.j)


@dataclass(frozen=True)
class GenWord:
    n: int
    syms: tuple[GenSymbol, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "syms", tuple(self.syms))
        for s in self.syms:
            if not 1 <= s.j <= self.n:
                raise DomainError(f"symbol {s} acts on level {s.j}, outside 1..{self.n}")

    def __len__(self):
        return len(self.syms)

    def __str__(self):
        if self.n == 1:
            return " ".join(f"{s.kind.value}({s.k})" for s in self.syms)
        return " ".join(map(str, self.syms))


_TOKEN = re.compile(r"(Einv|E|S)\((-?\d+)(?:,(-?\d+))?\)")


def parse_word(text: str, n: int) -> GenWord:
    """Parse whitespace-separated ``E(k,j)``, ``Einv(k,j)``, ``S(k,j)`` tokens.

    ``j`` may be left out when ``n == 1``.
    """
    syms = []
    for index, token in enumerate(text.split()):
        m = _TOKEN.fullmatch(token)
        if m is None:
            raise ParseError(f"bad generator token {token!r}", token=index)
        kind, k, j = m.group(1), int(m.group(2)), m.group(3)
        if j is None:
            if n != 1:
                raise ParseError(f"token {token!r} needs a level when n={n}", token=index)
            j = 1
        j = int(j)
        if not 1 <= j <= n:
            raise ParseError(f"level {j} in {token!r} outside 1..{n}", token=index)
        syms.append(GenSymbol(Kind(kind), k, j))
    return GenWord(n, tuple(syms))


def eval_word(w: GenWord) -> Element:
    comps = [core.identity()] * w.n
    for s in w.syms:
        comps[s.j - 1] = core.compose(comps[s.j - 1], s.to_map())
    return Element(w.n, tuple(comps))


def factor_O(a: Element) -> tuple[Element, Element]:
    """Split ``a = b g`` with ``b`` onto everything and ``g`` defined everywhere."""
    b = Element(a.n, tuple(CofiniteMonotoneMap(x.D, (), 0) for x in a.comps))
    g = Element(a.n, tuple(CofiniteMonotoneMap((), x.R, x.c) for x in a.comps))
    return b, g


def _skips_for(R: tuple[int, ...]) -> list[int]:
    # Emitting skips for the holes from largest to smallest: each later skip
    # pushes every earlier-made hole up by one, so hole t (1-based) is made
    # at r_t - (t - 1), i.e. by E(r_t - t).
    return [r - t for t, r in reversed(list(enumerate(R, start=1)))]


def factor_level(a: CofiniteMonotoneMap, j: int = 1) -> list[GenSymbol]:
    """Word over ``E``, ``Einv`` and ``S(+-1)`` on level ``j`` evaluating to ``a``."""
    # a = (D; {}; 0) . (R; c) where the first factor is the inverse of (∅; D; 0).
    total_D = [GenSymbol(Kind.EPS, k, j) for k in _skips_for(a.D)]
    word = [s.inverse() for s in reversed(total_D)]
    step = 1 if a.c > 0 else -1
    word += [GenSymbol(Kind.SHIFT, step, j)] * abs(a.c)
    word += [GenSymbol(Kind.EPS, k, j) for k in _skips_for(a.R)]
    return word


def factor_into_generators(a: Element) -> GenWord:
    syms = []
    for j, comp in enumerate(a.comps, start=1):
        syms += factor_level(comp, j)
    return GenWord(a.n, tuple(syms))


def length_budget(a: Element) -> int:
    return 4 * sum(len(x.D) + len(x.R) + abs(x.c) + 1 for x in a.comps)


def antiiso(a: CofiniteMonotoneMap) -> CofiniteMonotoneMap:
    """Inversion, restricted to everywhere-defined maps."""
    if a.D:
        raise DomainError("antiiso expects an everywhere-defined map")
    return core.inverse(a)


@dataclass(frozen=True)
class Budget:
    """Truncation for searches: holes per level, shift size, hole positions."""

    excl: int = 2
    shift: int = 2
    span: int = 3

    def admits(self, a: Element) -> bool:
        return all(len(x.D) <= self.excl and len(x.R) <= self.excl
                   and abs(x.c) <= self.shift
                   and all(abs(p) <= self.span for p in x.D + x.R)
                   for x in a.comps)


def skip_shift_generators(n: int, ks: Iterable[int] | None = None) -> list[Element]:
    """``E(k_j, j)`` and ``S(1, j)`` for every level ``j``."""
    ks = list(ks) if ks is not None else [0] * n
    gens = [embed_factor(core.eps(k), j, n) for j, k in enumerate(ks, start=1)]
    gens += [embed_factor(core.translation(1), j, n) for j in range(1, n + 1)]
    return gens


def _may_fit(x: Element, y: Element, budget: Budget) -> bool:
    # Holes of x's domain and y's range survive in xy; left shifts add.
    return all(abs(a.c + b.c) <= budget.shift for a, b in zip(x.comps, y.comps))


def closure_search(gens: Iterable[Element], budget: Budget,
                   pairwise: bool = True) -> set[Element]:
    """Inverse subsemigroup generated by ``gens``, truncated to ``budget``.

    Breadth-first and semi-naive: each round multiplies the newly found
    elements with everything found so far, on both sides, and inverts them;
    products outside the budget are dropped.  With ``pairwise=False`` new
    elements are only multiplied by the generators and their inverses, which
    is much faster but can miss elements whose every factorization leaves the
    budget.
    """
    gens = list(gens)
    letters = sorted(set(gens) | {inverse_el(g) for g in gens})
    seen = {g for g in letters if budget.admits(g)}
    found = sorted(seen)
    fresh = list(found)
    while fresh:
        found_next = []
        for x in fresh:
            partners = found if pairwise else letters
            cands = [inverse_el(x)]
            for y in partners:
                if _may_fit(x, y, budget):
                    cands.append(compose_el(x, y))
                if _may_fit(y, x, budget):
                    cands.append(compose_el(y, x))
            for z in cands:
                if z not in seen and budget.admits(z):
                    seen.add(z)
                    found_next.append(z)
                    if pairwise:
                        found.append(z)
        fresh = found_next
    return seen


def budget_slice(n: int, budget: Budget) -> set[Element]:
    """Every element admitted by ``budget``, by direct enumeration."""
    pts = range(-budget.span, budget.span + 1)
    holes = [s for r in range(budget.excl + 1) for s in itertools.combinations(pts, r)]
    level = [CofiniteMonotoneMap(D, R, c)
             for D in holes for R in holes for c in range(-budget.shift, budget.shift + 1)]
    return {Element(n, combo) for combo in itertools.product(level, repeat=n)}

