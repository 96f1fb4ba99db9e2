"""Elements on ``{1..n} x Z`` with the lexicographic order.

A monotone injection with cofinite domain never moves a point to another
level, so an element is just one :class:`CofiniteMonotoneMap` per level and
the monoid is the n-fold direct product of the single-level monoid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, NamedTuple, Sequence

from . import core
from .core import CofiniteMonotoneMap
from .errors import DomainError, ValidationError

if TYPE_CHECKING:
    from .oracle import WindowedMap


class LexPoint(NamedTuple):
    level: int
    pos: int


@dataclass(frozen=True, order=True)
class Element:
    n: int
    comps: tuple[CofiniteMonotoneMap, ...]

    def __post_init__(self):
        if not isinstance(self.comps, tuple):
            object.__setattr__(self, "comps", tuple(self.comps))
        if self.n < 1:
            raise DomainError(f"chain length must be positive, got {self.n}")
        if len(self.comps) != self.n:
            raise DomainError(f"expected {self.n} coordinates, got {len(self.comps)}")

    @classmethod
    def of(cls, *comps: CofiniteMonotoneMap) -> Element:
        return cls(len(comps), tuple(comps))

    def __repr__(self):
        return "<" + ", ".join(map(repr, self.comps)) + ">"

    def __mul__(self, other: Element) -> Element:
        return compose_el(self, other)

    def __getitem__(self, level: int) -> CofiniteMonotoneMap:
        """Coordinate at 1-based ``level``."""
        _check_level(level, self.n)
        return self.comps[level - 1]

    def replace(self, level: int, comp: CofiniteMonotoneMap) -> Element:
        _check_level(level, self.n)
        comps = list(self.comps)
        comps[level - 1] = comp
        return Element(self.n, tuple(comps))


def _check_level(level: int, n: int) -> None:
    if not 1 <= level <= n:
        raise DomainError(f"level {level} outside 1..{n}")


def _same_n(a: Element, b: Element) -> None:
    if a.n != b.n:
        raise DomainError(f"chain lengths differ: {a.n} vs {b.n}")


def identity_el(n: int) -> Element:
    return Element(n, (core.identity(),) * n)


def evaluate_lex(a: Element, p: LexPoint | tuple[int, int]) -> LexPoint | None:
    level, pos = p
    _check_level(level, a.n)
    m = core.evaluate(a.comps[level - 1], pos)
    return None if m is None else LexPoint(level, m)


def compose_el(a: Element, b: Element) -> Element:
    _same_n(a, b)
    return Element(a.n, tuple(core.compose(x, y) for x, y in zip(a.comps, b.comps)))


def inverse_el(a: Element) -> Element:
    return Element(a.n, tuple(core.inverse(x) for x in a.comps))


def product(elements: Iterable[Element], n: int) -> Element:
    """Left-to-right product; the empty product is the identity."""
    out = identity_el(n)
    for x in elements:
        out = compose_el(out, x)
    return out


def is_unit(a: Element) -> bool:
    return all(core.is_unit(x) for x in a.comps)


def unit_vector(a: Element) -> tuple[int, ...]:
    if not is_unit(a):
        raise DomainError("unit_vector needs a unit")
    return tuple(x.c for x in a.comps)


def unit_from_vector(shifts: Sequence[int]) -> Element:
    return Element(len(shifts), tuple(core.translation(k) for k in shifts))


def is_idempotent(a: Element) -> bool:
    return all(core.is_idempotent(x) for x in a.comps)


def embed_factor(a: CofiniteMonotoneMap, i: int, n: int) -> Element:
    """The element acting as ``a`` on level ``i`` and as the identity elsewhere."""
    _check_level(i, n)
    return identity_el(n).replace(i, a)


def excluded_dom(a: Element) -> tuple[tuple[int, ...], ...]:
    return tuple(x.D for x in a.comps)


def excluded_ran(a: Element) -> tuple[tuple[int, ...], ...]:
    return tuple(x.R for x in a.comps)


def validate_raw(raw: WindowedMap) -> Element:
    """Check a finite table with declared tails and return the element it describes.

    The table covers ``{1..n} x [-W, W]``; window points without an entry are
    outside the domain.  Outside the window level ``i`` is assumed to act as
    ``x + cL`` on the left and ``x + cR`` on the right.  Raises
    :class:`ValidationError` naming the first property that fails.
    """
    n, W = raw.n, raw.W
    if n < 1 or W < 0:
        raise ValidationError("malformed", f"bad shape n={n}, W={W}")
    if len(raw.tails) != n:
        raise ValidationError("malformed", f"expected {n} tail pairs, got {len(raw.tails)}")
    for (i, k), (j, m) in raw.table.items():
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValidationError("malformed", f"level out of range in ({i},{k})->({j},{m})")
        if not -W <= k <= W:
            raise ValidationError("malformed", f"source ({i},{k}) outside window")
    for (i, k), (j, m) in sorted(raw.table.items()):
        if i != j:
            raise ValidationError(
                "coordinate-mixing",
                f"({i},{k}) -> ({j},{m}) changes level; impossible with cofinite domain")
    images: dict[tuple[int, int], tuple[int, int]] = {}
    for src, dst in sorted(raw.table.items()):
        if dst in images:
            raise ValidationError("injectivity", f"{images[dst]} and {src} both map to {dst}")
        images[dst] = src
    comps = []
    for level in range(1, n + 1):
        rows = sorted((k, m) for (i, k), (_, m) in raw.table.items() if i == level)
        for (k1, m1), (k2, m2) in zip(rows, rows[1:]):
            if m1 >= m2:
                raise ValidationError(
                    "monotonicity", f"({level},{k1})->({level},{m1}) but ({level},{k2})->({level},{m2})")
        cL, cR = raw.tails[level - 1]
        lo, hi = -W + cL, W + cR
        for k, m in rows:
            if not lo <= m <= hi:
                raise ValidationError(
                    "tail-inconsistency",
                    f"({level},{k})->({level},{m}) leaves [{lo},{hi}] between the declared tails")
        D = tuple(k for k in range(-W, W + 1) if (level, k) not in raw.table)
        hit = {m for _, m in rows}
        R = tuple(m for m in range(lo, hi + 1) if m not in hit)
        comp = CofiniteMonotoneMap(D, R, cL)
        if comp.c_right != cR or any(core.evaluate(comp, k) != m for k, m in rows):
            raise ValidationError("tail-inconsistency", f"level {level} does not match its tails")
        comps.append(comp)
    return Element(n, tuple(comps))
