"""Single-coordinate elements: cofinite monotone partial bijections of Z.

Every monotone injective partial map of Z with cofinite domain and range is
stored as a triple ``(D, R, c)``: the finite set of points missing from the
domain, the finite set of points missing from the range, and the translation
``c`` that conjugates the rank maps of ``Z \\ D`` and ``Z \\ R``::

    x  |->  unrank_R(rank_D(x) + c)        for x not in D

where ``rank_S(x) = x - #{s in S : s < x}``.  The triple is canonical: two
maps are equal exactly when their triples are equal.

Maps compose left to right, ``x(ab) = (xa)b``.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError

INT_MIN = -(2 ** 63)
INT_MAX = 2 ** 63 - 1


def _checked(value: int) -> int:
    if not INT_MIN <= value <= INT_MAX:
        raise OverflowError(f"integer {value} outside signed 64-bit range")
    return value


def _strictly_sorted(points: tuple[int, ...]) -> bool:
    return all(p < q for p, q in zip(points, points[1:]))


@dataclass(frozen=True, order=True)
class CofiniteMonotoneMap:
    D: tuple[int, ...] = ()
    R: tuple[int, ...] = ()
    c: int = 0

    def __post_init__(self):
        for name in ("D", "R"):
            pts = getattr(self, name)
            if not isinstance(pts, tuple):
                pts = tuple(pts)
                object.__setattr__(self, name, pts)
            for p in pts:
                if not isinstance(p, int) or isinstance(p, bool):
                    raise TypeError(f"{name} entries must be integers, got {p!r}")
                _checked(p)
            if not _strictly_sorted(pts):
                raise DomainError(f"{name} must be strictly increasing: {pts}")
        if not isinstance(self.c, int) or isinstance(self.c, bool):
            raise TypeError(f"shift must be an integer, got {self.c!r}")
        _checked(self.c)

    @classmethod
    def from_sets(cls, D: Iterable[int], R: Iterable[int], c: int) -> CofiniteMonotoneMap:
        """Build from unordered exclusion sets."""
        return cls(tuple(sorted(set(D))), tuple(sorted(set(R))), c)

    def __repr__(self):
        D = ",".join(map(str, self.D))
        R = ",".join(map(str, self.R))
        return f"({{{D}}};{{{R}}};{self.c})"

    def __mul__(self, other: CofiniteMonotoneMap) -> CofiniteMonotoneMap:
        return compose(self, other)

    def __call__(self, x: int) -> int | None:
        return evaluate(self, x)

    @property
    def c_left(self) -> int:
        return self.c

    @property
    def c_right(self) -> int:
        return _checked(self.c + len(self.R) - len(self.D))


def identity() -> CofiniteMonotoneMap:
    return CofiniteMonotoneMap()


def translation(k: int) -> CofiniteMonotoneMap:
    """The unit ``x -> x + k``."""
    return CofiniteMonotoneMap((), (), k)


def eps(k: int) -> CofiniteMonotoneMap:
    """The total map fixing ``x <= k`` and sending ``x > k`` to ``x + 1``."""
    return CofiniteMonotoneMap((), (_checked(k + 1),), 0)


def _rank(excluded: tuple[int, ...], x: int) -> int:
    return x - bisect_left(excluded, x)


def _unrank(excluded: tuple[int, ...], y: int) -> int:
    x = y
    for r in excluded:
        if r <= x:
            x += 1
        else:
            break
    return x


def evaluate(a: CofiniteMonotoneMap, x: int) -> int | None:
    """Image of ``x`` under ``a``; ``None`` when ``x`` is outside the domain."""
    i = bisect_left(a.D, x)
    if i < len(a.D) and a.D[i] == x:
        return None
    return _checked(_unrank(a.R, _checked(x - i + a.c)))


def evaluate_inverse(a: CofiniteMonotoneMap, y: int) -> int | None:
    """Preimage of ``y`` under ``a``; ``None`` when ``y`` is outside the range."""
    i = bisect_left(a.R, y)
    if i < len(a.R) and a.R[i] == y:
        return None
    return _checked(_unrank(a.D, _checked(y - i - a.c)))


def inverse(a: CofiniteMonotoneMap) -> CofiniteMonotoneMap:
    return CofiniteMonotoneMap(a.R, a.D, _checked(-a.c))


def compose(a: CofiniteMonotoneMap, b: CofiniteMonotoneMap) -> CofiniteMonotoneMap:
    """The product ``ab``: apply ``a`` first, then ``b``.

    The new domain holes are the holes of ``a`` plus the ``a``-preimages of the
    holes of ``b``; dually for the range.  Left offsets add.
    """
    D = set(a.D)
    for d in b.D:
        pre = evaluate_inverse(a, d)
        if pre is not None:
            D.add(pre)
    R = set(b.R)
    for r in a.R:
        img = evaluate(b, r)
        if img is not None:
            R.add(img)
    return CofiniteMonotoneMap(tuple(sorted(D)), tuple(sorted(R)), _checked(a.c + b.c))


def eventual_offsets(a: CofiniteMonotoneMap) -> tuple[int, int, int, int]:
    """Return ``(d, u, c_left, c_right)``.

    ``a(x) = x + c_left`` for every ``x <= d`` and ``a(x) = x + c_right`` for
    every ``x >= u``.  For units both thresholds are reported as 0.
    """
    c_left, c_right = a.c, a.c_right
    if not a.D and not a.R:
        return 0, 0, c_left, c_right
    low = list(a.D) + [r - c_left for r in a.R]
    high = list(a.D) + [r - c_right for r in a.R]
    return _checked(min(low) - 1), _checked(max(high) + 1), c_left, c_right


def is_idempotent(a: CofiniteMonotoneMap) -> bool:
    return a.D == a.R and a.c == 0


def is_unit(a: CofiniteMonotoneMap) -> bool:
    return not a.D and not a.R


def natural_leq(e: CofiniteMonotoneMap, f: CofiniteMonotoneMap) -> bool:
    """Natural order on idempotents: ``e <= f`` iff ``dom e`` is inside ``dom f``."""
    if not (is_idempotent(e) and is_idempotent(f)):
        raise DomainError("natural_leq is defined on idempotents only")
    return set(e.D) >= set(f.D)


def in_dom_full(a: CofiniteMonotoneMap) -> bool:
    return not a.D


def in_ran_full(a: CofiniteMonotoneMap) -> bool:
    return not a.R


def idempotent_on(excluded: Iterable[int]) -> CofiniteMonotoneMap:
    """Identity map of ``Z`` minus a finite set."""
    pts = tuple(sorted(set(excluded)))
    return CofiniteMonotoneMap(pts, pts, 0)
