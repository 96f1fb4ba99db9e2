"""Brute-force windowed shadows of elements, used to cross-check everything else.

Nothing here goes through the rank/unrank arithmetic of :mod:`lexmono.core`:
tables are produced by walking the integers and handing out range points in
order, and composition is plain dictionary lookup.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import CofiniteMonotoneMap
from .errors import DomainError
from .product import Element, evaluate_lex

Point = tuple[int, int]


@dataclass(frozen=True)
class WindowedMap:
    """A finite table on ``{1..n} x [-W, W]`` plus per-level tail offsets."""

    n: int
    W: int
    table: dict[Point, Point] = field(hash=False)
    tails: tuple[tuple[int, int], ...]


def tabulate(D, R, c, lo: int, hi: int) -> tuple[dict[int, int], int]:
    """Walk the map described by ``(D, R, c)`` over ``[lo, hi]``.

    Returns the table and the right tail offset observed past every hole.
    """
    Dset, Rset = set(D), set(R)
    start = min([lo] + list(D) + [r - c for r in R]) - 1
    stop = max([hi] + list(D)) + 1
    table = {}
    x, y = start, start + c
    right = None
    while True:
        if x not in Dset:
            while y in Rset:
                y += 1
            if lo <= x <= hi:
                table[x] = y
            if x >= stop and y > max(Rset, default=y - 1):
                right = y - x
                break
            y += 1
        x += 1
    return table, right


def from_element(a: Element, W: int) -> WindowedMap:
    """Faithful shadow of ``a``; ``W`` must contain every hole with its tails."""
    table = {}
    tails = []
    for level, comp in enumerate(a.comps, start=1):
        left = comp.c
        if comp.D or comp.R:
            reach = [abs(p) for p in comp.D] + [abs(r - left) for r in comp.R]
            rows, right = tabulate(comp.D, comp.R, comp.c, -W, W)
            reach += [abs(r - right) for r in comp.R]
            if max(reach) >= W:
                raise DomainError(f"window {W} too small for level {level} of {a!r}")
        else:
            rows, right = tabulate((), (), comp.c, -W, W)
        table.update({(level, k): (level, m) for k, m in rows.items()})
        tails.append((left, right))
    return WindowedMap(a.n, W, table, tuple(tails))


def _margin(x: WindowedMap) -> int:
    shifts = [abs(m - k) for (_, k), (_, m) in x.table.items()]
    shifts += [abs(t) for pair in x.tails for t in pair]
    return max(shifts, default=0)


def restrict(x: WindowedMap, W: int) -> WindowedMap:
    if W > x.W:
        raise DomainError(f"cannot widen window {x.W} to {W}")
    table = {p: q for p, q in x.table.items() if -W <= p[1] <= W}
    return WindowedMap(x.n, W, table, x.tails)


def compose_windowed(x: WindowedMap, y: WindowedMap) -> WindowedMap:
    """Pointwise product (``x`` first) on the window shrunk by ``x``'s reach."""
    if x.n != y.n or x.W != y.W:
        raise DomainError("windows are incompatible")
    W = x.W - _margin(x)
    if W < 0:
        raise DomainError("window too small to compose")
    table = {}
    for (i, k), mid in x.table.items():
        if -W <= k <= W and mid in y.table:
            table[(i, k)] = y.table[mid]
    tails = tuple((a + c, b + d) for (a, b), (c, d) in zip(x.tails, y.tails))
    return WindowedMap(x.n, W, table, tails)


def inverse_windowed(x: WindowedMap) -> WindowedMap:
    W = x.W - _margin(x)
    if W < 0:
        raise DomainError("window too small to invert")
    table = {q: p for p, q in x.table.items() if -W <= q[1] <= W}
    tails = tuple((-a, -b) for a, b in x.tails)
    return WindowedMap(x.n, W, table, tails)


def agree(x: WindowedMap, a: Element) -> bool:
    """Whether ``x`` matches ``a`` on every window point and in its tails."""
    if x.n != a.n:
        return False
    for level in range(1, a.n + 1):
        for k in range(-x.W, x.W + 1):
            got = x.table.get((level, k))
            want = evaluate_lex(a, (level, k))
            if got != (None if want is None else tuple(want)):
                return False
    return all(t == (comp.c_left, comp.c_right) for t, comp in zip(x.tails, a.comps))


def _candidates_1d(a: CofiniteMonotoneMap, b: CofiniteMonotoneMap, bound: int):
    # Tail offsets add under composition, so both offsets of a solution are
    # forced; and every range hole of a solution is a range hole of b.
    c = b.c_left - a.c_left
    gap = (b.c_right - a.c_right) - c
    if abs(c) > bound:
        return
    pool = range(-bound, bound + 1)
    for nr in range(len(b.R) + 1):
        for R in itertools.combinations(b.R, nr):
            nd = nr - gap
            if nd < 0:
                continue
            for D in itertools.combinations(pool, nd):
                yield CofiniteMonotoneMap(D, R, c)


def _solves(ta, ra, tb, rb, x: CofiniteMonotoneMap, W: int) -> bool:
    tx, rx = tabulate(x.D, x.R, x.c, min(ta.values()), max(ta.values()))
    if ra + rx != rb:
        return False
    for k in range(-W, W + 1):
        mid = ta.get(k)
        if (None if mid is None else tx.get(mid)) != tb.get(k):
            return False
    return True


def brute_solutions(a: Element, b: Element, bound: int) -> list[Element]:
    """Every ``x`` with holes in ``[-bound, bound]`` and ``|shift| <= bound`` with ``a x = b``.

    Coordinates are searched independently since the monoid is a direct
    product; candidates are checked by table lookup on a window wide enough
    to see every hole of ``a``, ``b`` and the candidate.
    """
    if a.n != b.n:
        raise DomainError("chain lengths differ")
    per_level = []
    for ca, cb in zip(a.comps, b.comps):
        pts = [abs(p) for m in (ca, cb) for p in m.D + m.R]
        W = 4 * (max(pts + [bound]) + max(abs(ca.c), abs(cb.c), bound)) + 4
        ta, ra = tabulate(ca.D, ca.R, ca.c, -W, W)
        tb, rb = tabulate(cb.D, cb.R, cb.c, -W, W)
        sols = [x for x in _candidates_1d(ca, cb, bound) if _solves(ta, ra, tb, rb, x, W)]
        per_level.append(sols)
    return sorted(Element(a.n, combo) for combo in itertools.product(*per_level))
