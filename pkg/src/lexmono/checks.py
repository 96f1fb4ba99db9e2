"""Seeded property suite; one function per acceptance criterion.

Each check returns a :class:`CheckResult`.  ``scale`` shrinks the sample
counts (the CLI's ``--quick``); ``scale=1`` runs the full sizes.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

from . import automorphisms as am
from . import congruences as cg
from . import core
from . import generators as gen
from . import oracle
from . import solver
from . import structure as st
from .core import CofiniteMonotoneMap
from .errors import DomainError, ValidationError
from .generators import Budget
from .product import (Element, compose_el, embed_factor, inverse_el, is_idempotent,
                      unit_from_vector, validate_raw)
from .sampling import SplitMix64, rand_map, random_element, random_idempotent


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, what: str) -> None:
        self.cases += 1
        if not ok and len(self.failures) < 20:
            self.failures.append(what)
        elif not ok:
            self.failures.append("...")

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "" if self.passed else f"  first failure: {self.failures[0]}"
        return f"{status}  {self.name:<34} {self.cases:>7} cases  {self.seconds:6.2f}s{extra}"


def _count(full: int, scale: float) -> int:
    return max(1, int(full * scale))


def sigma_zero_map(rng: SplitMix64, budget: Budget) -> CofiniteMonotoneMap:
    """A random map with both tail offsets zero."""
    z = rand_map(rng, budget)
    fix = cg.sigma_preimage(cg.SigmaImage(((-z.c_left, -z.c_right),))).comps[0]
    return core.compose(z, fix)


def related_copy(rng: SplitMix64, a: Element, S, budget: Budget) -> Element:
    """Perturb ``a`` on the levels in ``S`` without changing any tail offset."""
    comps = list(a.comps)
    for i in S:
        comps[i - 1] = core.compose(comps[i - 1], sigma_zero_map(rng, budget))
    return Element(a.n, tuple(comps))


def eventually_agree(x: CofiniteMonotoneMap, y: CofiniteMonotoneMap) -> bool:
    """Whether ``x`` and ``y`` coincide outside some finite interval, by evaluation."""
    thresholds = core.eventual_offsets(x)[:2] + core.eventual_offsets(y)[:2]
    p = max(abs(t) for t in thresholds) + 1
    return all(core.evaluate(x, s * q) == core.evaluate(y, s * q)
               for s in (1, -1) for q in (p, p + 1))


def check_oracle(seed: int = 1, scale: float = 1.0) -> CheckResult:
    res = CheckResult("1 oracle equivalence")
    rng = SplitMix64(seed)
    budget = Budget(excl=6, shift=8, span=12)
    W = 50
    for _ in range(_count(1000, scale)):
        n = rng.choice((1, 2, 3))
        a, b = random_element(rng, n, budget), random_element(rng, n, budget)
        wa, wb = oracle.from_element(a, W), oracle.from_element(b, W)
        res.expect(oracle.agree(wa, a), f"evaluate {a!r}")
        res.expect(oracle.agree(oracle.compose_windowed(wa, wb), compose_el(a, b)),
                   f"compose {a!r} {b!r}")
        res.expect(oracle.agree(oracle.inverse_windowed(wa), inverse_el(a)), f"inverse {a!r}")
    return res


def check_axioms(seed: int = 2, scale: float = 1.0) -> CheckResult:
    res = CheckResult("2 inverse-semigroup axioms")
    rng = SplitMix64(seed)
    budget = Budget(excl=3, shift=3, span=5)
    count = _count(500, scale)
    for _ in range(count):
        n = rng.choice((1, 2, 3))
        a, b, c = (random_element(rng, n, budget) for _ in range(3))
        res.expect((a * b) * c == a * (b * c), f"associativity {a!r} {b!r} {c!r}")
    for _ in range(count):
        n = rng.choice((1, 2, 3))
        a = random_element(rng, n, budget)
        ai = inverse_el(a)
        res.expect(a * ai * a == a and ai * a * ai == ai, f"inverse laws {a!r}")
        # every inverse x of a has a x = a a^-1, so the solver sees all of them
        inverses = [x for x in solver.solve_right(a, a * ai) if a * x * a == a and x * a * x == x]
        res.expect(inverses == [ai], f"unique inverse {a!r}: {inverses}")
    for _ in range(count):
        n = rng.choice((1, 2, 3))
        e, f = random_idempotent(rng, n, budget), random_idempotent(rng, n, budget)
        res.expect(e * f == f * e and is_idempotent(e * f), f"idempotents commute {e!r} {f!r}")
    return res


def check_sigma(seed: int = 3, scale: float = 1.0) -> CheckResult:
    res = CheckResult("3 quotient onto Z^2n")
    rng = SplitMix64(seed)
    budget = Budget(excl=3, shift=3, span=5)
    count = _count(500, scale)
    for _ in range(count):
        n = rng.choice((1, 2, 3))
        a, b = random_element(rng, n, budget), random_element(rng, n, budget)
        res.expect(cg.sigma_image(a * b) == cg.sigma_image(a) + cg.sigma_image(b),
                   f"additivity {a!r} {b!r}")
    for n in (1, 2):
        for flat in itertools.product(range(-3, 4), repeat=2 * n):
            target = cg.SigmaImage(tuple(zip(flat[::2], flat[1::2])))
            pre = cg.sigma_preimage(target)
            tails = oracle.from_element(pre, 20).tails
            res.expect(cg.sigma_image(pre) == target and tails == target.pairs,
                       f"preimage of {flat}")
    pairs = []
    for _ in range(count):
        n = rng.choice((1, 2, 3))
        pairs.append((random_element(rng, n, budget), random_element(rng, n, budget)))
    for _ in range(_count(100, scale)):
        n = rng.choice((1, 2, 3))
        a = random_element(rng, n, budget)
        pairs.append((a, related_copy(rng, a, range(1, n + 1), budget)))
    for a, b in pairs:
        by_image = cg.sigma_image(a) == cg.sigma_image(b)
        by_tails = all(eventually_agree(x, y) for x, y in zip(a.comps, b.comps))
        try:
            e = cg.sigma_witness(a, b)
            by_witness = is_idempotent(e) and a * e == b * e
        except DomainError:
            by_witness = False
        res.expect(by_image == by_tails == by_witness == cg.sigma_related(a, b),
                   f"kernel {a!r} {b!r}: {by_image} {by_tails} {by_witness}")
    return res


def _subsets(n: int):
    levels = range(1, n + 1)
    return [frozenset(s) for r in range(n + 1) for s in itertools.combinations(levels, r)]


def check_congruences(seed: int = 4, scale: float = 1.0) -> CheckResult:
    res = CheckResult("4 congruence lattice")
    rng = SplitMix64(seed)
    budget = Budget(excl=3, shift=3, span=5)
    for _ in range(_count(300, scale)):
        n = rng.choice((1, 2, 3))
        subsets = _subsets(n)
        S = rng.choice(subsets)
        spec = cg.CongruenceSpec(n, S)
        a = random_element(rng, n, budget)
        b = related_copy(rng, a, S, budget)
        g = random_element(rng, n, budget)
        res.expect(cg.sigma_s_related(a, b, spec)
                   and cg.sigma_s_related(g * a, g * b, spec)
                   and cg.sigma_s_related(a * g, b * g, spec),
                   f"compatibility S={sorted(S)} {a!r} {b!r} {g!r}")
    per_pair = max(1, _count(6, scale))
    for n in (1, 2, 3):
        subsets = _subsets(n)
        for S1, S2 in itertools.product(subsets, repeat=2):
            s1, s2 = cg.CongruenceSpec(n, S1), cg.CongruenceSpec(n, S2)
            res.expect(cg.spec_compose(s1, s2).S == S1 | S2, f"join {S1} {S2}")
            res.expect(cg.spec_leq(s1, s2) == (S1 <= S2), f"order {S1} {S2}")
            for _ in range(per_pair):
                a = random_element(rng, n, budget)
                T = rng.choice(subsets)
                b = related_copy(rng, a, T, budget)
                joined = cg.sigma_s_related(a, b, cg.spec_compose(s1, s2))
                g = cg.chain_witness(a, b, S1, S2)
                chained = g is not None and cg.sigma_s_related(a, g, s1) and cg.sigma_s_related(g, b, s2)
                res.expect(joined == chained, f"join as composite {S1} {S2} {a!r} {b!r}")
                if cg.spec_leq(s1, s2) and cg.sigma_s_related(a, b, s1):
                    res.expect(cg.sigma_s_related(a, b, s2), f"monotone {S1} {S2} {a!r} {b!r}")
    for k in range(_count(250, scale)):
        n = rng.choice((2, 3))
        i, j = rng.choice(list(itertools.permutations(range(1, n + 1), 2)))
        a = random_element(rng, n, budget)
        related = k % 5 != 4
        b = related_copy(rng, a, {i, j}, budget) if related else random_element(rng, n, budget)
        g = cg.relation_compose_witness(a, b, i, j)
        holds = cg.sigma_s_related(a, b, cg.CongruenceSpec(n, {i, j}))
        legs = g is not None and cg.sigma_s_related(a, g, cg.CongruenceSpec(n, {i})) \
            and cg.sigma_s_related(g, b, cg.CongruenceSpec(n, {j}))
        res.expect(legs == holds and (g is None) == (not holds), f"two-leg witness {a!r} {b!r}")
    return res


def check_bisimple(seed: int = 5, scale: float = 1.0) -> CheckResult:
    res = CheckResult("5 bisimplicity witnesses")
    rng = SplitMix64(seed)
    budget = Budget(excl=4, shift=0, span=6)
    for _ in range(_count(200, scale)):
        n = rng.choice((1, 2, 3))
        e, f = random_idempotent(rng, n, budget), random_idempotent(rng, n, budget)
        witnesses = set()
        for s in range(3):
            a, b = st.dclass_witness(e, f, (s,) * n)
            res.expect(a * b == e and b * a == f, f"witness {e!r} {f!r} shift {s}")
            witnesses.add((a, b))
        res.expect(len(witnesses) >= 3, f"distinct witnesses {e!r} {f!r}")
    return res


def check_generation(seed: int = 6, scale: float = 1.0) -> CheckResult:
    res = CheckResult("6 finite generation")
    rng = SplitMix64(seed)
    budget = Budget(excl=2, shift=2, span=2) if scale >= 1 else Budget(excl=1, shift=1, span=2)
    reached = gen.closure_search(gen.skip_shift_generators(1), budget)
    expected = gen.budget_slice(1, budget)
    res.expect(reached == expected,
               f"closure has {len(reached)} of {len(expected)} budgeted elements")
    sample = Budget(excl=5, shift=5, span=10)
    allowed = {gen.Kind.EPS, gen.Kind.EPS_INV}
    for _ in range(_count(500, scale)):
        n = rng.choice((1, 2, 3))
        a = random_element(rng, n, sample)
        w = gen.factor_into_generators(a)
        symbols_ok = all(s.kind in allowed or (s.kind is gen.Kind.SHIFT and abs(s.k) == 1)
                         for s in w.syms)
        res.expect(gen.eval_word(w) == a and symbols_ok and len(w) <= gen.length_budget(a),
                   f"factorization of {a!r}: {w}")
    return res


def check_solver(seed: int = 7, scale: float = 1.0) -> CheckResult:
    res = CheckResult("7 finite solution sets")
    rng = SplitMix64(seed)
    budget = Budget(excl=2, shift=2, span=2)
    for k in range(_count(200, scale)):
        n = rng.choice((1, 2))
        a = random_element(rng, n, budget)
        b = a * random_element(rng, n, budget) if k % 3 else random_element(rng, n, budget)
        right = list(solver.solve_right(a, b))
        res.expect(right == oracle.brute_solutions(a, b, 8), f"right {a!r} {b!r}")
        res.expect(all(a * x == b for x in right), f"right soundness {a!r} {b!r}")
        res.expect(len(right) <= solver.solution_bound(a, b), f"bound {a!r} {b!r}")
        left = list(solver.solve_left(b, a))
        mirrored = sorted(inverse_el(x) for x in oracle.brute_solutions(inverse_el(b), inverse_el(a), 8))
        res.expect(left == mirrored and all(x * b == a for x in left), f"left {b!r} {a!r}")
    return res


def check_automorphisms(seed: int = 8, scale: float = 1.0) -> CheckResult:
    res = CheckResult("8 automorphisms")
    rng = SplitMix64(seed)
    budget = Budget(excl=3, shift=3, span=5)
    for _ in range(_count(500, scale)):
        n = rng.choice((1, 2, 3))
        perm = list(range(1, n + 1))
        for i in range(n - 1, 0, -1):
            j = rng.below(i + 1)
            perm[i], perm[j] = perm[j], perm[i]
        f = am.Automorphism(tuple(perm), tuple(rng.between(-3, 3) for _ in range(n)))
        a, b = random_element(rng, n, budget), random_element(rng, n, budget)
        res.expect(am.apply(f, a * b) == am.apply(f, a) * am.apply(f, b),
                   f"multiplicative {f} {a!r} {b!r}")
    for n in (1, 2):
        units = [unit_from_vector(v) for v in itertools.product(range(-3, 4), repeat=n)]
        for shifts in itertools.product(range(-3, 4), repeat=n):
            f = am.inner(shifts)
            res.expect(am.fixes_all_units(f) and all(am.apply(f, u) == u for u in units),
                       f"inner {shifts} fixes units")
    h = am.swap(2)
    one_1 = embed_factor(core.translation(1), 1, 2)
    one_2 = embed_factor(core.translation(1), 2, 2)
    moved = am.moved_unit(h)
    res.expect(am.apply(h, one_1) == one_2 and not am.fixes_all_units(h)
               and moved == (one_1, one_2), "swap moves the level-1 unit")
    res.expect(am.compose_auto(h, h) == am.identity_auto(2), "swap twice is the identity")
    for k, m in itertools.product(range(-5, 6), repeat=2):
        res.expect(am.compose_auto(am.inner([k]), am.inner([m])) == am.inner([k + m]),
                   f"inner({k}) then inner({m})")
    return res


def _mixing_tables(rng: SplitMix64, count: int) -> list[oracle.WindowedMap]:
    W = 6
    tables = [oracle.WindowedMap(2, W, {(1, k): (2, k) for k in range(-W, W + 1)},
                                 ((0, 0), (0, 0)))]
    budget = Budget(excl=2, shift=2, span=3)
    while len(tables) < count:
        n = rng.choice((2, 3))
        shadow = oracle.from_element(random_element(rng, n, budget), 12)
        table = dict(shadow.table)
        src = rng.choice(sorted(table))
        level, pos = table[src]
        table[src] = (level % n + 1, pos)
        tables.append(oracle.WindowedMap(n, shadow.W, table, shadow.tails))
    return tables


def check_validation(seed: int = 9, scale: float = 1.0) -> CheckResult:
    res = CheckResult("9 raw table validation")
    rng = SplitMix64(seed)
    for raw in _mixing_tables(rng, _count(50, scale)):
        try:
            validate_raw(raw)
            res.expect(False, "coordinate-mixing table accepted")
        except ValidationError as exc:
            res.expect(exc.kind == "coordinate-mixing", f"wrong rejection {exc}")
    budget = Budget(excl=4, shift=4, span=6)
    for _ in range(_count(200, scale)):
        n = rng.choice((1, 2, 3))
        a = random_element(rng, n, budget)
        try:
            res.expect(validate_raw(oracle.from_element(a, 20)) == a, f"shadow of {a!r}")
        except ValidationError as exc:
            res.expect(False, f"shadow of {a!r} rejected: {exc}")
    return res


CHECKS: list[Callable[..., CheckResult]] = [
    check_oracle, check_axioms, check_sigma, check_congruences, check_bisimple,
    check_generation, check_solver, check_automorphisms, check_validation,
]


def run(check: Callable[..., CheckResult], seed: int | None = None,
        scale: float = 1.0) -> CheckResult:
    start = time.perf_counter()
    res = check(scale=scale) if seed is None else check(seed=seed, scale=scale)
    res.seconds = time.perf_counter() - start
    return res
