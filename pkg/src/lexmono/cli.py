"""Command-line front end: ``lexmono <subcommand> ...``.

Elements are given inline as JSON (anything starting with ``{``), as ``-``
for standard input, or as a file path.  Exit status is 0 on success, 1 when
an algebraic precondition fails and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import automorphisms as am
from . import checks
from . import congruences as cg
from . import generators as gen
from . import oracle
from . import solver
from . import structure as st
from .errors import DomainError, ParseError
from .generators import Budget
from .product import Element, compose_el, inverse_el, validate_raw
from .sampling import rand_element
from .textio import format_element, format_raw, parse_element, parse_raw


def _read(source: str) -> str:
    if source.lstrip().startswith("{"):
        return source
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from None


def _element(source: str) -> Element:
    return parse_element(_read(source))


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ParseError(f"expected a comma-separated integer list, got {text!r}") from None


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("LEXMONO_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise ParseError(f"LEXMONO_SEED is not an integer: {env!r}") from None


def cmd_eval(args) -> list[str]:
    return [format_element(gen.eval_word(gen.parse_word(args.word, args.n)))]


def cmd_compose(args) -> list[str]:
    return [format_element(compose_el(_element(args.a), _element(args.b)))]


def cmd_inverse(args) -> list[str]:
    return [format_element(inverse_el(_element(args.a)))]


def cmd_green(args) -> list[str]:
    return [_bool(st.GREEN[args.rel](_element(args.a), _element(args.b)))]


def cmd_sigma(args) -> list[str]:
    image = cg.sigma_image(_element(args.a))
    return [" ".join(map(str, image.flat()))]


def cmd_cong(args) -> list[str]:
    a, b = _element(args.a), _element(args.b)
    spec = cg.CongruenceSpec(a.n, frozenset(_int_list(args.set)))
    return [_bool(cg.sigma_s_related(a, b, spec))]


def cmd_factor(args) -> list[str]:
    return [str(gen.factor_into_generators(_element(args.a)))]


def cmd_factor_o(args) -> list[str]:
    b, g = gen.factor_O(_element(args.a))
    return [format_element(b), format_element(g)]


def cmd_solve(args) -> list[str]:
    sols = solver.solve(_element(args.a), _element(args.b), args.side)
    return [format_element(x) for x in sols]


def cmd_auto(args) -> list[str]:
    a = _element(args.a)
    perm = _int_list(args.perm) if args.perm else list(range(1, a.n + 1))
    unit = _int_list(args.unit) if args.unit else [0] * a.n
    return [format_element(am.apply(am.Automorphism(tuple(perm), tuple(unit)), a))]


def cmd_validate(args) -> list[str]:
    return [format_element(validate_raw(parse_raw(_read(args.raw))))]


def cmd_shadow(args) -> list[str]:
    return [format_raw(oracle.from_element(_element(args.a), args.window))]


def cmd_rand(args) -> list[str]:
    budget = Budget(args.budget_excl, args.budget_shift, args.budget_span)
    return [format_element(rand_element(_seed(args), args.n, budget))]


def cmd_check(args) -> list[str]:
    scale = 0.1 if args.quick else 1.0
    seed = args.seed if args.seed is not None else os.environ.get("LEXMONO_SEED")
    seed = None if seed is None else int(seed)
    results = []
    for check in checks.CHECKS:
        res = checks.run(check, seed=seed, scale=scale)
        print(res.line(), flush=True)
        results.append(res)
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    if failed:
        raise SystemExit(1)
    return []


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lexmono", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, *elements):
        sp = sub.add_parser(name, help=help)
        for e in elements:
            sp.add_argument(e, help="element: inline JSON, '-' or a file path")
        sp.set_defaults(func=func)
        return sp

    sp = add("eval", cmd_eval, "evaluate a generator word")
    sp.add_argument("word")
    sp.add_argument("--n", type=int, default=1)
    add("compose", cmd_compose, "product a.b (a applied first)", "a", "b")
    add("inverse", cmd_inverse, "inverse element", "a")
    sp = add("green", cmd_green, "Green's relation test", "a", "b")
    sp.add_argument("--rel", choices=sorted(st.GREEN), required=True)
    add("sigma", cmd_sigma, "image in Z^2n as a flat row", "a")
    sp = add("cong", cmd_cong, "relatedness under sigma_S", "a", "b")
    sp.add_argument("--set", default="", help="comma list of levels, e.g. 1,2")
    add("factor", cmd_factor, "word in the generators", "a")
    add("factor-o", cmd_factor_o, "split into onto part and total part", "a")
    sp = add("solve", cmd_solve, "all x with a.x = b (right) or x.a = b (left)", "a", "b")
    sp.add_argument("--side", choices=("left", "right"), default="right")
    sp = add("auto", cmd_auto, "apply a permutation-and-conjugation automorphism", "a")
    sp.add_argument("--perm", help="comma list, e.g. 2,1")
    sp.add_argument("--unit", help="comma list of shifts, e.g. 0,0")
    sp = add("validate", cmd_validate, "validate a raw windowed table")
    sp.add_argument("raw")
    sp = add("shadow", cmd_shadow, "raw windowed table of an element", "a")
    sp.add_argument("--window", type=int, default=20)
    sp = add("rand", cmd_rand, "deterministic random element")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--budget-excl", type=int, default=2)
    sp.add_argument("--budget-shift", type=int, default=2)
    sp.add_argument("--budget-span", type=int, default=3)
    sp = add("check", cmd_check, "run the property suite")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--quick", action="store_true", help="about a tenth of the samples")
    return p


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        lines = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:
        return int(exc.code or 0)
    for line in lines:
        print(line)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
