"""Command-line interface: ``hgoldman <command> --spec FILE ...``.

Elements starting with ``-`` must follow a ``--`` separator.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algebra import bracket, decompose
from .certificates import transport
from .group import GroupSpec, kernel_data, key_lemma_witness, pairing
from .ideal import (
    DEFAULT_RADIUS,
    FiniteIdeals,
    center,
    contains,
    derived_or_lower_central,
    enumerate_if_finite,
    ideal_from_generators,
    validate_pair,
)
from .surface import surface_spec
from .textio import (
    format_coset,
    format_element,
    format_group_element,
    format_pair,
    format_spec,
    parse_element,
    parse_group_element,
    parse_pair,
    parse_spec,
)
from .verify import run_all


def _load_spec(path: str) -> GroupSpec:
    return parse_spec(Path(path).read_text(encoding="utf-8"))


def cmd_bracket(spec, kd, args):
    x, y = parse_element(spec, args.x), parse_element(spec, args.y)
    return format_element(bracket(spec, x, y)) + "\n"


def cmd_decompose(spec, kd, args):
    parts = decompose(spec, kd, parse_element(spec, args.x))
    return "".join(f"{format_coset(c)}: {format_element(e)}\n" for c, e in parts.items())


def cmd_classify(spec, kd, args):
    gens = [parse_element(spec, g) for g in args.generators]
    return format_pair(ideal_from_generators(spec, kd, gens, args.radius))


def cmd_contains(spec, kd, args):
    pair = parse_pair(spec, Path(args.ideal).read_text(encoding="utf-8"))
    validate_pair(spec, kd, pair)
    return f"{contains(spec, kd, pair, parse_element(spec, args.x))}\n"


def cmd_key_lemma(spec, kd, args):
    xs = [parse_group_element(spec, a) for a in args.elements]
    z = key_lemma_witness(spec, kd, xs)
    lines = [f"z: {format_group_element(z)}"]
    lines += [f"<{format_group_element(x)}, z> = {pairing(spec, x, z)}" for x in xs]
    return "\n".join(lines) + "\n"


def cmd_transport(spec, kd, args):
    t = transport(spec, kd, parse_element(spec, args.x), parse_group_element(spec, args.to))
    word = " ".join(f"ad[{format_group_element(z)}]" for z in t.word)
    return (
        f"word: {word}\n"
        f"witness: {format_group_element(t.witness)}\n"
        f"scalar: {t.scalar}\n"
        f"result: {format_element(t.result)}\n"
    )


def cmd_center(spec, kd, args):
    return format_pair(center(spec, kd))


def cmd_series(spec, kd, args):
    return format_pair(derived_or_lower_central(spec, kd, args.m))


def cmd_enumerate(spec, kd, args):
    result = enumerate_if_finite(spec, kd)
    if isinstance(result, FiniteIdeals):
        return f"FINITE {len(result)}\n" + "---\n".join(format_pair(p) for p in result.pairs)
    return f"INFINITE\nwitness family: {result.describe()}\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hgoldman", description="Ideals of the homological Goldman Lie algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_spec(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--spec", required=True, help="group spec file")
        p.set_defaults(func=func)
        return p

    p = with_spec("bracket", cmd_bracket, "bracket of two elements")
    p.add_argument("x")
    p.add_argument("y")
    p = with_spec("decompose", cmd_decompose, "components by ker mu degree")
    p.add_argument("x")
    p = with_spec("classify", cmd_classify, "classification pair of a generated ideal")
    p.add_argument("generators", nargs="*")
    p.add_argument("--radius", type=int, default=DEFAULT_RADIUS, help="radius for the truncated backend")
    p = with_spec("contains", cmd_contains, "membership in an ideal given by a pair file")
    p.add_argument("--ideal", required=True, help="pair file as printed by classify")
    p.add_argument("x")
    p = with_spec("key-lemma", cmd_key_lemma, "element pairing nontrivially with all inputs")
    p.add_argument("elements", nargs="+")
    p = with_spec("transport", cmd_transport, "move a homogeneous element to another degree")
    p.add_argument("x")
    p.add_argument("--to", required=True)
    with_spec("center", cmd_center, "the center of QH")
    p = with_spec("series", cmd_series, "derived / lower central series term")
    p.add_argument("-m", type=int, default=1)
    with_spec("enumerate", cmd_enumerate, "list all ideals when there are finitely many")
    p = with_spec("verify", None, "run the seeded property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=50)
    p.add_argument("--oracle-radius", type=int, default=3)

    p = sub.add_parser("surface", help="first homology of a surface as a spec")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--boundary", type=int, required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "surface":
            out.write(format_spec(surface_spec(args.genus, args.boundary)))
            return 0
        spec = _load_spec(args.spec)
        kd = kernel_data(spec)
        if args.command == "verify":
            results = run_all(spec, kd, args.seed, args.cases, args.oracle_radius)
            for r in results:
                out.write(r.line() + "\n")
            failed = [r for r in results if not r.passed]
            out.write("OK\n" if not failed else f"FAILED {len(failed)} suite(s)\n")
            return 2 if failed else 0
        out.write(args.func(spec, kd, args))
        return 0
    except (ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
