"""Command-line surface.

Reports are JSON on standard output; human-readable summaries go to
standard error.  Exit codes: 0 success, 1 domain errors (invalid content,
failed validity checks), 2 usage errors (bad flags, missing files).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import families
from .criteria import evaluate_all, gk_extend, support_graph
from .distributions import (
    JointDistribution,
    VariableSchema,
    dumps_distribution,
    loads_distribution,
)
from .errors import BadParameterError, DomainError, FileFormatError
from .information import UNITS, entropy_profile, info_diagram3
from .structures import (
    AXIOMS,
    CLOSURE_RULES,
    CIStructure,
    dumps_structure,
    loads_structure,
    meet_irreducibles,
    orbit_count,
    parse_catalog,
    satisfies_axiom,
)


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, output: str | None) -> None:
    _emit(json.dumps(obj, indent=2) + "\n", output)


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _split_csv(value: str) -> list[str]:
    return [part.strip() for part in value.split(",") if part.strip()]


def _load_structure_or_dist(path: str) -> tuple[CIStructure, tuple[str, ...] | None]:
    """Structure files carry 'n'/'statements'; distribution files carry
    'variables'/'mass' and are converted via exact CI extraction."""
    text = _read_text(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid JSON in {path}: {exc}")
    if isinstance(data, dict) and "variables" in data:
        d = loads_distribution(text)
        return d.ci_structure(), d.schema.names
    return loads_structure(text), None


# ---------------------------------------------------------------------------

def _cmd_info(args) -> int:
    d = loads_distribution(_read_text(args.dist))
    profile = entropy_profile(d, units=args.units)
    out = profile.to_json_dict()
    if args.roles:
        diagrams = []
        for spec in args.roles:
            roles = _split_csv(spec)
            if len(roles) != 3:
                raise BadParameterError(f"--roles needs three names, got {spec!r}")
            a, x, y = roles
            diagrams.append({
                "roles": {"a": a, "x": x, "y": y},
                "atoms": info_diagram3(profile, a, x, y).to_json_dict(a, x, y),
            })
        out["diagrams"] = diagrams
    _emit_json(out, args.output)
    full = profile.h(d.schema.names)
    _note(f"{len(d.schema)} variables, H(all) = {full:.6f} {args.units}")
    return 0


def _cmd_ci(args) -> int:
    d = loads_distribution(_read_text(args.dist))
    S = d.ci_structure()
    _emit(dumps_structure(S), args.output)
    _note(f"{len(S)} elementary statements hold (variables: {', '.join(d.schema.names)})")
    return 0


def _cmd_axioms(args) -> int:
    S, names = _load_structure_or_dist(args.input)
    requested = _split_csv(args.axiom) if args.axiom else list(AXIOMS)
    out = {"n": S.n, "statements": len(S), "axioms": {}}
    for axiom in requested:
        verdict = satisfies_axiom(S, axiom)
        witness = verdict.witness.render(names) if verdict.witness else None
        out["axioms"][axiom] = {"holds": verdict.holds, "witness": witness}
        _note(f"{axiom}: {str(verdict.holds).lower()}"
              + (f", witness {witness}" if witness else ""))
    _emit_json(out, args.output)
    return 0


def _cmd_closure(args) -> int:
    from .structures import closure as close

    S, _ = _load_structure_or_dist(args.input)
    rules = _split_csv(args.rules) if args.rules else []
    result = close(S, [r for r in rules if r != "semigraphoid"])
    _emit(dumps_structure(result), args.output)
    _note(f"closure added {len(result) - len(S)} statements")
    return 0


def _cmd_dual(args) -> int:
    S, _ = _load_structure_or_dist(args.input)
    _emit(dumps_structure(S.dual()), args.output)
    return 0


def _cmd_gk(args) -> int:
    d = loads_distribution(_read_text(args.dist))
    graph = support_graph(d, args.x, args.y)
    extended = gk_extend(d, args.x, args.y, args.name)
    _emit(dumps_distribution(extended), args.output)
    _note(f"{graph.n_components} components")
    return 0


def _cmd_criteria(args) -> int:
    d = loads_distribution(_read_text(args.dist))
    roles = _split_csv(args.roles)
    if len(roles) != 3:
        raise BadParameterError(f"--roles needs three names, got {args.roles!r}")
    a, x, y = roles
    report = evaluate_all(d, a, x, y, g=args.aux)
    _emit_json(report.to_json_dict(), args.output)
    for prop in ("intersection", "composition"):
        verdict = getattr(report, prop)
        _note(f"{prop}: premises {str(verdict.premises_hold).lower()}, "
              f"conclusion {str(verdict.conclusion_holds).lower()}")
    return 0


# ---------------------------------------------------------------------------
# Family generators.

def _parse_fraction(value: str) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise BadParameterError(f"cannot parse rational {value!r}: {exc}")


def _gen_kirkup(args):
    params = families.KirkupParams(
        _parse_fraction(args.alpha), _parse_fraction(args.beta),
        _parse_fraction(args.gamma), _parse_fraction(args.delta),
        _parse_fraction(args.epsilon),
    )
    return families.kirkup_family(params)


def _gen_violator(args):
    free = [_parse_fraction(v) for v in _split_csv(args.free)]
    return families.intersection_violator(args.variant, free)


def _gen_group(args):
    return families.group_sum_family(args.k)


def _gen_tight(args):
    return families.tight_violation_family(
        _parse_fraction(args.x_bias), _parse_fraction(args.a_bias))


def _gen_non_gk(_args):
    return families.non_gk_example()


def _gen_random(args):
    pairs = []
    for item in _split_csv(args.schema):
        name, _, card = item.partition(":")
        if not card:
            raise BadParameterError(f"schema entries are name:cardinality, got {item!r}")
        pairs.append((name, int(card)))
    schema = VariableSchema.make(pairs)
    return families.random_rational_distribution(args.seed, schema, args.bound)


def _gen_common_cause(args):
    d = loads_distribution(_read_text(args.input))
    return families.common_cause_extension(d, name=args.name)


_FAMILIES = {
    "kirkup": {
        "build": _gen_kirkup,
        "params": "--alpha R --beta R --gamma R --delta R --epsilon R (R a rational; "
                  "masses p[a][x][y] of the binary marginal-independence model)",
    },
    "intersection-violator": {
        "build": _gen_violator,
        "params": "--variant {1,2} --free p,p,p,p (four masses summing to 1)",
    },
    "group-sum": {
        "build": _gen_group,
        "params": "--k INT (A = X + Y over Z/kZ, X and Y uniform independent)",
    },
    "tight": {
        "build": _gen_tight,
        "params": "--x-bias R --a-bias R (copy pair X = Y joined to independent A)",
    },
    "non-gk": {
        "build": _gen_non_gk,
        "params": "(no parameters)",
    },
    "random": {
        "build": _gen_random,
        "params": "--seed INT --schema name:card,... --bound INT (full support, "
                  "common denominator <= bound)",
    },
    "common-cause": {
        "build": _gen_common_cause,
        "params": "--input FILE [--name A] (per-cell separating extension of a pair)",
    },
}


def _cmd_generate(args) -> int:
    if args.list:
        _emit_json({name: _FAMILIES[name]["params"] for name in sorted(_FAMILIES)},
                   args.output)
        return 0
    if not args.family:
        raise BadParameterError("choose a family or pass --list")
    d = _FAMILIES[args.family]["build"](args)
    _emit(dumps_distribution(d), args.output)
    _note(f"{args.family}: {len(d.mass)} support rows over {len(d.schema)} variables")
    return 0


def _cmd_catalog_stats(args) -> int:
    catalog = parse_catalog(_read_text(args.catalog), n=args.n)
    out = {"total": len(catalog)}
    family = catalog
    if args.filter:
        for axiom in _split_csv(args.filter):
            family = [S for S in family if satisfies_axiom(S, axiom).holds]
        out["filtered"] = len(family)
    if args.orbits:
        out["orbits"] = orbit_count(family)
    if args.irreducibles:
        try:
            irr = meet_irreducibles(family)
            out["irreducibles"] = len(irr)
            out["irreducible_orbits"] = orbit_count(irr)
        except DomainError as exc:
            out["not_meet_closed"] = str(exc)
    _emit_json(out, args.output)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ciprops",
        description="Exact analysis of conditional-independence properties",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("--output", "-o", help="write to file instead of stdout")

    p = sub.add_parser("info", help="entropy profile and information diagrams")
    p.add_argument("dist", help="distribution file")
    p.add_argument("--roles", action="append",
                   help="comma-separated triple a,x,y (repeatable)")
    p.add_argument("--units", choices=UNITS, default="nats")
    add_output(p)
    p.set_defaults(func=_cmd_info, files=["dist"])

    p = sub.add_parser("ci", help="extract the elementary CI structure")
    p.add_argument("dist")
    add_output(p)
    p.set_defaults(func=_cmd_ci, files=["dist"])

    p = sub.add_parser("axioms", help="check axioms with witnesses")
    p.add_argument("input", help="structure or distribution file")
    p.add_argument("--axiom", help=f"comma-separated list from {', '.join(AXIOMS)}")
    add_output(p)
    p.set_defaults(func=_cmd_axioms, files=["input"])

    p = sub.add_parser("closure", help="close a structure under inference rules")
    p.add_argument("input")
    p.add_argument("--rules", default="semigraphoid",
                   help=f"comma-separated list from {', '.join(CLOSURE_RULES)}")
    add_output(p)
    p.set_defaults(func=_cmd_closure, files=["input"])

    p = sub.add_parser("dual", help="statement-wise dual of a structure")
    p.add_argument("input")
    add_output(p)
    p.set_defaults(func=_cmd_dual, files=["input"])

    p = sub.add_parser("gk", help="append the common-information variable")
    p.add_argument("dist")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--name", default="G")
    add_output(p)
    p.set_defaults(func=_cmd_gk, files=["dist"])

    p = sub.add_parser("criteria", help="evaluate all sufficient criteria")
    p.add_argument("dist")
    p.add_argument("--roles", required=True, help="comma-separated triple a,x,y")
    p.add_argument("--aux", help="auxiliary variable for the synthetic criteria")
    add_output(p)
    p.set_defaults(func=_cmd_criteria, files=["dist"])

    p = sub.add_parser("generate", help="write a family distribution file")
    p.add_argument("family", nargs="?", choices=sorted(_FAMILIES))
    p.add_argument("--list", action="store_true", help="list families and parameters")
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--gamma")
    p.add_argument("--delta")
    p.add_argument("--epsilon")
    p.add_argument("--variant", type=int)
    p.add_argument("--free")
    p.add_argument("--k", type=int)
    p.add_argument("--x-bias", dest="x_bias")
    p.add_argument("--a-bias", dest="a_bias")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--schema")
    p.add_argument("--bound", type=int, default=1000)
    p.add_argument("--input", help="input distribution (common-cause)")
    p.add_argument("--name", default="A")
    add_output(p)
    p.set_defaults(func=_cmd_generate, files=[])

    p = sub.add_parser("catalog-stats", help="filter, orbit and irreducible counts")
    p.add_argument("catalog", help="one structure per line, '#' comments allowed")
    p.add_argument("--filter", help="comma-separated axiom list")
    p.add_argument("--orbits", action="store_true")
    p.add_argument("--irreducibles", action="store_true")
    p.add_argument("--n", type=int, help="ground set size (default: max element)")
    add_output(p)
    p.set_defaults(func=_cmd_catalog_stats, files=["catalog"])

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    # missing input files are usage errors
    for attr in getattr(args, "files", []):
        path = getattr(args, attr, None)
        if path is not None and not os.path.exists(path):
            print(f"error: no such file: {path}", file=sys.stderr)
            return 2
    if getattr(args, "command", None) == "generate" and getattr(args, "input", None):
        if not os.path.exists(args.input):
            print(f"error: no such file: {args.input}", file=sys.stderr)
            return 2

    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
