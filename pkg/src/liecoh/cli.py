"""Command-line surface.

Subcommands: vogel, grading, gperp, cohomology, rigidity, tableau, adjoint.
Weight coordinates are comma-separated integers in Bourbaki fundamental-
weight order, concatenated across factors; node indices are 1-based.
All rationals serialize as "p/q" strings; nothing is ever printed in
floating point.  Exit codes: 0 success, 2 bad input, 1 failed internal
consistency check.
"""

import argparse
import importlib.resources
import json
import os
import re
import sys
from fractions import Fraction

from . import cohomology, repthy, tableau, vogel
from .cohomology import InternalCheckError, h1_report
from .driver import (adjoint_scenario, run_scenario, scenario_from_json,
                     scenario_to_json, verdict_json_text, verdict_table,
                     verdict_to_json)
from .grading import ParabolicMarking, grade_algebra, grade_module
from .repthy import DEFAULT_ORACLE_BOUND
from .rootsys import parse_type


class InputError(ValueError):
    pass


def _rat(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"malformed rational {text!r}") from e


def _rat_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _weight(text, rank=None):
    try:
        w = tuple(int(c) for c in text.split(","))
    except ValueError as e:
        raise InputError(f"malformed weight {text!r}: coordinates must be integers") from e
    if rank is not None and len(w) != rank:
        raise InputError(f"weight {text!r} has {len(w)} coordinates, expected {rank}")
    return w


def _marking(text):
    try:
        return ParabolicMarking(int(c) for c in text.split(","))
    except ValueError as e:
        raise InputError(str(e)) from e


def _rootsystem(text):
    try:
        return parse_type(text)
    except ValueError as e:
        raise InputError(str(e)) from e


def oracle_bound():
    raw = os.environ.get("ORACLE_DIM_MAX")
    if raw is None:
        return DEFAULT_ORACLE_BOUND
    try:
        return int(raw)
    except ValueError as e:
        raise InputError(f"ORACLE_DIM_MAX = {raw!r} is not an integer") from e


def _emit(args, payload, table_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(table_lines))


# ---------- subcommands ----------

def cmd_vogel(args):
    a, b, g = (_rat(x) for x in args.params.split(","))
    p = vogel.VogelParams(a, b, g)
    try:
        if args.y2:
            value, label = vogel.dim_y2(p), "dim Y2"
        elif args.y3:
            value, label = vogel.dim_y3(p), "dim Y3"
        elif args.k is not None:
            value, label = vogel.dim_yk(p, args.k), f"dim Y_{args.k}"
        else:
            value, label = vogel.dim_g(p), "dim g"
    except vogel.DegenerateParameters as e:
        raise InputError(f"degenerate parameter point: {e}") from e
    if args.format == "json":
        print(json.dumps({"params": [_rat_str(x) for x in (a, b, g)],
                          "t": _rat_str(p.t), "label": label,
                          "value": _rat_str(value)}, sort_keys=True))
    else:
        print(_rat_str(value))
    return 0


def cmd_grading(args):
    rs = _rootsystem(args.type)
    marking = _marking(args.marked)
    try:
        marking.validate(rs)
        alg = grade_algebra(rs, marking)
        payload = {"type": str(rs), "marked": sorted(marking.marked),
                   "algebra": {str(d): n for d, n in alg.dims.items()},
                   "depth": alg.depth()}
        lines = [f"algebra grading of {rs}, marked {sorted(marking.marked)}:",
                 f"  {alg.dims}  (depth {alg.depth()})"]
        if args.weight:
            w = _weight(args.weight, rs.rank)
            mod = grade_module(rs, marking, w)
            payload["weight"] = list(w)
            payload["module"] = {str(d): n for d, n in mod.dims.items()}
            lines.append(f"module grading of V_{list(w)} (top = 0):")
            lines.append(f"  {mod.dims}")
    except ValueError as e:
        raise InputError(str(e)) from e
    _emit(args, payload, lines)
    return 0


def cmd_gperp(args):
    rs = _rootsystem(args.type)
    w = _weight(args.weight, rs.rank)
    try:
        comps = repthy.gperp_decompose(rs, w)
    except ValueError as e:
        raise InputError(str(e)) from e
    dims = [(list(c.highest_weight), c.multiplicity,
             rs.weyl_dim(c.highest_weight)) for c in comps]
    payload = {"type": str(rs), "weight": list(w),
               "components": [{"weight": hw, "multiplicity": m, "dim": d}
                              for hw, m, d in dims],
               "total_dim": sum(m * d for _, m, d in dims)}
    lines = [f"g-perp of {rs} acting on V_{list(w)} (inside sl(U)):"]
    lines += [f"  {hw}  x{m}  dim {d}" for hw, m, d in dims]
    lines.append(f"  total {payload['total_dim']}")
    _emit(args, payload, lines)
    return 0


def cmd_cohomology(args):
    rs = _rootsystem(args.type)
    marking = _marking(args.marked)
    gamma = _weight(args.gamma, rs.rank)
    try:
        marking.validate(rs)
        pieces = cohomology.kostant_h1(rs, marking, repthy.IrrComponent(gamma))
    except ValueError as e:
        raise InputError(str(e)) from e
    payload = {"type": str(rs), "marked": sorted(marking.marked),
               "gamma": list(gamma),
               "pieces": [{"levi_highest_weight": list(p.levi_highest_weight),
                           "degree": p.degree if isinstance(p.degree, int)
                           else _rat_str(p.degree),
                           "dimension": p.dimension,
                           "source_reflection": p.source_reflection}
                          for p in pieces]}
    lines = [f"H^1(g_-, V_{list(gamma)}) for {rs} marked {sorted(marking.marked)}:"]
    lines += [f"  degree {p.degree}  dim {p.dimension}  levi {list(p.levi_highest_weight)}"
              f"  (node {p.source_reflection})" for p in pieces]
    if args.oracle:
        dims = cohomology.direct_h1(rs, marking, gamma, bound=oracle_bound())
        agg = {}
        for p in pieces:
            agg[p.degree] = agg.get(p.degree, 0) + p.dimension
        if dims != agg:
            raise InternalCheckError(
                f"combinatorial H^1 {agg} disagrees with matrix oracle {dims}")
        payload["oracle"] = {str(d): n for d, n in dims.items()}
        lines.append(f"oracle agreed: { {str(k): v for k, v in dims.items()} }")
    _emit(args, payload, lines)
    return 0


def fixtures():
    """Names of the bundled scenario files."""
    root = importlib.resources.files("liecoh") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_fixture(name):
    root = importlib.resources.files("liecoh") / "fixtures"
    path = root / f"{name}.json"
    if not path.is_file():
        raise InputError(f"unknown fixture {name!r}; available: {', '.join(fixtures())}")
    return scenario_from_json(path.read_text())


def cmd_rigidity(args):
    if args.list_fixtures:
        for name in fixtures():
            print(name)
        return 0
    if args.fixture:
        spec = load_fixture(args.fixture)
    elif args.scenario:
        try:
            with open(args.scenario) as fh:
                spec = scenario_from_json(json.load(fh))
        except (OSError, json.JSONDecodeError, KeyError, ValueError) as e:
            raise InputError(f"cannot read scenario {args.scenario!r}: {e}") from e
    elif args.type:
        rs = _rootsystem(args.type)
        spec = scenario_from_json({
            "algebra": [str(f) for f in rs.factors],
            "marked": sorted(_marking(args.marked).marked),
            "weight": list(_weight(args.weight, rs.rank)),
            "p": args.p,
            "oracle": args.oracle,
        })
    else:
        raise InputError("need --fixture, --scenario, or --type/--marked/--weight")
    if args.p is not None and (args.fixture or args.scenario):
        spec = scenario_from_json({**scenario_to_json(spec), "p": args.p})
    if args.oracle and not spec.oracle:
        spec = scenario_from_json({**scenario_to_json(spec), "oracle": True})
    try:
        verdict = run_scenario(spec, bound=oracle_bound())
    except ValueError as e:
        raise InputError(str(e)) from e
    if args.format == "json":
        print(verdict_json_text(verdict))
    else:
        print(verdict_table(verdict))
    return 0


def cmd_adjoint(args):
    rs = _rootsystem(args.type)
    if len(rs.factors) != 1:
        raise InputError("adjoint scenarios are defined for a single simple factor")
    try:
        spec = adjoint_scenario(rs.factors[0], oracle=args.oracle)
    except ValueError as e:
        raise InputError(str(e)) from e
    if args.run:
        verdict = run_scenario(spec, bound=oracle_bound())
        if args.format == "json":
            print(verdict_json_text(verdict))
        else:
            print(verdict_table(verdict))
    else:
        print(json.dumps(scenario_to_json(spec), indent=2, sort_keys=True))
    return 0


def cmd_tableau(args):
    try:
        with open(args.input) as fh:
            t = tableau.tableau_from_json(fh.read())
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as e:
        raise InputError(f"cannot read tableau {args.input!r}: {e}") from e
    seed = args.flag_seed
    if args.op in ("involutive", "all"):
        rep = tableau.is_involutive(t, seed)
        payload = {"dim_A": rep.dim_A, "characters": rep.characters,
                   "dim_prolongation": rep.dim_prolongation, "bound": rep.bound,
                   "involutive": rep.involutive,
                   "character_of_generality": rep.character_of_generality,
                   "generality_dim": rep.generality_dim}
        lines = [f"dim A = {rep.dim_A}", f"A_j dims = {rep.characters}",
                 f"dim A^(1) = {rep.dim_prolongation}  bound = {rep.bound}",
                 f"involutive: {rep.involutive}"]
        if rep.character_of_generality is not None:
            lines.append(f"solutions depend on {rep.generality_dim} functions of "
                         f"{rep.character_of_generality} variables")
    elif args.op == "prolong":
        dim = tableau.prolongation_dim(t)
        payload = {"dim_prolongation": dim}
        lines = [f"dim A^(1) = {dim}"]
    elif args.op == "characters":
        chars = tableau.cartan_characters(t, seed)
        payload = {"characters": chars}
        lines = [f"A_j dims = {chars}"]
    elif args.op == "torsion":
        dim = tableau.torsion_quotient_dim(t)
        payload = {"torsion_quotient_dim": dim}
        lines = [f"dim W (x) Lambda^2 V* / delta(A (x) V*) = {dim}"]
    else:
        raise InputError(f"unknown tableau op {args.op!r}")
    _emit(args, payload, lines)
    return 0


# ---------- dispatch ----------

class _Parser(argparse.ArgumentParser):
    # let values like -2,12,20 (vogel parameter lists) pass as arguments
    def __init__(self, *a, **kw):
        super().__init__(*a, **kw)
        self._negative_number_matcher = re.compile(r"^-\d")


def build_parser():
    ap = _Parser(
        prog="liecoh",
        description="Exact computational Lie theory: gradings, g-perp cohomology, "
                    "rigidity verdicts, Cartan's involutivity test, and universal "
                    "dimension formulas.")
    ap.add_argument("--format", choices=("json", "table"), default="table")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("vogel", help="universal dimension formulas")
    p.add_argument("--params", required=True, help="alpha,beta,gamma (rationals)")
    p.add_argument("--k", type=int, default=None, help="Cartan power index")
    p.add_argument("--y2", action="store_true")
    p.add_argument("--y3", action="store_true")
    p.set_defaults(func=cmd_vogel)

    p = sub.add_parser("grading", help="Z-gradings of g and of a module")
    p.add_argument("--type", required=True)
    p.add_argument("--marked", required=True)
    p.add_argument("--weight", default=None)
    p.set_defaults(func=cmd_grading)

    p = sub.add_parser("gperp", help="decompose sl(U) minus g")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", required=True)
    p.set_defaults(func=cmd_gperp)

    p = sub.add_parser("cohomology", help="H^1(g_-, V_gamma) pieces")
    p.add_argument("--type", required=True)
    p.add_argument("--marked", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("rigidity", help="full rigidity verdict")
    p.add_argument("--scenario", default=None, help="scenario JSON file")
    p.add_argument("--fixture", default=None, help="bundled fixture name")
    p.add_argument("--list-fixtures", action="store_true")
    p.add_argument("--type", default=None)
    p.add_argument("--marked", default=None)
    p.add_argument("--weight", default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_rigidity)

    p = sub.add_parser("adjoint", help="emit or run the adjoint-variety scenario")
    p.add_argument("--type", required=True)
    p.add_argument("--run", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_adjoint)

    p = sub.add_parser("tableau", help="tableau operations on a JSON input")
    p.add_argument("--input", required=True)
    p.add_argument("--op", default="all",
                   choices=("all", "involutive", "prolong", "characters", "torsion"))
    p.add_argument("--flag-seed", type=int, default=tableau.FLAG_SEED)
    p.set_defaults(func=cmd_tableau)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except InternalCheckError as e:
        print(f"internal consistency failure: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
