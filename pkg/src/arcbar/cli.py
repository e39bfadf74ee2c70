"""The `workbench` command line front end."""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import barcalc, circle, cyclic, jsonio, suites
from .operads import INSTANCES
from .rational import InvariantViolation, MismatchError, Turn


def _default_seed() -> int:
    return int(os.environ.get("WORKBENCH_SEED", "0"))


def _load_json(text: str):
    if text == "-":
        return json.load(sys.stdin)
    if text.strip().startswith(("{", "[", '"')):
        return json.loads(text)
    with open(text) as fh:
        return json.load(fh)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--m", type=int, default=3, dest="m_max")
    p.add_argument("--nmax", type=int, default=3, dest="n_max")
    p.add_argument("--qmax", "--q", type=int, default=3, dest="q_max")
    p.add_argument("--den", type=int, default=4)
    p.add_argument("--out", default=None)


def _suite_config(args, suite: str) -> suites.RunConfig:
    return suites.RunConfig(suite=suite, seed=args.seed, trials=args.trials,
                            n_max=args.n_max, q_max=args.q_max,
                            m_max=args.m_max, den=args.den, out=args.out)


def _finish(rep: suites.Report) -> int:
    _emit(rep.to_json())
    return 0 if rep.ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="workbench",
        description="verification workbench for exact circle-operad algebra")
    sub = parser.add_subparsers(dest="module", required=True)

    p_operad = sub.add_parser("operad", help="operad composition and law checks")
    operad_sub = p_operad.add_subparsers(dest="command", required=True)
    pc = operad_sub.add_parser("compose")
    pc.add_argument("--instance", required=True, choices=sorted(INSTANCES))
    pc.add_argument("--outer", required=True)
    pc.add_argument("--inner", action="append", default=[], required=True)
    pv = operad_sub.add_parser("verify")
    pv.add_argument("--instance", default="all",
                    choices=sorted(INSTANCES) + ["all"])
    _add_common(pv)

    p_embed = sub.add_parser("embed", help="arc-system composition and actions")
    embed_sub = p_embed.add_subparsers(dest="command", required=True)
    pe = embed_sub.add_parser("compose")
    pe.add_argument("--outer", required=True)
    pe.add_argument("--inner", action="append", default=[],
                    help="JSON list of [v, s] pairs, one per outer arc")
    pa = embed_sub.add_parser("act")
    pa.add_argument("--system", required=True)
    pa.add_argument("--wreath", default=None)
    pa.add_argument("--theta", default=None, help="rotation in turns, e.g. 1/4")
    pr = embed_sub.add_parser("retract")
    pr.add_argument("--system", required=True)
    pr.add_argument("--steps", type=int, default=1)
    pvv = embed_sub.add_parser("verify")
    _add_common(pvv)

    p_cyc = sub.add_parser("cyclic", help="m-cyclic words and the point model")
    cyc_sub = p_cyc.add_subparsers(dest="command", required=True)
    pn = cyc_sub.add_parser("normalize")
    pn.add_argument("--word", required=True)
    pn.add_argument("--m", type=int, required=True)
    pn.add_argument("--q", type=int, required=True, help="source degree")
    pact = cyc_sub.add_parser("act")
    pact.add_argument("--word", required=True)
    pact.add_argument("--point", required=True)
    piso = cyc_sub.add_parser("iso-check")
    _add_common(piso)

    p_bar = sub.add_parser("bar", help="cyclic bar constructions")
    bar_sub = p_bar.add_subparsers(dest="command", required=True)
    pcv = bar_sub.add_parser("cyclic-verify")
    pcv.add_argument("--monoid", default=None,
                     help="monoid table JSON; defaults to the standard battery")
    _add_common(pcv)
    pt = bar_sub.add_parser("thm-cycbar")
    _add_common(pt)

    p_suite = sub.add_parser("suite", help="named verification suites")
    p_suite.add_argument("name", choices=sorted(suites.SUITES))
    _add_common(p_suite)

    p_elem = sub.add_parser("element", help="schema round trips")
    elem_sub = p_elem.add_subparsers(dest="command", required=True)
    prt = elem_sub.add_parser("roundtrip")
    prt.add_argument("--json", required=True, dest="payload")
    prt.add_argument("--kind", default=None)

    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (InvariantViolation, MismatchError, jsonio.SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    if args.module == "operad":
        if args.command == "compose":
            inst = INSTANCES[args.instance]
            outer = jsonio.operad_elem_from_json(_load_json(args.outer))
            inners = [jsonio.operad_elem_from_json(_load_json(s))
                      for s in args.inner]
            _emit(jsonio.operad_elem_to_json(inst.compose(outer, inners)))
            return 0
        if args.instance != "all":
            from .operads import check_operad_laws
            inst = INSTANCES[args.instance]
            nullary = args.instance in ("assoc", "dc")
            rep = check_operad_laws(inst, args.seed, args.trials,
                                    allow_nullary=nullary)
            _emit({"instance": inst.name, "trials": rep.trials,
                   "violations": [{"law": v.law, "detail": v.detail}
                                  for v in rep.violations],
                   "ok": rep.ok})
            return 0 if rep.ok else 1
        return _finish(suites.run_suite(_suite_config(args, "operad-laws")))

    if args.module == "embed":
        if args.command == "compose":
            outer = jsonio.arc_system_from_json(_load_json(args.outer))
            inners = [tuple((Fraction(v), Fraction(s)) for v, s in _load_json(b))
                      for b in args.inner]
            _emit(jsonio.arc_system_to_json(circle.compose_uec(outer, inners)))
            return 0
        if args.command == "act":
            x = jsonio.arc_system_from_json(_load_json(args.system))
            if args.wreath:
                x = circle.wreath_act(jsonio.wreath_from_json(
                    _load_json(args.wreath)), x)
            if args.theta:
                x = circle.circle_act(Turn(Fraction(args.theta)), x)
            _emit(jsonio.arc_system_to_json(x))
            return 0
        if args.command == "retract":
            x = jsonio.arc_system_from_json(_load_json(args.system))
            for _ in range(args.steps):
                x = circle.retract_step(x)
            _emit(jsonio.arc_system_to_json(x))
            return 0
        return _finish(suites.run_suite(_suite_config(args, "embed-compose")))

    if args.module == "cyclic":
        if args.command == "normalize":
            w = cyclic.parse_word(args.word, args.m, args.q)
            nf = cyclic.normalize_word(w)
            _emit({"input": str(w), "normal_form": str(nf),
                   "source": nf.source, "target": nf.target, "m": nf.m})
            return 0
        if args.command == "act":
            p = jsonio.point_from_json(_load_json(args.point))
            out = cyclic.act_on_point(args.word, p)
            _emit(jsonio.point_to_json(out))
            return 0
        return _finish(suites.run_suite(_suite_config(args, "lambda-iso")))

    if args.module == "bar":
        if args.command == "cyclic-verify" and args.monoid:
            R = jsonio.monoid_from_json(_load_json(args.monoid))
            out = barcalc.verify_cyclic_object(R, args.q_max, seed=args.seed,
                                               trials=args.trials)
            _emit({"name": out.name, "cases": out.cases,
                   "failures": out.failures, "ok": out.ok})
            return 0 if out.ok else 1
        if args.command == "cyclic-verify":
            return _finish(suites.run_suite(_suite_config(args,
                                                          "cyclic-relations")))
        return _finish(suites.run_suite(_suite_config(args, "thm-cycbar")))

    if args.module == "suite":
        return _finish(suites.run_suite(_suite_config(args, args.name)))

    if args.module == "element":
        payload = _load_json(args.payload)
        _emit(jsonio.element_round_trip(payload, kind=args.kind))
        return 0

    raise InvariantViolation(f"unknown module {args.module!r}")


if __name__ == "__main__":
    sys.exit(main())
