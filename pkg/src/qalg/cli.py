"""Command-line front end.

Exit status: 0 on success, 1 for parse, type or evaluation errors, 2 when a
conformance run finds a failing property.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import QAError, UsageError, singular_chain
from .exact import Sqrt, fmt_scalar, parse_scalar
from .expr import SCALAR_T, _eval, elaborate, eval_expr, infer, instance_for, parse_expr
from .instances.sumset import PointSumset
from .metric import hausdorff, hausdorff_oracle
from .serial import magnitude_json, to_json, to_text
from .spectrum import ALL, ZERO_ONLY, qsp

EXIT_OK, EXIT_ERROR, EXIT_CONFORMANCE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would read as a conformance failure
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _seed(text: str):
    return int(text) if text.lstrip("-").isdigit() else text


def _seed_default():
    from .conformance.runner import DEFAULT_SEED
    env = os.environ.get("QALG_SEED")
    return DEFAULT_SEED if env is None else _seed(env)


def _value(text: str, tag: str | None = None):
    """Evaluate ``text``, optionally forcing the model ``tag``."""
    node = parse_expr(text)
    if tag is None:
        value, inst = eval_expr(node)
        if inst is None:
            raise UsageError(f"{text!r} is a plain number, not a model element")
        return value, inst
    tags = infer(node)
    if tags == SCALAR_T or tag not in tags:
        have = "scalar" if tags == SCALAR_T else elaborate(node)
        raise UsageError(f"type error: cannot combine {have} with {tag}")
    inst = instance_for(tag)
    return _eval(node, tag, inst), inst


def _elem_json(x) -> dict:
    if isinstance(x, PointSumset):
        return {"kind": "sumset", "payload": {"points": [fmt_scalar(p) for p in x.points],
                                              "copies": x.copies}}
    return to_json(x)


def _mag_text(v) -> str:
    return str(v) if isinstance(v, Sqrt) else fmt_scalar(v)


def _emit(args, text: str, obj: dict) -> None:
    print(json.dumps(obj) if args.json else text)


# -- subcommands ----------------------------------------------------------------

def cmd_eval(args) -> int:
    node = parse_expr(args.expr)
    value, inst = eval_expr(node)
    tag = inst.tag if inst is not None else "scalar"
    _emit(args, to_text(value), {"instance": tag, "value": to_json(value)})
    return EXIT_OK


def cmd_norm(args) -> int:
    x, inst = _value(args.expr)
    n = inst.norm(x)
    _emit(args, _mag_text(n), {"instance": inst.tag, "norm": magnitude_json(n)})
    return EXIT_OK


def cmd_dist(args) -> int:
    x, inst = _value(args.left)
    y, _ = _value(args.right, inst.tag)
    d = hausdorff(inst, x, y)
    out = {"instance": inst.tag, "distance": magnitude_json(d)}
    lines = [_mag_text(d)]
    if args.oracle:
        r, w = hausdorff_oracle(inst, x, y, parse_scalar(args.resolution))
        out["oracle"] = {"radius": fmt_scalar(r), "resolution": args.resolution,
                         "a1": _elem_json(w.a1), "a2": _elem_json(w.a2)}
        lines.append(f"oracle <= {fmt_scalar(r)} (grid {args.resolution})")
    _emit(args, "\n".join(lines), out)
    return EXIT_OK


def cmd_qsp(args) -> int:
    x, inst = _value(args.expr)
    sp = qsp(inst, x, ZERO_ONLY if args.scope == "zero-only" else ALL)
    _emit(args, str(sp), {"instance": inst.tag, "scope": args.scope, "qsp": sp.to_json()})
    return EXIT_OK


def cmd_chain(args) -> int:
    x, inst = _value(args.expr)
    rep = singular_chain(inst, x, args.n)
    lines = [f"{i}: {link}{'' if s else '  (not strict)'}"
             for i, (link, s) in enumerate(zip(rep.links, rep.strict), 1)]
    _emit(args, "\n".join(lines), {
        "instance": inst.tag,
        "start": to_json(x),
        "links": [_elem_json(v) for v in rep.links],
        "strict": list(rep.strict),
    })
    return EXIT_OK


def cmd_hom(args) -> int:
    from .morphisms import RELATIONS, check_opr, check_quasihom, get_hom

    h = get_hom(args.name)
    x, _ = _value(args.expr, h.domain_tag)
    y = h(x)
    out = {"hom": h.name, "domain": h.domain_tag, "codomain": h.codomain_tag,
           "input": to_json(x), "value": to_json(y)}
    lines = [to_text(y)]
    if args.check:
        qh = check_quasihom(h, args.check, args.seed)
        op = check_opr(h, args.check, args.seed)
        checks = {}
        for cond in sorted(RELATIONS):
            rep = op if cond == "opr" else qh
            fails = rep.for_condition(cond)
            checks[cond] = {"pass": not fails, "relation": RELATIONS[cond],
                            "counterexample": str(fails[0]) if fails else None}
            lines.append(f"{cond}: " + ("ok" if not fails else f"FAIL {fails[0]}"))
        out["checks"] = checks
    _emit(args, "\n".join(lines), out)
    return EXIT_OK


def cmd_conform(args) -> int:
    from .conformance.runner import SuiteConfig, run_suite

    tags = tuple(t for arg in args.instance for t in arg.split(",") if t)
    cfg = SuiteConfig(
        instances=tags or SuiteConfig().instances,
        cases=args.cases,
        seed=args.seed,
        groups=tuple(args.groups.split(",")) if args.groups else None,
        ids=tuple(args.ids.split(",")) if args.ids else None,
        float_tolerance=args.float_tolerance,
    )
    rep = run_suite(cfg)
    for r in rep.results:
        line = f"{r.id:4} {r.instance:22} {'PASS' if r.passed else 'FAIL'} {r.cases}"
        if not r.passed:
            line += "  counterexample: " + ", ".join(to_text(v) for v in r.counterexample)
            if r.error:
                line += f"  ({r.error})"
        print(line)
    bad = rep.failures()
    print(f"{len(rep.results) - len(bad)}/{len(rep.results)} passed (seed {rep.seed})")
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(rep.dumps(indent=2))
    return EXIT_OK if not bad else EXIT_CONFORMANCE


def cmd_enclose(args) -> int:
    from .enclosure import enclose
    from .instances import Interval

    coeffs = [parse_scalar(c) for c in args.coeffs.split(",")]
    dom_node = parse_expr(args.domain)
    dom = _eval(dom_node, "interval", None) if "interval" in infer(dom_node) else None
    if not isinstance(dom, Interval):
        raise UsageError(f"domain must be an interval, got {args.domain!r}")
    res = enclose(coeffs, dom, args.depth, args.samples)
    text = (f"enclosure {res.enclosure}\nsampled   {res.sampled_range}\n"
            f"excess    {fmt_scalar(res.excess_width)}\nsound     {res.sound}")
    _emit(args, text, {
        "coeffs": [fmt_scalar(c) for c in res.coeffs],
        "domain": to_json(res.domain),
        "depth": res.depth,
        "enclosure": to_json(res.enclosure),
        "sampled_range": to_json(res.sampled_range),
        "excess_width": fmt_scalar(res.excess_width),
        "sound": res.sound,
    })
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qalg", description="Exact set-valued arithmetic and its conformance suite.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help, json_flag=True):
        sp = sub.add_parser(name, help=help)
        if json_flag:
            sp.add_argument("--json", action="store_true", help="print JSON")
        sp.set_defaults(func=func)
        return sp

    sp = add("eval", cmd_eval, "evaluate an expression")
    sp.add_argument("expr")
    sp = add("norm", cmd_norm, "norm of an element")
    sp.add_argument("expr")
    sp = add("dist", cmd_dist, "Hausdorff distance between two elements")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--oracle", action="store_true", help="also run the grid search oracle")
    sp.add_argument("--resolution", default="1/64")
    sp = add("qsp", cmd_qsp, "quasi-spectrum of an element")
    sp.add_argument("expr")
    sp.add_argument("--scope", choices=("all", "zero-only"), default="all")
    sp = add("chain", cmd_chain, "strictly increasing chain above an element")
    sp.add_argument("expr")
    sp.add_argument("-n", type=int, default=10)
    sp = add("hom", cmd_hom, "apply a shipped map, optionally checking its conditions")
    sp.add_argument("name")
    sp.add_argument("expr")
    sp.add_argument("--check", type=int, default=0, metavar="N", help="check conditions on N cases")
    sp.add_argument("--seed", type=_seed, default=0)
    sp = add("conform", cmd_conform, "run the conformance suite", json_flag=False)
    sp.add_argument("--instance", action="append", default=[], metavar="TAG")
    sp.add_argument("--cases", type=int, default=1000)
    sp.add_argument("--seed", type=_seed, default=None)
    sp.add_argument("--json", metavar="PATH", help="write the JSON report here")
    sp.add_argument("--groups", help="comma-separated property groups")
    sp.add_argument("--ids", help="comma-separated property ids")
    sp.add_argument("--float-tolerance", type=float, default=None)
    sp = add("enclose", cmd_enclose, "range enclosure of a polynomial")
    sp.add_argument("--coeffs", required=True, help="c0,c1,... lowest degree first")
    sp.add_argument("--domain", required=True)
    sp.add_argument("--depth", type=int, default=0)
    sp.add_argument("--samples", type=int, default=10_000)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "command", None) == "conform" and args.seed is None:
        args.seed = _seed_default()
    try:
        return args.func(args)
    except (QAError, ValueError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
