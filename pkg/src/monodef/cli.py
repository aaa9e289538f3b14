"""
Command-line entry point.

Exit codes: 0 success, 2 input or validation failure, 3 a proven identity
failed (an engine bug), 4 a legitimate negative answer (obstruction does
not vanish, jets are not equivalent, Poisson axioms fail).
"""

from __future__ import annotations

import argparse
import sys
import time

from . import io, suites
from .cohomology import DEFAULT_MAX_DEGREE, cohomology
from .deformation import (are_equivalent, check_jet, first_order_classes,
                          lift_to_order)
from .errors import IdentityViolation, ValidationError
from .poisson import check_poisson, quasiclassical_limit

EXIT_OK, EXIT_INPUT, EXIT_IDENTITY, EXIT_NEGATIVE = 0, 2, 3, 4


class CommandResult:
    def __init__(self, results, code=EXIT_OK):
        self.results = results
        self.code = code


def _fmt(model, xs):
    return [model.field.format(x) for x in xs]


def cmd_verify(model, args):
    max_degree = args.max_degree if args.max_degree is not None else 3
    outcome = suites.run_all(model, seed=args.seed, max_degree=max_degree)
    results = {s.name: s.to_json() for s in outcome}
    ok = all(s.passed for s in outcome)
    return CommandResult({"suites": results, "all_passed": ok}, EXIT_OK if ok else EXIT_IDENTITY)


def cmd_cohomology(model, args):
    kmax = args.max_degree if args.max_degree is not None else DEFAULT_MAX_DEGREE
    reports = [cohomology(model, k) for k in range(kmax + 1)]
    return CommandResult({
        "dims": [r.dim_H for r in reports],
        "degrees": [r.to_json() for r in reports],
    })


def cmd_deform(model, args):
    order = args.order if args.order is not None else 2
    report, jets = first_order_classes(model)
    classes = []
    for idx, jet in enumerate(jets):
        out = lift_to_order(jet, order)
        entry = {"class": idx, "reached_order": out.jet.order, "jet": io.jet_to_json(out.jet)}
        if out.blocked is not None:
            entry["obstruction"] = out.blocked.to_json()
        classes.append(entry)
    return CommandResult({"dim_H2": report.dim_H, "target_order": order, "classes": classes})


def cmd_lift(model, args):
    jet = io.jet_from_json(model, io.load_json(args.jet))
    order = args.order if args.order is not None else jet.order + 1
    out = lift_to_order(jet, order)
    results = {"reached_order": out.jet.order, "target_order": order,
               "jet": io.jet_to_json(out.jet)}
    if out.blocked is not None:
        results["obstruction"] = out.blocked.to_json()
        results["class_coordinates"] = _fmt(model, out.blocked.class_coordinates)
        return CommandResult(results, EXIT_NEGATIVE)
    return CommandResult(results)


def cmd_equiv(model, args):
    a = io.jet_from_json(model, io.load_json(args.jet_a))
    b = io.jet_from_json(model, io.load_json(args.jet_b))
    gauge = are_equivalent(a, b, args.order)
    if gauge is None:
        return CommandResult({"equivalent": False}, EXIT_NEGATIVE)
    return CommandResult({"equivalent": True, "gauge": io.jet_to_json(gauge)})


def cmd_poisson_check(model, args):
    pi = io.cochain_from_json(model, io.load_json(args.pi))
    report = check_poisson(model, pi)
    return CommandResult(report.to_json(), EXIT_OK if report.ok else EXIT_NEGATIVE)


def cmd_classical_limit(model, args):
    jet = io.jet_from_json(model, io.load_json(args.jet))
    verdict = check_jet(jet)
    if not verdict.valid:
        raise ValidationError(f"jet fails the deformation equation at order {verdict.first_failure}")
    pi = quasiclassical_limit(jet)
    report = check_poisson(model, pi)
    results = {"pi": io.cochain_to_json(pi), "poisson": report.to_json()}
    if not report.ok:
        # the limit of a valid order-2 jet is always Poisson
        return CommandResult(results, EXIT_IDENTITY)
    results["induced_bracket"] = io.cochain_to_json(model.evaluate_at_unit(pi))
    return CommandResult(results)


def cmd_eval_unit(model, args):
    c = io.cochain_from_json(model, io.load_json(args.cochain))
    image = model.evaluate_at_unit(c)
    target = image.model
    return CommandResult({
        "target_model": io.model_to_document(target),
        "cochain": io.cochain_to_json(image),
    })


COMMANDS = {
    "verify": cmd_verify,
    "cohomology": cmd_cohomology,
    "deform": cmd_deform,
    "lift": cmd_lift,
    "equiv": cmd_equiv,
    "poisson-check": cmd_poisson_check,
    "classical-limit": cmd_classical_limit,
    "eval-unit": cmd_eval_unit,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", required=True, metavar="PATH", help="model document (JSON)")
    common.add_argument("--max-degree", type=int, metavar="K")
    common.add_argument("--order", type=int, metavar="N")
    common.add_argument("--seed", type=int, default=suites.DEFAULT_SEED, metavar="S")
    common.add_argument("--output", metavar="PATH", help="also write the report here")

    parser = argparse.ArgumentParser(
        prog="monodef", description="Hochschild cohomology and deformations of monoidal functors")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", parents=[common], help="run the identity suites")
    sub.add_parser("cohomology", parents=[common], help="cohomology up to --max-degree")
    sub.add_parser("deform", parents=[common], help="lift every first-order class to --order")
    p = sub.add_parser("lift", parents=[common], help="lift a deformation jet to --order")
    p.add_argument("jet", metavar="JET")
    p = sub.add_parser("equiv", parents=[common], help="search for a gauge between two jets")
    p.add_argument("jet_a", metavar="JET_A")
    p.add_argument("jet_b", metavar="JET_B")
    p = sub.add_parser("poisson-check", parents=[common], help="check the Poisson axioms for a 2-cochain")
    p.add_argument("pi", metavar="PI")
    p = sub.add_parser("classical-limit", parents=[common], help="quasi-classical limit of an order-2 jet")
    p.add_argument("jet", metavar="JET")
    p = sub.add_parser("eval-unit", parents=[common], help="evaluate a cochain at the unit object")
    p.add_argument("cochain", metavar="COCHAIN")
    return parser


def run(argv):
    """Execute a command; returns ``(report_dict, exit_code, parsed_args)``."""
    args = build_parser().parse_args(argv)
    report = {"command": [args.command] + [a for a in argv if a != args.command], "seed": args.seed}
    try:
        model = io.load_model(args.model)
        report["model"] = {"name": model.name, "kind": model.kind, "dim": model.dim,
                           "field": model.field.to_json(), "fingerprint": model.fingerprint}
        outcome = COMMANDS[args.command](model, args)
        report["results"] = outcome.results
        code = outcome.code
    except (ValidationError, OSError) as exc:
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        code = EXIT_INPUT
    except IdentityViolation as exc:
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        code = EXIT_IDENTITY
    report["exit_code"] = code
    return report, code, args


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    start = time.perf_counter()
    report, code, args = run(argv)
    text = io.dumps(report)
    sys.stdout.write(text)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    print(f"elapsed {time.perf_counter() - start:.3f}s exit {code}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
