########################################################################
#
#       License: BSD
#       Created: October 16, 2026
#       Author:  The thsolve developers
#
########################################################################

"""Command line interface.

Usage::

    thsolve solve  --input problem.json [--output out.json] [--oracle N]
    thsolve verify --input problem.json --phi phi.json
    thsolve oracle --input problem.json [--order N]

Exit codes: 0 solved (or verified), 1 residual above tolerance in
``verify``, 2 method not applicable, 3 proven unsolvable, 4 invalid
input, usage errors included, or non-Fredholm operator.
"""

from __future__ import absolute_import, print_function

import argparse
import logging
import sys

from thsolve.defaults import defaults, defaults_ctx
from thsolve.errors import THSolveError, NonFredholm
from thsolve.operators import oracle_compare, residual_norm, as_hardy
from thsolve.problem import ProblemFile, dumps, read_json, write_json
from thsolve.symbol import RationalSymbol
from thsolve.solver import solve
from thsolve.utils import format_complex

LOGGER = logging.getLogger(__name__)

EXIT_SOLVED = 0
EXIT_RESIDUAL = 1
EXIT_NOT_APPLICABLE = 2
EXIT_UNSOLVABLE = 3
EXIT_INVALID = 4

DEFAULT_ORACLE_ORDER = 32


def exit_code(solution):
    """Map the verdict of a `SolutionSet` to an exit code."""
    report = solution.report
    if report.solvable:
        return EXIT_SOLVED
    if report.solvable is False:
        return EXIT_UNSOLVABLE
    return EXIT_NOT_APPLICABLE


def _emit(args, payload, text):
    if defaults.out_format == "json":
        out = dumps(payload)
    else:
        out = "\n".join(text) + "\n"
    if args.output:
        if defaults.out_format == "json":
            write_json(payload, args.output)
        else:
            with open(args.output, 'w') as wfile:
                wfile.write(out)
    else:
        sys.stdout.write(out)


def _solution_text(sol):
    lines = ["case:        %s" % sol.case_tag]
    if sol.particular is not None:
        lines.append("particular:  %s" % sol.particular)
        lines.append("residual:    %.3g" % sol.residual)
    else:
        lines.append("particular:  none")
    lines.append("kernel:      %d element(s)" % sol.arity)
    for e in sol.kernel:
        lines.append("  %s" % e)
    for c in sol.report.conditions:
        lines.append("condition j=%d (block %d): %s" % (
            c.index, c.block, format_complex(c.value)))
    for note in sol.report.notes:
        lines.append("note: %s" % note)
    return lines


def _oracle_text(cmp):
    dev = cmp["deviation"]
    return ["oracle order:          %d" % cmp["order"],
            "max deviation:         %s" % ("n/a" if dev is None
                                           else "%.3g" % dev),
            "null space dimension:  %d" % cmp["null_space_dimension"]]


def cmd_solve(args, problem):
    sol = solve(problem.a, problem.b, problem.f)
    payload = sol.to_json()
    text = _solution_text(sol)
    order = args.oracle or problem.options.get("oracle")
    if order:
        cmp = oracle_compare(problem.a, problem.b, problem.f,
                             sol.particular, sol.kernel.elements, order)
        payload["oracle"] = cmp
        text.extend(_oracle_text(cmp))
    _emit(args, payload, text)
    return exit_code(sol)


def cmd_verify(args, problem):
    data = read_json(args.phi)
    if isinstance(data, dict) and "particular" in data:
        data = data["particular"]
    phi = as_hardy(RationalSymbol.from_json(data))
    res = residual_norm(problem.a, problem.b, phi, problem.f)
    ok = res < defaults.residual_tolerance
    payload = {"residual": res, "tolerance": defaults.residual_tolerance,
               "verified": ok}
    _emit(args, payload, ["residual:  %.3g" % res,
                          "verified:  %s" % ("yes" if ok else "no")])
    return EXIT_SOLVED if ok else EXIT_RESIDUAL


def cmd_oracle(args, problem):
    order = args.order or problem.options.get("oracle") or \
        DEFAULT_ORACLE_ORDER
    sol = solve(problem.a, problem.b, problem.f)
    cmp = oracle_compare(problem.a, problem.b, problem.f,
                         sol.particular, sol.kernel.elements, order)
    cmp["arity"] = sol.arity
    cmp["case"] = sol.case_tag
    _emit(args, cmp, _oracle_text(cmp) + ["kernel arity:          %d"
                                          % sol.arity])
    return EXIT_SOLVED


class ArgumentParser(argparse.ArgumentParser):
    """Report usage errors with the invalid-input exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, "%s: error: %s\n" % (self.prog, message))


def build_parser():
    parser = ArgumentParser(
        prog="thsolve",
        description="Closed-form solutions of Toeplitz plus Hankel "
                    "equations with matching rational symbols.")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="more log output on stderr (repeatable)")
    sub = parser.add_subparsers(dest="command")

    common = ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", required=True,
                        help="problem file (JSON)")
    common.add_argument("-o", "--output",
                        help="write the report here instead of stdout")
    common.add_argument("--tolerance", type=float,
                        help="residual tolerance (default %g)"
                        % defaults.residual_tolerance)
    common.add_argument("--circle-tolerance", type=float,
                        help="distance from the unit circle below which "
                             "roots are refused (default %g)"
                        % defaults.circle_tolerance)
    common.add_argument("--format", choices=defaults.choices['out_format'],
                        help="report format (default %s)"
                        % defaults.out_format)

    p = sub.add_parser("solve", parents=[common],
                       help="solve the problem and print the solution set")
    p.add_argument("--oracle", type=int, metavar="N",
                   help="also compare with the finite section of order N")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", parents=[common],
                       help="print the residual of a candidate solution")
    p.add_argument("--phi", required=True,
                   help="candidate solution (symbol or solution JSON)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common],
                       help="compare with a finite section solve")
    p.add_argument("--order", type=int, metavar="N",
                   help="finite section order (default %d)"
                   % DEFAULT_ORACLE_ORDER)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_INVALID
    level = (logging.WARNING, logging.INFO)[min(args.verbose, 1)]
    if args.verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        problem = ProblemFile.load(args.input)
        overrides = problem.defaults_overrides()
        for name, value in (("residual_tolerance", args.tolerance),
                            ("circle_tolerance", args.circle_tolerance),
                            ("out_format", args.format)):
            if value is not None:
                overrides[name] = value
        with defaults_ctx(**overrides):
            return args.func(args, problem)
    except NonFredholm as exc:
        sys.stderr.write("thsolve: operator is not Fredholm: %s\n" % exc)
        return EXIT_INVALID
    except (THSolveError, ValueError) as exc:
        sys.stderr.write("thsolve: invalid input: %s\n" % exc)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
