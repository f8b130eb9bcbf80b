"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""The `bhlab` command line: gen, psi, dim, bound, supnorm and verify."""

import argparse
import sys

from bhlab import __version__
from bhlab.bhcli.reports import render_report, write_report
from bhlab.bhdim.dimension import default_n_values, estimate_dim, psi_profile
from bhlab.bhindex.families import gen_arith_diagonal, gen_delta_M, gen_full, gen_prime_diagonal, gen_triangle
from bhlab.bhindex.idxfile import read_index_set, serialize_index_set, write_index_set
from bhlab.bhindex.indexset import IndexSet
from bhlab.bhpoly.polyfile import read_poly
from bhlab.bhpoly.supnorm import OptimizerSettings, sup_norm_poly
from bhlab.bhutils.utils import Log, ParameterArgs, ResultSet
from bhlab.bhutils.utils.configuration import conf_value
from bhlab.bhutils.utils.constants import (DEFAULT_PSI_BUDGET, DEFAULT_PSI_RESTARTS, DEFAULT_SEED, DEFAULT_TRIALS,
                                          SOFT_SLACK)
from bhlab.bhutils.utils.exceptions import (BHLabException, DomainViolation, InvalidParameterType, ReportWriteError,
                                            SearchBudgetExhausted)
from bhlab.bhutils.utils.filesystemreader import FileSystemReaderWriter
from bhlab.bhutils.utils.parameterargs import Distribution, Family, FitMethod, PsiMode, ReportFormat
from bhlab.bhutils.utils.utils import parse_float_pair, parse_n_values
from bhlab.bhverify.bounds import chain_constant, comparison_bounds, exponents, theorem_bound
from bhlab.bhverify.verifier import verify_theorem

EXIT_OK = 0
EXIT_STEP_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

log = Log(__name__, 'cli')


def _choices_(enum_class):
    return [member.value for member in enum_class]


def _add_psi_arguments_(parser):
    parser.add_argument("--input", required=True, help=".idx file with the index set")
    parser.add_argument("--n", required=True, help="comma list `1,4,9` or inclusive range `a:b`")
    parser.add_argument("--mode", choices=_choices_(PsiMode), default=PsiMode.EXACT.value,
                        help="exact branch and bound or greedy lower bound")
    parser.add_argument("--budget", type=int, help="node budget of the exact search")
    parser.add_argument("--restarts", type=int, help="greedy restarts")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="master seed")
    parser.add_argument("--out", help="write the result to this file")
    parser.add_argument("--format", choices=_choices_(ReportFormat), default=ReportFormat.CSV.value,
                        help="output format")


def build_parser():
    parser = argparse.ArgumentParser(prog="bhlab", description="Combinatorial dimension profiles and numerical "
                                                               "checks of the restricted Bohnenblust-Hille "
                                                               "inequality.")
    parser.add_argument("--version", action="version", version="bhlab %s" % __version__)
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    gen = subparsers.add_parser("gen", help="generate an index set family")
    gen.add_argument("--family", required=True, choices=_choices_(Family), help="family to generate")
    gen.add_argument("--m", type=int, help="degree")
    gen.add_argument("--N", type=int, help="number of variables (full, deltaM)")
    gen.add_argument("--M", type=int, help="maximum number of distinct variables (deltaM)")
    gen.add_argument("--terms", type=int, help="number of diagonal terms T (prime-diagonal, arith-diagonal)")
    gen.add_argument("--R", type=int, help="size of the triangle family")
    gen.add_argument("--label", help="label stored in the .idx file")
    gen.add_argument("--out", help="write the .idx file here instead of stdout")

    psi = subparsers.add_parser("psi", help="psi profile of an index set")
    _add_psi_arguments_(psi)

    dim = subparsers.add_parser("dim", help="estimate the combinatorial dimension")
    _add_psi_arguments_(dim)
    dim.add_argument("--fit", choices=_choices_(FitMethod), default=FitMethod.LEAST_SQUARES.value,
                     help="slope estimator")

    bound = subparsers.add_parser("bound", help="evaluate the theorem bound and comparison bounds")
    bound.add_argument("--m", type=int, required=True, help="degree")
    bound.add_argument("--d", type=float, required=True, help="dimension parameter, 0 <= d <= m")
    bound.add_argument("--c-lambda", dest="c_lambda", type=float, required=True, help="constant C_Lambda")
    bound.add_argument("--deltaM", dest="delta_m", type=int, help="also report the Delta_M bound for this M")
    bound.add_argument("--classical", help="also report kappa (1+eps)^m for `eps,kappa`")
    bound.add_argument("--asymptotic", type=float, help="also report (2C/sqrt(pi))^d m^d for this C")

    supnorm = subparsers.add_parser("supnorm", help="estimate the sup norm of a polynomial on the polytorus")
    supnorm.add_argument("--poly", required=True, help=".poly file")
    supnorm.add_argument("--restarts", type=int, help="random restarts")
    supnorm.add_argument("--iters", type=int, help="maximum ascent iterations per restart")
    supnorm.add_argument("--grid", type=int, help="phase grid resolution, 0 disables the grid")
    supnorm.add_argument("--tol", type=float, help="relative improvement that stops the ascent")
    supnorm.add_argument("--seed", type=int, default=DEFAULT_SEED, help="master seed")

    verify = subparsers.add_parser("verify", help="check the proof chain on random polynomials")
    verify.add_argument("--input", required=True, help=".idx file with the index set")
    verify.add_argument("--d", type=float, required=True, help="dimension parameter, 0 < d <= m")
    verify.add_argument("--trials", type=int, help="number of random polynomials")
    verify.add_argument("--dist", choices=_choices_(Distribution), default=Distribution.STEINHAUS.value,
                        help="coefficient distribution")
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED, help="master seed")
    verify.add_argument("--slack", type=float, help="allowed excess for steps that use estimated sup norms")
    verify.add_argument("--restarts", type=int, help="sup norm restarts")
    verify.add_argument("--tol", type=float, help="optimizer tolerance")
    verify.add_argument("--out", help="write the JSON report here")
    return parser


def _read_index_set_(path):
    if not FileSystemReaderWriter(path).exists():
        raise InvalidParameterType("Input file %s does not exist." % path)
    return read_index_set(path)


def _require_(params, *names):
    return [params.require(name) for name in names]


def _gen_(params, out):
    family = params.get_enum("family", Family)
    if family is Family.FULL:
        index_set = gen_full(*_require_(params, "m", "N"))
    elif family is Family.DELTA_M:
        index_set = gen_delta_M(*_require_(params, "m", "M", "N"))
    elif family is Family.PRIME_DIAGONAL:
        index_set = gen_prime_diagonal(*_require_(params, "m", "terms"))
    elif family is Family.ARITH_DIAGONAL:
        index_set = gen_arith_diagonal(*_require_(params, "m", "terms"))
    else:
        index_set = gen_triangle(*_require_(params, "R"))
    if params.get("label"):
        index_set = IndexSet(index_set.m, index_set.tuples, label=params.get("label"))
    destination = params.get("out")
    if destination is None:
        out.write(serialize_index_set(index_set))
    else:
        try:
            write_index_set(index_set, destination)
        except OSError as e:
            raise ReportWriteError(destination, e.strerror or str(e))
        summary = ResultSet(["label", "m", "tuples", "file"], [(index_set.label, index_set.m, len(index_set),
                                                               destination)])
        out.write("%s\n" % summary)
    return EXIT_OK, index_set


def _n_values_(index_set, text):
    values = parse_n_values(text)
    if ":" in text and len(values) >= 2:
        return default_n_values(index_set, values[0], values[-1])
    return values


def _count_option_(params, name, section, default):
    """
    A positive count flag, or the configured value when the flag is absent.
    """
    value = params.get(name)
    if value is None:
        return conf_value(section, name, default)
    if value < 1:
        raise DomainViolation("--" + name, value, "must be a positive integer")
    return value


def _psi_options_(params):
    budget = _count_option_(params, "budget", "psi", DEFAULT_PSI_BUDGET)
    restarts = _count_option_(params, "restarts", "psi", DEFAULT_PSI_RESTARTS)
    return params.get_enum("mode", PsiMode), budget, restarts, params.get("seed")


def _emit_(payload, params, out, text=None):
    fmt = params.get_enum("format", ReportFormat)
    out.write(text if text is not None else render_report(payload, fmt))
    if params.get("out"):
        write_report(payload, fmt, params.get("out"))


def _psi_(params, out):
    index_set = _read_index_set_(params.get("input"))
    mode, budget, restarts, seed = _psi_options_(params)
    profile = psi_profile(index_set, _n_values_(index_set, params.get("n")), mode=mode, budget=budget,
                          restarts=restarts, seed=seed, fallback=False)
    _emit_(profile, params, out)
    return EXIT_OK, profile


def _dim_(params, out):
    index_set = _read_index_set_(params.get("input"))
    mode, budget, restarts, seed = _psi_options_(params)
    estimate = estimate_dim(index_set, mode=mode, budget=budget, fit=params.get("fit"), restarts=restarts,
                            seed=seed, n_values=_n_values_(index_set, params.get("n")))
    text = None
    if params.get_enum("format", ReportFormat) is ReportFormat.CSV:
        text = render_report(estimate.profile, ReportFormat.CSV)
        text += "# slope=%r intercept=%r method=%s n_range=%d:%d\n" % (
            estimate.slope, estimate.intercept, estimate.method.value, estimate.n_range[0], estimate.n_range[1])
    _emit_(estimate, params, out, text)
    return EXIT_OK, estimate


def _bound_(params, out):
    m, d, c_lambda = params.get("m"), params.get("d"), params.get("c_lambda")
    value = theorem_bound(m, d, c_lambda)
    rows = [("theorem_bound", value.value)]
    rows.extend(("factor_%s" % name, factor) for name, factor in value.factors.items())
    result = {"m": m, "d": d, "c_lambda": c_lambda, "theorem_bound": value.to_dict()}
    if d > 0:
        data = exponents(m, d)
        rows.extend(data.as_floats().items())
        rows.append(("chain_constant", chain_constant(m, d, c_lambda)))
        result["exponents"] = data.as_floats()
    eps = kappa = None
    if params.get("classical"):
        eps, kappa = parse_float_pair(params.get("classical"))
    asymptotic = params.get("asymptotic")
    comparison = comparison_bounds(m, M=params.get("delta_m"), eps=eps, kappa=kappa, C=asymptotic,
                                   d=d if asymptotic is not None else None)
    for name, bound in comparison.to_dict().items():
        if name != "m" and bound is not None:
            rows.append((name, bound))
    result["comparison"] = comparison.to_dict()
    out.write("%s\n" % ResultSet(["quantity", "value"], rows))
    return EXIT_OK, result


def _supnorm_(params, out):
    P = read_poly(params.get("poly"))
    settings = OptimizerSettings.from_config(restarts=params.get("restarts"), max_iterations=params.get("iters"),
                                             grid_resolution=params.get("grid"), tolerance=params.get("tol"),
                                             seed=params.get("seed"))
    estimate = sup_norm_poly(P, settings)
    out.write("%s\n" % ResultSet(["value", "converged", "evaluations"],
                                 [(estimate.value, estimate.converged, estimate.evaluations)]))
    out.write("%s\n" % ResultSet(["variable", "phase"], sorted(estimate.witness.items()), title="witness"))
    return EXIT_OK, estimate


def _verify_(params, out):
    index_set = _read_index_set_(params.get("input"))
    trials = _count_option_(params, "trials", "verify", DEFAULT_TRIALS)
    slack = params.get("slack")
    if slack is None:
        slack = conf_value("verify", "slack", SOFT_SLACK)
    settings = OptimizerSettings.from_config(restarts=params.get("restarts"), tolerance=params.get("tol"),
                                             seed=params.get("seed"))
    report = verify_theorem(index_set, params.get("d"), trials=trials, dist=params.get("dist"),
                            seed=params.get("seed"), settings=settings, slack=slack)
    rows = [(name, step.kind, step.max_margin, step.passed) for name, step in report.steps.items()]
    out.write("%s\n" % ResultSet(["step", "kind", "max_margin", "pass"], rows))
    out.write("%s\n" % ResultSet(["c_hat", "max_quotient", "theorem_bound", "theorem_margin"],
                                 [(report.c_hat, report.max_quotient, report.theorem_bound, report.theorem_margin)]))
    if params.get("out"):
        write_report(report, ReportFormat.JSON, params.get("out"))
    return (EXIT_OK if report.passed else EXIT_STEP_FAILED), report


HANDLERS = {
    "gen": _gen_,
    "psi": _psi_,
    "dim": _dim_,
    "bound": _bound_,
    "supnorm": _supnorm_,
    "verify": _verify_,
}


def dispatch(args, out=None):
    """
    Run a parsed subcommand. Returns (exit code, result object).
    """
    return HANDLERS[args.command](ParameterArgs(args), out or sys.stdout)


def parse_args(argv):
    return build_parser().parse_args(argv)


def run_cli(argv=None, out=None, err=None):
    """
    Run one `bhlab` invocation and return its exit code.
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    log.info("bhlab %s" % " ".join(argv))
    try:
        code, _ = dispatch(args, out)
    except SearchBudgetExhausted as e:
        err.write("bhlab: %s\n" % e)
        code = EXIT_BUDGET
    except BHLabException as e:
        err.write("bhlab: %s\n" % e)
        code = EXIT_USAGE
    log.info("%s exited with %d" % (args.command, code))
    return code


def main():
    sys.exit(run_cli())
