"""Command-line front end.

Subcommands: ``measure`` (full measure set as JSON/CSV), ``asym`` (one
leading-order prediction as JSON), ``sweep`` (ratio report CSV over a
geometric grid), ``lmc-compare`` (limit constants under both parameter
mappings), and ``rule`` (dump a quadrature rule as CSV).

Exit statuses: 0 success, 2 invalid arguments, 3 unsupported asymptotic
class, 4 numerical budget exceeded.  Data outputs carry no timestamps and
are byte-identical across runs.
"""

import argparse
import json
import math
import sys

from . import asymptotics as asym
from . import measures
from .errors import BudgetError, DomainError, JcxError, UnsupportedClassError
from .jacobi import PolyParams
from .quadrature import MAX_RULE_NODES, gauss_jacobi_rule

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CLASS = 3
EXIT_BUDGET = 4

_DEGREE_PREDICTORS = {
    "ccr": lambda args: asym.ccr_degree(args.alpha, args.beta),
    "fisher": lambda args: asym.fisher_degree(args.alpha, args.beta),
    "ls": lambda args: asym.ls_degree(),
    "e": lambda args: asym.e_degree(args.alpha, args.beta),
    "i": lambda args: asym.i_degree(args.alpha, args.beta),
    "cfs": lambda args: asym.cfs_degree(args.alpha, args.beta),
    "w2": lambda args: asym.w2_degree(args.alpha, args.beta),
    "clmc": lambda args: asym.clmc_degree(args.alpha, args.beta),
}

_ALPHA_PREDICTORS = {
    "ccr": lambda args: asym.ccr_param(args.degree, args.beta),
    "fisher": lambda args: asym.f_param(args.degree, args.beta),
    "cfs": lambda args: asym.cfs_param(args.degree, args.beta),
    "s": lambda args: asym.s_param(),
    "ls": lambda args: asym.ls_param(),
    "e": lambda args: asym.e_param(args.degree, args.beta),
    "i": lambda args: asym.i_param(args.degree, args.beta),
    "w2": lambda args: asym.w2_param(args.degree, args.beta, args.variant),
    "clmc": lambda args: asym.clmc_param(args.degree, args.beta, args.variant),
    "np": lambda args: asym.np_param(args.degree, args.beta, args.p),
}


def _write(args, text: str):
    if getattr(args, "out", None):
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _fmt(value) -> str:
    if measures.is_infinite(value):
        return "inf"
    return repr(float(value))


def _measure_csv(data: dict) -> str:
    keys = [
        "n", "alpha", "beta", "variance", "fisher", "shannon_E", "shannon_I",
        "shannon_S", "spreading_length", "w2", "c_cr", "c_fs", "c_lmc", "errors",
    ]
    header = ",".join(keys)
    cells = []
    for key in keys:
        val = data[key]
        if key == "errors":
            cells.append('"' + json.dumps(val).replace('"', '""') + '"')
        elif isinstance(val, str):
            cells.append(val)
        elif key == "n":
            cells.append(str(val))
        else:
            cells.append(repr(float(val)))
    return header + "\n" + ",".join(cells) + "\n"


def cmd_measure(args) -> int:
    params = PolyParams(args.degree, args.alpha, args.beta)
    ms = measures.measure_set(
        params, tol=args.tol, max_nodes=args.max_nodes
    )
    data = ms.to_dict()
    if args.format == "json":
        _write(args, json.dumps(data) + "\n")
    else:
        _write(args, _measure_csv(data))
    return EXIT_OK


def cmd_asym(args) -> int:
    table = _DEGREE_PREDICTORS if args.regime == "degree" else _ALPHA_PREDICTORS
    if args.measure not in table:
        raise DomainError(
            f"measure {args.measure!r} has no {args.regime}-regime predictor"
        )
    _check_required(args)
    pred = table[args.measure](args)
    payload = {
        "measure": pred.measure,
        "regime": pred.regime,
        "law": pred.law,
        "coefficient_or_value": pred.coefficient,
        "applicability": pred.applicability,
    }
    if pred.variant is not None:
        payload["variant"] = pred.variant
    _write(args, json.dumps(payload) + "\n")
    return EXIT_OK


def _check_required(args):
    needs = {
        ("degree", "ls"): (),
        ("alpha", "s"): (),
        ("alpha", "ls"): (),
    }
    required = needs.get((args.regime, args.measure))
    if required is None:
        if args.regime == "degree":
            missing = [f for f in ("alpha", "beta") if getattr(args, f) is None]
        else:
            missing = [f for f in ("degree", "beta") if getattr(args, f) is None]
            if args.measure == "np" and args.p is None:
                missing.append("p")
        if missing:
            raise DomainError(
                f"{args.regime}/{args.measure} needs: {', '.join(missing)}"
            )


def _parse_grid(spec: str, integer: bool):
    try:
        start_s, stop_s, factor_s = spec.split(":")
        start, stop, factor = float(start_s), float(stop_s), float(factor_s)
    except ValueError:
        raise DomainError(f"grid spec must be start:stop:factor, got {spec!r}") from None
    if start <= 0 or stop < start or factor <= 1.0:
        raise DomainError(f"grid spec must satisfy 0 < start <= stop, factor > 1: {spec!r}")
    values = []
    v = start
    while v <= stop * (1.0 + 1e-12):
        values.append(round(v) if integer else v)
        v *= factor
    if integer:
        values = sorted(set(int(v) for v in values))
    return values


def _sweep_numeric(measure: str, params: PolyParams, tol: float, p: float | None):
    """(numeric value, error estimate) for one sweep row."""
    if measure == "ccr":
        return measures.cramer_rao(params), 0.0
    if measure == "fisher":
        return measures.fisher_info(params), 0.0
    if measure == "i":
        return measures.shannon_I(params), 0.0
    if measure == "w2":
        return measures.disequilibrium_w2(params), 0.0
    if measure == "e":
        res = measures.shannon_E_numeric(params, tol)
        return res.value, res.abs_error_estimate
    if measure == "s":
        res = measures.shannon_E_numeric(params, tol)
        return res.value + measures.shannon_I(params), res.abs_error_estimate
    if measure == "ls":
        res = measures.shannon_E_numeric(params, tol)
        ls = math.exp(res.value + measures.shannon_I(params))
        return ls, ls * res.abs_error_estimate
    if measure == "cfs":
        f = measures.fisher_info(params)
        res = measures.shannon_E_numeric(params, tol)
        ls = math.exp(res.value + measures.shannon_I(params))
        if measures.is_infinite(f):
            return f, 0.0
        val = f * ls * ls / measures.TWO_PI_E
        return val, val * 2.0 * res.abs_error_estimate
    if measure == "clmc":
        w2 = measures.disequilibrium_w2(params)
        res = measures.shannon_E_numeric(params, tol)
        ls = math.exp(res.value + measures.shannon_I(params))
        val = w2 * ls
        return val, val * res.abs_error_estimate
    if measure == "np":
        return measures.lq_norm(params, p), 0.0
    raise DomainError(f"no numeric route for measure {measure!r}")


def cmd_sweep(args) -> int:
    if (args.n_grid is None) == (args.alpha_grid is None):
        raise DomainError("provide exactly one of --n-grid or --alpha-grid")
    table = _DEGREE_PREDICTORS if args.regime == "degree" else _ALPHA_PREDICTORS
    if args.measure not in table:
        raise DomainError(
            f"measure {args.measure!r} has no {args.regime}-regime predictor"
        )
    if args.regime == "degree":
        if args.n_grid is None:
            raise DomainError("degree sweeps need --n-grid")
        if args.alpha is None or args.beta is None:
            raise DomainError("degree sweeps need fixed -a and -b")
        grid = _parse_grid(args.n_grid, integer=True)
    else:
        if args.alpha_grid is None:
            raise DomainError("alpha sweeps need --alpha-grid")
        if args.degree is None or args.beta is None:
            raise DomainError("alpha sweeps need fixed -n and -b")
        grid = _parse_grid(args.alpha_grid, integer=False)
    if args.measure == "np" and args.p is None:
        raise DomainError("norm sweeps need -p")
    _check_required(args)
    pred = table[args.measure](args)
    lines = ["sweep_value,numeric,predicted,ratio,error_estimate"]
    for value in grid:
        if args.regime == "degree":
            params = PolyParams(int(value), args.alpha, args.beta)
            sweep_val = float(value)
        else:
            params = PolyParams(args.degree, float(value), args.beta)
            sweep_val = float(value)
        tol = args.tol if args.tol is not None else measures.default_tol(params.n)
        numeric, err = _sweep_numeric(args.measure, params, tol, args.p)
        predicted = pred.predict(sweep_val)
        if measures.is_infinite(numeric):
            numeric_s, ratio_s = "inf", "inf"
        else:
            numeric_s = repr(float(numeric))
            ratio_s = repr(float(numeric) / predicted) if predicted != 0.0 else "nan"
        lines.append(
            f"{sweep_val!r},{numeric_s},{predicted!r},{ratio_s},{err!r}"
        )
    _write(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_lmc_compare(args) -> int:
    lam_grid = _parse_grid(args.lambda_grid, integer=False)
    lines = ["lambda,beta,jacobi_alpha_lambda_minus_2,jacobi_alpha_lambda_minus_half,gegenbauer_alpha_eq_beta"]
    for lam in lam_grid:
        try:
            geg = repr(asym.clmc_degree(lam - 0.5, lam - 0.5).predict(0.0))
        except UnsupportedClassError:
            geg = "unsupported"
        for beta_spec in args.beta:
            beta = lam - 2.0 if beta_spec == "lambda-2" else float(beta_spec)
            cells = []
            for alpha in (lam - 2.0, lam - 0.5):
                try:
                    pred = asym.clmc_degree(alpha, beta)
                    if pred.law != "constant":
                        cells.append("unsupported")
                    else:
                        cells.append(repr(pred.coefficient))
                except (UnsupportedClassError, DomainError):
                    cells.append("unsupported")
            beta_label = "lambda-2" if beta_spec == "lambda-2" else repr(beta)
            lines.append(f"{lam!r},{beta_label},{cells[0]},{cells[1]},{geg}")
    _write(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_rule(args) -> int:
    rule = gauss_jacobi_rule(args.alpha, args.beta, args.order, max_nodes=args.max_nodes)
    lines = ["index,node,weight"]
    for i in range(rule.order):
        lines.append(f"{i},{rule.nodes[i]:.17g},{rule.weights[i]:.17g}")
    _write(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _add_common(p, degree=True, alpha=True, beta=True):
    if degree:
        p.add_argument("-n", "--degree", type=int, default=None)
    if alpha:
        p.add_argument("-a", "--alpha", type=float, default=None)
    if beta:
        p.add_argument("-b", "--beta", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jcx",
        description="Spreading and complexity measures of Jacobi polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    m = sub.add_parser("measure", help="compute the full measure set")
    _add_common(m)
    m.add_argument("--tol", type=float, default=None)
    m.add_argument("--max-nodes", type=int, default=MAX_RULE_NODES)
    m.add_argument("--format", choices=("json", "csv"), default="json")
    m.add_argument("--out", default=None)
    m.set_defaults(func=cmd_measure, required=("degree", "alpha", "beta"))

    a = sub.add_parser("asym", help="emit one leading-order prediction")
    a.add_argument("--regime", choices=("degree", "alpha"), required=True)
    a.add_argument("--measure", required=True)
    _add_common(a)
    a.add_argument("-p", type=float, default=None, help="norm order for measure np")
    a.add_argument("--variant", choices=("paper", "derived"), default="paper")
    a.add_argument("--out", default=None)
    a.set_defaults(func=cmd_asym)

    s = sub.add_parser("sweep", help="ratio report across a geometric grid")
    s.add_argument("--regime", choices=("degree", "alpha"), required=True)
    s.add_argument("--measure", required=True)
    _add_common(s)
    s.add_argument("-p", type=float, default=None)
    s.add_argument("--n-grid", default=None, help="start:stop:factor")
    s.add_argument("--alpha-grid", default=None, help="start:stop:factor")
    s.add_argument("--tol", type=float, default=None)
    s.add_argument("--variant", choices=("paper", "derived"), default="paper")
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_sweep)

    c = sub.add_parser("lmc-compare", help="limit constants under both mappings")
    c.add_argument("--lambda-grid", required=True, help="start:stop:factor")
    c.add_argument("--beta", nargs="+", default=["lambda-2", "2", "4", "8"])
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_lmc_compare)

    r = sub.add_parser("rule", help="dump a Gauss-Jacobi rule as CSV")
    r.add_argument("-a", "--alpha", type=float, required=True)
    r.add_argument("-b", "--beta", type=float, required=True)
    r.add_argument("-m", "--order", type=int, required=True)
    r.add_argument("--max-nodes", type=int, default=MAX_RULE_NODES)
    r.add_argument("--out", default=None)
    r.set_defaults(func=cmd_rule)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        if getattr(args, "required", None):
            missing = [f for f in args.required if getattr(args, f) is None]
            if missing:
                raise DomainError(f"missing required flags: {', '.join(missing)}")
        return args.func(args)
    except UnsupportedClassError as exc:
        print(f"jcx: unsupported asymptotic class: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except BudgetError as exc:
        print(f"jcx: numerical budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, JcxError, OSError) as exc:
        print(f"jcx: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
