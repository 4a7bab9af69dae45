"""``scx`` command-line entry point.

Exit codes: 0 success or pass, 1 check/oracle failure, 2 input error,
3 infeasible system or capacity cap exceeded.
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import payoff as payoff_mod
from .complex import (
    complex_to_json,
    dimension,
    face_key,
    is_full_simplex,
    is_pure,
    vertices,
)
from .documents import (
    coefficients_to_json,
    dumps,
    load_coefficients,
    load_complex,
    load_game,
    load_scheme,
    scheme_to_json,
)
from .errors import InputError, LimitError, ScxError, ShellingVerificationFailed
from .matroid import is_matroid, rank, shelling_order, step_report
from .oracle import OracleReport, oracle_characterization, oracle_d_coefficients, oracle_order_independence
from .payoff import (
    compare_formulas,
    d_coefficients,
    generic_payoff,
    probabilistic_payoff,
    simplicial_payoff,
    traditional_family,
    traditional_payoff,
)
from .scheme import FEASIBILITY_TOL, carrier_converse_check, check_efficiency, group_value, solve_scheme

AXIOMS = ("traditional", "probabilistic", "simplicial", "generic")
CAP_ENV = "SCX_FACET_CAP"

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    subcommand: str | None = None
    inputs: list[str] = field(default_factory=list)
    axiom: str | None = None
    coeffs: str | None = None
    scheme: str | None = None
    tol: float = 1e-9
    trials: int = 100
    seed: int = 0
    orders: int = 10
    output: str | None = None
    format: str = "json"

    def validate(self) -> None:
        if self.tol <= 0:
            raise InputError("--tol must be positive")
        if self.trials < 1:
            raise InputError("--trials must be at least 1")
        if self.orders < 0:
            raise InputError("--orders must be non-negative")
        if self.axiom is not None:
            if self.axiom not in AXIOMS:
                raise InputError(f"--axiom must be one of {', '.join(AXIOMS)}")
            if self.axiom in ("probabilistic", "generic") and not self.coeffs:
                raise InputError(f"--axiom {self.axiom} needs --coeffs")


# -- rendering ------------------------------------------------------------------

def _flatten(record, prefix=""):
    if isinstance(record, dict):
        for k, x in record.items():
            yield from _flatten(x, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(record, list) and record and isinstance(record[0], (dict, list)):
        for i, x in enumerate(record):
            yield from _flatten(x, f"{prefix}[{i}]")
    else:
        yield prefix, record


def render(record, fmt: str) -> str:
    if fmt == "json":
        return dumps(record)
    rows = list(_flatten(record))
    width = max((len(k) for k, _ in rows), default=0)
    return "".join(f"{k:<{width}}  {x}\n" for k, x in rows)


def _emit(record, cfg: RunConfig) -> None:
    text = render(record, cfg.format)
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)


def _report_json(report: OracleReport) -> dict:
    doc = {
        "subject": report.subject,
        "trials": report.trials,
        "max_abs_deviation": report.max_abs_deviation,
        "tolerance": report.tolerance,
        "pass": report.passed,
        "failures": [{"input": d, "expected": e, "got": g} for d, e, g in report.failures],
    }
    if report.values:
        doc["values"] = report.values
    return doc


def _target(cfg: RunConfig, delta):
    if cfg.axiom == "traditional":
        return traditional_family(delta)
    if cfg.axiom == "simplicial":
        return d_coefficients(delta)
    label = "probabilistic" if cfg.axiom == "probabilistic" else "generic"
    return load_coefficients(cfg.coeffs, delta, label)


# -- commands -------------------------------------------------------------------

def cmd_complex_info(cfg):
    delta = load_complex(cfg.inputs[0])
    fvec: dict[int, int] = {}
    for t in delta.faces:
        d = len(vertices(t)) - 1
        fvec[d] = fvec.get(d, 0) + 1
    _emit({
        **complex_to_json(delta),
        "num_faces": len(delta.faces),
        "f_vector": [fvec[d] for d in sorted(fvec)],
        "pure": is_pure(delta),
        "dimension": dimension(delta),
        "full_simplex": is_full_simplex(delta),
    }, cfg)
    return EXIT_OK


def cmd_payoff(cfg):
    v = load_game(cfg.inputs[0])
    flags = {}
    if cfg.axiom == "traditional":
        value = traditional_payoff(v)
    elif cfg.axiom == "simplicial":
        value = simplicial_payoff(v)
    elif cfg.axiom == "probabilistic":
        res = probabilistic_payoff(v, _target(cfg, v.complex))
        value = res.value
        flags = {"normalized": res.normalized, "nonnegative": res.nonnegative}
    else:
        value = generic_payoff(v, _target(cfg, v.complex))
    _emit({"axiom": cfg.axiom, "value": value, "flags": flags}, cfg)
    return EXIT_OK


def cmd_dcoeff(cfg):
    _emit(coefficients_to_json(d_coefficients(load_complex(cfg.inputs[0]))), cfg)
    return EXIT_OK


def cmd_values(cfg):
    v = load_game(cfg.inputs[0])
    s = load_scheme(cfg.scheme)
    values = group_value(v, s)
    _emit({"values": values.tolist(), "total": float(values.sum())}, cfg)
    return EXIT_OK


def cmd_check(cfg):
    s = load_scheme(cfg.scheme)
    delta = s.complex
    if cfg.inputs:
        other = load_complex(cfg.inputs[0])
        if other != delta:
            raise InputError("complex file does not match the scheme's complex")
    target = _target(cfg, delta)
    report = check_efficiency(s, target, cfg.tol)
    converse = carrier_converse_check(s, target, cfg.tol)
    worst = report.worst()
    _emit({
        "axiom": cfg.axiom,
        "pass": report.passed,
        "tolerance": cfg.tol,
        "max_abs_residual": report.max_abs_residual,
        "worst_face": None if worst is None else face_key(worst),
        "residuals": {face_key(t): r for t, r in report.residuals.items() if r != 0},
        "carrier_check": {
            "pass": converse.passed,
            "witness": None if converse.witness is None else face_key(converse.witness),
        },
    }, cfg)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_solve(cfg):
    delta = load_complex(cfg.inputs[0])
    s, residual = solve_scheme(delta, _target(cfg, delta))
    feasible = residual <= FEASIBILITY_TOL
    _emit(scheme_to_json(s), cfg)
    print(render({"axiom": cfg.axiom, "residual_norm": residual, "feasible": feasible}, "json").strip(),
          file=sys.stderr)
    return EXIT_OK if feasible else EXIT_LIMIT


def cmd_compare(cfg):
    v = load_game(cfg.inputs[0])
    cmp = compare_formulas(v, cfg.orders, cfg.seed)
    _emit({
        "closed": cmp.closed,
        "alternating": cmp.alternating,
        "sequential": [
            {"order": name, "facets": cmp.orders[name], "value": x} for name, x in cmp.sequential
        ],
        "matroid_reduction": cmp.matroid_reduction,
        "max_pairwise_delta": cmp.max_pairwise_delta,
    }, cfg)
    return EXIT_OK


def cmd_matroid(cfg):
    delta = load_complex(cfg.inputs[0])
    if cfg.subcommand == "check":
        check = is_matroid(delta)
        witness = None
        if check.witness:
            a, b = check.witness
            witness = {"A": list(vertices(a)), "B": list(vertices(b))}
        record = {"is_matroid": check.is_matroid, "witness": witness}
        if check.is_matroid:
            record["rank"] = rank(delta)
        _emit(record, cfg)
        return EXIT_OK if check else EXIT_FAIL
    order = shelling_order(delta)
    _emit({
        "rank": order.rank,
        "order": [list(vertices(b)) for b in order.order],
        "steps": step_report(order),
        "verified": True,
    }, cfg)
    return EXIT_OK


def cmd_oracle(cfg):
    if cfg.subcommand == "d":
        delta = load_complex(cfg.inputs[0])
        brute = oracle_d_coefficients(delta)
        main = d_coefficients(delta)
        report = OracleReport("d-coefficients", 2 ** len(delta.facets) - 1, 0.0, 0.0)
        for t in sorted(set(brute.coeffs) | set(main.coeffs), key=lambda t: (len(vertices(t)), vertices(t))):
            dev = abs(brute[t] - main[t])
            report.max_abs_deviation = max(report.max_abs_deviation, dev)
            if dev:
                report.failures.append((face_key(t), brute[t], main[t]))
        record = _report_json(report)
        record["coefficients"] = coefficients_to_json(brute)
    elif cfg.subcommand == "characterization":
        s = load_scheme(cfg.scheme)
        delta = s.complex
        if cfg.inputs and load_complex(cfg.inputs[0]) != delta:
            raise InputError("complex file does not match the scheme's complex")
        report = oracle_characterization(delta, _target(cfg, delta), s, cfg.trials, cfg.seed, cfg.tol)
        record = _report_json(report)
    else:
        report = oracle_order_independence(load_game(cfg.inputs[0]), cfg.orders, cfg.seed)
        record = _report_json(report)
    _emit(record, cfg)
    return EXIT_OK if report.passed else EXIT_FAIL


COMMANDS = {
    "complex": cmd_complex_info,
    "payoff": cmd_payoff,
    "dcoeff": cmd_dcoeff,
    "values": cmd_values,
    "check": cmd_check,
    "solve": cmd_solve,
    "compare-formulas": cmd_compare,
    "matroid": cmd_matroid,
    "oracle": cmd_oracle,
}


def run(cfg: RunConfig) -> int:
    try:
        cfg.validate()
        return COMMANDS[cfg.command](cfg)
    except ShellingVerificationFailed as exc:
        print(f"scx: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except LimitError as exc:
        print(f"scx: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InputError, ScxError) as exc:
        print(f"scx: {exc}", file=sys.stderr)
        return EXIT_INPUT


# -- argument parsing ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("-o", "--output")

    def axiom_args(p, required=True):
        p.add_argument("--axiom", choices=AXIOMS, required=required)
        p.add_argument("--coeffs")

    parser = argparse.ArgumentParser(prog="scx", description="Cooperative games on simplicial complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complex", parents=[common], help="complex summary")
    p.add_argument("subcommand", choices=("info",))
    p.add_argument("inputs", nargs=1, metavar="complex.json")

    p = sub.add_parser("payoff", parents=[common], help="total payoff of a game")
    axiom_args(p)
    p.add_argument("inputs", nargs=1, metavar="game.json")

    p = sub.add_parser("dcoeff", parents=[common], help="inclusion-exclusion coefficients")
    p.add_argument("inputs", nargs=1, metavar="complex.json")

    p = sub.add_parser("values", parents=[common], help="group value of a scheme on a game")
    p.add_argument("--scheme", required=True)
    p.add_argument("inputs", nargs=1, metavar="game.json")

    p = sub.add_parser("check", parents=[common], help="efficiency check of a scheme")
    p.add_argument("--scheme", required=True)
    axiom_args(p)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("inputs", nargs="?", metavar="complex.json")

    p = sub.add_parser("solve", parents=[common], help="construct an efficient scheme")
    axiom_args(p)
    p.add_argument("inputs", nargs=1, metavar="complex.json")

    p = sub.add_parser("compare-formulas", parents=[common], help="all payoff formulas side by side")
    p.add_argument("--orders", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("inputs", nargs=1, metavar="game.json")

    p = sub.add_parser("matroid", parents=[common], help="matroid test and shelling order")
    p.add_argument("subcommand", choices=("check", "shelling"))
    p.add_argument("inputs", nargs=1, metavar="complex.json")

    p = sub.add_parser("oracle", help="brute-force cross-checks")
    osub = p.add_subparsers(dest="subcommand", required=True)
    q = osub.add_parser("d", parents=[common])
    q.add_argument("inputs", nargs=1, metavar="complex.json")
    q = osub.add_parser("characterization", parents=[common])
    q.add_argument("--scheme", required=True)
    axiom_args(q)
    q.add_argument("--trials", type=int, default=100)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--tol", type=float, default=1e-9)
    q.add_argument("inputs", nargs="?", metavar="complex.json")
    q = osub.add_parser("orders", parents=[common])
    q.add_argument("--orders", type=int, default=10)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("inputs", nargs=1, metavar="game.json")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    inputs = ns.inputs if isinstance(ns.inputs, list) else ([ns.inputs] if ns.inputs else [])
    cfg = RunConfig(command=ns.command, subcommand=getattr(ns, "subcommand", None), inputs=inputs)
    for name in ("axiom", "coeffs", "scheme", "tol", "trials", "seed", "orders", "output", "format"):
        if getattr(ns, name, None) is not None:
            setattr(cfg, name, getattr(ns, name))
    return cfg


def _apply_cap_override() -> None:
    raw = os.environ.get(CAP_ENV)
    if not raw:
        return
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"{CAP_ENV} must be an integer") from None
    print(f"scx: warning: facet cap overridden to {cap} via {CAP_ENV}; "
          "runs beyond 20 facets may be very slow", file=sys.stderr)
    payoff_mod.MAX_FACETS = cap


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        _apply_cap_override()
    except InputError as exc:
        print(f"scx: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run(config_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
