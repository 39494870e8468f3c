"""Batch command line: orbit, table and distance queries, function
evaluation at file-supplied points, and the verification suites.

Exit status: 0 when everything requested succeeds, 1 when a verification
check fails, 2 on file, parse, or usage errors.  All randomness derives
from --seed (default 7), so any two runs with the same flags agree.  The
rejection budget for admissible-point search can be overridden through the
environment variable HYPERWEYL_BUDGET (and nothing else can).
"""

import argparse
import json
import os
import random
import sys

from .coxeter import (
    JLabel,
    LLabel,
    MLabel,
    color_orbits,
    dd,
    full_group_census,
    group_order,
    orbit_color,
    parse_label,
    t_distance,
    triple_orbits,
)
from .exactalg import LinForm, V_SYMBOLS, W_SYMBOLS
from .hypnum import EvaluationDomainError, PointV, PointW
from .correspond import (
    FunTerm,
    builtin_relations,
    check_limit,
    gen_point as _draw_point,
    limit222_pipeline,
    limit_probe_args,
    pipeline_probe_args,
    relation_probe_args,
    relation_report,
    table_json,
    table_text,
)
from .selftest import RunConfig, run_all, run_check

__all__ = ["RunConfig", "gen_point", "dispatch", "main"]

LIMIT_LABELS = ("+v(0,7)", "+v(1,7)", "+v(0,1)", "+v(2,7)")
GROUP_ORDERS = {"G_J": 720, "G_L": 1920, "H1": 23040, "Q": 23040, "G": 51840}


class CliError(Exception):
    """Bad input: unreadable file, unparsable label or form, wrong space."""


def gen_point(cfg: RunConfig, side: str, probe=None):
    """Seeded admissible point on the requested side ("W" or "V")."""
    rng = random.Random(cfg.seed)
    return _draw_point(rng, side, probe, budget=cfg.budget)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hyperweyl",
        description="coset tables, distances, and numerical verification "
        "for the two hypergeometric families",
    )
    top.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output rendering (default: text); json output is key-sorted",
    )
    top.add_argument(
        "--seed", type=int, default=7, help="random point seed (default: 7)"
    )
    top.add_argument(
        "--tol-m",
        type=float,
        default=1e-5,
        help="relative residual bound for eight-slot checks (default: 1e-5)",
    )
    top.add_argument(
        "--tol-jl",
        type=float,
        default=1e-7,
        help="relative residual bound for seven-slot checks (default: 1e-7)",
    )
    top.add_argument(
        "--limit-decay",
        type=float,
        default=0.6,
        help="required final/initial error ratio in limit checks (default: 0.6)",
    )
    sub = top.add_subparsers(dest="verb", required=True)

    sub.add_parser("orbits", help="the three orbits of the 56 labels")

    sub.add_parser("table", help="the full 56-row correspondence table")

    p = sub.add_parser("distance", help="distance between two labels")
    p.add_argument("label1")
    p.add_argument("label2")

    p = sub.add_parser("classify", help="orbit census of three-element sets")
    p.add_argument("--space", choices=("M", "J", "L", "T"), required=True)

    p = sub.add_parser("eval", help="evaluate a function at a point file")
    p.add_argument("--func", choices=("M", "J", "L"), required=True)
    p.add_argument(
        "--point", required=True, help="JSON file of coordinates {letter: [re, im]}"
    )
    p.add_argument(
        "--args",
        default=None,
        help="semicolon-separated argument forms (default: the plain letters)",
    )

    p = sub.add_parser("check", help="run one verification suite")
    p.add_argument(
        "suite", choices=("invariance", "relations", "limits", "pipeline")
    )

    sub.add_parser("selftest", help="run the full fixed check catalog")

    p = sub.add_parser("groups", help="subgroup orders by matrix closure")
    p.add_argument(
        "--full",
        action="store_true",
        help="also enumerate the full eight-slot-side group (~3M matrices)",
    )

    return top


def _config_from(ns) -> RunConfig:
    try:
        budget = int(os.environ.get("HYPERWEYL_BUDGET", "10000"))
    except ValueError as exc:
        raise CliError(f"HYPERWEYL_BUDGET must be an integer: {exc}")
    return RunConfig(
        seed=ns.seed,
        fmt=ns.format,
        tol_m=ns.tol_m,
        tol_jl=ns.tol_jl,
        limit_decay=ns.limit_decay,
        budget=budget,
    )


def _emit(payload, cfg: RunConfig, text: str, out) -> None:
    if cfg.fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2), file=out)
    else:
        print(text, file=out)


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------


def _cmd_orbits(ns, cfg, out):
    data = []
    for members in color_orbits():
        data.append(
            {
                "color": str(orbit_color(members[0])),
                "size": len(members),
                "labels": [str(lab) for lab in members],
            }
        )
    lines = [
        f"{d['color']:>4} ({d['size']:2d}): {' '.join(d['labels'])}" for d in data
    ]
    _emit(data, cfg, "\n".join(lines), out)
    return 0


def _cmd_table(ns, cfg, out):
    if cfg.fmt == "json":
        print(table_json(), file=out)
    else:
        print(table_text(), file=out)
    return 0


def _cmd_distance(ns, cfg, out):
    try:
        u = parse_label(ns.label1)
        v = parse_label(ns.label2)
    except ValueError as exc:
        raise CliError(str(exc))
    if isinstance(u, MLabel) and isinstance(v, MLabel):
        metric, d = "dd", dd(u, v)
    elif isinstance(u, (JLabel, LLabel)) and isinstance(v, (JLabel, LLabel)):
        metric, d = "t", t_distance(u, v)
    else:
        raise CliError("labels live on different sides; no distance is defined")
    payload = {"label1": str(u), "label2": str(v), "metric": metric, "distance": d}
    _emit(payload, cfg, str(d), out)
    return 0


def _cmd_classify(ns, cfg, out):
    orbs = triple_orbits(ns.space)
    data = {
        "space": ns.space,
        "triples": sum(o["size"] for o in orbs),
        "orbits": [
            {
                "size": o["size"],
                "type": o["type"],
                "representative": [str(lab) for lab in o["representative"]],
            }
            for o in orbs
        ],
    }
    lines = [f"{ns.space}: {data['triples']} triples, {len(orbs)} orbits"]
    for o in data["orbits"]:
        lines.append(
            f"  {o['type']:>10}  size {o['size']:5d}  "
            f"rep {{{', '.join(o['representative'])}}}"
        )
    _emit(data, cfg, "\n".join(lines), out)
    return 0


def _load_point(path: str):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read point file {path}: {exc}")
    try:
        if "a" in data:
            return PointW.from_mapping(data), W_SYMBOLS
        if "A" in data:
            return PointV.from_mapping(data), V_SYMBOLS
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"bad point file {path}: {exc}")
    raise CliError(f"point file {path} has neither eight- nor seven-slot keys")


def _cmd_eval(ns, cfg, out):
    point, alphabet = _load_point(ns.point)
    if ns.args is None:
        forms = tuple(LinForm.symbol(alphabet, s) for s in alphabet)
    else:
        try:
            forms = tuple(
                LinForm.parse(t.strip(), alphabet) for t in ns.args.split(";")
            )
        except ValueError as exc:
            raise CliError(f"bad argument forms: {exc}")
    try:
        term = FunTerm(ns.func, forms)
    except ValueError as exc:
        raise CliError(str(exc))
    try:
        lg = term.eval_log(point.args())
    except EvaluationDomainError as exc:
        raise CliError(f"point is inadmissible for this evaluation: {exc}")
    try:
        value = lg.to_complex()
        value_pair = [value.real, value.imag]
    except OverflowError:
        value_pair = None
    payload = {
        "func": ns.func,
        "args": [str(f) for f in term.args],
        "log_mag": lg.log_mag,
        "phase": lg.phase,
        "value": value_pair,
    }
    if value_pair is None:
        text = f"exp({lg.log_mag:.12g} + {lg.phase:.12g}i)  [beyond double range]"
    else:
        text = f"{value:.12g}"
    _emit(payload, cfg, text, out)
    return 0


def _spread(terms) -> float:
    mags = [t["log_mag"] for t in terms if "log_mag" in t]
    return max(mags) - min(mags) if mags else 0.0


def _check_invariance(cfg, out):
    res = run_check("10-function-invariance", cfg)
    _emit(res.to_dict(), cfg, res.line(), out)
    return 0 if res.passed else 1


def _check_relations(cfg, out):
    rng = random.Random(cfg.seed)
    reports = []
    ok = True
    for name, side, tol in (
        ("roy463", "W", cfg.tol_m),
        ("roy463b", "W", cfg.tol_m),
        ("orbit1jll", "V", cfg.tol_jl),
    ):
        rel = builtin_relations()[name]
        p = _draw_point(
            rng, side, lambda q: relation_probe_args(rel, q), budget=cfg.budget
        )
        rep = relation_report(rel, p)
        rep["bound"] = tol
        rep["log_mag_spread"] = _spread(rep["terms"])
        rep["passed"] = rep["residual"] <= tol
        ok = ok and rep["passed"]
        reports.append(rep)
    lines = []
    for rep in reports:
        mark = "PASS" if rep["passed"] else "FAIL"
        lines.append(
            f"{mark} {rep['relation']}: residual {rep['residual']:.3e} "
            f"(bound {rep['bound']:.0e}, log-magnitude spread "
            f"{rep['log_mag_spread']:.2f})"
        )
    _emit(reports, cfg, "\n".join(lines), out)
    return 0 if ok else 1


def _check_limits(cfg, out):
    rng = random.Random(cfg.seed)
    reports = []
    ok = True
    for lab in LIMIT_LABELS:
        p = _draw_point(
            rng, "W", lambda q: limit_probe_args(lab, q), budget=cfg.budget
        )
        rep = check_limit(lab, p)
        ok = ok and rep.verdict
        reports.append(rep.to_dict())
    lines = []
    for rep in reports:
        mark = "PASS" if rep["verdict"] else "FAIL"
        errs = " -> ".join(f"{e:.3e}" for e in rep["errors"]) or rep.get(
            "failure", ""
        )
        lines.append(f"{mark} {rep['label']}: {errs}")
    _emit(reports, cfg, "\n".join(lines), out)
    return 0 if ok else 1


def _check_pipeline(cfg, out):
    rng = random.Random(cfg.seed)
    p = _draw_point(rng, "W", pipeline_probe_args, budget=cfg.budget)
    result = limit222_pipeline(p)
    lines = [f"verdict: {result['verdict']}"]
    for name, step in result["steps"].items():
        mark = "PASS" if step.get("pass") else "FAIL"
        lines.append(f"  {mark} {name}")
    _emit(result, cfg, "\n".join(lines), out)
    return 0 if result["verdict"] == "PASS" else 1


def _cmd_check(ns, cfg, out):
    runner = {
        "invariance": _check_invariance,
        "relations": _check_relations,
        "limits": _check_limits,
        "pipeline": _check_pipeline,
    }[ns.suite]
    return runner(cfg, out)


def _cmd_selftest(ns, cfg, out):
    results = run_all(cfg)
    payload = [r.to_dict() for r in results]
    lines = [r.line() for r in results]
    failed = sum(1 for r in results if not r.passed)
    lines.append(
        f"{len(results) - failed}/{len(results)} checks passed"
        + (f", {failed} FAILED" if failed else "")
    )
    _emit(payload, cfg, "\n".join(lines), out)
    return 0 if failed == 0 else 1


def _cmd_groups(ns, cfg, out):
    got = {name: group_order(name) for name in GROUP_ORDERS}
    payload = {
        "orders": got,
        "expected": dict(GROUP_ORDERS),
        "match": got == GROUP_ORDERS,
    }
    if ns.full:
        payload["full_order"] = full_group_census(acknowledge_memory=True)
        payload["full_expected"] = 2903040
        payload["match"] = payload["match"] and (
            payload["full_order"] == payload["full_expected"]
        )
    lines = [
        f"{name}: {order}" + ("" if order == GROUP_ORDERS[name] else "  MISMATCH")
        for name, order in sorted(got.items())
    ]
    if ns.full:
        lines.append(f"full: {payload['full_order']}")
    _emit(payload, cfg, "\n".join(lines), out)
    return 0 if payload["match"] else 1


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

_VERBS = {
    "orbits": _cmd_orbits,
    "table": _cmd_table,
    "distance": _cmd_distance,
    "classify": _cmd_classify,
    "eval": _cmd_eval,
    "check": _cmd_check,
    "selftest": _cmd_selftest,
    "groups": _cmd_groups,
}


def _preprocess(argv):
    """Shield signed labels like -v(0,1) from option parsing."""
    argv = list(sys.argv[1:] if argv is None else argv)
    if "distance" in argv and "--" not in argv:
        i = argv.index("distance")
        rest = argv[i + 1 :]
        if rest and not any(a in ("-h", "--help") for a in rest):
            argv.insert(i + 1, "--")
    return argv


def dispatch(argv=None, out=sys.stdout) -> int:
    ns = build_parser().parse_args(_preprocess(argv))
    try:
        cfg = _config_from(ns)
        return _VERBS[ns.verb](ns, cfg, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        # admissible-point search exhausted its budget
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> None:
    sys.exit(dispatch(argv))


if __name__ == "__main__":
    main()
