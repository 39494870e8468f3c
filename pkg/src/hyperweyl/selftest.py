"""Fixed catalog of end-to-end checks, one pass/fail verdict each.

Every check is seed-reproducible and self-contained, and the catalog order
never changes, so reports are comparable across runs.  Stated time budgets
are part of the verdict: a correct answer arriving too late fails.  The two
named residual tolerances (the eight-slot 1e-5 and the seven-slot 1e-7) are
engineering margins, adjustable through RunConfig.
"""

import cmath
import math
import random
import resource
import time
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .coxeter import (
    Color,
    M_BFS_GENERATOR_ORDER,
    act_m,
    act_t,
    all_m_labels,
    color_orbits,
    dd,
    dd_by_cases,
    group_order,
    jl_label,
    m_label_orbit_bfs,
    matching_generator,
    orbit_color,
    t_distance,
    triple_orbits,
)
from .exactalg import (
    SUBGROUP_GENERATORS,
    V_GENERATOR_NAMES,
    W_GENERATOR_NAMES,
    coxeter_order,
    generator,
)
from .hypnum import (
    EvaluationDomainError,
    eval_J_log,
    eval_L,
    eval_L_7f6,
    eval_L_log,
    eval_M_log,
    j_probe_args,
    l7f6_probe_args,
    l_probe_args,
    lgamma,
    log_sin_pi,
    m_probe_args,
)
from . import correspond
from .correspond import (
    appendix_table,
    bfs_m_args,
    builtin_relations,
    check_limit,
    eval_relation,
    fixture_rows,
    gen_point,
    limit222_pipeline,
    limit_probe_args,
    pipeline_probe_args,
    relation_probe_args,
    translate_relation,
)

__all__ = ["RunConfig", "CheckResult", "CATALOG", "run_check", "run_all"]


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by the command line and the check catalog.

    seed drives every random point draw; the fmt and point_file fields only
    matter to the command-line front end.
    """

    seed: int = 7
    fmt: str = "text"
    tol_m: float = 1e-5
    tol_jl: float = 1e-7
    limit_decay: float = 0.6
    budget: int = 10_000
    point_file: str = None


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark} {self.name} ({self.seconds:.2f}s): {self.detail}"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


# ---------------------------------------------------------------------------
# the checks
# ---------------------------------------------------------------------------


def _coset_census(cfg):
    labels = m_label_orbit_bfs()
    ok = len(labels) == 56 and labels == set(all_m_labels())
    return ok, f"{len(labels)} labels reached from the base label"


def _group_orders(cfg):
    want = {"G_J": 720, "G_L": 1920, "H1": 23040, "Q": 23040, "G": 51840}
    got = {name: group_order(name) for name in want}
    peak_gb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1e6
    ok = got == want and peak_gb < 1.0
    parts = " ".join(f"{k}={v}" for k, v in sorted(got.items()))
    return ok, f"{parts}, peak memory {peak_gb:.2f} GB"


def _coxeter_presentation(cfg):
    pairs = 0
    for side, names in (("w", W_GENERATOR_NAMES), ("v", V_GENERATOR_NAMES)):
        for g1, g2 in combinations_with_replacement(names, 2):
            m = coxeter_order(side, g1, g2)
            prod = generator(side, g1) @ generator(side, g2)
            if not (prod**m).is_identity():
                return False, f"({g1} {g2})^{m} is not the identity on side {side}"
            pairs += 1
    return True, f"{pairs} generator pairs verified exactly on both sides"


def _index_orbits(cfg):
    bycolor = {}
    for members in color_orbits():
        colors = {orbit_color(lab) for lab in members}
        if len(colors) != 1:
            return False, f"an orbit mixes colors {colors}"
        bycolor[colors.pop()] = set(members)
    want = {}
    for lab in all_m_labels():
        want.setdefault(orbit_color(lab), set()).add(lab)
    if bycolor != want:
        return False, "orbit membership differs from the color classifier"
    sizes = {str(c): len(m) for c, m in bycolor.items()}
    ok = sorted(sizes.values()) == [12, 12, 32]
    return ok, " ".join(f"{k}:{v}" for k, v in sorted(sizes.items()))


def _equivariance(cfg):
    gens = ("s1", "s2", "s3", "s4", "s5", "s3'")
    count = 0
    for lab in all_m_labels():
        c0, t0 = jl_label(lab)
        for g in gens:
            c1, t1 = jl_label(act_m(g, lab))
            if c1 != c0 or t1 != act_t(matching_generator(g), t0):
                return False, f"label map does not intertwine {g} at {lab}"
            count += 1
    return True, f"{count} generator/label pairs intertwine exactly"


def _metric_suite(cfg):
    labels = all_m_labels()
    for u in labels:
        for v in labels:
            d = dd(u, v)
            if d not in (0, 2, 4, 6):
                return False, f"dd({u},{v}) = {d} outside the value set"
            if d != dd_by_cases(u, v):
                return False, f"case table disagrees at ({u},{v})"
            if d + dd(u, -v) != 6:
                return False, f"antipode sum fails at ({u},{v})"
    for g in M_BFS_GENERATOR_ORDER:
        for u in labels:
            for v in labels:
                if dd(act_m(g, u), act_m(g, v)) != dd(u, v):
                    return False, f"{g} does not preserve dd at ({u},{v})"
    return True, "value set, case table, antipode sum, 7 isometries on all pairs"


def _compression(cfg):
    for u in all_m_labels():
        cu, tu = jl_label(u)
        for v in all_m_labels():
            cv, tv = jl_label(v)
            drop = 2 if {cu, cv} == {Color.BLUE, Color.RED} else 0
            if t_distance(tu, tv) != dd(u, v) - drop:
                return False, f"compression fails at ({u},{v})"
    return True, "distance compression exact on all 3136 pairs"


def _triple_censuses(cfg):
    orbs = triple_orbits("M")
    if sum(o["size"] for o in orbs) != 27720 or len(orbs) != 5:
        return False, f"eight-slot census {len(orbs)} orbits"
    if {o["type"] for o in orbs} != {"222", "224", "244", "246", "444"}:
        return False, "eight-slot type classes wrong"
    orbs = triple_orbits("J")
    if sum(o["size"] for o in orbs) != 4960 or len(orbs) != 5:
        return False, f"sign-string census {len(orbs)} orbits"
    orbs = triple_orbits("L")
    bytag = {o["type"]: o["size"] for o in orbs}
    if sum(bytag.values()) != 220 or bytag != {"coherent": 160, "incoherent": 60}:
        return False, f"second-family census {bytag}"
    orbs = triple_orbits("T")
    comp = {}
    for o in orbs:
        mix = o["type"].split(":")[0]
        comp[mix] = comp.get(mix, 0) + 1
    if sum(o["size"] for o in orbs) != 13244 or len(orbs) != 18:
        return False, f"union census {len(orbs)} orbits"
    if comp != {"JJJ": 5, "JJL": 7, "JLL": 4, "LLL": 2}:
        return False, f"union composition {comp}"
    return True, "27720->5, 4960->5, 220->160+60, 13244->18 (2/4/7/5 by mixture)"


def _mod_2pi(d: complex) -> float:
    k = round(d.imag / (2 * math.pi))
    return abs(complex(d.real, d.imag - 2 * math.pi * k))


def _stirling_log(z: complex) -> complex:
    return (
        (z - 0.5) * cmath.log(z)
        - z
        + 0.5 * math.log(2 * math.pi)
        + 1 / (12 * z)
        - 1 / (360 * z**3)
    )


def _gamma_layer(cfg):
    rng = random.Random(cfg.seed)
    worst_ref = worst_rec = 0.0
    count = 0
    while count < 1000:
        z = complex(rng.uniform(-20, 20), rng.uniform(-20, 20))
        if abs(z - round(z.real)) < 0.1 or abs(z) < 0.1:
            continue
        count += 1
        lhs = lgamma(z).as_log() + lgamma(1 - z).as_log()
        rhs = math.log(math.pi) - log_sin_pi(z, margin=1e-9).as_log()
        ref = _mod_2pi(lhs - rhs) / max(1.0, abs(lhs))
        rec = _mod_2pi(
            lgamma(z + 1).as_log() - lgamma(z).as_log() - cmath.log(z)
        ) / max(1.0, abs(lgamma(z + 1).as_log()))
        worst_ref = max(worst_ref, ref)
        worst_rec = max(worst_rec, rec)
        if ref > 1e-12 or rec > 1e-12:
            return False, f"residuals {ref:.2e}/{rec:.2e} at {z}"
    worst_st = 0.0
    for _ in range(100):
        z = cmath.rect(1000.0, rng.uniform(-1.4, 1.4))
        st = _stirling_log(z)
        err = _mod_2pi(lgamma(z).as_log() - st) / abs(st)
        worst_st = max(worst_st, err)
        if err > 1e-10:
            return False, f"asymptotic mismatch {err:.2e} at {z}"
    return True, (
        f"1000 points: reflection {worst_ref:.1e}, recursion {worst_rec:.1e}; "
        f"|z|=1000 asymptotics {worst_st:.1e}"
    )


def _function_invariance(cfg):
    rng = random.Random(cfg.seed)
    worst = {}
    jobs = (
        ("J", "G_J", eval_J_log, j_probe_args, "V", 5, cfg.tol_jl),
        ("L", "G_L", eval_L_log, l_probe_args, "V", 5, cfg.tol_jl),
        ("M", "G", eval_M_log, m_probe_args, "W", 3, cfg.tol_m),
    )
    for kind, gens_key, evaluator, probe, side, npts, tol in jobs:
        mats = SUBGROUP_GENERATORS[gens_key]
        worst[kind] = 0.0

        def probe_all(p):
            vals = p.args()
            g, s = [list(x) for x in probe(vals)]
            for mat in mats:
                pg, ps = probe(mat.apply_values(vals))
                g.extend(pg)
                s.extend(ps)
            return g, s

        for _ in range(npts):
            p = gen_point(rng, side, probe_all, budget=cfg.budget)
            base = evaluator(p.args())
            for mat in mats:
                moved = evaluator(mat.apply_values(p.args()))
                err = abs((moved - base).to_complex() - 1.0)
                worst[kind] = max(worst[kind], err)
                if err > tol:
                    return False, f"{kind} moves by {err:.2e} under a generator"
    return True, (
        f"J {worst['J']:.1e} (5 gens), L {worst['L']:.1e} (5 gens), "
        f"M {worst['M']:.1e} (6 gens)"
    )


def _l_dual_route(cfg):
    rng = random.Random(cfg.seed)

    def probe(p):
        args = p.args()
        if (args[5] - args[3]).real <= 0.05:
            raise EvaluationDomainError("thin half-plane margin for the 7F6 route")
        g1, s1 = l_probe_args(args)
        g2, s2 = l7f6_probe_args(args)
        return tuple(g1) + tuple(g2), tuple(s1) + tuple(s2)

    worst = 0.0
    for _ in range(3):
        p = gen_point(rng, "V", probe, budget=cfg.budget)
        a = eval_L(p.args())
        b = eval_L_7f6(p.args())
        err = abs(a - b) / abs(a)
        worst = max(worst, err)
        if err > cfg.tol_jl:
            return False, f"routes differ by {err:.2e}"
    return True, f"two evaluation routes agree to {worst:.1e} at 3 points"


def _relations(cfg):
    rng = random.Random(cfg.seed)
    rels = builtin_relations()
    report = []
    for name, side, gens, tol in (
        ("roy463", "W", ("s1", "s2", "s3", "s4", "s5", "s3'"), cfg.tol_m),
        ("orbit1jll", "V", ("a1", "a2", "a3", "a4", "a5", "a1'"), cfg.tol_jl),
    ):
        base = rels[name]
        worst = 0.0
        for _ in range(3):
            p = gen_point(
                rng, side, lambda q: relation_probe_args(base, q), budget=cfg.budget
            )
            r = eval_relation(base, p)
            worst = max(worst, r)
            if r > tol:
                return False, f"{name} residual {r:.2e} at a seeded point"
        worst_t = 0.0
        for g in gens:
            moved = translate_relation(base, (g,), side.lower())
            p = gen_point(
                rng, side, lambda q: relation_probe_args(moved, q), budget=cfg.budget
            )
            r = eval_relation(moved, p)
            worst_t = max(worst_t, r)
            if r > 10 * tol:
                return False, f"{moved.name} residual {r:.2e} beyond 10x bound"
        report.append(f"{name} {worst:.1e} (translated {worst_t:.1e})")
    return True, "; ".join(report)


def _limits(cfg):
    rng = random.Random(cfg.seed)
    labels = ("+v(0,7)", "+v(1,7)", "+v(0,1)", "+v(2,7)")
    finals = []
    reports = {}
    for lab in labels:
        p = gen_point(
            rng, "W", lambda q: limit_probe_args(lab, q), budget=cfg.budget
        )
        rep = check_limit(lab, p)
        reports[lab] = rep
        if rep.failure is not None or not rep.verdict:
            return False, f"{lab}: {rep.failure or 'errors not contracting'}"
        finals.append(rep.errors[-1])
    # the blue/red pair aims at one target: compare the reference values at
    # a common point, against the sum of the two final shift errors
    def pair_probe(q):
        g1, s1 = limit_probe_args("+v(0,7)", q)
        g2, s2 = limit_probe_args("+v(1,7)", q)
        return tuple(g1) + tuple(g2), tuple(s1) + tuple(s2)

    p = gen_point(rng, "W", pair_probe, budget=cfg.budget)
    r1 = check_limit("+v(0,7)", p)
    r2 = check_limit("+v(1,7)", p)
    if not (r1.verdict and r2.verdict):
        return False, "blue/red pair fails to contract at the shared point"
    gap = abs((r1.target_log - r2.target_log).to_complex() - 1.0)
    combined = r1.errors[-1] + r2.errors[-1]
    if gap > combined:
        return False, f"pair targets differ by {gap:.2e} > {combined:.2e}"
    worst = max(
        rep.errors[-1] / rep.errors[0] for rep in reports.values()
    )
    return True, (
        f"4 rows contract (worst final/initial {worst:.2f}); "
        f"blue/red target gap {gap:.1e} within {combined:.1e}"
    )


def _appendix(cfg):
    rng = random.Random(cfg.seed)
    rows = appendix_table()
    fixed = {f.label: f for f in fixture_rows()}
    if len(rows) != 56 or set(fixed) != {r.label for r in rows}:
        return False, "row labels do not match the checked-in table"
    for row in rows:
        f = fixed[row.label]
        if row.target_kind != f.target_kind or row.target_label != f.target_label:
            return False, f"{row.label}: target labelling differs from the table"
        if tuple(map(correspond._form_key, row.m_args)) != tuple(
            map(correspond._form_key, f.m_args)
        ):
            return False, f"{row.label}: slot vector differs from the table"

    def probe(p):
        vals = p.args()
        g, s = [], []
        for row in rows:
            for args in (row.m_args, bfs_m_args(row.label)):
                pg, ps = m_probe_args([a.evaluate(vals) for a in args])
                g.extend(pg)
                s.extend(ps)
            for term in (
                row.target_term(),
                correspond.FunTerm(fixed[row.label].target_kind,
                                   fixed[row.label].target_args),
            ):
                pg, ps = term.probe_args(vals)
                g.extend(pg)
                s.extend(ps)
        return g, s

    worst_m = worst_t = 0.0
    for _ in range(2):
        p = gen_point(rng, "W", probe, budget=cfg.budget)
        vals = p.args()
        for row in rows:
            a = eval_M_log([x.evaluate(vals) for x in row.m_args])
            b = eval_M_log([x.evaluate(vals) for x in bfs_m_args(row.label)])
            err = abs((a - b).to_complex() - 1.0)
            worst_m = max(worst_m, err)
            if err > 1e-8:
                return False, f"{row.label}: representatives disagree by {err:.2e}"
            t1 = row.target_term().eval_log(vals)
            t2 = correspond.FunTerm(
                fixed[row.label].target_kind, fixed[row.label].target_args
            ).eval_log(vals)
            err = abs((t1 - t2).to_complex() - 1.0)
            worst_t = max(worst_t, err)
            if err > 1e-8:
                return False, f"{row.label}: target lists disagree by {err:.2e}"
    return True, (
        f"56 rows structural; coset agreement {worst_m:.1e}, "
        f"target agreement {worst_t:.1e} at 2 points per row"
    )


def _pipeline(cfg):
    rng = random.Random(cfg.seed)
    p = gen_point(rng, "W", pipeline_probe_args, budget=cfg.budget)
    out = limit222_pipeline(p)
    if out["verdict"] != "PASS":
        bad = [k for k, v in out["steps"].items() if not v.get("pass")]
        return False, f"verdict {out['verdict']}, failing steps {bad}"
    ratios = [
        r
        for factor in out["steps"]["bracket_to_one"]["factors"]
        for r in factor["ratios"]
    ]
    lo, hi = min(ratios), max(ratios)
    return True, f"all 5 steps pass; shrink ratios in [{lo:.2f}, {hi:.2f}]"


# name, implementation, time budget in seconds (None: untimed)
CATALOG = (
    ("01-coset-census", _coset_census, 1.0),
    ("02-group-orders", _group_orders, 120.0),
    ("03-coxeter-presentation", _coxeter_presentation, None),
    ("04-index-orbits", _index_orbits, None),
    ("05-equivariance", _equivariance, None),
    ("06-metric-suite", _metric_suite, None),
    ("07-distance-compression", _compression, None),
    ("08-triple-censuses", _triple_censuses, 60.0),
    ("09-gamma-layer", _gamma_layer, None),
    ("10-function-invariance", _function_invariance, None),
    ("11-l-dual-route", _l_dual_route, None),
    ("12-relations", _relations, None),
    ("13-limit-checks", _limits, None),
    ("14-appendix-fidelity", _appendix, 300.0),
    ("15-degeneration-pipeline", _pipeline, None),
)


def run_check(name: str, cfg: RunConfig = None) -> CheckResult:
    """Run one catalog entry by name."""
    cfg = cfg or RunConfig()
    for entry_name, fn, budget in CATALOG:
        if entry_name == name:
            t0 = time.perf_counter()
            try:
                passed, detail = fn(cfg)
            except Exception as exc:
                passed, detail = False, f"{type(exc).__name__}: {exc}"
            dt = time.perf_counter() - t0
            if passed and budget is not None and dt > budget:
                passed = False
                detail += f" [exceeded {budget:.0f}s budget]"
            return CheckResult(name, passed, detail, dt)
    raise KeyError(f"no check named {name!r}")


def run_all(cfg: RunConfig = None, names=None) -> list:
    """Run the catalog (or the named subset) in fixed order."""
    wanted = set(names) if names is not None else None
    out = []
    for name, _, _ in CATALOG:
        if wanted is None or name in wanted:
            out.append(run_check(name, cfg))
    return out
