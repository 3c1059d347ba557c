"""Verification plans: which rules to run, over which parameter grids.

A plan is a json document::

    {
      "policy": {"abs_tol": 1e-14, "rel_tol": 1e-12,
                 "max_terms": 400, "consecutive_small": 3},
      "parallelism": 0,
      "entries": [
        {"rule": "ASCENDING_GEN",
         "grid": {"nu": [0, 0.5], "x": [2], "t": [0, 0.2]},
         "tol_abs": 1e-9, "tol_rel": 1e-8}
      ]
    }

Every key outside "entries" is optional, as are the per-entry tolerance
overrides.  Each entry expands to the cartesian product of its grid lists,
validated against the rule's parameter schema before anything is evaluated.
``parallelism`` 0 means one worker per cpu; 1 disables multiprocessing.
The per-entry ``perturb_rhs`` (a float added to every right side) is a test
hook for exercising the DISCREPANT paths.
"""

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

from besselsums.report import VerdictReport
from besselsums.rules import (
    RULES,
    RuleCase,
    RuleId,
    Tolerances,
    Verdict,
    VerificationRecord,
    _errors,
    _judge,
)
from besselsums.series import SummationPolicy

MAX_GRID_CASES = 100_000


class PlanError(ValueError):
    """A plan file failed validation; the message carries the location."""


@dataclass(frozen=True)
class PlanEntry:
    rule_id: RuleId
    grid: dict
    tolerances: Optional[Tolerances] = None
    perturb_rhs: float = 0.0

    def cases(self):
        names = list(self.grid)
        for values in itertools.product(*(self.grid[n] for n in names)):
            yield dict(zip(names, values))

    def case_count(self) -> int:
        return math.prod(len(v) for v in self.grid.values())


@dataclass(frozen=True)
class VerificationPlan:
    entries: tuple
    policy: SummationPolicy = field(default_factory=SummationPolicy)
    parallelism: int = 1


def default_plan_path() -> Path:
    """Path of the bundled default plan (the full shipped grid)."""
    return Path(resources.files("besselsums").joinpath("data/default_plan.json"))


def load_plan(path) -> VerificationPlan:
    """Parse and validate a plan file; raises PlanError with the offending
    entry index and parameter name on schema violations."""
    import json

    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise PlanError(f"{path}: not valid json: {exc}") from exc
    if not isinstance(data, dict) or "entries" not in data:
        raise PlanError(f"{path}: plan must be an object with an 'entries' list")

    policy_kwargs = data.get("policy", {})
    try:
        policy = SummationPolicy(**policy_kwargs)
    except (TypeError, ValueError) as exc:
        raise PlanError(f"{path}: bad policy: {exc}") from exc

    parallelism = data.get("parallelism", 1)
    if parallelism != int(parallelism) or int(parallelism) < 0:
        raise PlanError(f"{path}: parallelism must be a nonnegative integer")

    entries = []
    for idx, raw in enumerate(data["entries"]):
        entries.append(_load_entry(raw, idx))
    return VerificationPlan(entries=tuple(entries), policy=policy, parallelism=int(parallelism))


def _load_entry(raw: dict, idx: int) -> PlanEntry:
    where = f"entry {idx}"
    if "rule" not in raw:
        raise PlanError(f"{where}: missing 'rule'")
    try:
        rule_id = RuleId(raw["rule"])
    except ValueError:
        raise PlanError(f"{where}: unknown rule {raw['rule']!r}") from None
    schema = RULES[rule_id]
    where = f"entry {idx} ({rule_id.value})"

    grid = raw.get("grid")
    if not isinstance(grid, dict):
        raise PlanError(f"{where}: missing 'grid' object")
    missing = set(schema.params) - set(grid)
    extra = set(grid) - set(schema.params)
    if missing:
        raise PlanError(f"{where}: missing parameter {sorted(missing)}")
    if extra:
        raise PlanError(f"{where}: unexpected parameter {sorted(extra)}")

    clean = {}
    for name in schema.params:  # keep schema order for deterministic case order
        values = grid[name]
        if not isinstance(values, list) or not values:
            raise PlanError(f"{where}: parameter {name!r} must be a nonempty list")
        out = []
        for v in values:
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise PlanError(f"{where}: parameter {name!r} has non-numeric value {v!r}")
            if name in schema.integer_params:
                if v != int(v):
                    raise PlanError(f"{where}: parameter {name!r} must be integer, got {v!r}")
                out.append(int(v))
            else:
                out.append(float(v))
        clean[name] = out

    tol = None
    if "tol_abs" in raw or "tol_rel" in raw:
        base = schema.default_tolerances
        tol = Tolerances(
            tol_abs=float(raw.get("tol_abs", base.tol_abs)),
            tol_rel=float(raw.get("tol_rel", base.tol_rel)),
        )

    entry = PlanEntry(
        rule_id=rule_id,
        grid=clean,
        tolerances=tol,
        perturb_rhs=float(raw.get("perturb_rhs", 0.0)),
    )
    if entry.case_count() > MAX_GRID_CASES:
        raise PlanError(f"{where}: grid has {entry.case_count()} cases (limit {MAX_GRID_CASES})")

    if schema.validate is not None:
        for params in entry.cases():
            try:
                schema.validate(params)
            except ValueError as exc:
                raise PlanError(f"{where}: grid point {params}: {exc}") from exc
    return entry


def _evaluate_case(task):
    """Run one case; exceptions become INCONCLUSIVE records (worker-safe)."""
    order, rule_value, params, policy, tol, perturb = task
    rule_id = RuleId(rule_value)
    try:
        records = RULES[rule_id].run(params, policy, tol)
    except Exception as exc:  # contained: reported, never crashes the sweep
        records = [
            VerificationRecord(
                case=RuleCase(rule_id, dict(params)),
                lhs=math.nan,
                rhs=math.nan,
                abs_err=math.nan,
                rel_err=math.nan,
                verdict=Verdict.INCONCLUSIVE,
                note=f"evaluation failed: {type(exc).__name__}: {exc}",
            )
        ]
    if perturb:
        for rec in records:
            rec.rhs = rec.rhs + perturb
            rec.abs_err, rec.rel_err = _errors(rec.lhs, rec.rhs)
            converged = rec.verdict is not Verdict.INCONCLUSIVE
            rec.verdict = _judge(rec.abs_err, rec.rel_err, converged, tol)
            rec.note = (rec.note + "; " if rec.note else "") + f"rhs perturbed by {perturb:g}"
    return order, records


def _tasks(plan: VerificationPlan):
    """Cases in deterministic order: rule id, then entry, then grid position."""
    rule_order = {rule: i for i, rule in enumerate(RuleId)}
    keyed = []
    for entry_idx, entry in enumerate(plan.entries):
        tol = entry.tolerances or RULES[entry.rule_id].default_tolerances
        for case_idx, params in enumerate(entry.cases()):
            keyed.append(
                (
                    (rule_order[entry.rule_id], entry_idx, case_idx),
                    entry.rule_id.value,
                    params,
                    plan.policy,
                    tol,
                    entry.perturb_rhs,
                )
            )
    keyed.sort(key=lambda task: task[0])
    return keyed


def run_plan(plan: VerificationPlan) -> VerdictReport:
    """Evaluate every case; records come back in deterministic order no matter
    the parallelism."""
    t0 = time.perf_counter()
    tasks = _tasks(plan)
    workers = plan.parallelism
    if workers == 0:
        import os

        workers = os.cpu_count() or 1
    results = []
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunk = max(1, len(tasks) // (4 * workers))
            results = list(pool.map(_evaluate_case, tasks, chunksize=chunk))
    else:
        results = [_evaluate_case(task) for task in tasks]
    results.sort(key=lambda pair: pair[0])
    records = [rec for _, recs in results for rec in recs]
    report = VerdictReport(records=records)
    report.wall_time = time.perf_counter() - t0
    return report
