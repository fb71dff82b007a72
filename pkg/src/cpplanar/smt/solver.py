"""External solver invocation and the suite runner with its report tables.

The solver is any executable accepting ``<solver> [-T:seconds] <file>`` and
printing a verdict token (z3-compatible).  The path comes from an explicit
argument, the ``CP_SMT_SOLVER`` environment variable, or ``z3`` on PATH.
"""

from __future__ import annotations

import csv
import io
import os
import shutil
import subprocess
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .tasks import TASKS, emit_task

ENV_VAR = "CP_SMT_SOLVER"
VERDICTS = ("sat", "unsat", "unknown", "timeout")


class SolverNotFound(RuntimeError):
    pass


class SolverCrashed(RuntimeError):
    pass


@dataclass
class SolverRun:
    task_id: str
    verdict: str
    seconds: float
    model: str = ""


def find_solver(path: Optional[str] = None) -> str:
    candidate = path or os.environ.get(ENV_VAR) or shutil.which("z3")
    if not candidate:
        raise SolverNotFound(
            f"no solver: pass a path, set {ENV_VAR}, or put z3 on PATH")
    if shutil.which(candidate) is None and not Path(candidate).exists():
        raise SolverNotFound(f"solver executable not found: {candidate}")
    return candidate


def run_solver(doc_path: str, solver_path: Optional[str] = None,
               timeout_s: float = 600.0,
               timeout_flag: str = "-T:{seconds}") -> SolverRun:
    """Run the solver on one document and parse its verdict."""
    task_id = Path(doc_path).stem
    if timeout_s is not None and timeout_s <= 0:
        return SolverRun(task_id, "timeout", 0.0)
    solver = find_solver(solver_path)
    cmd = [solver]
    if timeout_s:
        cmd.append(timeout_flag.format(seconds=int(timeout_s)))
    cmd.append(str(doc_path))
    start = time.monotonic()
    try:
        proc = subprocess.run(cmd, capture_output=True, text=True,
                              timeout=(timeout_s + 30) if timeout_s else None)
    except FileNotFoundError as exc:
        raise SolverNotFound(str(exc)) from None
    except subprocess.TimeoutExpired:
        return SolverRun(task_id, "timeout", time.monotonic() - start)
    elapsed = time.monotonic() - start
    verdict = None
    rest: list[str] = []
    for line in proc.stdout.splitlines():
        token = line.strip()
        if verdict is None and token in VERDICTS:
            verdict = token
            continue
        if verdict is not None:
            rest.append(line)
    if verdict is None:
        raise SolverCrashed(
            f"solver produced no verdict for {doc_path} "
            f"(exit {proc.returncode}): {proc.stderr.strip()[:500]}")
    return SolverRun(task_id, verdict, elapsed, "\n".join(rest))


@dataclass
class SuiteRow:
    task_id: str
    verdict: str
    expected: str
    seconds: float
    constants: int
    axiom_clauses: int
    query_clauses: int
    reference_seconds: Optional[float]
    error: str = ""

    @property
    def ok(self) -> bool:
        return self.verdict == self.expected


@dataclass
class SuiteReport:
    rows: list[SuiteRow] = field(default_factory=list)
    models: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def to_text(self) -> str:
        header = (f"{'Task':<28} {'Duration(s)':>11} {'#constants':>10} "
                  f"{'#Clauses(ax)':>12} {'#Clauses(query)':>15} {'verdict':>8} "
                  f"{'expected':>8} {'ok':>3}")
        lines = [header, "-" * len(header)]
        for r in self.rows:
            lines.append(
                f"{r.task_id:<28} {r.seconds:>11.2f} {r.constants:>10} "
                f"{r.axiom_clauses:>12} {r.query_clauses:>15} {r.verdict:>8} "
                f"{r.expected:>8} {'yes' if r.ok else 'NO':>3}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["task", "duration_s", "constants", "axiom_clauses",
                         "query_clauses", "verdict", "expected", "ok",
                         "reference_duration_s"])
        for r in self.rows:
            writer.writerow([r.task_id, f"{r.seconds:.2f}", r.constants,
                             r.axiom_clauses, r.query_clauses, r.verdict,
                             r.expected, "yes" if r.ok else "no",
                             "" if r.reference_seconds is None
                             else f"{r.reference_seconds:.2f}"])
        return buf.getvalue()


def run_suite(ids: Sequence[str], solver_path: Optional[str] = None,
              jobs: int = 1, out_dir: Optional[str] = None,
              timeout_s: float = 600.0,
              instantiate: Optional[bool] = None) -> SuiteReport:
    """Emit the documents, run the solver on each, and tabulate verdicts."""
    solver = find_solver(solver_path)
    out = Path(out_dir) if out_dir else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    paths = {}
    for task_id in ids:
        doc = emit_task(task_id, instantiate=instantiate)
        path = (out or Path(".")) / f"{task_id}.smt2"
        path.write_text(doc, encoding="utf-8")
        paths[task_id] = path

    def _one(task_id: str) -> SuiteRow:
        task = TASKS[task_id]
        try:
            run = run_solver(str(paths[task_id]), solver, timeout_s)
            verdict, seconds, model = run.verdict, run.seconds, run.model
            error = ""
        except (SolverCrashed, SolverNotFound) as exc:
            verdict, seconds, model, error = "error", 0.0, "", str(exc)
        row = SuiteRow(task_id, verdict, task.expected, seconds,
                       task.constant_count, task.axiom_clause_count,
                       task.query_clause_count, task.reference_seconds, error)
        return row, model

    report = SuiteReport()
    if jobs <= 1:
        outputs = [_one(t) for t in ids]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outputs = list(pool.map(_one, ids))
    for row, model in outputs:
        report.rows.append(row)
        if model and row.verdict == "sat":
            report.models[row.task_id] = model
    return report
