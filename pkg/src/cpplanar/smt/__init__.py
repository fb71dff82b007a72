from .tasks import (ProofTask, TASKS, UnknownTask, emit_task, task_ids,
                    entailment_task_ids, counterexample_task_ids,
                    dependency_task_ids)
from .solver import (SolverNotFound, SolverCrashed, SolverRun, SuiteReport,
                     find_solver, run_solver, run_suite)
from .model import ParseError, PredicateModel, parse_model, realize_on_grid, model_to_graph

__all__ = [
    "ProofTask", "TASKS", "UnknownTask", "emit_task", "task_ids",
    "entailment_task_ids", "counterexample_task_ids", "dependency_task_ids",
    "SolverNotFound", "SolverCrashed", "SolverRun", "SuiteReport",
    "find_solver", "run_solver", "run_suite",
    "ParseError", "PredicateModel", "parse_model", "realize_on_grid",
    "model_to_graph",
]
