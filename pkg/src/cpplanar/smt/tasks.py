"""Catalog of solver obligations: axiom-set selection, query clauses and the
expected verdict for every task, plus the SMT-LIB document emitter.

Entailment tasks assert the premises of the statement to prove together with
the negation of each conclusion disjunct; an unsat verdict certifies the
entailment.  Counterexample-search tasks assert a configuration and expect
sat; those get a ``(get-model)``.  The bounded N-vertex searches are emitted
with all universal quantifiers instantiated over the declared constants by
default (the quantified variant is available via ``instantiate=False``).

Reference durations are carried as metadata only; they came from a different
machine and are never asserted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from ..axioms import (COVERAGE_IDS, SET_CLIQUE, SET_CYCLE, SET_NO_COEX,
                      SET_NVERT_NOC, SET_NVERT_WEAKC, SET_PROOF, GEOM_MIN,
                      ALL_CLAUSES)
from .emit import (SORT, PRED_DECLS, PRED_ORDER, axiom_block, used_predicates)


class UnknownTask(KeyError):
    pass


@dataclass
class ProofTask:
    task_id: str
    axiom_ids: list[str]
    constants: list[str]
    query: list[str]
    expected: str  # sat | unsat
    group: str
    uses_hull: bool = False
    instantiate_default: bool = False
    reference_seconds: Optional[float] = None
    reported_constants: Optional[int] = None
    notes: str = ""

    @property
    def axiom_clause_count(self) -> int:
        return len(self.axiom_ids)

    @property
    def query_clause_count(self) -> int:
        return len(self.query)

    @property
    def constant_count(self) -> int:
        return self.reported_constants or len(self.constants)


def _del(a, b, c, d) -> str:
    return f"(deleting {a} {b} {c} {d})"


def _int(a, b, c, d) -> str:
    return f"(intersection {a} {b} {c} {d})"


def _ins(a, b, c, d) -> str:
    return f"(inside {a} {b} {c} {d})"


def _E(a, b) -> str:
    return f"(E {a} {b})"


def _F(a, b) -> str:
    return f"(F {a} {b})"


def _L(a, b, c) -> str:
    return f"(left {a} {b} {c})"


def _not(x) -> str:
    return f"(not {x})"


def _entailment_query(premises: Sequence[str], conclusions: Sequence[str]) -> list[str]:
    return list(premises) + [_not(c) for c in conclusions]


TASKS: dict[str, ProofTask] = {}


def _add(task: ProofTask) -> None:
    TASKS[task.task_id] = task


# --- basic geometric-graph properties ----------------------------------------

_add(ProofTask(
    "pasch", list(GEOM_MIN), ["u", "v", "w", "x", "y"],
    [_L("u", "v", "w"), _L("v", "w", "u"), _L("w", "u", "v"),
     _int("x", "y", "u", "v"),
     _not(_ins("u", "v", "w", "x")), _not(_ins("u", "v", "w", "y")),
     # the cutting segment neither ends at nor passes through a corner
     _not(f"(or (= u x) (= u y) (and {_L('x', 'y', 'u')} {_L('y', 'x', 'u')}))"),
     _not(f"(or (= v x) (= v y) (and {_L('x', 'y', 'v')} {_L('y', 'x', 'v')}))"),
     _not(f"(or (= w x) (= w y) (and {_L('x', 'y', 'w')} {_L('y', 'x', 'w')}))"),
     "(not (= x y))",
     # negation of "exactly one other side is crossed", in clause form
     f"(or {_not(_int('x', 'y', 'v', 'w'))} {_int('x', 'y', 'w', 'u')})",
     f"(or {_int('x', 'y', 'v', 'w')} {_not(_int('x', 'y', 'w', 'u'))})"],
    "unsat", "basic", reference_seconds=0.49))

_add(ProofTask(
    "clique", list(SET_CLIQUE), ["u", "v", "w", "x", "y"],
    [_E("u", "v"), _E("v", "w"), _E("w", "u"),
     _ins("u", "v", "w", "x"), _ins("u", "v", "w", "y"),
     "(V x)", "(V y)", "(not (= x y))", _not(_E("x", "y"))],
    "unsat", "basic", reference_seconds=0.34))


# --- correctness proof steps --------------------------------------------------

def _step(task_id, constants, premises, conclusions, seconds):
    _add(ProofTask(task_id, list(SET_PROOF), constants,
                   _entailment_query(premises, conclusions),
                   "unsat", "proof", reference_seconds=seconds))


_step("part1_step1", ["u1", "v1", "w1", "x1", "w2", "x2"],
      [_del("u1", "v1", "w1", "x1"), _del("w1", "x1", "w2", "x2")],
      [_del("u1", "v1", "w2", "x1"), _int("u1", "v1", "w1", "w2")],
      2.47)

_step("part1_step2a", ["u1", "v1", "w1", "x1", "w2", "x2", "w3", "x3"],
      [_del("u1", "v1", "w1", "x1"), _del("w1", "x1", "w2", "x2"),
       _int("u1", "v1", "w1", "w2"), _del("w1", "w2", "w3", "x3")],
      [_del("w1", "x1", "w3", "x2"), _del("w1", "x1", "w3", "x3"),
       _del("w1", "x1", "x3", "w3"), _del("w1", "x1", "x3", "x2"),
       _del("w1", "w2", "x3", "w3"),
       _int("u1", "v1", "w1", "w3"), _int("u1", "v1", "w2", "w3")],
      62.56)

_step("part1_step2b", ["u1", "v1", "w1", "x1", "w2", "x2", "w3", "x3"],
      [_del("u1", "v1", "w1", "x1"), _del("w1", "x1", "w2", "x2"),
       _int("u1", "v1", "w1", "w2"), _del("w1", "w2", "w3", "x3"),
       _del("w1", "w2", "x3", "w3")],
      [_del("w1", "x1", "w3", "x2"), _del("w1", "x1", "w3", "x3"),
       _del("w1", "x1", "x3", "w3"), _del("w1", "x1", "x3", "x2"),
       _int("u1", "v1", "w1", "w3"), _int("u1", "v1", "w2", "w3")],
      33.63)

_step("part2_step3", ["w1", "x1", "w2", "x2", "w3", "x3"],
      [_del("w1", "x1", "w2", "x2"), _del("w1", "w2", "w3", "x3"),
       _int("w1", "w3", "w2", "x2")],
      [_del("w1", "x1", "w3", "x2"), _del("w1", "x1", "w3", "x3"),
       _del("w1", "x1", "x2", "w2"), _del("w1", "x1", "x3", "w3"),
       _del("w1", "x1", "x3", "x2")],
      5.01)

_step("part2_step4", ["w1", "x1", "w2", "x2", "w3", "x3"],
      [_del("w1", "x1", "w2", "x2"), _del("w1", "w2", "w3", "x3")],
      [_del("w1", "x1", "w3", "x2"), _del("w1", "x1", "w3", "x3"),
       _del("w1", "x1", "x3", "w3"), _del("w1", "x1", "x3", "x2"),
       _ins("w1", "x1", "w2", "w3"), _ins("w1", "x1", "w2", "x3"),
       _ins("w1", "w2", "x1", "w3"), _ins("w1", "w2", "x1", "x3"),
       _F("w2", "x2")],
      5.28)

_step("part2_step4a", ["w1", "x1", "w2", "x2", "x3"],
      [_del("w1", "x1", "w2", "x2"), _del("w1", "w2", "x1", "x3")],
      [_del("w1", "x1", "x2", "w2"), _del("w1", "x1", "x3", "x2")],
      0.80)

_DEL_W1X1_SIX = [("w3", "x2"), ("w3", "x3"), ("x2", "w3"),
                 ("x2", "x3"), ("x3", "w3"), ("x3", "x2")]


def _step5(task_id, constants, extra_premises, extra_conclusions, seconds):
    premises = [_del("w1", "x1", "w2", "x2")] + extra_premises
    conclusions = [_del("w1", "x1", a, b) for a, b in _DEL_W1X1_SIX] + \
        [_del("w1", "w2", "w3", "x3"), _del("w1", "w2", "x3", "w3")] + \
        extra_conclusions
    _step(task_id, constants, premises, conclusions, seconds)


_step5("part2_step5a", ["w1", "x1", "w2", "x2", "y", "w3", "x3"],
       [_ins("w1", "x1", "w2", "y"), _del("w2", "y", "w3", "x3")],
       [_int("w1", "y", "w2", "x2"),
        _ins("w1", "x1", "w2", "w3"), _ins("w1", "x1", "w2", "x3")],
       12.59)

_step5("part2_step5b", ["w1", "x1", "w2", "x2", "y", "w3", "x3"],
       [_ins("w1", "x1", "w2", "y"), _del("w1", "y", "w3", "x3")],
       [_int("w1", "y", "w2", "x2"),
        _ins("w1", "x1", "w2", "w3"), _ins("w1", "x1", "w2", "x3")],
       9.18)

_step5("part2_step5c", ["w1", "x1", "w2", "x2", "y", "z", "w3", "x3"],
       [_ins("w1", "x1", "w2", "y"), _ins("w1", "x1", "w2", "z"),
        _del("y", "z", "w3", "x3")],
       [_int("w1", "z", "w2", "x2"), _int("w1", "y", "w2", "x2"),
        _ins("w1", "x1", "w2", "w3"), _ins("w1", "x1", "w2", "x3")],
       73.78)

_step5("part2_step5d", ["w1", "x1", "w2", "x2", "y", "w3", "x3"],
       [_ins("w1", "x1", "w2", "y"), _del("y", "w2", "w3", "x3"),
        _int("w1", "w3", "w2", "x2")],
       [_int("w1", "y", "w2", "x2")],
       13.20)

_step5("part2_step5e", ["w1", "x1", "w2", "x2", "y", "w3", "x3"],
       [_ins("w1", "x1", "w2", "y"), _del("y", "w1", "w3", "x3"),
        _int("w1", "w3", "w2", "x2")],
       [_int("w1", "y", "w2", "x2")],
       8.59)

_step5("part2_step5f", ["w1", "x1", "w2", "x2", "y", "z", "w3", "x3"],
       [_ins("w1", "x1", "w2", "y"), _ins("w1", "x1", "w2", "z"),
        _del("y", "z", "w3", "x3"), _int("w1", "w3", "w2", "x2")],
       [],
       69.71)

_INSIDE_W3X3 = [_ins("w1", "x1", "w2", "w3"), _ins("w1", "x1", "w2", "x3"),
                _ins("w1", "w2", "x1", "w3"), _ins("w1", "w2", "x1", "x3")]

_step("part2_step6a", ["w1", "x1", "w2", "x2", "w3", "x3", "w4", "x4"],
      [_del("w1", "x1", "w2", "x2"), _del("w1", "w2", "w3", "x3"),
       _del("w1", "w3", "w4", "x4")],
      [_del("w1", "x1", a, b) for a, b in _DEL_W1X1_SIX]
      + [_del("w1", "w2", "w4", "x3"), _del("w1", "w2", "w4", "x4"),
         _del("w1", "w2", "x4", "w4"), _del("w1", "w2", "x4", "x3")]
      + _INSIDE_W3X3
      + [_ins("w1", "w2", "w3", "w4"), _ins("w1", "w2", "w3", "x4"),
         _ins("w1", "w3", "w2", "w4"), _ins("w1", "w3", "w2", "x4")],
      68.09)

_step("part2_step6b", ["w1", "x1", "w2", "x2", "w3", "x3", "x4"],
      [_del("w1", "x1", "w2", "x2"), _del("w1", "w2", "w3", "x3"),
       _del("w1", "w3", "x1", "x4")],
      [_del("w1", "x1", "w3", "x2"), _del("w1", "x1", "w3", "x3"),
       _del("w1", "x1", "x2", "w2"), _del("w1", "x1", "x3", "x2")]
      + _INSIDE_W3X3,
      18.02)

_step("part2_step6c", ["w1", "x1", "w2", "x2", "w3", "x3", "w4", "x4"],
      [_del("w1", "x1", "w2", "x2"), _del("w1", "w2", "w3", "x3"),
       _del("w2", "w3", "w4", "x4")],
      [_del("w1", "x1", a, b) for a, b in _DEL_W1X1_SIX]
      + [_del("w1", "w2", "w4", "x3"), _del("w1", "w2", "w4", "x4"),
         _del("w1", "w2", "x4", "w4"), _del("w1", "w2", "x4", "x3")]
      + _INSIDE_W3X3
      + [_ins("w1", "w2", "w3", "w4"), _ins("w1", "w2", "w3", "x4"),
         _ins("w1", "w3", "w2", "w4"), _ins("w1", "w3", "w2", "x4")],
      61.98)

_step("part2_step6d", ["w1", "x1", "w2", "x2", "w3", "x3", "x4"],
      [_del("w1", "x1", "w2", "x2"), _del("w1", "w2", "w3", "x3"),
       _del("w2", "w3", "x1", "x4")],
      [_del("w1", "x1", "w3", "x2"), _del("w1", "x1", "w3", "x3"),
       _del("w1", "x1", "x2", "w2"), _del("w1", "x1", "x3", "x2")]
      + _INSIDE_W3X3,
      17.07)

_step("part2_step6e", ["w1", "x1", "w2", "x2", "w3", "x3", "x4"],
      [_del("w1", "x1", "w2", "x2"), _del("w1", "w2", "w3", "x3"),
       _del("w2", "w3", "w1", "x4")],
      [_del("w1", "x1", "w3", "x2"), _del("w1", "x1", "w3", "x3"),
       _del("w1", "x1", "x2", "w2"), _del("w1", "x1", "x3", "x2"),
       _del("w1", "w2", "x3", "w3"), _del("w1", "w2", "x4", "x3")]
      + _INSIDE_W3X3,
      8.22)


def _step6_chain(task_id, d4_head, d5_head, inner, seconds):
    """The three-links-deep cases: w3 and w4 inside, a fifth deleter appears."""
    constants = ["w1", "x1", "w2", "x2", "w3", "x3", "w4", "x4", "w5", "x5"]
    premises = [_del("w1", "x1", "w2", "x2"),
                _del("w1", "w2", "w3", "x3"), _ins("w1", "x1", "w2", "w3"),
                _del(*d4_head, "w4", "x4"), _ins("w1", "x1", "w2", "w4"),
                _del(*d5_head, "w5", "x5")]
    conclusions = [_del("w1", "x1", "w3", "x2"), _del("w1", "x1", "w4", "x4"),
                   _del("w1", "w2", "w4", "x4"),
                   _del(*inner, "w5", "x4"), _del(*inner, "w5", "x5"),
                   _del(*inner, "x4", "w4"),
                   _del("w1", "w2", "x5", "w5"), _del("w1", "w2", "x5", "x4"),
                   _int("w1", "w3", "w2", "x2"), _int("w1", "w4", "w2", "x2"),
                   _int("w1", "w5", "w2", "x2"),
                   _ins(inner[0], "w3", "w4", "w5"), _ins(inner[0], "w3", "w4", "x5"),
                   _ins(inner[0], "w4", "w3", "w5"), _ins(inner[0], "w4", "w3", "x5")]
    _step(task_id, constants, premises, conclusions, seconds)


_step6_chain("part2_step6g", ("w1", "w3"), ("w1", "w4"), ("w1", "w3"), 423.69)
_step6_chain("part2_step6h", ("w1", "w3"), ("w3", "w4"), ("w1", "w3"), 428.55)
_step6_chain("part2_step6i", ("w2", "w3"), ("w2", "w4"), ("w2", "w3"), 406.41)
_step6_chain("part2_step6j", ("w2", "w3"), ("w3", "w4"), ("w2", "w3"), 428.77)

_step("part2_step7", ["w1", "x1", "w2", "x2", "w3", "w4"],
      [_del("w1", "x1", "w2", "x2"), _del("w1", "x1", "x2", "w2"),
       _del("w1", "w2", "x1", "w3"), _del("w1", "x2", "x1", "w4")],
      [],
      2.83)

_step("part3_step8a", ["u1", "v1", "w1", "x1", "w2", "x2"],
      [_del("u1", "v1", "w1", "x1"), _F("w1", "x1"),
       _del("v1", "w1", "w2", "x2"), _F("w2", "x2")],
      [_ins("u1", "v1", "w1", "w2"), _ins("v1", "u1", "w1", "w2"),
       _ins("u1", "v1", "w1", "x2"), _ins("v1", "u1", "w1", "x2"),
       _del("u1", "v1", "w2", "x2"), _del("u1", "v1", "x2", "w2")],
      2.72)

_step("part3_step8b", ["u1", "v1", "w1", "x1", "x2"],
      [_del("u1", "v1", "w1", "x1"), _F("w1", "x1"),
       _del("v1", "w1", "u1", "x2"), _F("u1", "x2")],
      [],
      0.12)

_step("part3_step9a", ["u1", "v1", "w1", "x1", "w2", "x2", "w3", "x3"],
      [_del("u1", "v1", "w1", "x1"), _F("w1", "x1"),
       _del("v1", "w1", "w2", "x2"), _F("w2", "x2"),
       _ins("u1", "v1", "w1", "w2"),
       _del("v1", "w2", "w3", "x3"), _F("w3", "x3")],
      [_ins("u1", "v1", "w1", "x1"),
       _ins("v1", "w1", "w2", "w3"), _ins("v1", "w1", "w2", "x3"),
       _ins("w1", "v1", "w2", "w3"), _ins("w1", "v1", "w2", "x3"),
       _del("u1", "v1", "w3", "x3"), _del("u1", "v1", "x3", "w3"),
       _del("v1", "w1", "w3", "x3"), _del("v1", "w1", "x3", "w3")],
      18.40)

_step("part3_step9b", ["u1", "v1", "w1", "x1", "w2", "x2", "x3"],
      [_del("u1", "v1", "w1", "x1"), _F("w1", "x1"),
       _del("v1", "w1", "w2", "x2"), _F("w2", "x2"),
       _ins("u1", "v1", "w1", "w2"),
       _del("v1", "w2", "u1", "x3"), _F("u1", "x3")],
      [],
      3.51)


# --- convex hull chain --------------------------------------------------------

HULL_AXIOMS = [
    ("Y0", "(assert (= (next w1) nil))"),
    ("Y1", "(assert (forall ((y P) (i P)) (=> (and (V y) (left u1 v1 y) (left x1 w1 y))"
           " (or (= i nil) (= (next i) nil) (= y i) (= y (next i))"
           " (left i (next i) y) (left y (next i) i)))))"),
    ("Y2", "(assert (forall ((y P) (i P)) (=> (and (V y) (left u1 v1 y) (left x1 w1 y))"
           " (or (= i nil) (= (next i) nil) (= y i) (= y (next i))"
           " (left i (next i) y) (left (next i) y i)))))"),
    ("Y3", "(assert (forall ((y P) (i P)) (=> (and (V y) (left u1 v1 y) (left x1 w1 y)"
           " (left (next i) i y)) (or (= i nil) (= (next i) nil) (= y i) (= y (next i))"
           " (left y (next i) i)))))"),
    ("Y4", "(assert (forall ((y P) (i P)) (=> (and (V y) (left u1 v1 y) (left x1 w1 y)"
           " (left (next i) i y)) (or (= i nil) (= (next i) nil) (= y i) (= y (next i))"
           " (left (next i) y i)))))"),
    ("Y11", "(assert (forall ((i P)) (or (= i nil) (= (next i) nil)"
            " (inside u1 v1 w1 (next i)) (= (next i) w1))))"),
    ("Y12", "(assert (forall ((i P)) (or (= i nil) (= (next i) nil)"
            " (inside u1 x1 w1 i) (= i u1))))"),
    ("Y13", "(assert (forall ((i P)) (or (E i (next i)) (= i nil) (= (next i) nil))))"),
    ("Y14", "(assert (forall ((i P)) (or (= i nil) (= (next i) nil)"
            " (inside u1 v1 (next i) i) (= i u1))))"),
    ("Y15", "(assert (forall ((i P)) (or (= i nil) (= (next i) nil)"
            " (inside u1 x1 (next i) i) (= i u1))))"),
    ("Y16", "(assert (forall ((i P)) (or (= i nil) (= (next i) nil)"
            " (inside v1 w1 i (next i)) (= (next i) w1))))"),
    ("Y17", "(assert (forall ((i P)) (or (= i nil) (= (next i) nil)"
            " (inside x1 w1 i (next i)) (= (next i) w1))))"),
]

HULL_QUERY = [
    "(left u1 v1 w1)",
    "(left v1 u1 x1)",
    "(left x1 w1 u1)",
    "(left w1 x1 v1)",
    "(E u1 v1)",
    "(F w1 x1)",
    "(forall ((y P) (z P)) (=> (and (F y z) (intersection u1 v1 y z))"
    " (not (intersection u1 w1 y z))))",
    "(forall ((y P) (z P)) (=> (and (F y z) (intersection u1 v1 y z))"
    " (not (intersection u1 x1 y z))))",
    "(forall ((y P) (z P)) (=> (and (F y z) (intersection u1 v1 y z))"
    " (not (inside u1 x1 w1 y))))",
    "(forall ((y P) (z P)) (=> (and (F y z) (intersection u1 v1 y z))"
    " (not (inside u1 x1 w1 z))))",
    "(F a b)",
    "(intersection a b i (next i))",
    "(not (= i nil))",
    "(not (= (next i) nil))",
    "(not (= i (next i)))",
]

_add(ProofTask(
    "convexhull", list(SET_PROOF) + [f"hull:{cid}" for cid, _ in HULL_AXIOMS],
    ["u1", "v1", "w1", "x1", "a", "b", "i"], list(HULL_QUERY),
    "unsat", "proof", uses_hull=True, reference_seconds=30.71,
    reported_constants=8,  # the list constant counts with the chain terminator
    notes="hull chain around the nearest kept crossing stays in the kept set"))


# --- counterexample searches ----------------------------------------------------

_COUNTEREXAMPLE_QUERY = _entailment_query(
    [_del("u1", "v1", "w1", "x1"), _del("w1", "x1", "w2", "x2")],
    [_del("u1", "v1", "w2", "x1"), _int("u1", "v1", "w1", "w2")])

_add(ProofTask(
    "counterexample", list(SET_NO_COEX),
    ["u1", "v1", "w1", "x1", "w2", "x2"], list(_COUNTEREXAMPLE_QUERY),
    "sat", "counterexample", reference_seconds=1.36,
    notes="first chain step admits a model once coexistence is dropped"))

# same obligation under its long name
_add(ProofTask(
    "part1_step1_without_coexistence", list(SET_NO_COEX),
    ["u1", "v1", "w1", "x1", "w2", "x2"], list(_COUNTEREXAMPLE_QUERY),
    "sat", "counterexample", reference_seconds=1.36))


def _cycle_task(task_id, length, seconds):
    constants = [f"u{i}" for i in range(1, length + 1)] + \
        [f"v{i}" for i in range(1, length + 1)] + ["y"]
    query = []
    for i in range(1, length + 1):
        j = i % length + 1
        query.append(_del(f"u{i}", "y", f"u{j}", f"v{j}"))
    for i in range(1, length + 1):
        query.append(_not(_F(f"u{i}", "y")))
    _add(ProofTask(task_id, list(SET_CYCLE), constants, query, "sat",
                   "counterexample", reference_seconds=seconds))


_cycle_task("cycle3", 3, 13.24)
_cycle_task("cycle4", 4, 61.42)


def _conn3(ci, cj, constants) -> str:
    """ci and cj joined by a path of length at most 3 (explicit disjunction)."""
    parts = [_E(ci, cj)]
    others = [c for c in constants if c not in (ci, cj)]
    for k in others:
        parts.append(f"(and {_E(ci, k)} {_E(k, cj)})")
    for k in others:
        for l in others:
            if k != l:
                parts.append(f"(and {_E(ci, k)} {_E(k, l)} {_E(l, cj)})")
    return "(or " + " ".join(parts) + ")"


_NVERT_SECONDS = {
    ("noC", 2): 0.01, ("noC", 3): 0.01, ("noC", 4): 0.31,
    ("noC", 5): 6.86, ("noC", 6): 145.50, ("noC", 7): 91.00,
    ("weakC", 2): 0.01, ("weakC", 3): 0.01, ("weakC", 4): 0.37,
    ("weakC", 5): 7.83, ("weakC", 6): 145.62, ("weakC", 7): 226.23,
}

for variant, axiom_set in (("noC", SET_NVERT_NOC), ("weakC", SET_NVERT_WEAKC)):
    for n in range(2, 8):
        constants = [f"c{i}" for i in range(1, n + 1)]
        query = [_conn3(a, b, constants)
                 for a, b in itertools.combinations(constants, 2)]
        query += [_not(_F("c1", c)) for c in constants[1:]]
        _add(ProofTask(
            f"{n}vertices_{variant}", list(axiom_set), constants, query,
            "sat" if n == 7 else "unsat", "counterexample",
            instantiate_default=True,
            reference_seconds=_NVERT_SECONDS[(variant, n)],
            notes="every pair path-connected within 3 hops; c1 kept-isolated"))


# --- axiom dependency tasks ----------------------------------------------------

def _dependency_task(cid: str) -> None:
    from .emit import lit_smt
    clause = ALL_CLAUSES[cid]
    query = [lit_smt(lit) for lit in clause.body]
    for conj in clause.head:
        inner = [lit_smt(lit) for lit in conj]
        joined = inner[0] if len(inner) == 1 else "(and " + " ".join(inner) + ")"
        query.append(_not(joined))
    _add(ProofTask(f"derive_{cid}",
                   ["A1", "A2", "A3", "A4", "A5", "A6"],
                   list(clause.variables), query, "unsat", "dependency"))


for _cid, _clause in ALL_CLAUSES.items():
    if _clause.family == "B":
        _dependency_task(_cid)


# --- emission -----------------------------------------------------------------

def task_ids() -> list[str]:
    return list(TASKS)


def entailment_task_ids() -> list[str]:
    return [t for t, task in TASKS.items()
            if task.group in ("basic", "proof")]


def counterexample_task_ids() -> list[str]:
    return [t for t, task in TASKS.items() if task.group == "counterexample"
            and t != "part1_step1_without_coexistence"]


def dependency_task_ids() -> list[str]:
    return [t for t, task in TASKS.items() if task.group == "dependency"]


def emit_task(task_id: str, instantiate: Optional[bool] = None) -> str:
    """Self-contained SMT-LIB 2.6 document for one task."""
    try:
        task = TASKS[task_id]
    except KeyError:
        raise UnknownTask(f"unknown task {task_id!r}") from None
    if instantiate is None:
        instantiate = task.instantiate_default
    lines = [f"; task: {task.task_id}",
             f"; expected: {task.expected}",
             f"; axiom clauses: {task.axiom_clause_count}",
             f"; query clauses: {task.query_clause_count}",
             f"; constants: {task.constant_count}"]
    if instantiate:
        lines.append(f"; universals instantiated over {len(task.constants)} constants")
    lines.append("(set-option :produce-models true)")
    lines.append(f"(declare-sort {SORT} 0)")

    plain_ids = [c for c in task.axiom_ids if not c.startswith("hull:")]
    axiom_lines, preds = axiom_block(plain_ids, task.constants, instantiate)
    if task.uses_hull:
        preds |= {"left", "inside", "E", "V", "F", "intersection"}
    preds |= used_predicates(task.query)
    for p in PRED_ORDER:
        if p in preds:
            lines.append(PRED_DECLS[p])
    if task.uses_hull:
        lines.append(f"(declare-fun next ({SORT}) {SORT})")
        lines.append(f"(declare-const nil {SORT})")
    for c in task.constants:
        lines.append(f"(declare-const {c} {SORT})")
    lines.append("; axioms")
    lines.extend(axiom_lines)
    if task.uses_hull:
        for cid, text in HULL_AXIOMS:
            lines.append(f"; {cid}")
            lines.append(text)
    lines.append("; query")
    for q in task.query:
        lines.append(f"(assert {q})")
    lines.append("(check-sat)")
    if task.expected == "sat":
        lines.append("(get-model)")
    return "\n".join(lines) + "\n"
