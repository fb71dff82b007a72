"""Rendering of catalog clauses as SMT-LIB 2.6 text.

Two emission modes exist: quantified (one assertion per clause, universally
quantified over the point sort) and instantiated (every universal variable
expanded over the declared constants; equalities stay symbolic, so constants
are not implicitly distinct).  The existential kept-set coverage clauses
expand their witnesses over ordered constant pairs in instantiated mode.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from ..axioms import ALL_CLAUSES, COVERAGE_IDS, Clause, Lit

SORT = "P"

PRED_DECLS = {
    "left": f"(declare-fun left ({SORT} {SORT} {SORT}) Bool)",
    "intersection": f"(declare-fun intersection ({SORT} {SORT} {SORT} {SORT}) Bool)",
    "inside": f"(declare-fun inside ({SORT} {SORT} {SORT} {SORT}) Bool)",
    "V": f"(declare-fun V ({SORT}) Bool)",
    "E": f"(declare-fun E ({SORT} {SORT}) Bool)",
    "F": f"(declare-fun F ({SORT} {SORT}) Bool)",
    "deleting": f"(declare-fun deleting ({SORT} {SORT} {SORT} {SORT}) Bool)",
}

PRED_ORDER = ["left", "intersection", "inside", "V", "E", "F", "deleting"]

# predicate dependencies implied by clause families, used to pick declarations
_CLAUSE_PREDS: dict[str, set[str]] = {}


def lit_smt(lit: Lit, env: dict[str, str] | None = None) -> str:
    args = [env.get(a, a) if env else a for a in lit.args]
    if lit.pred == "eq":
        inner = f"(= {args[0]} {args[1]})"
    else:
        inner = f"({lit.pred} {' '.join(args)})"
    return inner if lit.positive else f"(not {inner})"


def _conj(parts: Sequence[str]) -> str:
    if len(parts) == 1:
        return parts[0]
    return f"(and {' '.join(parts)})"


def _disj(parts: Sequence[str]) -> str:
    if len(parts) == 1:
        return parts[0]
    return f"(or {' '.join(parts)})"


def clause_formula(clause: Clause, env: dict[str, str] | None = None) -> str:
    """Quantifier-free core of the clause under a variable substitution."""
    body = [lit_smt(l, env) for l in clause.body]
    head = [_conj([lit_smt(l, env) for l in conj]) for conj in clause.head]
    if not body:
        return _disj(head)
    if not head:
        return f"(not {_conj(body)})"
    return f"(=> {_conj(body)} {_disj(head)})"


def clause_smt(clause: Clause) -> str:
    """One universally quantified assertion for the clause."""
    if not clause.variables:
        return f"(assert {clause_formula(clause)})"
    binder = " ".join(f"({v} {SORT})" for v in clause.variables)
    return f"(assert (forall ({binder}) {clause_formula(clause)}))"


def clause_instances(clause: Clause, constants: Sequence[str]) -> list[str]:
    out = []
    for combo in itertools.product(constants, repeat=len(clause.variables)):
        env = dict(zip(clause.variables, combo))
        out.append(f"(assert {clause_formula(clause, env)})")
    return out


def clause_predicates(clause: Clause) -> set[str]:
    preds = set()
    for lit in itertools.chain(clause.body, *clause.head):
        if lit.pred != "eq":
            preds.add(lit.pred)
    return preds


# --- kept-set coverage clauses (existential witnesses) -----------------------

_COVER_BODY = "(and (E u v) (not (F u v)))"

COVERAGE_QUANTIFIED = {
    "LEM1": ("(assert (forall ((u P) (v P)) (=> %s (exists ((w P) (x P)) "
             "(and (F w x) (intersection u v w x))))))" % _COVER_BODY),
    "LEM2": ("(assert (forall ((u P) (v P)) (=> %s (exists ((w P) (x P)) "
             "(and (deleting u v w x) (F w x))))))" % _COVER_BODY),
    "LEM3": ("(assert (forall ((u P) (v P)) (=> (E u v) (or (F u v) "
             "(exists ((w P) (x P)) (deleting u v w x))))))"),
}


def coverage_instances(cid: str, constants: Sequence[str]) -> list[str]:
    out = []
    for ci, cj in itertools.permutations(constants, 2):
        witnesses = []
        for ck, cl in itertools.permutations(constants, 2):
            if cid == "LEM1":
                witnesses.append(f"(and (F {ck} {cl}) (intersection {ci} {cj} {ck} {cl}))")
            elif cid == "LEM2":
                witnesses.append(f"(and (deleting {ci} {cj} {ck} {cl}) (F {ck} {cl}))")
            else:
                witnesses.append(f"(deleting {ci} {cj} {ck} {cl})")
        if cid == "LEM3":
            head = _disj([f"(F {ci} {cj})"] + witnesses)
            out.append(f"(assert (=> (E {ci} {cj}) {head}))")
        else:
            body = f"(and (E {ci} {cj}) (not (F {ci} {cj})))"
            out.append(f"(assert (=> {body} {_disj(witnesses)}))")
    return out


def coverage_predicates(cid: str) -> set[str]:
    return {"E", "F", "intersection"} if cid == "LEM1" else {"E", "F", "deleting"}


def axiom_block(axiom_ids: Sequence[str], constants: Sequence[str],
                instantiate: bool) -> tuple[list[str], set[str]]:
    """Assertion lines (with id comments) and the predicates they use."""
    lines: list[str] = []
    preds: set[str] = set()
    for cid in axiom_ids:
        if cid in COVERAGE_IDS:
            preds |= coverage_predicates(cid)
            lines.append(f"; {cid}")
            if instantiate:
                lines.extend(coverage_instances(cid, constants))
            else:
                lines.append(COVERAGE_QUANTIFIED[cid])
            continue
        clause = ALL_CLAUSES[cid]
        preds |= clause_predicates(clause)
        lines.append(f"; {cid}")
        if instantiate:
            lines.extend(clause_instances(clause, constants))
        else:
            lines.append(clause_smt(clause))
    return lines, preds


def used_predicates(formulas: Iterable[str]) -> set[str]:
    text = " ".join(formulas)
    return {p for p in PRED_ORDER if f"({p} " in text}
