"""Extraction of finite predicate models from solver output and a small-grid
search for integer-coordinate realizations of the orientation assignment.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .. import geometry
from ..graph import GeoGraph


class ParseError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    out = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == ";":
            while i < n and text[i] != "\n":
                i += 1
        elif ch in "()":
            out.append(ch)
            i += 1
        elif ch.isspace():
            i += 1
        elif ch == "|":
            j = text.index("|", i + 1)
            out.append(text[i:j + 1])
            i = j + 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in "();":
                j += 1
            out.append(text[i:j])
            i = j
    return out


def _parse_sexprs(tokens: list[str]):
    pos = 0

    def read():
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of model text")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            items = []
            while pos < len(tokens) and tokens[pos] != ")":
                items.append(read())
            if pos >= len(tokens):
                raise ParseError("unbalanced parentheses in model")
            pos += 1
            return items
        if tok == ")":
            raise ParseError("unexpected ')'")
        return tok

    exprs = []
    while pos < len(tokens):
        exprs.append(read())
    return exprs


@dataclass
class PredicateModel:
    universe: list[str]
    constants: dict[str, str]          # declared constant -> universe element
    functions: dict[str, tuple[list[str], object]]  # name -> (params, body)

    def eval_fun(self, name: str, args: Sequence[str]):
        entry = self.functions.get(name)
        if entry is None:
            return False  # unconstrained predicate defaults to false
        params, body = entry
        if len(params) != len(args):
            raise ParseError(f"{name} arity mismatch")
        return self._eval(body, dict(zip(params, args)))

    def _eval(self, node, env):
        if isinstance(node, str):
            if node == "true":
                return True
            if node == "false":
                return False
            if node in env:
                return env[node]
            if node in self.constants:
                return self.constants[node]
            if node in self.functions and not self.functions[node][0]:
                return self._eval(self.functions[node][1], {})
            return node  # universe element or unknown symbol
        if not node:
            raise ParseError("empty application")
        op = node[0]
        if op == "ite":
            return self._eval(node[2], env) if self._eval(node[1], env) \
                else self._eval(node[3], env)
        if op == "and":
            return all(self._eval(a, env) for a in node[1:])
        if op == "or":
            return any(self._eval(a, env) for a in node[1:])
        if op == "not":
            return not self._eval(node[1], env)
        if op == "=":
            vals = [self._eval(a, env) for a in node[1:]]
            return all(v == vals[0] for v in vals[1:])
        if op == "let":
            inner = dict(env)
            for name, expr in node[1]:
                inner[name] = self._eval(expr, env)
            return self._eval(node[2], inner)
        if isinstance(op, str) and op in self.functions:
            args = [self._eval(a, env) for a in node[1:]]
            params, body = self.functions[op]
            return self._eval(body, dict(zip(params, args)))
        raise ParseError(f"cannot evaluate model expression {node!r}")

    def pred(self, name: str, *constant_names: str) -> bool:
        elems = []
        for c in constant_names:
            if c not in self.constants:
                raise ParseError(f"constant {c} has no model value")
            elems.append(self.constants[c])
        return bool(self.eval_fun(name, elems))


def parse_model(text: str, constant_names: Sequence[str]) -> PredicateModel:
    """Parse solver model output into an evaluable predicate model."""
    if "(" not in text:
        raise ParseError("no model in solver output")
    exprs = _parse_sexprs(_tokenize(text))
    if len(exprs) == 1 and isinstance(exprs[0], list) and (
            not exprs[0] or isinstance(exprs[0][0], list)
            or exprs[0][0] not in ("define-fun", "declare-fun", "model")):
        exprs = exprs[0]
    universe: list[str] = []
    functions: dict[str, tuple[list[str], object]] = {}
    for node in exprs:
        if not isinstance(node, list) or not node:
            continue
        if node[0] == "model":  # older output style wraps entries
            exprs.extend(node[1:])
            continue
        if node[0] == "declare-fun" and len(node) >= 4 and node[2] == []:
            universe.append(node[1])
        elif node[0] == "define-fun":
            name = node[1]
            params = [p[0] for p in node[2]]
            functions[name] = (params, node[4])
    model = PredicateModel(universe, {}, functions)
    for c in constant_names:
        if c in functions and not functions[c][0]:
            model.constants[c] = model._eval(functions[c][1], {})
    return model


def realize_on_grid(model: PredicateModel, constant_names: Sequence[str],
                    grid: int = 6, node_budget: int = 2_000_000
                    ) -> Optional[dict[str, tuple[int, int]]]:
    """Backtracking search for integer positions matching the orientation
    assignment on all triples of distinct model elements; None if exhausted."""
    elems = []
    for c in constant_names:
        e = model.constants.get(c)
        if e is not None and e not in elems:
            elems.append(e)
    n = len(elems)
    want = {}
    for i, j, k in itertools.permutations(range(n), 3):
        want[(i, j, k)] = bool(model.eval_fun("left", (elems[i], elems[j], elems[k])))
    cells = [(x, y) for x in range(grid) for y in range(grid)]
    placed: list[tuple[int, int]] = []
    budget = [node_budget]

    def consistent(m: int) -> bool:
        pm = geometry.Point(*placed[m])
        for i, j in itertools.permutations(range(m), 2):
            pi, pj = geometry.Point(*placed[i]), geometry.Point(*placed[j])
            if geometry.left(pi, pj, pm) != want[(i, j, m)]:
                return False
            if geometry.left(pi, pm, pj) != want[(i, m, j)]:
                return False
            if geometry.left(pm, pi, pj) != want[(m, i, j)]:
                return False
        return True

    def search() -> bool:
        m = len(placed)
        if m == n:
            return True
        for cell in cells:
            if cell in placed:
                continue
            if budget[0] <= 0:
                return False
            budget[0] -= 1
            placed.append(cell)
            if consistent(m) and search():
                return True
            placed.pop()
        return False

    if not search():
        return None
    coords = dict(zip(elems, placed))
    return {c: coords[model.constants[c]] for c in constant_names
            if c in model.constants}


def model_to_graph(model_text: str, constant_names: Sequence[str],
                   grid: int = 6) -> tuple[Optional[GeoGraph], PredicateModel]:
    """Extract the edge assignment and attempt a geometric realization.

    Returns (graph, predicate_model); the graph is None when no grid
    realization was found within the search bound (the predicate model is
    still usable on its own).
    """
    model = parse_model(model_text, constant_names)
    coords = realize_on_grid(model, constant_names, grid=grid)
    if coords is None:
        return None, model
    elems: list[str] = []
    for c in constant_names:
        e = model.constants.get(c)
        if e is not None and e not in elems:
            elems.append(e)
    index = {e: i for i, e in enumerate(elems)}
    scale = 4  # spread grid cells so no two vertices collide after rounding
    verts = []
    for e in elems:
        first = next(c for c in constant_names if model.constants.get(c) == e)
        x, y = coords[first]
        verts.append((index[e], (x * scale, y * scale)))
    edges = set()
    for a, b in itertools.combinations(elems, 2):
        if model.eval_fun("E", (a, b)) or model.eval_fun("E", (b, a)):
            edges.add((index[a], index[b]))
    return GeoGraph(verts, sorted(edges)), model
