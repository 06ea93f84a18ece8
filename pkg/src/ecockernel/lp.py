"""Exact covering LP over connected vertex sets.

The LP is

    min  sum_v x_v
    s.t. sum_{v in C} x_v >= 1   for every connected C with |C| = l + 1
         0 <= x_v <= 1

It is solved through its dual packing LP (one variable per connected set,
one row per vertex) with a revised simplex that keeps the basis inverse in
fraction-free form: an integer adjugate matrix over the integer basis
determinant. The optimal simplex multipliers are the covering values, so
the result is an exact basic optimal solution together with the packing
weights that certify its optimality.

The upper bounds ``x_v <= 1`` are never binding at an optimum (lowering a
value above one to one keeps every constraint satisfied), so they are
dropped from the dual.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .graph import Graph, VertexSet, iter_connected_sets

# Dantzig pricing is used until this many degenerate pivots happen in a row;
# from then on Bland's rule applies until the objective strictly improves.
DEGENERATE_STREAK_LIMIT = 50

_INT64_SAFE = 2**62


@dataclass(frozen=True)
class CoveringLp:
    graph: Graph
    l: int

    def __post_init__(self) -> None:
        if self.l < 1:
            raise ValueError(f"l must be at least 1, got {self.l}")

    @property
    def variables(self) -> VertexSet:
        return self.graph.vertices

    @property
    def set_size(self) -> int:
        return self.l + 1

    @cached_property
    def constraints(self) -> tuple[VertexSet, ...]:
        return tuple(sorted(iter_connected_sets(self.graph, self.set_size)))


@dataclass(frozen=True)
class LpSolution:
    values: Mapping[int, Fraction]
    objective: Fraction
    # positive packing weights; their sum equals the objective
    dual: Mapping[VertexSet, Fraction]
    pivots: int = 0


def build_wecoc_lp(g: Graph, l: int) -> CoveringLp:
    return CoveringLp(g, l)


class _PackingSimplex:
    """Primal simplex for ``max 1·y  s.t.  A y + s = 1, y, s >= 0``.

    Variable ids: slack of row ``i`` is ``i``; column ``j`` is ``n + j``.
    The basis inverse is ``adj / det`` with ``adj`` integral.
    """

    def __init__(self, n: int, size: int):
        self.n = n
        self.size = size
        self.adj = np.empty((n, n), dtype=object)
        self.adj[:] = 0
        for i in range(n):
            self.adj[i, i] = 1
        self.det = 1
        self.xnum = np.array([1] * n, dtype=object)
        self.basis = list(range(n))
        self.cols = np.empty((0, size), dtype=np.int64)
        self.pivots = 0
        self._bland = False
        self._streak = 0

    def add_columns(self, rows: Sequence[Sequence[int]]) -> None:
        if rows:
            new = np.asarray(rows, dtype=np.int64).reshape(len(rows), self.size)
            self.cols = np.vstack([self.cols, new])

    def prices(self) -> np.ndarray:
        mask = [b >= self.n for b in self.basis]
        if not any(mask):
            out = np.empty(self.n, dtype=object)
            out[:] = 0
            return out
        return self.adj[np.array(mask)].sum(axis=0)

    def _column_costs(self, pinum: np.ndarray) -> np.ndarray:
        """Reduced-cost numerators ``det - sum(pi over the column)``."""
        if len(self.cols) == 0:
            return np.empty(0, dtype=np.int64)
        bound = max(abs(int(p)) for p in pinum) if len(pinum) else 0
        if bound * self.size < _INT64_SAFE and self.det < _INT64_SAFE:
            fast = pinum.astype(np.int64)
            return self.det - fast[self.cols].sum(axis=1)
        return np.array([self.det - sum(pinum[r] for r in row) for row in self.cols], dtype=object)

    def _entering(self, pinum: np.ndarray) -> int | None:
        n = self.n
        col_rc = self._column_costs(pinum)
        if self._bland:
            for v in range(n):
                if pinum[v] < 0:
                    return v
            hits = np.flatnonzero(col_rc > 0)
            return n + int(hits[0]) if len(hits) else None
        best_var, best_rc = None, 0
        for v in range(n):
            if -pinum[v] > best_rc:
                best_var, best_rc = v, -pinum[v]
        if len(col_rc):
            j = int(np.argmax(col_rc))
            if col_rc[j] > best_rc:
                best_var = n + j
        return best_var

    def _direction(self, var: int) -> np.ndarray:
        if var < self.n:
            return self.adj[:, var].copy()
        return self.adj[:, self.cols[var - self.n]].sum(axis=1)

    def _leaving(self, d: np.ndarray) -> int:
        best = -1
        for i in range(self.n):
            di = d[i]
            if di <= 0:
                continue
            if best < 0:
                best = i
                continue
            lhs = self.xnum[i] * d[best]
            rhs = self.xnum[best] * di
            if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[best]):
                best = i
        if best < 0:
            raise ArithmeticError("packing LP reported unbounded; constraint columns are malformed")
        return best

    def _pivot(self, r: int, var: int, d: np.ndarray) -> None:
        piv = d[r]
        det = self.det
        row_r = self.adj[r].copy()
        x_r = self.xnum[r]
        self.adj = (self.adj * piv - np.outer(d, row_r)) // det
        self.adj[r] = row_r
        self.xnum = (self.xnum * piv - d * x_r) // det
        self.xnum[r] = x_r
        self.det = piv
        self.basis[r] = var
        self.pivots += 1
        if x_r == 0:
            self._streak += 1
            if self._streak >= DEGENERATE_STREAK_LIMIT:
                self._bland = True
        else:
            self._streak = 0
            self._bland = False

    def optimize(self) -> None:
        while True:
            var = self._entering(self.prices())
            if var is None:
                return
            d = self._direction(var)
            self._pivot(self._leaving(d), var, d)


def _solution(
    sim: _PackingSimplex, variables: VertexSet, constraints: Sequence[VertexSet]
) -> LpSolution:
    pinum = sim.prices()
    det = sim.det
    values = {v: Fraction(int(pinum[i]), det) for i, v in enumerate(variables)}
    dual = {}
    for i, var in enumerate(sim.basis):
        if var >= sim.n and sim.xnum[i] != 0:
            dual[constraints[var - sim.n]] = Fraction(int(sim.xnum[i]), det)
    objective = sum(values.values(), Fraction(0))
    if objective != sum(dual.values(), Fraction(0)):
        raise ArithmeticError("primal and dual objectives differ at termination")
    return LpSolution(values, objective, dict(sorted(dual.items())), sim.pivots)


def solve_lp_exact(lp: CoveringLp, *, lazy: bool = False, batch: int | None = None) -> LpSolution:
    """Optimal solution of the covering LP in exact rational arithmetic.

    With ``lazy=True`` constraints are generated on demand: the LP is
    re-optimised over the active constraints and the connected sets are
    scanned for violated ones, up to ``batch`` per round.
    """
    variables = lp.variables
    index = {v: i for i, v in enumerate(variables)}
    sim = _PackingSimplex(len(variables), lp.set_size)

    if not lazy:
        constraints = list(lp.constraints)
        sim.add_columns([[index[v] for v in c] for c in constraints])
        sim.optimize()
        return _solution(sim, variables, constraints)

    limit = batch or max(2 * len(variables), 16)
    constraints = []
    while True:
        sim.optimize()
        pinum = sim.prices()
        found = []
        for cset in iter_connected_sets(lp.graph, lp.set_size):
            rows = [index[v] for v in cset]
            if sum(pinum[r] for r in rows) < sim.det:
                found.append(cset)
                if len(found) >= limit:
                    break
        if not found:
            return _solution(sim, variables, constraints)
        constraints.extend(found)
        sim.add_columns([[index[v] for v in c] for c in found])


def violated_constraints(lp: CoveringLp, values: Mapping[int, Fraction]) -> list[VertexSet]:
    return [c for c in lp.constraints if sum(values[v] for v in c) < 1]


def is_feasible(lp: CoveringLp, values: Mapping[int, Fraction]) -> bool:
    if set(values) != set(lp.variables):
        return False
    if any(not 0 <= x <= 1 for x in values.values()):
        return False
    return not violated_constraints(lp, values)


def classify_vertices(sol: LpSolution) -> tuple[VertexSet, VertexSet, VertexSet]:
    """Split vertices into value-zero, value-one and fractional sets."""
    zero, one, frac = [], [], []
    for v in sorted(sol.values):
        x = sol.values[v]
        if x == 0:
            zero.append(v)
        elif x == 1:
            one.append(v)
        else:
            frac.append(v)
    return tuple(zero), tuple(one), tuple(frac)


def format_lp(lp: CoveringLp, *, title: str | None = None, label=lambda v: v + 1) -> str:
    """CPLEX LP text for ``lp``; variables are named ``x<label>``."""

    def name(v: int) -> str:
        return f"x{label(v)}"

    def join(vs: Iterable[int]) -> str:
        return " + ".join(name(v) for v in vs)

    lines = []
    if title:
        lines.append(f"\\ {title}")
    lines.append(f"\\ l = {lp.l}, {len(lp.variables)} variables, {len(lp.constraints)} constraints")
    lines.append("Minimize")
    lines.append(f" obj: {join(lp.variables) if lp.variables else '0 x0'}")
    lines.append("Subject To")
    for i, c in enumerate(lp.constraints, 1):
        lines.append(f" c{i}: {join(c)} >= 1")
    lines.append("Bounds")
    for v in lp.variables:
        lines.append(f" 0 <= {name(v)} <= 1")
    lines.append("End")
    return "\n".join(lines) + "\n"
