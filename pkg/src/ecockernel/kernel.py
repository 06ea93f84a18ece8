"""Reduction rules and the kernelization driver for l-ECOC.

Each loop iteration tries the rules in a fixed order and applies the first
one that fires:

* ``RR1``: stop if ``|V| <= (l + 1) k + l - 1``; the current instance is the kernel.
* ``RR2``: delete a component with fewer than ``l`` vertices, paying for it.
* ``RR3``: delete a component with exactly ``l`` vertices for free.
* ``RR4``: solve the covering LP, extract a crown, delete ``I ∪ J`` and pay ``|J|``.
  If no crown exists the instance is a no-instance.

A negative budget is answered with NO before any other rule.
"""

from __future__ import annotations

import json
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field

from .graph import (
    Graph,
    Instance,
    VertexSet,
    connected_components,
    neighborhood,
    remove_vertices,
    vertex_set,
)
from .lp import CoveringLp, LpSolution, build_wecoc_lp, classify_vertices, solve_lp_exact
from .matching import BipartiteGraph, find_vc_crown


class CrownInvariantError(AssertionError):
    """The LP classification contradicted LP feasibility."""


@dataclass(frozen=True)
class EcocCrown:
    i_set: VertexSet
    j_set: VertexSet
    r_set: VertexSet
    # j-vertex -> the component of G[i_set] it is matched to
    component_matching: Mapping[int, VertexSet]


@dataclass(frozen=True)
class TraceStep:
    rule: str
    removed: VertexSet
    k_before: int
    k_after: int
    crown: EcocCrown | None = None
    note: str = ""

    def to_record(self, label: Callable[[int], int] = lambda v: v + 1) -> dict:
        record: dict = {
            "rule": self.rule,
            "removed": [label(v) for v in self.removed],
            "k_before": self.k_before,
            "k_after": self.k_after,
        }
        if self.crown is not None:
            record["crown"] = {
                "I": [label(v) for v in self.crown.i_set],
                "J": [label(v) for v in self.crown.j_set],
                "matching": [
                    [label(j), [label(v) for v in comp]]
                    for j, comp in sorted(self.crown.component_matching.items())
                ],
            }
        if self.note:
            record["note"] = self.note
        return record


@dataclass(frozen=True)
class KernelResult:
    kernel: Instance | None
    trace: tuple[TraceStep, ...] = field(default=())

    @property
    def is_no(self) -> bool:
        return self.kernel is None

    def rule_counts(self) -> dict[str, int]:
        counts = {"RR2": 0, "RR3": 0, "RR4": 0}
        for step in self.trace:
            if step.rule in counts:
                counts[step.rule] += 1
        return counts

    def crowns(self) -> list[EcocCrown]:
        return [s.crown for s in self.trace if s.crown is not None]


@dataclass(frozen=True)
class LpCrownStep:
    """Everything computed by one crown-finding attempt, kept for inspection."""

    lp: CoveringLp
    solution: LpSolution
    zeros: VertexSet
    ones: VertexSet
    fractional: VertexSet
    auxiliary: BipartiteGraph
    crown: EcocCrown | None


def size_bound(k: int, l: int) -> int:
    return (l + 1) * max(k, 0) + l - 1


def rule1_size_check(inst: Instance) -> bool:
    """True iff the instance is small enough to be returned as the kernel."""
    return inst.graph.n <= size_bound(inst.k, inst.l)


def _small_component(inst: Instance) -> tuple[str, VertexSet] | None:
    comps = connected_components(inst.graph)
    for comp in comps:
        if len(comp) < inst.l:
            return "RR2", comp
    for comp in comps:
        if len(comp) == inst.l:
            return "RR3", comp
    return None


def rule23_component_reduction(inst: Instance) -> Instance | None:
    hit = _small_component(inst)
    if hit is None:
        return None
    rule, comp = hit
    cost = len(comp) if rule == "RR2" else 0
    return Instance(remove_vertices(inst.graph, comp), inst.k - cost, inst.l)


def lp_crown_step(g: Graph, l: int, *, lazy_lp: bool = False) -> LpCrownStep:
    lp = build_wecoc_lp(g, l)
    sol = solve_lp_exact(lp, lazy=lazy_lp)
    zeros, ones, fractional = classify_vertices(sol)
    one_set = set(ones)

    zero_graph = g.induced_subgraph(zeros)
    side_a = [c for c in connected_components(zero_graph) if len(c) == l]
    edges = []
    for comp in side_a:
        for b in neighborhood(g, comp):
            if b not in one_set:
                raise CrownInvariantError(
                    f"vertex {b} with LP value {sol.values[b]} is adjacent to the "
                    f"zero-valued component {comp}; the LP solution is infeasible"
                )
            edges.append((comp, b))
    aux = BipartiteGraph.build(side_a, ones, edges)

    vc = find_vc_crown(aux)
    crown = None
    if vc is not None:
        i_set = vertex_set(v for comp in vc.i_side for v in comp)
        j_set = vertex_set(vc.j_side)
        taken = set(i_set) | set(j_set)
        crown = EcocCrown(
            i_set=i_set,
            j_set=j_set,
            r_set=tuple(v for v in g.vertices if v not in taken),
            component_matching={b: vc.witness[b] for b in j_set},
        )
    return LpCrownStep(lp, sol, zeros, ones, fractional, aux, crown)


def find_ecoc_crown_via_lp(inst: Instance, *, lazy_lp: bool = False) -> EcocCrown | None:
    """ECOC crown derived from an optimal covering-LP solution, or ``None``.

    ``None`` proves a no-instance only when rules 1 to 3 do not apply.
    """
    return lp_crown_step(inst.graph, inst.l, lazy_lp=lazy_lp).crown


def crown_violations(g: Graph, crown: EcocCrown, l: int) -> list[str]:
    """Human-readable list of the crown properties that fail on ``g``."""
    problems = []
    i_set, j_set, r_set = set(crown.i_set), set(crown.j_set), set(crown.r_set)
    parts = list(crown.i_set) + list(crown.j_set) + list(crown.r_set)
    if len(parts) != len(set(parts)) or set(parts) != set(g.vertices):
        problems.append("(I, J, R) is not a partition of V")
        return problems
    if not i_set:
        problems.append("I is empty")
    components = connected_components(g.induced_subgraph(i_set))
    if any(len(c) != l for c in components):
        problems.append(f"G[I] has a component whose size differs from l={l}")
    if any(u in r_set for v in i_set for u in g.neighbor_set(v)):
        problems.append("an edge joins I and R")
    matching = crown.component_matching
    if set(matching) != j_set:
        problems.append("the matching does not cover exactly J")
    targets = [vertex_set(c) for c in matching.values()]
    if len(set(targets)) != len(targets):
        problems.append("two J-vertices share a component")
    comp_set = set(components)
    for j, comp in matching.items():
        if vertex_set(comp) not in comp_set:
            problems.append(f"vertex {j} is matched to {vertex_set(comp)}, which is not a component of G[I]")
        elif j in g and not any(g.has_edge(j, u) for u in comp):
            problems.append(f"vertex {j} is not adjacent to its matched component")
    return problems


def validate_ecoc_crown(g: Graph, crown: EcocCrown, l: int) -> bool:
    return not crown_violations(g, crown, l)


def apply_crown(inst: Instance, crown: EcocCrown) -> Instance:
    problems = crown_violations(inst.graph, crown, inst.l)
    if problems:
        raise ValueError("invalid ECOC crown: " + "; ".join(problems))
    removed = set(crown.i_set) | set(crown.j_set)
    return Instance(remove_vertices(inst.graph, removed), inst.k - len(crown.j_set), inst.l)


def kernelize(
    inst: Instance,
    *,
    lazy_lp: bool = False,
    on_lp: Callable[[Instance, LpCrownStep], None] | None = None,
) -> KernelResult:
    """Reduce ``inst`` to a kernel with at most ``(l+1)k + l - 1`` vertices or prove NO.

    ``on_lp`` receives the current instance and every crown-finding step;
    the CLI uses it to dump the LPs it solved.
    """
    trace: list[TraceStep] = []
    current = inst
    while True:
        g, k, l = current.graph, current.k, current.l
        if k < 0:
            trace.append(TraceStep("NO", (), k, k, note="negative budget"))
            return KernelResult(None, tuple(trace))
        if rule1_size_check(current):
            trace.append(TraceStep("RR1", (), k, k, note=f"n={g.n} <= {size_bound(k, l)}"))
            return KernelResult(current, tuple(trace))

        hit = _small_component(current)
        if hit is not None:
            rule, comp = hit
            k_after = k - len(comp) if rule == "RR2" else k
            current = Instance(remove_vertices(g, comp), k_after, l)
            trace.append(TraceStep(rule, comp, k, k_after))
            continue

        # RR4 may only answer NO when the graph is larger than the bound
        if g.n < (l + 1) * k + l:
            raise AssertionError("crown search reached with rule 1 still applicable")
        step = lp_crown_step(g, l, lazy_lp=lazy_lp)
        if on_lp is not None:
            on_lp(current, step)
        if step.crown is None:
            trace.append(TraceStep("NO", (), k, k, note="no crown in the LP auxiliary graph"))
            return KernelResult(None, tuple(trace))
        current = apply_crown(current, step.crown)
        removed = vertex_set(step.crown.i_set + step.crown.j_set)
        trace.append(TraceStep("RR4", removed, k, current.k, crown=step.crown))


def replay_trace(inst: Instance, trace: tuple[TraceStep, ...] | list[TraceStep]) -> Instance:
    """Re-apply the deletions and budget changes recorded in ``trace``."""
    current = inst
    for step in trace:
        if step.k_before != current.k:
            raise ValueError(f"trace step {step.rule} expects k={step.k_before}, have {current.k}")
        if step.removed:
            current = Instance(remove_vertices(current.graph, step.removed), step.k_after, current.l)
        else:
            current = Instance(current.graph, step.k_after, current.l)
    return current


def format_trace(result: KernelResult, label: Callable[[int], int] = lambda v: v + 1) -> str:
    """One JSON object per line, keys sorted, vertices as external labels."""
    lines = []
    for i, step in enumerate(result.trace, 1):
        record = {"step": i, **step.to_record(label)}
        lines.append(json.dumps(record, sort_keys=True, separators=(",", ":")))
    return "\n".join(lines) + ("\n" if lines else "")
