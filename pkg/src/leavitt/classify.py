"""Simplicity and pure infiniteness of L_K(E), read off the graph.

Pure infiniteness is evaluated through two independent graph criteria
(exits in every maximal tail vs. Condition (K)); they must agree, and a
disagreement is raised as ``EquivalenceViolation`` rather than reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (DEFAULT_LATTICE_CAP, Graph, all_hereditary_saturated, condition_K,
                    connects_to_cycle_in, csp_at_least_two, cycle_has_exit_in, cycles_in,
                    exits, maximal_tails, on_closed_path, simple_cycles)

SCHEMA = "leavitt.classification/1"


class EquivalenceViolation(AssertionError):
    """Two criteria that must coincide disagreed (an implementation bug)."""


@dataclass
class Evidence:
    condition: str
    holds: bool
    detail: str = ""
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"condition": self.condition, "holds": self.holds,
                "detail": self.detail, "witness": self.witness}


@dataclass
class Verdict:
    value: bool
    evidence: list[Evidence]

    def __bool__(self):
        return self.value


def _vs(g: Graph, s) -> list[str]:
    return list(g.sort_vertices(s))


def _stranded(g: Graph, m) -> str | None:
    for v in g.sort_vertices(m):
        if not connects_to_cycle_in(g, v, m):
            return v
    return None


TAIL_CRITERION = "maximal tails: cycles have exits, vertices reach cycles"
K_CRITERION = "Condition (K); tail vertices reach cycles"


def tail_exit_criterion(g: Graph, cap: int = DEFAULT_LATTICE_CAP) -> Evidence:
    """Every maximal tail M: cycles in M have exits in M, vertices of M
    reach a cycle inside M."""
    for m in maximal_tails(g, cap):
        for c in cycles_in(g, m):
            if not cycle_has_exit_in(g, c, m):
                return Evidence(TAIL_CRITERION, False,
                                f"cycle {'.'.join(c)} has no exit in the tail",
                                {"tail": _vs(g, m), "cycle": list(c)})
        v = _stranded(g, m)
        if v is not None:
            return Evidence(TAIL_CRITERION, False,
                            f"vertex {v} connects to no cycle in the tail",
                            {"tail": _vs(g, m), "vertex": v})
    return Evidence(TAIL_CRITERION, True, "every maximal tail passes")


def condition_k_criterion(g: Graph, cap: int = DEFAULT_LATTICE_CAP) -> Evidence:
    """Condition (K) plus the vertex-connects clause per maximal tail."""
    for v in g.vertices:
        if on_closed_path(g, v) and not csp_at_least_two(g, v):
            return Evidence(K_CRITERION, False, f"Condition (K) fails at {v}", {"vertex": v})
    for m in maximal_tails(g, cap):
        v = _stranded(g, m)
        if v is not None:
            return Evidence(K_CRITERION, False,
                            f"vertex {v} connects to no cycle in the tail",
                            {"tail": _vs(g, m), "vertex": v})
    return Evidence(K_CRITERION, True,
                    "Condition (K) holds and every tail vertex reaches a cycle")


def _nontrivial_h(g: Graph, cap: int):
    full = frozenset(g.vertices)
    for h in all_hereditary_saturated(g, cap):
        if h and h != full:
            return h
    return None


def _exitless_cycle(g: Graph):
    for c in simple_cycles(g):
        if not exits(g, c):
            return c
    return None


def is_simple(g: Graph, cap: int = DEFAULT_LATTICE_CAP) -> Verdict:
    h = _nontrivial_h(g, cap)
    ev_h = (Evidence("hereditary saturated sets trivial", True) if h is None else
            Evidence("hereditary saturated sets trivial", False, "nontrivial H", {"H": _vs(g, h)}))
    c = _exitless_cycle(g)
    ev_l = (Evidence("Condition (L)", True) if c is None else
            Evidence("Condition (L)", False, f"cycle {'.'.join(c)} has no exit", {"cycle": list(c)}))
    return Verdict(ev_h.holds and ev_l.holds, [ev_h, ev_l])


def is_purely_infinite(g: Graph, cap: int = DEFAULT_LATTICE_CAP) -> Verdict:
    vi = tail_exit_criterion(g, cap)
    vii = condition_k_criterion(g, cap)
    if vi.holds != vii.holds:
        raise EquivalenceViolation(
            f"{g.name}: criteria disagree (tails={vi.holds}, Condition (K)={vii.holds}); "
            f"{vi.detail} / {vii.detail}")
    return Verdict(vi.holds, [vi, vii])


def is_purely_infinite_simple(g: Graph, cap: int = DEFAULT_LATTICE_CAP,
                              cross_check: bool = True) -> Verdict:
    h = _nontrivial_h(g, cap)
    ev = [Evidence("no nontrivial hereditary saturated set", h is None,
                   "" if h is None else "nontrivial H", {} if h is None else {"H": _vs(g, h)})]
    c = _exitless_cycle(g)
    ev.append(Evidence("every cycle has an exit", c is None,
                       "" if c is None else f"cycle {'.'.join(c)} has no exit",
                       {} if c is None else {"cycle": list(c)}))
    v = _stranded(g, g.vertices)
    ev.append(Evidence("every vertex connects to a cycle", v is None,
                       "" if v is None else f"vertex {v} connects to no cycle",
                       {} if v is None else {"vertex": v}))
    value = all(e.holds for e in ev)
    if cross_check:
        other = is_simple(g, cap).value and is_purely_infinite(g, cap).value
        if other != value:
            raise EquivalenceViolation(
                f"{g.name}: purely infinite simple by graph conditions is {value}, "
                f"simple and purely infinite gives {other}")
    return Verdict(value, ev)


def ideal_lattice(g: Graph, cap: int = DEFAULT_LATTICE_CAP) -> dict:
    """H in the hereditary saturated lattice with covering inclusions."""
    hs = all_hereditary_saturated(g, cap)
    covers = []
    for i, a in enumerate(hs):
        for j, b in enumerate(hs):
            if a < b and not any(a < c < b for c in hs):
                covers.append([i, j])
    return {
        "label": "ideals" if condition_K(g) else "graded ideals",
        "sets": [_vs(g, h) for h in hs],
        "covers": covers,
    }


@dataclass
class ClassificationReport:
    graph: str
    simple: Verdict
    purely_infinite: Verdict
    purely_infinite_simple: Verdict
    ideal_lattice: dict

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "graph": self.graph,
            "verdicts": {
                "simple": self.simple.value,
                "purely_infinite": self.purely_infinite.value,
                "purely_infinite_simple": self.purely_infinite_simple.value,
            },
            "evidence": {
                "simple": [e.to_json() for e in self.simple.evidence],
                "purely_infinite": [e.to_json() for e in self.purely_infinite.evidence],
                "purely_infinite_simple": [e.to_json() for e in self.purely_infinite_simple.evidence],
            },
            "ideal_lattice": self.ideal_lattice,
        }


def classify(g: Graph, cap: int = DEFAULT_LATTICE_CAP) -> ClassificationReport:
    simple = is_simple(g, cap)
    pi = is_purely_infinite(g, cap)
    pis = is_purely_infinite_simple(g, cap, cross_check=False)
    if pis.value != (simple.value and pi.value):
        raise EquivalenceViolation(f"{g.name}: purely infinite simple verdicts disagree")
    return ClassificationReport(g.name, simple, pi, pis, ideal_lattice(g, cap))
