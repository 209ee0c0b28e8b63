"""The JSON report shared by the CLI and the census."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, replace
from typing import Optional

from . import oracle
from .graph import EdgeLabeling, Graph, NotSupportedError, VertexLabeling, is_tree, is_unicyclic
from .tree_dist import classify_tree
from .unicyclic import classify_unicyclic


@dataclass
class Report:
    n: int
    m: int
    family: str
    D: int
    Dprime: int
    witness_vertex: list[int]
    witness_edge: list[list[int]]
    in_family_T: Optional[bool] = None
    center: Optional[str] = None
    cycle: Optional[list[int]] = None
    checked_against_oracle: bool = False
    failed_conditions: list[int] = field(default_factory=list)

    def to_dict(self, witness: bool = True) -> dict:
        out = {"n": self.n, "m": self.m, "family": self.family, "D": self.D, "Dprime": self.Dprime}
        if self.family == "tree":
            out["in_family_T"] = self.in_family_T
            out["center"] = self.center
            out["failed_conditions"] = self.failed_conditions
        else:
            out["cycle"] = self.cycle
        if witness:
            out["witness_vertex"] = self.witness_vertex
            out["witness_edge"] = self.witness_edge
        out["checked_against_oracle"] = self.checked_against_oracle
        return out

    def to_json(self, witness: bool = True) -> str:
        return json.dumps(self.to_dict(witness), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        data = dict(data)
        data.setdefault("witness_vertex", [])
        data.setdefault("witness_edge", [])
        return cls(**data)

    def vertex_labeling(self) -> VertexLabeling:
        return VertexLabeling(tuple(self.witness_vertex), self.D)

    def edge_labeling(self) -> EdgeLabeling:
        return EdgeLabeling({(u, v): x for u, v, x in self.witness_edge}, self.Dprime)

    @property
    def bicentric(self) -> bool:
        return self.center == "bicentric"


def _edge_rows(g: Graph, lab: EdgeLabeling) -> list[list[int]]:
    return [[u, v, lab.labels[u, v]] for u, v in g.edges]


def family_of(g: Graph) -> str:
    if is_tree(g):
        if g.n < 3:
            raise NotSupportedError("trees need order at least 3")
        return "tree"
    if is_unicyclic(g):
        return "unicyclic"
    raise NotSupportedError("graph is neither a tree nor connected unicyclic")


def classify_graph(g: Graph) -> Report:
    family = family_of(g)
    if family == "tree":
        r = classify_tree(g)
        return Report(
            n=g.n, m=g.m, family=family, D=r.D, Dprime=r.Dprime,
            witness_vertex=list(r.witness_vertex.labels),
            witness_edge=_edge_rows(g, r.witness_edge),
            in_family_T=r.in_family_T, center=r.center.kind,
            failed_conditions=list(r.failed_conditions),
        )
    u = classify_unicyclic(g)
    return Report(
        n=g.n, m=g.m, family=family, D=u.D, Dprime=u.Dprime,
        witness_vertex=list(u.witness_vertex.labels),
        witness_edge=_edge_rows(g, u.witness_edge),
        cycle=list(u.cycle),
    )


def oracle_check(g: Graph, report: Report, budget: int = oracle.DEFAULT_BUDGET) -> list[str]:
    """Brute-force re-check of a report; returns the list of disagreements."""
    problems = []
    bd = oracle.brute_D(g, budget=budget)
    bdp = oracle.brute_Dprime(g, budget=budget)
    if bd != report.D:
        problems.append(f"D: fast {report.D}, oracle {bd}")
    if bdp != report.Dprime:
        problems.append(f"Dprime: fast {report.Dprime}, oracle {bdp}")
    if report.witness_vertex:
        fv = report.vertex_labeling()
        if max(fv.labels) > report.D or not oracle.is_distinguishing(g, fv):
            problems.append("vertex witness is not a distinguishing D-labeling")
    if report.witness_edge:
        fe = report.edge_labeling()
        if max(fe.labels.values(), default=1) > report.Dprime or not oracle.is_distinguishing(g, fe):
            problems.append("edge witness is not a distinguishing D'-labeling")
    return problems


def checked(g: Graph, report: Report) -> tuple[Report, list[str]]:
    problems = oracle_check(g, report)
    return replace(report, checked_against_oracle=not problems), problems
