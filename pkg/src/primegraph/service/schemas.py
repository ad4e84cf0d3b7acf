"""Pydantic request/response models for the service API."""

from __future__ import annotations

from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from ..graphs import Graph, graph_from_json_dict


class GraphModel(BaseModel):
    """Wire format for graphs: stringified vertex labels, canonical edges."""

    vertices: List[str]
    edges: List[Tuple[str, str]] = Field(default_factory=list)

    def to_graph(self) -> Graph:
        return graph_from_json_dict({"vertices": self.vertices, "edges": self.edges})

    @staticmethod
    def from_graph(g: Graph) -> "GraphModel":
        data = g.to_json_dict()
        return GraphModel(vertices=data["vertices"], edges=[tuple(e) for e in data["edges"]])


class ClassifyRequest(BaseModel):
    graph: GraphModel
    family: str = "auto"
    complement: bool = False


class VerdictModel(BaseModel):
    family: str
    decision: str
    certificate: Optional[Dict[str, Any]] = None
    witness: Optional[Dict[str, Any]] = None


class ClassifyResponse(BaseModel):
    verdicts: List[VerdictModel]


class EdgeRemovalRequest(BaseModel):
    graph: GraphModel
    family: str
    complement: bool = False


class ObstructionRequest(BaseModel):
    graph: GraphModel
    complement: bool = False


class ObstructionResponse(BaseModel):
    obstructed: bool
    witness: Optional[Dict[str, Any]] = None


class ConstructRequest(BaseModel):
    graph: GraphModel
    family: str
    complement: bool = False
    realize: bool = False
    max_order: int = 10**7


class RealizationModel(BaseModel):
    order: int
    degree: int
    permutation_group: bool
    symbolic_modules: List[Tuple[int, int]]
    prime_graph: GraphModel
    matches_recipe: bool


class ConstructResponse(BaseModel):
    accepted: bool
    verdict: VerdictModel
    recipe: Optional[Dict[str, Any]] = None
    assignment: Optional[Dict[str, Any]] = None
    obligations: Optional[Dict[str, Any]] = None
    realization: Optional[RealizationModel] = None


class GroupDataModel(BaseModel):
    name: Optional[str] = None
    degree: int
    order: Optional[int] = None
    spectrum: Optional[List[int]] = None
    generators: List[List[int]]


class PrimeGraphRequest(BaseModel):
    builtin: Optional[str] = None
    group: Optional[GroupDataModel] = None
    recipe: Optional[Dict[str, Any]] = None
    dot: bool = False


class PrimeGraphResponse(BaseModel):
    name: Optional[str]
    order: int
    spectrum: Optional[List[int]] = None
    graph: GraphModel
    complement: GraphModel
    graph_dot: Optional[str] = None
    complement_dot: Optional[str] = None


class CheckModel(BaseModel):
    label: str
    passed: bool
    detail: str = ""


class ReportModel(BaseModel):
    subject: str
    ok: bool
    checks: List[CheckModel]


class VerifyTablesResponse(BaseModel):
    ok: bool
    claims: ReportModel
    tables: List[ReportModel]


class FixtureResponse(BaseModel):
    name: str
    graph: GraphModel
    dot: str


class OracleRequest(BaseModel):
    graph: GraphModel
    complement: bool = False


class OracleResponse(BaseModel):
    chromatic_number: int
    triangles: List[List[str]]


class ErrorResponse(BaseModel):
    error: str
    detail: str
