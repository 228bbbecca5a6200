"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class ServiceInfo(BaseModel):
    name: str
    version: str


class NeighborDependency(BaseModel):
    weight: int
    row_delta: int
    col_delta: int
    direction: str


class RuleInfoResponse(BaseModel):
    rule: int
    binary: str
    fundamentals: list[int]
    dependencies: list[NeighborDependency]
    transpose_partner_rule: int
    text: str


class StepRequest(BaseModel):
    rule: int = Field(ge=0, le=511)
    grid: str


class StepResponse(BaseModel):
    grid: str
    rows: int
    cols: int


class EvolveRequest(BaseModel):
    rule: int = Field(ge=0, le=511)
    grid: str
    steps: int = Field(ge=0)


class EvolveResponse(BaseModel):
    generations: list[str]
    rows: int
    cols: int


class MatrixRequest(BaseModel):
    rule: int = Field(ge=0, le=511)
    rows: int = Field(ge=1)
    cols: int = Field(ge=1)
    format: Literal["dense", "coords"] = "dense"


class MatrixResponse(BaseModel):
    text: str
    dim: int
    ones: int


class GraphRequest(BaseModel):
    rule: int = Field(ge=0, le=511)
    rows: int = Field(ge=1)
    cols: int = Field(ge=1)
    colored: bool = True


class GraphResponse(BaseModel):
    dot: str
    vertex_count: int
    edge_count: int


class AnalyzeRequest(BaseModel):
    rule: int = Field(ge=0, le=511)
    rows: int = Field(ge=1)
    cols: int = Field(ge=1)


class AnalyzeResponse(BaseModel):
    rule: int
    rows: int
    cols: int
    dim: int
    ones: int
    rank: int
    invertible: bool
    self_loop_count: int
    isolated: list[int]
    component_count: int
    components: list[list[int]]
    out_degrees: list[int]
    in_degrees: list[int]
    text: str


class VerifyRequest(BaseModel):
    rows: int = Field(ge=1)
    cols: int = Field(ge=1)
    suite: Literal["equivalence", "theorems", "join", "golden", "all"] = "all"
    trials: int = Field(default=16, ge=1)
    seed: int = Field(default=42, ge=0)


class FailureModel(BaseModel):
    case_id: str
    expected: str
    actual: str


class DivergenceModel(BaseModel):
    case_id: str
    detail: str


class ReportModel(BaseModel):
    suite: str
    cases_run: int
    failures: list[FailureModel]
    seed: int
    dims: list[list[int]]
    expected_divergences: list[DivergenceModel]
    passed: bool


class VerifyResponse(BaseModel):
    passed: bool
    reports: list[ReportModel]
    text: str
