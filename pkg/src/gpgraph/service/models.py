"""Request/response schemas for the recognition service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str


class GenerateRequest(BaseModel):
    n: int
    k: int


class GenerateResponse(BaseModel):
    graph_text: str
    num_vertices: int
    outer: list[int]
    inner: list[int]


class RecognizeRequest(BaseModel):
    graph_text: str
    oracle: bool = False


class RecognizeResponse(BaseModel):
    is_gp: bool
    n: int | None = None
    k: int | None = None
    outer: list[int] | None = None
    inner: list[int] | None = None
    reason: str | None = None


class SigmaRequest(BaseModel):
    graph_text: str


class SigmaPartModel(BaseModel):
    sigma: int
    size: int
    edges: list[tuple[int, int]]


class SigmaResponse(BaseModel):
    parts: list[SigmaPartModel]


class BenchRequest(BaseModel):
    sizes: list[int] = Field(min_length=1)
    k: int
    reps: int = 1


class BenchRecordModel(BaseModel):
    n: int
    k: int
    wall_time_ns: int
    sigma_steps: int
    accepted: bool


class BenchResponse(BaseModel):
    records: list[BenchRecordModel]
