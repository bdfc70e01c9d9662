"""FastAPI service exposing generation, recognition, the census dump and the
benchmark over the core library.  Invalid inputs (malformed edge lists,
non-cubic graphs, bad parameters, guard violations) map to HTTP 422."""

from __future__ import annotations

import dataclasses

from fastapi import FastAPI, HTTPException

from ..bench import run_bench
from ..census import sigma_partition
from ..construct import GpParams, build
from ..errors import GraphError
from ..graph import parse_edge_list, serialize_edge_list
from ..oracle import brute_force_recognize
from ..recognizer import RecognitionResult, recognize
from .models import (
    BenchRecordModel,
    BenchRequest,
    BenchResponse,
    GenerateRequest,
    GenerateResponse,
    HealthResponse,
    RecognizeRequest,
    RecognizeResponse,
    SigmaPartModel,
    SigmaRequest,
    SigmaResponse,
)


def _recognition_response(result: RecognitionResult) -> RecognizeResponse:
    if result.accepted:
        return RecognizeResponse(
            is_gp=True,
            n=result.params.n,
            k=result.params.k,
            outer=list(result.labeling.outer),
            inner=list(result.labeling.inner),
            reason=None,
        )
    return RecognizeResponse(is_gp=False, reason=result.reason.value)


def create_app() -> FastAPI:
    app = FastAPI(title="gpgraph", description="Generalized Petersen graph recognition service")

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok")

    @app.post("/generate", response_model=GenerateResponse)
    def generate(request: GenerateRequest) -> GenerateResponse:
        try:
            params = GpParams(request.n, request.k)
        except GraphError as err:
            raise HTTPException(status_code=422, detail=str(err))
        g, labeling = build(params)
        return GenerateResponse(
            graph_text=serialize_edge_list(g),
            num_vertices=g.num_vertices,
            outer=list(labeling.outer),
            inner=list(labeling.inner),
        )

    @app.post("/recognize", response_model=RecognizeResponse)
    def recognize_graph(request: RecognizeRequest) -> RecognizeResponse:
        try:
            g = parse_edge_list(request.graph_text)
            result = brute_force_recognize(g) if request.oracle else recognize(g)
        except GraphError as err:
            raise HTTPException(status_code=422, detail=str(err))
        return _recognition_response(result)

    @app.post("/sigma", response_model=SigmaResponse)
    def sigma(request: SigmaRequest) -> SigmaResponse:
        try:
            g = parse_edge_list(request.graph_text)
        except GraphError as err:
            raise HTTPException(status_code=422, detail=str(err))
        partition = sigma_partition(g)
        parts = [
            SigmaPartModel(
                sigma=value,
                size=len(ids),
                edges=[g.edges[i] for i in sorted(ids)],
            )
            for value, ids in sorted(partition.parts.items())
        ]
        return SigmaResponse(parts=parts)

    @app.post("/bench", response_model=BenchResponse)
    def bench(request: BenchRequest) -> BenchResponse:
        try:
            records = run_bench(request.sizes, request.k, request.reps)
        except (GraphError, ValueError) as err:
            raise HTTPException(status_code=422, detail=str(err))
        return BenchResponse(
            records=[BenchRecordModel(**dataclasses.asdict(record)) for record in records]
        )

    return app


app = create_app()
