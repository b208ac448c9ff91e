"""HTTP front end: a FastAPI service wrapping the derivation engine.

Run with `uvicorn obstructor.service:app`.  The CLI is a thin client of
this service (in-process by default, remote with --server).
"""

from __future__ import annotations

from typing import List, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .catalog import Catalog, default_catalog
from .errors import (
    CatalogError,
    CatalogMismatchError,
    GroupSpecError,
    ObstructorError,
    UnclassifiableObstructionError,
)
from .groupspec import parse_group_spec
from .serialize import (
    SCHEMA_VERSION,
    report_payload,
    table_payload,
    verdict_payload,
    verify_payload,
)


class DeriveRequest(BaseModel):
    spec: str = Field(..., description='group descriptor, e.g. "SU(6)/Z3"')
    max_degree: int = Field(8, ge=4, le=16)
    include_trace: bool = False


class PrimeLocalModel(BaseModel):
    prime: int
    r: int
    s: int
    strategy: str
    classified_as: str
    local_order: int
    citation: str = ""
    obstruction: Optional[str] = None
    witness: Optional[str] = None
    bockstein_order: Optional[int] = None
    engine_derived: bool


class TraceStepModel(BaseModel):
    stage: str
    detail: str
    citation: str = ""


class DeriveResponse(BaseModel):
    schema_version: str
    spec: str
    l0: int
    provenance: str
    per_prime: List[PrimeLocalModel]
    trace: Optional[List[TraceStepModel]] = None


class CheckRequest(BaseModel):
    spec: str
    level: int = Field(..., ge=1)
    genus: int = Field(1, ge=1)


class CheckResponse(BaseModel):
    schema_version: str
    spec: str
    level: int
    genus: int
    genus_independent: bool
    l0: int
    prequantizable: bool
    smallest_level: int
    explanation: str


class TableRequest(BaseModel):
    family: str = Field(..., description="SU, PSp, SO, PSO, Ss, or exceptional")
    max: Optional[int] = Field(None, ge=1)


class TableRowModel(BaseModel):
    spec: str
    engine_l0: Optional[int]
    closed_form_l0: int
    match: bool
    error: Optional[str] = None


class TableResponse(BaseModel):
    schema_version: str
    family: str
    all_match: bool
    rows: List[TableRowModel]


class CheckResultModel(BaseModel):
    name: str
    ok: bool
    witness: Optional[str] = None


class PresentationVerifyModel(BaseModel):
    presentation: str
    ok: bool
    checks: List[CheckResultModel]


class VerifyResponse(BaseModel):
    schema_version: str
    all_ok: bool
    presentations: List[PresentationVerifyModel]


class HealthResponse(BaseModel):
    status: str
    version: str
    schema_version: str
    catalog_source: str


def create_app(catalog: Optional[Catalog] = None) -> FastAPI:
    app = FastAPI(
        title="obstructor",
        version=__version__,
        description="Pre-quantization levels of compact simple Lie groups",
    )
    cat = catalog or default_catalog()

    @app.exception_handler(GroupSpecError)
    async def _spec_error(request: Request, exc: GroupSpecError):
        return JSONResponse(
            status_code=400,
            content={
                "error": "group-spec",
                "message": exc.message,
                "position": exc.position,
            },
        )

    @app.exception_handler(ObstructorError)
    async def _engine_error(request: Request, exc: ObstructorError):
        kind = {
            CatalogMismatchError: "catalog-mismatch",
            UnclassifiableObstructionError: "unclassifiable",
            CatalogError: "catalog",
        }.get(type(exc), "engine")
        return JSONResponse(
            status_code=422, content={"error": kind, "message": str(exc)}
        )

    @app.get("/health", response_model=HealthResponse)
    def health():
        return HealthResponse(
            status="ok",
            version=__version__,
            schema_version=SCHEMA_VERSION,
            catalog_source=cat.source,
        )

    @app.post("/derive", response_model=DeriveResponse, response_model_exclude_none=True)
    def derive(req: DeriveRequest):
        spec = parse_group_spec(req.spec)
        report = cat.derive(spec, max_degree=req.max_degree)
        return report_payload(report, include_trace=req.include_trace)

    @app.post("/check", response_model=CheckResponse)
    def check(req: CheckRequest):
        spec = parse_group_spec(req.spec)
        verdict = cat.prequantizable(spec, req.level, req.genus)
        return verdict_payload(verdict)

    @app.post("/table", response_model=TableResponse)
    def table(req: TableRequest):
        rows = cat.table(req.family, req.max)
        return table_payload(rows, req.family)

    @app.post("/verify-catalog", response_model=VerifyResponse)
    def verify_catalog():
        return verify_payload(cat.verify_all())

    return app


app = create_app()
