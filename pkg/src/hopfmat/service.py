"""FastAPI service exposing tables, SVD, verification, and scan endpoints.

Run with: uvicorn hopfmat.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import api

app = FastAPI(
    title="hopfmat",
    description="Structure matrices and SVD of Grassmann/Clifford products",
)


class MetricPayload(BaseModel):
    dim: int = Field(ge=1)
    entries: list[list[float | str]]


class TablesRequest(BaseModel):
    dim: int | None = None
    preset: str | None = None
    metric: MetricPayload | None = None
    rho: float | str | None = None
    nu: float | str | None = None


class MatrixPayload(BaseModel):
    rows: int
    cols: int
    entries: list[list[float | str]]


class TablesResponse(BaseModel):
    dim: int
    label: str
    product_matrix: MatrixPayload
    coproduct_matrix: MatrixPayload


class SvdResponse(BaseModel):
    dim: int
    label: str
    singular_values: list[float]
    left_vectors: list[list[float]]
    right_vectors: list[list[float]]
    kernel_dim: int


class VerifyRequest(BaseModel):
    suite: str
    dim: int = 3


class CheckPayload(BaseModel):
    id: str
    status: str
    witness: dict


class VerifyResponse(BaseModel):
    suite: str
    checks: list[CheckPayload]
    pass_: bool = Field(alias="pass")

    model_config = {"populate_by_name": True}


class ScanRequest(BaseModel):
    rho: tuple[float, float]
    nu: tuple[float, float]
    steps: int = Field(ge=2)


class ScanPoint(BaseModel):
    rho: float
    nu: float
    eigenvalues: list[float]
    eigengap: float
    on_locus: bool


class ScanResponse(BaseModel):
    records: list[ScanPoint]


class LocusRequest(BaseModel):
    nu: list[float]


class LocusPoint(BaseModel):
    nu: float
    rho: float
    residual: float


class LocusResponse(BaseModel):
    points: list[LocusPoint]


def _kwargs(req: TablesRequest) -> dict:
    return {
        "dim": req.dim,
        "preset": req.preset,
        "metric": req.metric.model_dump() if req.metric else None,
        "rho": req.rho,
        "nu": req.nu,
    }


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/tables", response_model=TablesResponse)
def tables(req: TablesRequest):
    try:
        return api.tables_result(**_kwargs(req))
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.post("/svd", response_model=SvdResponse)
def svd(req: TablesRequest):
    try:
        return api.svd_result(**_kwargs(req))
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.post("/verify", response_model=VerifyResponse, response_model_by_alias=True)
def verify(req: VerifyRequest):
    try:
        return api.verify_result(req.suite, dim=req.dim)
    except KeyError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.post("/scan", response_model=ScanResponse)
def scan(req: ScanRequest):
    try:
        return {"records": api.scan_result(req.rho, req.nu, req.steps)}
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.post("/locus", response_model=LocusResponse)
def locus(req: LocusRequest):
    return {"points": api.locus_result(req.nu)}
