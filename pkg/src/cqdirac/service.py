"""FastAPI service exposing the check suites and demos."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .spin import local_gauge_obstruction_demo
from .suites import SUITE_NAMES, CheckReport, run_all, run_suite

__all__ = ["app", "create_app", "SuiteRequest", "CheckReportModel", "ObstructionRow", "ObstructionReportModel"]


class SuiteRequest(BaseModel):
    seed: int = Field(default=0, ge=0)
    cases: int = Field(default=1000, ge=1)
    tol: float | None = Field(default=None, gt=0.0)


class CheckReportModel(BaseModel):
    suite: str
    cases: int
    max_residual: float
    status: str
    seed: int
    elapsed_ms: int

    @classmethod
    def from_report(cls, report: CheckReport) -> "CheckReportModel":
        return cls(**report.__dict__)


class ObstructionRow(BaseModel):
    label: str
    mismatch: float


class ObstructionReportModel(BaseModel):
    seed: int
    axis: tuple[float, float, float]
    rows: list[ObstructionRow]
    generic_floor: float


class DemoRequest(BaseModel):
    seed: int = Field(default=0, ge=0)


def create_app() -> FastAPI:
    app = FastAPI(title="cqdirac checks", version="0.1.0")

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.get("/suites")
    def list_suites() -> list[str]:
        return list(SUITE_NAMES)

    @app.post("/suites/{name}", response_model=CheckReportModel)
    def run_one(name: str, request: SuiteRequest) -> CheckReportModel:
        if name not in SUITE_NAMES:
            raise HTTPException(status_code=404, detail=f"unknown suite {name!r}")
        report = run_suite(name, seed=request.seed, cases=request.cases, tol=request.tol)
        return CheckReportModel.from_report(report)

    @app.post("/suites", response_model=list[CheckReportModel])
    def run_every(request: SuiteRequest) -> list[CheckReportModel]:
        reports = run_all(seed=request.seed, cases=request.cases, tol=request.tol)
        return [CheckReportModel.from_report(r) for r in reports]

    @app.post("/demos/obstruction", response_model=ObstructionReportModel)
    def obstruction(request: DemoRequest) -> ObstructionReportModel:
        report = local_gauge_obstruction_demo(seed=request.seed)
        return ObstructionReportModel(
            seed=report.seed,
            axis=report.axis,
            rows=[ObstructionRow(label=label, mismatch=value) for label, value in report.rows],
            generic_floor=report.generic_floor,
        )

    return app


app = create_app()
