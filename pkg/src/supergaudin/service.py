"""FastAPI service exposing the engine.

POST endpoints mirror the CLI subcommands one-to-one; error responses carry
the same exit-code contract in the body (0 pass, 2 input, 3 cap, 4
unresolved, 5 pole) with HTTP 400/413 status.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from . import api, schemas
from .errors import SuperGaudinError

app = FastAPI(
    title="supergaudin",
    description="Exact Gaudin models for the general linear Lie superalgebra",
    version="0.1.0",
)


def _run(handler, req):
    try:
        return handler(req)
    except (SuperGaudinError, ValueError) as exc:
        report, code = api.error_report(exc)
        status = 413 if code == api.EXIT_CAP else 400
        return JSONResponse(
            status_code=status, content=report.model_dump(by_alias=True)
        )


@app.get("/health")
def health():
    return {"status": "ok", "schema": schemas.SCHEMA_TAG}


@app.post("/structure", response_model=schemas.StructureReport)
def structure(req: schemas.StructureRequest):
    return _run(api.handle_structure, req)


@app.post("/solve", response_model=schemas.SolveReport)
def solve(req: schemas.SolveRequest):
    return _run(api.handle_solve, req)


@app.post("/verify", response_model=schemas.VerifyReport)
def verify(req: schemas.VerifyRequest):
    return _run(api.handle_verify, req)


@app.post("/complete", response_model=schemas.CompleteReport)
def complete(req: schemas.CompleteRequest):
    return _run(api.handle_complete, req)


@app.post("/gl11", response_model=schemas.Gl11Report)
def gl11(req: schemas.Gl11Request):
    return _run(api.handle_gl11, req)


@app.post("/gl21", response_model=schemas.Gl21Report)
def gl21(req: schemas.Gl21Request):
    return _run(api.handle_gl21, req)
