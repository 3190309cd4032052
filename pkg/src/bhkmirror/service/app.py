"""HTTP facade: one POST endpoint per command, reports as JSON."""

from fastapi import FastAPI

from .. import __version__
from . import handlers
from .models import (CompareRequest, HodgeRequest, ModelRequest,
                     OrbifoldInput, Report)

app = FastAPI(
    title="Invertible-potential mirror service",
    description=(
        "Exact computations for quotients of invertible quasihomogeneous "
        "potentials: validation, dual (mirror) orbifolds, Fermat quotient "
        "models with birationality certificates, and Chen-Ruan Hodge "
        "diamonds."
    ),
    version=__version__,
)


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/validate", response_model=Report, response_model_exclude_none=True)
def validate(doc: OrbifoldInput) -> Report:
    return handlers.validate(doc)


@app.post("/mirror", response_model=Report, response_model_exclude_none=True)
def mirror(doc: OrbifoldInput) -> Report:
    return handlers.mirror(doc)


@app.post("/model", response_model=Report, response_model_exclude_none=True)
def model(req: ModelRequest) -> Report:
    return handlers.model(req)


@app.post("/compare", response_model=Report, response_model_exclude_none=True)
def compare(req: CompareRequest) -> Report:
    return handlers.compare(req)


@app.post("/hodge", response_model=Report, response_model_exclude_none=True)
def hodge(req: HodgeRequest) -> Report:
    return handlers.hodge(req)
