"""HTTP face of the calculus: one POST route per command, plus /health.

Domain errors (bad input, mathematically impossible requests) map to 400
with a machine-readable {"error": ...} body; a tripped internal invariant
maps to 500 the same way.  Request bodies FastAPI itself rejects are also
400, so clients see a single error shape everywhere.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from . import __version__
from .api import (
    bs_command,
    downset_command,
    fss_command,
    generic_support_command,
    gl2_modp_command,
    length_bound_command,
    leq_command,
    specialize_command,
    to_multisegment_command,
)
from .errors import DomainError, InternalInvariantError
from .schemas import (
    DownsetRequest,
    DownsetResponse,
    GenericSupportRequest,
    Gl2Request,
    Gl2Response,
    LengthBoundRequest,
    LengthBoundResponse,
    LeqRequest,
    LeqResponse,
    MultisegmentDoc,
    SpecializationReportDoc,
    SpecializeRequest,
    TwistedMultisegmentDoc,
    WdRepDoc,
)

__all__ = ["app"]

app = FastAPI(title="wdseg", version=__version__)


@app.exception_handler(DomainError)
async def _domain_error(request: Request, exc: DomainError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": str(exc)})


@app.exception_handler(RequestValidationError)
async def _validation_error(
    request: Request, exc: RequestValidationError
) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": str(exc)})


@app.exception_handler(InternalInvariantError)
async def _internal_error(
    request: Request, exc: InternalInvariantError
) -> JSONResponse:
    return JSONResponse(status_code=500, content={"error": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/fss", response_model=WdRepDoc)
def post_fss(body: WdRepDoc) -> WdRepDoc:
    return fss_command(body)


@app.post("/to-multisegment", response_model=TwistedMultisegmentDoc)
def post_to_multisegment(body: WdRepDoc) -> TwistedMultisegmentDoc:
    return to_multisegment_command(body)


@app.post("/bs", response_model=TwistedMultisegmentDoc)
def post_bs(body: WdRepDoc) -> TwistedMultisegmentDoc:
    return bs_command(body)


@app.post("/specialize", response_model=SpecializationReportDoc)
def post_specialize(body: SpecializeRequest) -> SpecializationReportDoc:
    return specialize_command(body)


@app.post("/leq", response_model=LeqResponse)
def post_leq(body: LeqRequest) -> LeqResponse:
    return leq_command(body)


@app.post("/downset", response_model=DownsetResponse)
def post_downset(body: DownsetRequest) -> DownsetResponse:
    return downset_command(body)


@app.post("/generic-support", response_model=MultisegmentDoc)
def post_generic_support(body: GenericSupportRequest) -> MultisegmentDoc:
    return generic_support_command(body)


@app.post("/gl2-modp", response_model=Gl2Response)
def post_gl2_modp(body: Gl2Request) -> Gl2Response:
    return gl2_modp_command(body)


@app.post("/length-bound", response_model=LengthBoundResponse)
def post_length_bound(body: LengthBoundRequest) -> LengthBoundResponse:
    return length_bound_command(body)
