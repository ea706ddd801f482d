import logging
from typing import Any, Dict

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .completion.completion_engine import complete
from .completion.theorem_checks import CHECKS, run_check
from .completion.verification_engine import VerificationEngine
from .config import DEFAULT_CONFIG
from .dsl import parse_expr, parse_gq
from .models.report_models import (
    SCHEMA_VERSION, ClassifyRequest, CompleteRequest, CompletionCertificate, OracleRequest,
    SpectrumRequest, VerifyAllRequest, VerifyRequest,
)
from .operators.operator_engine import OperatorEngine
from .oracle.numeric_oracle import estimate_point_data
from .utils.errors import (
    ArrangementError, DslSemanticError, DslSyntaxError, OperatorModelError, OracleError,
    PreconditionError,
)

logger = logging.getLogger(__name__)

app = FastAPI(title="Operator Matrix Completion API", version="1.0.0")

app.add_middleware(
    CORSMiddleware,
    allow_origins=["http://localhost:3000", "http://127.0.0.1:3000"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Initialize engines
operator_engine = OperatorEngine()
verification_engine = VerificationEngine()


def _error(status: int, exc: Exception) -> JSONResponse:
    body: Dict[str, Any] = {"detail": str(exc), "error": type(exc).__name__}
    if isinstance(exc, (DslSyntaxError, DslSemanticError)):
        body["line"], body["column"] = exc.line, exc.column
    if isinstance(exc, DslSyntaxError):
        body["expected"] = exc.expected
    return JSONResponse(status_code=status, content=body)


@app.exception_handler(DslSyntaxError)
@app.exception_handler(DslSemanticError)
@app.exception_handler(OperatorModelError)
@app.exception_handler(PreconditionError)
@app.exception_handler(ValueError)
async def bad_input(request: Request, exc: Exception):
    return _error(400, exc)


@app.exception_handler(ArrangementError)
@app.exception_handler(OracleError)
async def refused(request: Request, exc: Exception):
    logger.warning("request refused: %s", exc)
    return _error(422, exc)


@app.get("/api/health")
async def health():
    return {"status": "ok", "schema": SCHEMA_VERSION}


@app.post("/api/classify")
async def classify_point(request: ClassifyRequest):
    """Point data, class booleans and index of T−λ"""
    logger.info("classify %s at %s", request.op, request.lambda_)
    return operator_engine.classify(parse_expr(request.op), parse_gq(request.lambda_), request.kind)


@app.post("/api/spectrum")
async def spectrum(request: SpectrumRequest):
    """Exact spectral region of the requested kind"""
    logger.info("spectrum %s of %s", request.kind, request.op)
    return operator_engine.spectrum(parse_expr(request.op), request.kind)


@app.post("/api/complete")
async def complete_pair(request: CompleteRequest):
    """Decide whether M_C−λ can be completed and build the corner"""
    logger.info("complete %s (%s, %s) at %s", request.target.value, request.a, request.b, request.lambda_)
    report = complete(parse_expr(request.a), parse_expr(request.b), parse_gq(request.lambda_),
                      request.target)
    return report.to_json()


@app.post("/api/verify")
async def verify(request: VerifyRequest):
    """Run one spectral identity check"""
    logger.info("verify %s", request.check)
    if request.check not in CHECKS:
        raise HTTPException(status_code=404, detail=f"unknown check {request.check!r}")
    certificate = CompletionCertificate.from_json(request.c) if request.c else None
    verdict = run_check(
        request.check, parse_expr(request.a),
        parse_expr(request.b) if request.b else None,
        c=certificate, target=request.target, samples=request.samples, seed=request.seed,
        lam=parse_gq(request.lambda_) if request.lambda_ else None,
        config=DEFAULT_CONFIG, literal=request.literal,
    )
    return verdict.to_json()


@app.post("/api/verify/all")
async def verify_all(request: VerifyAllRequest):
    """Run every pair check, falling back to inconclusive verdicts on errors"""
    logger.info("verify all for %s", request.target.value)
    overview = verification_engine.run_all(parse_expr(request.a), parse_expr(request.b),
                                           request.target, samples=request.samples, seed=request.seed)
    return overview.to_json()


@app.post("/api/oracle")
async def oracle(request: OracleRequest):
    """Singular-value estimate of the point data"""
    logger.info("oracle %s at %s", request.op, request.lambda_)
    estimate = estimate_point_data(parse_expr(request.op), parse_gq(request.lambda_),
                                   sizes=request.sizes, tol=request.tol)
    return estimate.to_json()


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host="0.0.0.0", port=8000)
