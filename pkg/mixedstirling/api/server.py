"""
mixedstirling: FastAPI Server
Values, tables, oracle counts and verification reports over HTTP. Integers are
returned as decimal strings so clients never lose precision.
"""

import logging
from typing import Dict, List, Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from mixedstirling import __version__
from mixedstirling.bounded import SizeBand
from mixedstirling.cache import memo_registry
from mixedstirling.config import settings
from mixedstirling.families import (
    Family, FamilyQuery, compute_family, family_table, parse_range,
)
from mixedstirling.harness import VerificationGrid, default_registry, run_suite
from mixedstirling.mixed import CellSpec, MixedAlgorithm
from mixedstirling.oracle import OracleQuery, oracle_count

logger = logging.getLogger(__name__)


_openapi_tags = [
    {"name": "System", "description": "Health and engine info"},
    {"name": "Compute", "description": "Single values and tables of every family"},
    {"name": "Oracle", "description": "Brute-force partition counts"},
    {"name": "Verification", "description": "Identity checks over a grid"},
]

app = FastAPI(
    title="mixedstirling",
    description="Exact mixed, restricted and associated Stirling numbers of the second kind.",
    version=__version__,
    openapi_tags=_openapi_tags,
    docs_url="/docs",
    redoc_url="/redoc",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["GET", "POST"],
    allow_headers=["*"],
)


@app.exception_handler(ValueError)
async def value_error_handler(request: Request, exc: ValueError):
    logger.info(f"[API] rejected {request.url.path}: {exc}")
    return JSONResponse(status_code=422, content={"detail": str(exc)})


# ── Request/Response Models ───────────────────────────────────────────────────

class ComputeRequest(BaseModel):
    family: Family = Family.MIXED
    n: int
    k: int = 1
    r: int = 0
    band: str = "unbounded"
    counts: List[int] = Field(default_factory=list)
    algorithm: str = MixedAlgorithm.CLOSED_FORM.value


class ComputeResponse(BaseModel):
    family: str
    value: Optional[str] = None
    values: Optional[Dict[str, str]] = None


class TableRequest(BaseModel):
    family: Family = Family.MIXED
    n: str
    k: str = "1"
    r: str = "0"
    band: str = "unbounded"
    counts: List[int] = Field(default_factory=list)
    include_zeros: bool = False


class TableRow(BaseModel):
    n: int
    index: int
    value: str


class TableResponse(BaseModel):
    family: str
    columns: List[str]
    rows: List[TableRow]


class OracleCountRequest(BaseModel):
    n: int
    cells: List[int]
    band: str = "unbounded"
    empty_ok_labels: List[int] = Field(default_factory=list)
    distinct_prefix: int = 0


class OracleCountResponse(BaseModel):
    count: str


class VerifyRequest(BaseModel):
    case_ids: Optional[List[str]] = None
    n_max: Optional[int] = None
    k_max: Optional[int] = None
    r_max: Optional[int] = None
    bands: Optional[List[str]] = None
    oracle_max_n: Optional[int] = None


def _check_limit(limit: int, **values: Optional[int]) -> None:
    for name, v in values.items():
        if v is not None and v > limit:
            raise ValueError(f"{name}={v} exceeds the API limit {limit}")


def _check_n(**values: Optional[int]) -> None:
    _check_limit(settings.api_max_n, **values)


# ══════════════════════════════════════════════════════════════════════════════
# HEALTH & INFO
# ══════════════════════════════════════════════════════════════════════════════

@app.get("/health", tags=["System"])
def health():
    return {
        "status": "ok",
        "engine_version": settings.engine_version,
        "environment": settings.environment,
        "identities": len(default_registry()),
        "memo": memo_registry.get_stats(),
    }


# ══════════════════════════════════════════════════════════════════════════════
# COMPUTE
# ══════════════════════════════════════════════════════════════════════════════

@app.post("/compute", tags=["Compute"], response_model=ComputeResponse)
def compute(req: ComputeRequest):
    _check_n(n=req.n, k=req.k, r=req.r, cells=sum(req.counts))
    q = FamilyQuery(
        family=req.family, n=req.n, k=req.k, r=req.r, band=SizeBand.parse(req.band),
        counts=tuple(req.counts), algorithm=req.algorithm,
    )
    value = compute_family(q)
    logger.debug(f"[API] compute {q.model_dump(mode='json')}")
    if isinstance(value, dict):
        return ComputeResponse(family=req.family.value, values={k: str(v) for k, v in value.items()})
    return ComputeResponse(family=req.family.value, value=str(value))


@app.post("/table", tags=["Compute"], response_model=TableResponse)
def table(req: TableRequest):
    n_values, k_values, r_values = parse_range(req.n), parse_range(req.k), parse_range(req.r)
    if not (n_values and k_values and r_values):
        raise ValueError("table ranges must be non-empty")
    _check_n(n=max(n_values), k=max(k_values), r=max(r_values), cells=sum(req.counts))
    base = FamilyQuery(
        family=req.family, n=0, k=max(k_values[0], 0), r=max(r_values[0], 0),
        band=SizeBand.parse(req.band), counts=tuple(req.counts),
    )
    columns, rows = family_table(base, n_values, k_values, r_values)
    return TableResponse(
        family=req.family.value,
        columns=[columns[0], columns[1], "value"],
        rows=[
            TableRow(n=a, index=b, value=str(v))
            for a, b, v in rows if v or req.include_zeros
        ],
    )


# ══════════════════════════════════════════════════════════════════════════════
# ORACLE
# ══════════════════════════════════════════════════════════════════════════════

@app.post("/oracle/count", tags=["Oracle"], response_model=OracleCountResponse)
def oracle(req: OracleCountRequest):
    _check_n(n=req.n, cells=sum(req.cells))
    spec = (
        CellSpec.relaxed(req.cells, req.empty_ok_labels) if req.empty_ok_labels
        else CellSpec.strict(req.cells)
    )
    q = OracleQuery(
        n=req.n, spec=spec, band=SizeBand.parse(req.band), distinct_prefix=req.distinct_prefix,
    )
    return OracleCountResponse(count=str(oracle_count(q)))


# ══════════════════════════════════════════════════════════════════════════════
# VERIFICATION
# ══════════════════════════════════════════════════════════════════════════════

@app.post("/verify", tags=["Verification"])
def verify(req: VerifyRequest):
    _check_limit(
        settings.api_verify_max_n,
        n_max=req.n_max, k_max=req.k_max, r_max=req.r_max, oracle_max_n=req.oracle_max_n,
    )
    overrides = req.model_dump(exclude={"case_ids"}, exclude_none=True)
    if "bands" in overrides:
        overrides["bands"] = tuple(overrides["bands"])
    grid = VerificationGrid(**overrides)
    report = run_suite(grid, case_ids=req.case_ids)
    logger.info(f"[API] verify {len(report.cases)} cases: {report.summary()}")
    return {
        **report.deterministic_dict(),
        "generated_at": report.generated_at.isoformat(),
        "determinism_hash": report.determinism_hash(),
        "summary": report.summary(),
    }
