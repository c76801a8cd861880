"""
Verification suite runner.
Evaluates registered identities over a VerificationGrid and assembles a
VerificationReport. Cases are independent and side-effect free, so they may run
on a thread pool; results are always reported in registration order.
"""

import hashlib
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional, Sequence

from pydantic import BaseModel, Field

from mixedstirling.bounded.size_band import SizeBand
from mixedstirling.config import settings
from mixedstirling.harness.grid import VerificationGrid
from mixedstirling.harness.identities import default_registry
from mixedstirling.harness.models import (
    CaseResult, CaseStatus, Counterexample, IdentityDefinition, render_value,
)
from mixedstirling.harness.registry import IdentityRegistry

logger = logging.getLogger(__name__)


class VerificationReport(BaseModel):
    engine_version: str
    grid: Dict[str, Any]
    cases: List[CaseResult] = Field(default_factory=list)
    generated_at: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))

    def deterministic_dict(self) -> Dict[str, Any]:
        """The report without its timestamp."""
        return self.model_dump(mode="json", exclude={"generated_at"})

    def determinism_hash(self) -> str:
        payload = json.dumps(self.deterministic_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def get(self, case_id: str) -> Optional[CaseResult]:
        return next((c for c in self.cases if c.id == case_id), None)

    @property
    def unexpected(self) -> List[CaseResult]:
        """Cases whose status differs from the recorded expectation."""
        return [c for c in self.cases if not c.as_expected]

    def summary(self) -> Dict[str, int]:
        counts: Dict[str, int] = {s.value: 0 for s in CaseStatus}
        for c in self.cases:
            counts[c.status.value] += 1
        counts["unexpected"] = len(self.unexpected)
        return counts


def _render_params(point: Dict[str, Any]) -> Dict[str, Any]:
    return {
        name: value.label if isinstance(value, SizeBand) else render_value(value)
        for name, value in point.items()
    }


def evaluate_case(
    case: IdentityDefinition,
    grid: VerificationGrid,
    max_counterexamples: Optional[int] = None,
) -> CaseResult:
    """Evaluate one identity at every applicable grid point."""
    limit = max_counterexamples or settings.max_counterexamples
    checked = 0
    failures = 0
    counterexamples: List[Counterexample] = []
    errors: List[str] = []

    for point in grid.points(case.axes):
        try:
            if case.applies is not None and not case.applies(**point):
                continue
            lhs = case.lhs(**point)
            rhs = case.rhs(**point)
        except Exception as e:
            errors.append(f"{_render_params(point)}: {type(e).__name__}: {e}")
            continue
        checked += 1
        if lhs != rhs:
            failures += 1
            if len(counterexamples) < limit:
                ce = Counterexample(
                    params=_render_params(point), lhs=render_value(lhs), rhs=render_value(rhs),
                )
                counterexamples.append(ce)
                logger.debug(f"[HARNESS] {case.id} counterexample {ce.params}: {ce.lhs} != {ce.rhs}")

    if errors:
        status = CaseStatus.ERROR
    elif failures:
        status = CaseStatus.FLAGGED
    elif checked == 0:
        status = CaseStatus.SKIPPED
    else:
        status = CaseStatus.PASS

    log = logger.info if status == case.expected_status else logger.warning
    log(f"[HARNESS] {case.id}: {status.value} ({checked} points, {failures} failures)")

    return CaseResult(
        id=case.id,
        description=case.description,
        kind=case.kind,
        status=status,
        expected_status=case.expected_status,
        points_checked=checked,
        failures=failures,
        counterexamples=counterexamples,
        errors=errors[:limit],
        paired_with=case.paired_with,
        note=case.note,
    )


def run_suite(
    grid: Optional[VerificationGrid] = None,
    case_ids: Optional[Sequence[str]] = None,
    workers: Optional[int] = None,
    registry: Optional[IdentityRegistry] = None,
) -> VerificationReport:
    """Evaluate the selected identities (all of them by default) over grid."""
    grid = grid or VerificationGrid()
    registry = registry or default_registry()
    workers = workers or settings.harness_workers
    cases = [registry.require(cid) for cid in case_ids] if case_ids else registry.list_all()

    logger.info(f"[HARNESS] running {len(cases)} cases with {workers} worker(s)")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: evaluate_case(c, grid), cases))
    else:
        results = [evaluate_case(c, grid) for c in cases]

    report = VerificationReport(
        engine_version=settings.engine_version,
        grid=grid.describe(),
        cases=results,
    )
    logger.info(f"[HARNESS] summary {report.summary()}")
    return report
