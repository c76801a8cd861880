"""
Identity Registry - ordered store of identity definitions.
Registration order is the order cases run and appear in reports.
"""

import logging
from typing import Any, Dict, List, Optional

from mixedstirling.harness.models import CaseKind, CaseStatus, IdentityDefinition

logger = logging.getLogger(__name__)


class IdentityRegistry:
    """Central registry of identities; ids are unique and stable across releases."""

    def __init__(self):
        self._cases: Dict[str, IdentityDefinition] = {}

    # ── CRUD ──────────────────────────────────────────────────────────

    def register(self, case: IdentityDefinition) -> IdentityDefinition:
        if case.id in self._cases:
            raise ValueError(f"Identity '{case.id}' already registered")
        self._cases[case.id] = case
        return case

    def get(self, case_id: str) -> Optional[IdentityDefinition]:
        return self._cases.get(case_id)

    def require(self, case_id: str) -> IdentityDefinition:
        case = self.get(case_id)
        if case is None:
            raise ValueError(f"Unknown identity '{case_id}'")
        return case

    def list_all(self, kind: Optional[CaseKind] = None) -> List[IdentityDefinition]:
        cases = list(self._cases.values())
        if kind:
            cases = [c for c in cases if c.kind == kind]
        return cases

    def search(self, query: str) -> List[IdentityDefinition]:
        q = query.lower()
        return [
            c for c in self._cases.values()
            if q in c.id or q in c.description.lower() or any(q in t for t in c.tags)
        ]

    def expected_flags(self) -> List[str]:
        """Ids of the cases known to fail as printed."""
        return [c.id for c in self._cases.values() if c.expected_status == CaseStatus.FLAGGED]

    def __len__(self) -> int:
        return len(self._cases)

    def __contains__(self, case_id: str) -> bool:
        return case_id in self._cases

    # ── Stats ─────────────────────────────────────────────────────────

    def get_stats(self) -> Dict[str, Any]:
        by_kind: Dict[str, int] = {}
        for c in self._cases.values():
            by_kind[c.kind.value] = by_kind.get(c.kind.value, 0) + 1
        return {
            "total": len(self._cases),
            "by_kind": by_kind,
            "expected_flags": len(self.expected_flags()),
            "paired": sum(1 for c in self._cases.values() if c.paired_with),
        }
