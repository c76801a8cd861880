"""Verification Harness - identity catalogue, grid runner and reports"""
from .models import CaseKind, CaseStatus, IdentityDefinition, Counterexample, CaseResult, render_value
from .grid import VerificationGrid, AXIS_PARAMS
from .registry import IdentityRegistry
from .identities import build_registry, default_registry
from .suite import VerificationReport, evaluate_case, run_suite
from .reporting import report_to_json, report_to_text, table_to_csv, table_to_text

__all__ = [
    "CaseKind", "CaseStatus", "IdentityDefinition", "Counterexample", "CaseResult", "render_value",
    "VerificationGrid", "AXIS_PARAMS", "IdentityRegistry",
    "build_registry", "default_registry",
    "VerificationReport", "evaluate_case", "run_suite",
    "report_to_json", "report_to_text", "table_to_csv", "table_to_text",
]
