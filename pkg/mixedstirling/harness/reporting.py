"""
Report and table rendering: JSON and aligned text for verification reports,
CSV and aligned text for number tables. Numbers are always plain decimal.
"""

import csv
import io
import json
from typing import Iterable, List, Sequence, Tuple

from mixedstirling.harness.suite import VerificationReport

TableRow = Tuple[int, int, int]


def report_to_json(report: VerificationReport, include_timestamp: bool = True) -> str:
    data = report.model_dump(mode="json") if include_timestamp else report.deterministic_dict()
    return json.dumps(data, sort_keys=True, indent=2)


def report_to_text(report: VerificationReport) -> str:
    header = ("case", "kind", "status", "expected", "points", "failures")
    rows = [
        (c.id, c.kind.value, c.status.value, c.expected_status.value,
         str(c.points_checked), str(c.failures))
        for c in report.cases
    ]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]

    def fmt(cells: Sequence[str]) -> str:
        return "  ".join(cell.ljust(w) for cell, w in zip(cells, widths)).rstrip()

    lines = [f"engine {report.engine_version}", fmt(header), fmt(["-" * w for w in widths])]
    for case, row in zip(report.cases, rows):
        lines.append(fmt(row))
        for ce in case.counterexamples:
            params = ", ".join(f"{k}={v}" for k, v in ce.params.items())
            lines.append(f"    at {params or '-'}: lhs {ce.lhs} != rhs {ce.rhs}")
        for err in case.errors:
            lines.append(f"    error {err}")
        if case.note and not case.as_expected:
            lines.append(f"    note: {case.note}")
    summary = report.summary()
    lines.append(" ".join(f"{k}={v}" for k, v in summary.items()))
    return "\n".join(lines) + "\n"


def table_to_csv(
    rows: Iterable[TableRow],
    columns: Tuple[str, str] = ("n", "k"),
    include_zeros: bool = False,
) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([columns[0], columns[1], "value"])
    for a, b, value in rows:
        if value or include_zeros:
            writer.writerow([a, b, value])
    return buf.getvalue()


def table_to_text(
    rows: Iterable[TableRow],
    columns: Tuple[str, str] = ("n", "k"),
    include_zeros: bool = False,
) -> str:
    """Matrix layout: one line per row index, one column per column index."""
    rows = list(rows)
    row_keys: List[int] = sorted({a for a, _, _ in rows})
    col_keys: List[int] = sorted({b for _, b, _ in rows})
    cells = {(a, b): v for a, b, v in rows}

    def show(v: int) -> str:
        return str(v) if v or include_zeros else ""

    corner = f"{columns[0]}/{columns[1]}"
    grid = [[corner] + [str(b) for b in col_keys]]
    for a in row_keys:
        grid.append([str(a)] + [show(cells.get((a, b), 0)) for b in col_keys])
    widths = [max(len(line[i]) for line in grid) for i in range(len(grid[0]))]
    out = [
        "  ".join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip()
        for line in grid
    ]
    return "\n".join(out) + "\n"
