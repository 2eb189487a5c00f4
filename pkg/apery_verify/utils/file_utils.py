import csv
import io
import json
import os
import sys
from typing import List, Optional

from ..errors import UsageError
from ..models.catalog import OUTPUT_FORMATS, REPORT_FIELDS, VerificationReport

STATUS_TOKENS = {
    'pass': '[PASS]',
    'fail': '[FAIL]',
    'tolerance_not_reached': '[TOLERANCE_NOT_REACHED]',
}


def join_params(params) -> str:
    """Parameters as 'k=v;k=v' for flat formats"""
    return ';'.join(f"{name}={value}" for name, value in params.items())


def render_json(reports: List[VerificationReport]) -> str:
    return json.dumps([report.to_record() for report in reports], indent=2) + '\n'


def render_csv(reports: List[VerificationReport]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(REPORT_FIELDS), lineterminator='\n')
    writer.writeheader()
    for report in reports:
        record = report.to_record()
        record['params'] = join_params(record['params'])
        writer.writerow(record)
    return buffer.getvalue()


def render_text(reports: List[VerificationReport]) -> str:
    lines = []
    for report in reports:
        token = STATUS_TOKENS[report.status.value]
        params = join_params(report.params) or '-'
        lines.append(
            f"{token} {report.id} {params} abs_diff={report.abs_diff} tol={report.tol} "
            f"terms={report.terms_used} time={report.wall_time_ms}ms"
        )
        if report.message:
            lines.append(f"    {report.message}")
    passed = sum(1 for report in reports if report.passed)
    lines.append(f"{passed}/{len(reports)} passed")
    return '\n'.join(lines) + '\n'


RENDERERS = {'json': render_json, 'csv': render_csv, 'text': render_text}


def emit(reports: List[VerificationReport], fmt: str = 'text', path: Optional[str] = None) -> None:
    """Write reports to a file, or to standard output when no path is given"""
    if fmt not in OUTPUT_FORMATS:
        raise UsageError(f"Unknown output format '{fmt}'")
    content = RENDERERS[fmt](reports)
    if path is None:
        sys.stdout.write(content)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    if not os.path.exists(directory):
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as handle:
        handle.write(content)
