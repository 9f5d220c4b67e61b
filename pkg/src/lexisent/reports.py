"""CSV/JSON rendering of harness results, and atomic file output."""
from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from pathlib import Path
from typing import Mapping, Sequence

from .compare import IntersectionResult
from .experiments import CorrelationReport, LearningCurvePoint, summarize_boxplot
from .stats import is_defined

__all__ = [
    "fmt_float",
    "csv_text",
    "dumps",
    "matrix_csv",
    "correlation_json",
    "curve_csv",
    "curve_summary_csv",
    "curve_json",
    "comparison_json",
    "table_layout",
    "write_outputs",
]

_STATS = ("pearson", "spearman")
_FIVE = ("min", "q1", "median", "q3", "max")


def fmt_float(x: float | None) -> str:
    """Shortest round-trip repr; empty for undefined."""
    return repr(float(x)) if is_defined(x) else ""


def _jnum(x):
    return float(x) if is_defined(x) else None


def csv_text(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def matrix_csv(report: CorrelationReport, kind: str = "pearson") -> str:
    m = report.pearson if kind == "pearson" else report.spearman
    rows = [["", *report.names]]
    for i, name in enumerate(report.names):
        rows.append([name, *(fmt_float(v) for v in m[i])])
    return csv_text(rows)


def correlation_json(report: CorrelationReport, extra: Mapping | None = None) -> str:
    doc = {
        "columns": list(report.names),
        "pearson": [[_jnum(v) for v in row] for row in report.pearson],
        "spearman": [[_jnum(v) for v in row] for row in report.spearman],
        "undefined": report.undefined,
    }
    if extra:
        doc.update(extra)
    return dumps(doc)


def table_layout(report: CorrelationReport, kind: str = "pearson", digits: int = 3) -> str:
    """Upper-triangular text table, first column (gold) as the top row."""
    m = report.pearson if kind == "pearson" else report.spearman
    names = report.names
    width = max(6, *(len(n) for n in names)) + 1

    def cell(v):
        return f"{v:.{digits}f}".rjust(width) if is_defined(v) else "n/a".rjust(width)

    lines = [" " * width + "".join(n.rjust(width) for n in names[1:])]
    for i in range(len(names) - 1):
        row = [cell(m[i, j]) if j > i else " " * width for j in range(1, len(names))]
        lines.append(names[i].ljust(width) + "".join(row))
    return "\n".join(lines) + "\n"


def curve_csv(points: Sequence[LearningCurvePoint]) -> str:
    rows = [["size", "resample", "pearson", "spearman"]]
    for p in points:
        for r, (pv, sv) in enumerate(zip(p.pearson_samples, p.spearman_samples)):
            rows.append([p.size, r, fmt_float(pv), fmt_float(sv)])
    return csv_text(rows)


def _summaries(points):
    for p in points:
        try:
            yield p, summarize_boxplot(p)
        except ValueError:
            yield p, {"pearson": None, "spearman": None}


def curve_summary_csv(points: Sequence[LearningCurvePoint]) -> str:
    rows = [["size", "statistic", "defined", *_FIVE]]
    for p, summ in _summaries(points):
        for stat in _STATS:
            samples = getattr(p, f"{stat}_samples")
            defined = sum(is_defined(v) for v in samples)
            five = summ[stat] or (None,) * 5
            rows.append([p.size, stat, defined, *(fmt_float(v) for v in five)])
    return csv_text(rows)


def curve_json(points: Sequence[LearningCurvePoint], meta: Mapping | None = None) -> str:
    doc = dict(meta or {})
    doc["points"] = [
        {
            "size": p.size,
            "pearson": [_jnum(v) for v in p.pearson_samples],
            "spearman": [_jnum(v) for v in p.spearman_samples],
            "summary": {
                stat: (dict(zip(_FIVE, map(float, summ[stat]))) if summ[stat] else None)
                for stat in _STATS
            },
        }
        for p, summ in _summaries(points)
    ]
    return dumps(doc)


def comparison_json(r: IntersectionResult, discrepancies: Sequence[str], rank_corr: float,
                    meta: Mapping | None = None) -> str:
    doc = dict(meta or {})
    doc.update({
        "strategy": r.strategy.value,
        "intersection_size": len(r),
        "spearman": _jnum(rank_corr),
        "discrepancies": list(discrepancies),
        "terms": [
            {"term": t, "valence_a": va, "valence_b": vb}
            for t, va, vb in zip(r.terms, r.valences_a, r.valences_b)
        ],
    })
    return dumps(doc)


def write_outputs(out_dir: str | os.PathLike, files: Mapping[str, str]) -> list[Path]:
    """Write every file via temp-and-rename.

    All contents are rendered before this is called, so a failure earlier in
    a command leaves no partial output behind.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in files.items():
        target = out / name
        fd, tmp = tempfile.mkstemp(dir=out, prefix=f".{name}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
            os.chmod(tmp, 0o644)
            os.replace(tmp, target)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        written.append(target)
    return written
