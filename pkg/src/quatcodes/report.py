"""Report envelope shared by every command, and its text/JSON/JSONL/CSV renderings."""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Discrepancy:
    location: str
    paper_value: str
    computed_value: str
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "location": self.location,
            "paper_value": self.paper_value,
            "computed_value": self.computed_value,
            "note": self.note,
        }


@dataclass
class ReportEnvelope:
    """``results`` holds summary fields; an optional ``rows`` list is the tabular part."""

    command: str
    inputs: dict[str, Any]
    results: dict[str, Any]
    discrepancies: list[Discrepancy] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": _plain(self.inputs),
            "results": _plain(self.results),
            "discrepancies": [d.to_dict() for d in self.discrepancies],
        }

    @property
    def rows(self) -> list[dict]:
        return list(self.results.get("rows", []))


def _plain(value):
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _cell(value) -> str:
    value = _plain(value)
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def _columns(rows: list[dict]) -> list[str]:
    cols: list[str] = []
    for row in rows:
        for key in row:
            if key not in cols:
                cols.append(key)
    return cols


def render_json(env: ReportEnvelope) -> str:
    return json.dumps(env.to_dict(), sort_keys=True, indent=2) + "\n"


def render_jsonl(env: ReportEnvelope) -> str:
    """One line per row, then one line with the envelope minus the rows."""
    data = env.to_dict()
    rows = data["results"].pop("rows", [])
    lines = [json.dumps(r, sort_keys=True) for r in rows]
    lines.append(json.dumps(data, sort_keys=True))
    return "\n".join(lines) + "\n"


def render_csv(env: ReportEnvelope) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    rows = env.rows
    if rows:
        cols = _columns(rows)
        writer.writerow(cols)
        for row in rows:
            writer.writerow([_cell(row.get(c)) for c in cols])
    else:
        writer.writerow(["field", "value"])
        for key, value in sorted(env.results.items()):
            writer.writerow([key, _cell(value)])
    return buf.getvalue()


def _table(rows: list[dict]) -> list[str]:
    cols = _columns(rows)
    cells = [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
    out = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    out.append("  ".join("-" * w for w in widths))
    for row in cells:
        out.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
    return out


def render_text(env: ReportEnvelope) -> str:
    lines = [f"# {env.command}"]
    summary = {k: v for k, v in env.results.items() if k != "rows"}
    if summary:
        width = max(len(k) for k in summary)
        for key, value in summary.items():
            lines.append(f"{key.ljust(width)}  {_cell(value)}")
    rows = env.rows
    if rows:
        lines.append("")
        lines.extend(_table(rows))
    lines.append("")
    if env.discrepancies:
        lines.append(f"discrepancies: {len(env.discrepancies)}")
        lines.extend(_table([d.to_dict() for d in env.discrepancies]))
    else:
        lines.append("discrepancies: none")
    return "\n".join(lines) + "\n"


RENDERERS = {"text": render_text, "json": render_json, "jsonl": render_jsonl, "csv": render_csv}


def render(env: ReportEnvelope, fmt: str) -> str:
    return RENDERERS[fmt](env)
