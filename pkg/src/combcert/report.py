"""Report container and its json / csv / text / b-file renderings.

Every exact value is carried as a string ("p/q" for rationals) so no
renderer can introduce rounding; counts in the summary are plain ints.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

STATUSES = ("pass", "fail", "inconclusive")
CSV_COLUMNS = ("check", "input", "output", "status", "note")


@dataclass
class Row:
    check: str
    input: dict[str, str]
    output: dict[str, str]
    status: str
    note: str = ""

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    def as_dict(self) -> dict:
        return {
            "check": self.check,
            "input": dict(self.input),
            "output": dict(self.output),
            "status": self.status,
            "note": self.note,
        }


@dataclass
class Report:
    command: str
    params: dict[str, str]
    results: list[Row] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, row: Row) -> None:
        self.results.append(row)

    def note(self, text: str) -> None:
        if text not in self.notes:
            self.notes.append(text)

    @property
    def summary(self) -> dict:
        counts = {s: 0 for s in STATUSES}
        for row in self.results:
            counts[row.status] += 1
        return {"total": len(self.results), **counts, "notes": list(self.notes)}

    @property
    def ok(self) -> bool:
        s = self.summary
        return s["fail"] == 0 and s["inconclusive"] == 0


def _flatten(d: dict[str, str]) -> str:
    return " ".join(f"{k}={v}" for k, v in d.items())


def render_json(report: Report) -> str:
    doc = {
        "command": report.command,
        "params": dict(report.params),
        "results": [r.as_dict() for r in report.results],
        "summary": report.summary,
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def render_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in report.results:
        writer.writerow([r.check, _flatten(r.input), _flatten(r.output), r.status, r.note])
    return buf.getvalue()


def render_text(report: Report) -> str:
    lines = [f"command: {report.command}", "params: " + _flatten(report.params)]
    for r in report.results:
        line = f"[{r.status}] {r.check} {_flatten(r.input)} -> {_flatten(r.output)}"
        if r.note:
            line += f"  # {r.note}"
        lines.append(line)
    s = report.summary
    lines.append(
        f"summary: total={s['total']} pass={s['pass']} fail={s['fail']} inconclusive={s['inconclusive']}"
    )
    lines.extend(f"note: {n}" for n in s["notes"])
    return "\n".join(lines) + "\n"


def emit_bfile(name: str, values: list[int], offset: int = 0) -> str:
    """One "index value" line per term, newline-terminated, no header.

    ``name`` only identifies the sequence for error messages; it is not
    written, since b-files carry no header line.
    """
    if not name:
        raise ValueError("b-file needs a sequence name")
    if not values:
        raise ValueError("b-file needs at least one term")
    return "".join(f"{offset + i} {v}\n" for i, v in enumerate(values))
