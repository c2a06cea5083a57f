"""Structured verification reports with deterministic serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

PASS = "pass"
FAIL = "fail"
DIVERGENCE = "divergence"
EMPTY_SOLUTION_SET = "empty-solution-set"
SOLUTION_SET = "solution-set"


@dataclass
class VerificationReport:
    target: str
    kind: str
    status: str
    degree: Optional[int] = None
    series_order: Optional[int] = None
    mode: str = "exact"
    witnesses: List[Dict[str, str]] = field(default_factory=list)
    timing_ms: Optional[float] = None
    seed: Optional[int] = None
    notes: List[str] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status in (PASS, EMPTY_SOLUTION_SET, SOLUTION_SET)

    def add_witness(self, location: str, residual: str):
        self.witnesses.append({"location": location, "residual": residual})

    def to_json_dict(self, include_timing: bool = True) -> dict:
        out = {
            "target": self.target,
            "kind": self.kind,
            "status": self.status,
            "degree": self.degree,
            "series_order": self.series_order,
            "mode": self.mode,
            "witnesses": self.witnesses,
            "seed": self.seed,
            "notes": self.notes,
            "data": self.data,
        }
        if include_timing:
            out["timing_ms"] = self.timing_ms
        return out

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_json_dict(include_timing), sort_keys=True)


def render_text(report_dict: dict) -> str:
    """Human-readable rendering; a pure function of the JSON dict."""
    head = f"[{report_dict['status'].upper():>4}] {report_dict['target']} :: {report_dict['kind']}"
    opts = []
    if report_dict.get("degree") is not None:
        opts.append(f"degree={report_dict['degree']}")
    if report_dict.get("series_order") is not None:
        opts.append(f"order={report_dict['series_order']}")
    if report_dict.get("mode"):
        opts.append(f"mode={report_dict['mode']}")
    if report_dict.get("seed") is not None:
        opts.append(f"seed={report_dict['seed']}")
    if opts:
        head += " (" + ", ".join(opts) + ")"
    lines = [head]
    for w in report_dict.get("witnesses", []):
        lines.append(f"    at {w['location']}: {w['residual']}")
    for n in report_dict.get("notes", []):
        lines.append(f"    note: {n}")
    for k, v in sorted(report_dict.get("data", {}).items()):
        lines.append(f"    {k}: {v}")
    return "\n".join(lines)


REPORT_SCHEMA = {
    "type": "object",
    "required": ["target", "kind", "status", "mode", "witnesses", "notes", "data"],
    "properties": {
        "target": {"type": "string"},
        "kind": {"type": "string"},
        "status": {
            "enum": [PASS, FAIL, DIVERGENCE, EMPTY_SOLUTION_SET, SOLUTION_SET]
        },
        "degree": {"type": ["integer", "null"]},
        "series_order": {"type": ["integer", "null"]},
        "mode": {"type": "string"},
        "witnesses": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["location", "residual"],
                "properties": {
                    "location": {"type": "string"},
                    "residual": {"type": "string"},
                },
            },
        },
        "timing_ms": {"type": ["number", "null"]},
        "seed": {"type": ["integer", "null"]},
        "notes": {"type": "array", "items": {"type": "string"}},
        "data": {"type": "object"},
    },
}
