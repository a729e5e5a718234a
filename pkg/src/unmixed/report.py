"""Run reports: named-vertex serialization of verdicts and certificates.

A report is a plain dict (written as JSON for machines) plus a line-based
human rendering. Rows, columns and pick positions are 1-based in reports.
Reports contain no timings unless requested, so repeated runs are
byte-identical.
"""

from __future__ import annotations

import hashlib
import json

from .characterization import Certificate
from .covers import CoverReport
from .hypergraph import Hypergraph
from .instance import InstanceDocument, write_instance

REPORT_SCHEMA = "unmixed-report/1"


def digest(doc: InstanceDocument) -> str:
    return "sha256:" + hashlib.sha256(write_instance(doc).encode()).hexdigest()


def names(H: Hypergraph, mask: int) -> list[str]:
    return sorted(H.names_of(mask))


def cover_report_dict(H: Hypergraph, rep: CoverReport, list_covers: bool = True) -> dict:
    out = {
        "unmixed": rep.unmixed,
        "truncated": rep.truncated,
        "size_spectrum": {str(k): v for k, v in rep.size_spectrum.items()},
        "cover_count": len(rep.covers),
    }
    if rep.witness_pair:
        out["witness_pair"] = [names(H, c) for c in rep.witness_pair]
    if list_covers:
        out["covers"] = [names(H, c) for c in rep.covers]
    return out


def certificate_dict(H: Hypergraph, cert: Certificate, rows=None) -> dict:
    out = {"verdict": cert.verdict}
    w = cert.witness
    if w is not None:
        out["witness"] = {
            "row": w.q + 1,
            "picks": [
                {
                    "column": col + 1,
                    "vertex": H.names[rows[w.q][col]] if rows is not None else None,
                    "submaximal_edge": names(H, se.mask),
                }
                for col, se in w.picks
            ],
            "union": names(H, w.union),
        }
    return out


def new_report(command: str, arguments: dict, doc: InstanceDocument | None) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "command": command,
        "arguments": arguments,
        "instance_digest": None if doc is None else digest(doc),
        "checks": [],
    }


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def _fmt(value) -> str:
    if isinstance(value, list) and value and isinstance(value[0], str):
        return "{" + ",".join(value) + "}"
    if isinstance(value, list):
        return " ".join(_fmt(v) for v in value)
    if isinstance(value, dict):
        return ", ".join(f"{k}={_fmt(v)}" for k, v in value.items())
    if isinstance(value, bool) or value is None:
        return {True: "yes", False: "no", None: "unknown"}[value]
    return str(value)


def render_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    if report.get("instance_digest"):
        lines.append(f"instance: {report['instance_digest']}")
    for check in report["checks"]:
        lines.append(f"[{check['status'].upper()}] {check['name']}")
        for key, value in check.items():
            if key in ("name", "status"):
                continue
            if key == "witness":
                lines.append(f"    witness: row {value['row']}, union {_fmt(value['union'])}")
                for p in value["picks"]:
                    via = f" ~ {p['vertex']}" if p.get("vertex") else ""
                    lines.append(f"      column {p['column']}: {_fmt(p['submaximal_edge'])}{via}")
            else:
                lines.append(f"    {key}: {_fmt(value)}")
    if "summary" in report:
        lines.append(f"summary: {_fmt(report['summary'])}")
    if "timings" in report:
        lines.append(f"timings: {_fmt(report['timings'])}")
    lines.append(f"status: {report['status']}")
    return "\n".join(lines) + "\n"
