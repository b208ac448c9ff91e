"""Stable JSON payloads shared by the HTTP service and the CLI."""

from __future__ import annotations

from typing import Dict, List

from .catalog import TableRow, Verdict
from .engine import ObstructionReport

SCHEMA_VERSION = "1"


def report_payload(report: ObstructionReport, include_trace: bool = False) -> dict:
    payload = {
        "schema_version": SCHEMA_VERSION,
        "spec": report.spec.render(),
        "l0": report.l0,
        "provenance": report.provenance,
        "per_prime": [res.to_dict() for res in report.per_prime],
    }
    if include_trace:
        payload["trace"] = [step.to_dict() for step in report.trace]
    return payload


def verdict_payload(v: Verdict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "spec": v.spec.render(),
        "level": v.level,
        "genus": v.genus,
        "genus_independent": True,
        "l0": v.l0,
        "prequantizable": v.prequantizable,
        "smallest_level": v.smallest_level,
        "explanation": v.explanation,
    }


def table_payload(rows: List[TableRow], family: str) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "family": family,
        "all_match": all(r.match for r in rows),
        "rows": [
            {
                "spec": r.spec,
                "engine_l0": r.engine_l0,
                "closed_form_l0": r.closed_form_l0,
                "match": r.match,
                "error": r.error,
            }
            for r in rows
        ],
    }


def verify_payload(results: Dict[str, object]) -> dict:
    entries = []
    for name in sorted(results):
        diag = results[name]
        entries.append(
            {
                "presentation": name,
                "ok": diag.ok,
                "checks": [
                    {"name": c.name, "ok": c.ok, "witness": c.witness}
                    for c in diag.checks
                ],
            }
        )
    return {
        "schema_version": SCHEMA_VERSION,
        "all_ok": all(e["ok"] for e in entries),
        "presentations": entries,
    }
