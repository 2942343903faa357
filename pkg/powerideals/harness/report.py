"""Scenario reports: computed values, expectations with provenance, verdict."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any


class Provenance(str, Enum):
    PUBLISHED = "paper"
    DERIVED = "derived"
    FINDING = "finding"  # recorded, never part of the verdict


def jsonable(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


@dataclass
class Check:
    name: str
    expected: Any
    actual: Any
    provenance: Provenance

    @property
    def holds(self) -> bool:
        return jsonable(self.expected) == jsonable(self.actual)

    @property
    def counts(self) -> bool:
        return self.provenance is not Provenance.FINDING


@dataclass
class ScenarioReport:
    scenario: str
    inputs: dict
    results: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    elapsed_ms: float | None = None

    def expect(self, name: str, expected, actual, provenance: Provenance = Provenance.DERIVED):
        self.checks.append(Check(name, expected, actual, provenance))
        return actual

    def finding(self, name: str, actual, expected=None):
        self.checks.append(Check(name, expected, actual, Provenance.FINDING))
        return actual

    def record(self, name: str, value):
        self.results[name] = value
        return value

    @property
    def failures(self) -> list:
        return [c for c in self.checks if c.counts and not c.holds]

    @property
    def verdict(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_document(self) -> dict:
        results = dict(self.results)
        results.update({c.name: c.actual for c in self.checks})
        return jsonable({
            "scenario": self.scenario,
            "inputs": self.inputs,
            "results": results,
            "expected": {c.name: c.expected for c in self.checks},
            "provenance": {c.name: c.provenance for c in self.checks},
            "failures": [c.name for c in self.failures],
            "verdict": self.verdict,
            "elapsed_ms": self.elapsed_ms,
        })

    def to_json(self) -> str:
        return json.dumps(self.to_document(), indent=2, sort_keys=True)

    def render_text(self) -> str:
        lines = [f"== {self.scenario}: {self.verdict.upper()}"]
        if self.inputs:
            lines.append("   inputs: " + ", ".join(f"{k}={jsonable(v)}" for k, v in self.inputs.items()))
        for name, value in self.results.items():
            lines.append(f"   {name}: {jsonable(value)}")
        for c in self.checks:
            if c.provenance is Provenance.FINDING:
                mark = "NOTE"
            else:
                mark = "ok" if c.holds else "FAIL"
            expected = "" if c.expected is None else f" (expected {jsonable(c.expected)})"
            lines.append(f"   [{mark}] {c.name}: {jsonable(c.actual)}{expected} <{c.provenance.value}>")
        if self.elapsed_ms is not None:
            lines.append(f"   elapsed: {self.elapsed_ms} ms")
        return "\n".join(lines)


def combined_report(name: str, inputs: dict, reports: list) -> ScenarioReport:
    """Fold sub-reports into one document, prefixing check names with the scenario."""
    combined = ScenarioReport(name, inputs)
    for report in reports:
        combined.results[report.scenario] = report.to_document()
        for c in report.checks:
            combined.checks.append(Check(f"{report.scenario}.{c.name}", c.expected, c.actual, c.provenance))
    timings = [r.elapsed_ms for r in reports]
    if all(t is not None for t in timings) and timings:
        combined.elapsed_ms = round(sum(timings), 3)
    return combined
