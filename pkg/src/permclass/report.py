"""Structured verification reports.

A report is an ordered list of assertions, each carrying its inputs with
provenance, the relation that was checked, and the outcome.  Assumption
entries record steps taken on faith (they are tagged and never silently
dropped) and do not gate the verdict.  Serialization is deterministic:
the same computation always produces byte-identical JSON and text.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PROVENANCES = ("computed", "stated", "external-assumption")


@dataclass(frozen=True)
class Input:
    name: str
    value: object  # int, str, bool, None, or (nested) lists of those
    provenance: str = "computed"

    def __post_init__(self) -> None:
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")


@dataclass(frozen=True)
class Assertion:
    id: str
    description: str
    relation: str
    result: str  # "pass" | "fail" | "assumed"
    tag: str  # "check" | "external-assumption"
    inputs: tuple[Input, ...] = ()


@dataclass(frozen=True)
class LemmaReport:
    lemma: str
    title: str
    assertions: tuple[Assertion, ...]

    @property
    def verdict(self) -> str:
        checks = [a for a in self.assertions if a.tag == "check"]
        return "pass" if all(a.result == "pass" for a in checks) else "fail"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json_obj(self) -> dict:
        return {
            "lemma": self.lemma,
            "title": self.title,
            "assertions": [
                {
                    "id": a.id,
                    "description": a.description,
                    "inputs": [
                        {"name": i.name, "value": i.value, "provenance": i.provenance}
                        for i in a.inputs
                    ],
                    "relation": a.relation,
                    "result": a.result,
                    "tag": a.tag,
                }
                for a in self.assertions
            ],
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [f"[{self.lemma}] {self.title}"]
        for a in self.assertions:
            mark = {"pass": "PASS", "fail": "FAIL", "assumed": "ASSM"}[a.result]
            lines.append(f"  {mark}  {a.id}: {a.description}")
            lines.append(f"        relation: {a.relation}")
            for i in a.inputs:
                lines.append(f"        {i.name} = {_fmt(i.value)}  [{i.provenance}]")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


def _fmt(value: object) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    return str(value)


class ReportBuilder:
    """Accumulates assertions in order and freezes them into a report."""

    def __init__(self, lemma: str, title: str):
        self.lemma = lemma
        self.title = title
        self._assertions: list[Assertion] = []
        self._counter = 0

    def _next_id(self) -> str:
        self._counter += 1
        return f"{self.lemma}.{self._counter}"

    def check(
        self,
        description: str,
        relation: str,
        ok: bool,
        inputs: list[Input] | None = None,
    ) -> bool:
        self._assertions.append(
            Assertion(
                id=self._next_id(),
                description=description,
                relation=relation,
                result="pass" if ok else "fail",
                tag="check",
                inputs=tuple(inputs or ()),
            )
        )
        return ok

    def assume(
        self, description: str, relation: str = "", inputs: list[Input] | None = None
    ) -> None:
        self._assertions.append(
            Assertion(
                id=self._next_id(),
                description=description,
                relation=relation,
                result="assumed",
                tag="external-assumption",
                inputs=tuple(inputs or ()),
            )
        )

    def build(self) -> LemmaReport:
        return LemmaReport(self.lemma, self.title, tuple(self._assertions))
