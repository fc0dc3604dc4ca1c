"""Problem document serialization.

Problems travel as UTF-8 JSON documents with named fields::

    {
      "schema_version": 1,
      "title": "...",
      "scale": {"AI": [1.0, 0.0], ...},
      "criteria": [{"id": "A", "name": "...", "orientation": "cost"}, ...],
      "alternatives": [{"id": "R1", "name": "..."}, ...],
      "experts": [{"id": "U1", "grade": "AI"}, ...],
      "evaluations": [[[...terms...], ...], ...],        # expert-major
      "criterion_importance": [[...terms...], ...]       # per expert
    }

``load_problem(save_problem(p))`` is the identity on the data model, term
labels and full-precision scale values included.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import DomainError, EmptyInputError, ParseError, SchemaError, ValidationError
from .ffn import FFN, LinguisticScale
from .problem import Alternative, Criterion, DecisionProblem, Expert

SCHEMA_VERSION = 1


def problem_to_document(problem: DecisionProblem) -> dict[str, Any]:
    """Plain-data form of a problem, ready for JSON encoding."""
    return {
        "schema_version": SCHEMA_VERSION,
        "title": problem.title,
        "scale": {term: [f.mu, f.nu] for term, f in problem.scale.items()},
        "criteria": [
            {"id": c.id, "name": c.name, "orientation": c.orientation} for c in problem.criteria
        ],
        "alternatives": [{"id": a.id, "name": a.name} for a in problem.alternatives],
        "experts": [{"id": e.id, "grade": e.grade} for e in problem.experts],
        "evaluations": [
            [list(row) for row in block] for block in problem.evaluations
        ],
        "criterion_importance": [list(row) for row in problem.criterion_importance],
    }


def save_problem(problem: DecisionProblem) -> str:
    """Serialize to the canonical document text (2-space indent, key order fixed)."""
    return json.dumps(problem_to_document(problem), indent=2, ensure_ascii=False) + "\n"


def _require(doc: dict, key: str, kind: type, path: str = "") -> Any:
    where = f"{path}.{key}" if path else key
    if key not in doc:
        raise SchemaError("missing field", where)
    value = doc[key]
    if not isinstance(value, kind):
        raise SchemaError(f"expected {kind.__name__}, got {type(value).__name__}", where)
    return value


def _string_list_of_dicts(doc: dict, key: str, fields: tuple[str, ...]) -> list[dict]:
    raw = _require(doc, key, list)
    out = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict):
            raise SchemaError(f"expected object, got {type(entry).__name__}", f"{key}[{i}]")
        for f in fields:
            if f not in entry:
                raise SchemaError("missing field", f"{key}[{i}].{f}")
            if not isinstance(entry[f], str):
                raise SchemaError(
                    f"expected string, got {type(entry[f]).__name__}", f"{key}[{i}].{f}"
                )
        out.append(entry)
    return out


def _term_grid(raw: Any, path: str, depth: int) -> Any:
    if depth == 0:
        if not isinstance(raw, str):
            raise SchemaError(f"expected term label, got {type(raw).__name__}", path)
        return raw
    if not isinstance(raw, list):
        raise SchemaError(f"expected array, got {type(raw).__name__}", path)
    return tuple(_term_grid(v, f"{path}[{i}]", depth - 1) for i, v in enumerate(raw))


def document_to_problem(doc: dict[str, Any]) -> DecisionProblem:
    """Validate a parsed document and build the problem it describes."""
    if not isinstance(doc, dict):
        raise SchemaError(f"document root must be an object, got {type(doc).__name__}")
    version = _require(doc, "schema_version", int)
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {version} (supported: {SCHEMA_VERSION})",
                          "schema_version")
    title = _require(doc, "title", str)

    raw_scale = _require(doc, "scale", dict)
    entries = []
    for term, pair in raw_scale.items():
        where = f"scale.{term}"
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise SchemaError("expected [mu, nu] pair of numbers", where)
        try:
            entries.append((term, FFN(float(pair[0]), float(pair[1]))))
        except DomainError as exc:
            raise ValidationError(str(exc), where) from exc
    try:
        scale = LinguisticScale(entries)
    except (DomainError, EmptyInputError) as exc:
        raise ValidationError(str(exc), "scale") from exc

    criteria = tuple(
        Criterion(e["id"], e["name"], e["orientation"])
        for e in _string_list_of_dicts(doc, "criteria", ("id", "name", "orientation"))
    )
    alternatives = tuple(
        Alternative(e["id"], e["name"])
        for e in _string_list_of_dicts(doc, "alternatives", ("id", "name"))
    )
    experts = tuple(
        Expert(e["id"], e["grade"])
        for e in _string_list_of_dicts(doc, "experts", ("id", "grade"))
    )
    evaluations = _term_grid(_require(doc, "evaluations", list), "evaluations", 3)
    importance = _term_grid(_require(doc, "criterion_importance", list), "criterion_importance", 2)

    return DecisionProblem(
        title=title,
        criteria=criteria,
        alternatives=alternatives,
        experts=experts,
        evaluations=evaluations,
        criterion_importance=importance,
        scale=scale,
    )


def load_problem(text: str | bytes) -> DecisionProblem:
    """Parse and validate a problem document."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"document is not valid UTF-8: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"document is not valid JSON: {exc}") from exc
    return document_to_problem(doc)
