"""JSON artifacts: code specs with provenance, ring-form specs, codewords."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .constructions.abc import AbcParams
from .finite_field import FieldElement, FieldSpec, RingPoly
from .rs_code import RSCodeSpec


class ArtifactError(ValueError):
    """Unreadable or malformed artifact file."""


def provenance(construction: str, params: dict, seed: int) -> dict:
    return {"construction": construction, "params": params, "seed": seed}


def code_document(code: RSCodeSpec, prov: dict, **extra: Any) -> dict:
    doc = {"form": "field", **code.to_json(), "provenance": prov}
    doc.update(extra)
    return doc


def ring_document(params: AbcParams, alphas: list[RingPoly], prov: dict) -> dict:
    return {
        "form": "ring",
        **params.to_json(),
        "alphas": [list(a.coeffs) for a in alphas],
        "provenance": prov,
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, separators=(",", ":")) + "\n"


def write_document(doc: dict, path: str | Path | None) -> str:
    text = dumps(doc)
    if path is not None:
        Path(path).write_text(text)
    return text


def _read_json(path: str | Path):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ArtifactError(f"cannot read {path}: {exc}") from exc


def load_spec(path: str | Path):
    """Return ("field", RSCodeSpec) or ("ring", (AbcParams, alphas))."""
    doc = _read_json(path)
    if not isinstance(doc, dict):
        raise ArtifactError(f"{path}: expected a JSON object")
    try:
        if doc.get("form", "field") == "ring":
            params = AbcParams.from_json(doc)
            alphas = [RingPoly(params.p, c) for c in doc["alphas"]]
            if len(alphas) != params.n:
                raise ArtifactError(f"{path}: expected {params.n} evaluation points")
            return "ring", (params, alphas)
        return "field", RSCodeSpec.from_json(doc)
    except ArtifactError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ArtifactError(f"{path}: malformed spec: {exc}") from exc


def load_word(path: str | Path, field: FieldSpec) -> list[FieldElement]:
    """A received word or codeword: JSON array of coefficient vectors (or plain ints when d = 1)."""
    doc = _read_json(path)
    if not isinstance(doc, list):
        raise ArtifactError(f"{path}: expected a JSON array")
    try:
        return [field(e if isinstance(e, list) else [e]) for e in doc]
    except (TypeError, ValueError) as exc:
        raise ArtifactError(f"{path}: malformed word: {exc}") from exc
