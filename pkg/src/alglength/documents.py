"""JSON documents: ``*.alg.json`` algebras and ``*.seq.json`` sequences."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .algebra import Algebra, AlgebraError, require_unital
from .linalg import GF, QQ, Field, basis_vector, vector
from .protoseq import CharSeq, ProtoWitness, check_witness


class DocumentError(ValueError):
    """A document could not be parsed into a valid object."""


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _scalar_out(field: Field, x):
    if field.is_finite:
        return int(x)
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _scalar_in(field: Field, x):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise DocumentError(f"bad scalar {x!r}")
    try:
        return field(Fraction(x) if isinstance(x, str) else x)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"bad scalar {x!r}: {exc}") from None


def field_to_json(field: Field) -> dict:
    if field.is_finite:
        return {"kind": field.kind, "p": field.p}
    return {"kind": field.kind}


def field_from_json(obj) -> Field:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise DocumentError("field must be an object with a 'kind'")
    try:
        if obj["kind"] == "rational":
            return QQ
        return GF(int(obj.get("p", 0)))
    except (ValueError, TypeError) as exc:
        raise DocumentError(str(exc)) from None


def algebra_to_json(A: Algebra) -> dict:
    return {
        "dim": A.dim,
        "field": field_to_json(A.field),
        "table": [[[_scalar_out(A.field, c) for c in e] for e in row] for row in A.table],
        "unit_index": A.unit_index,
    }


def algebra_from_json(obj) -> Algebra:
    if not isinstance(obj, dict):
        raise DocumentError("algebra document must be an object")
    try:
        field = field_from_json(obj["field"])
        dim = int(obj["dim"])
        table = obj["table"]
        unit_index = int(obj.get("unit_index", 0))
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"malformed algebra document: {exc}") from None
    if not isinstance(table, list) or len(table) != dim:
        raise DocumentError(f"table must have {dim} rows")
    rows = []
    for row in table:
        if not isinstance(row, list) or len(row) != dim:
            raise DocumentError(f"table rows must have {dim} entries")
        rows.append(tuple(tuple(_scalar_in(field, c) for c in _as_list(e, dim)) for e in row))
    try:
        return require_unital(Algebra(field, dim, tuple(rows), unit_index))
    except AlgebraError as exc:
        raise DocumentError(str(exc)) from None


def _as_list(e, dim: int) -> list:
    if not isinstance(e, list) or len(e) != dim:
        raise DocumentError(f"table entries must be lists of length {dim}")
    return e


def sequence_to_json(m, witness: ProtoWitness | None = None) -> dict:
    doc = {"m": [int(v) for v in m]}
    if witness is not None:
        doc["witness"] = [list(t) for t in witness.table()]
    return doc


def sequence_from_json(obj) -> tuple[CharSeq, ProtoWitness | None]:
    if isinstance(obj, list):
        obj = {"m": obj}
    if not isinstance(obj, dict) or not isinstance(obj.get("m"), list):
        raise DocumentError("sequence document needs an 'm' array")
    try:
        m = CharSeq(int(v) for v in obj["m"])
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"bad sequence entry: {exc}") from None
    if "witness" not in obj:
        return m, None
    try:
        rows = [tuple(int(x) for x in t) for t in obj["witness"]]
        if any(len(t) != 3 for t in rows):
            raise ValueError("witness rows must be [k, t1, t2]")
        w = ProtoWitness.from_table(m.k1 + 1, rows)
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"bad witness: {exc}") from None
    problems = check_witness(m, w)
    if problems:
        raise DocumentError("witness does not validate: " + "; ".join(problems))
    return m, w


def generators_from_json(obj, A: Algebra) -> list:
    if isinstance(obj, dict):
        obj = obj.get("generators")
    if not isinstance(obj, list) or not obj:
        raise DocumentError("generators must be a nonempty list of vectors")
    gens = []
    for g in obj:
        gens.append(vector(A.field, [_scalar_in(A.field, c) for c in _as_list(g, A.dim)]))
    return gens


def parse_generators(text: str, A: Algebra) -> list:
    """Parse ``"e1,e2+e3"`` style basis expressions."""
    gens = []
    for part in text.split(","):
        v = vector(A.field, [0] * A.dim)
        for term in part.split("+"):
            term = term.strip()
            if not term.startswith("e") or not term[1:].isdigit():
                raise DocumentError(f"cannot parse generator term {term!r}")
            i = int(term[1:])
            if not 0 <= i < A.dim:
                raise DocumentError(f"basis index {i} out of range")
            v = tuple(A.field(a + b) for a, b in zip(v, basis_vector(A.field, A.dim, i)))
        gens.append(v)
    return gens


def load_json(path: str | Path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path} is not valid JSON: {exc}") from None


def load_algebra(path: str | Path) -> Algebra:
    return algebra_from_json(load_json(path))


def load_sequence(source: str) -> tuple[CharSeq, ProtoWitness | None]:
    """From a ``*.seq.json`` path, a JSON array, or ``"0,1,2,4"``."""
    if Path(source).is_file():
        return sequence_from_json(load_json(source))
    text = source.strip()
    try:
        if text.startswith("["):
            return sequence_from_json(json.loads(text))
        return sequence_from_json([int(x) for x in text.split(",")])
    except (ValueError, json.JSONDecodeError) as exc:
        raise DocumentError(f"cannot parse sequence {source!r}: {exc}") from None


def load_generators(source: str, A: Algebra) -> list:
    if Path(source).is_file():
        return generators_from_json(load_json(source), A)
    return parse_generators(source, A)
