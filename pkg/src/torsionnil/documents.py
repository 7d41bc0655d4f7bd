"""JSON documents for matrices, polynomials and reports.

Scalars are always JSON strings (``"3"``, ``"-1/2"``) so nothing can be read
as a float. Field descriptors are ``"rationals"`` or ``{"prime": p}``.
Polynomials are coefficient lists in ascending degree.

Reports are written canonically (sorted keys, 2-space indent, flat arrays on
one line, trailing newline), which makes serialize -> parse -> serialize
byte-identical.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import ParseError, TorsionNilError
from .field import Field, field_from_descriptor
from .linalg import Matrix, Polynomial


def _encode(obj: Any, level: int) -> str:
    pad = "  " * (level + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k, ensure_ascii=False)}: {_encode(obj[k], level + 1)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + "  " * level + "}"
    if isinstance(obj, list):
        if all(not isinstance(x, (dict, list)) for x in obj):
            # flat arrays (matrix rows, coefficient lists) stay on one line
            return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))
        items = [pad + _encode(x, level + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + "  " * level + "]"
    return json.dumps(obj, ensure_ascii=False)


def dumps(doc: Any) -> str:
    return _encode(doc, 0) + "\n"


def dumps_line(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def loads(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def load_path(path: str) -> Any:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), path)


def parse_field(doc: dict, where: str = "field") -> Field:
    if "field" not in doc:
        raise ParseError(f"missing '{where}' descriptor")
    return field_from_descriptor(doc["field"])


def _scalar(field: Field, value: Any, where: str):
    if not isinstance(value, str):
        raise ParseError(f"{where}: scalars must be strings, got {json.dumps(value)}")
    try:
        return field.parse(value)
    except TorsionNilError as exc:
        raise type(exc)(f"{where}: {exc}") from None


def parse_matrix(field: Field, rows: Any, name: str = "matrix") -> Matrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError(f"'{name}' must be a non-empty array of arrays")
    width = len(rows[0])
    out = []
    for i, row in enumerate(rows, 1):
        if len(row) != width:
            raise ParseError(f"{name} row {i}: has {len(row)} entries, row 1 has {width}")
        out.append([_scalar(field, x, f"{name} row {i}, column {j}") for j, x in enumerate(row, 1)])
    if width == 0:
        raise ParseError(f"'{name}' has empty rows")
    return Matrix._raw(field, (tuple(r) for r in out))


def parse_polynomial(field: Field, coeffs: Any, name: str = "polynomial") -> Polynomial:
    if not isinstance(coeffs, list) or not coeffs:
        raise ParseError(f"'{name}' must be a non-empty array of coefficient strings")
    return Polynomial(field, [_scalar(field, c, f"{name} coefficient {k}") for k, c in enumerate(coeffs)])


def matrix_document(m: Matrix, **extra) -> dict:
    doc = {"field": m.field.descriptor(), "matrix": m.to_strings()}
    doc.update(extra)
    return doc


def polynomial_document(p: Polynomial, **extra) -> dict:
    doc = {"field": p.field.descriptor(), "polynomial": p.to_strings()}
    doc.update(extra)
    return doc
