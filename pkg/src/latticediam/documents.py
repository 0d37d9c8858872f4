"""JSON document format for polygons, point sets and construction requests.

One schema for all inputs and outputs: {"kind", "dimension", coordinate rows,
optional "name"}. Coordinates travel as strings ("5", "17/3") so that every
value survives a round trip exactly; raw JSON integers are accepted on input
for convenience but never emitted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import Polygon2, PointSet
from .errors import ParseError, ValidationError

__all__ = [
    "Document",
    "encode_number",
    "decode_number",
    "document_for_polygon",
    "document_for_point_set",
    "parse_document",
    "render_document",
    "load_document",
    "polygon_from_document",
    "point_set_from_document",
]

KINDS = ("polygon", "point_set", "construction_request")


def encode_number(v: int | Fraction) -> str:
    if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
        raise ValidationError(f"cannot encode {v!r} exactly")
    return str(v)


def decode_number(raw: object) -> Fraction:
    """Exact value of a document coordinate ("5", "17/3", or a JSON int)."""
    if isinstance(raw, bool):
        raise ParseError(f"expected a number, got {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad number {raw!r}: {exc}") from None
    raise ParseError(f"expected a string-encoded number, got {type(raw).__name__}")


@dataclass(frozen=True)
class Document:
    """A parsed input file: coordinate rows plus enough context to rebuild it."""

    kind: str
    dimension: int
    rows: tuple[tuple[Fraction, ...], ...] = ()
    name: str = ""
    construction: str = ""
    params: tuple[tuple[str, str], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ParseError(f"unknown document kind {self.kind!r}")
        if not isinstance(self.dimension, int) or self.dimension < 1:
            raise ParseError("dimension must be a positive integer")
        for row in self.rows:
            if len(row) != self.dimension:
                raise ParseError(
                    f"row {row!r} does not have {self.dimension} coordinates"
                )


def document_for_polygon(
    vertices: Polygon2 | Sequence[Sequence[int | Fraction]], name: str = ""
) -> Document:
    verts = vertices.vertices if isinstance(vertices, Polygon2) else vertices
    rows = tuple(tuple(Fraction(c) for c in v) for v in verts)
    return Document(kind="polygon", dimension=2, rows=rows, name=name)


def document_for_point_set(points: PointSet, name: str = "") -> Document:
    rows = tuple(tuple(Fraction(c) for c in p) for p in points)
    return Document(kind="point_set", dimension=points.dim, rows=rows, name=name)


_ROW_KEY = {"polygon": "vertices", "point_set": "points"}


def render_document(doc: Document) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    payload: dict[str, object] = {"kind": doc.kind, "dimension": doc.dimension}
    if doc.kind == "construction_request":
        payload["construction"] = doc.construction
        payload["params"] = {k: v for k, v in doc.params}
    else:
        payload[_ROW_KEY[doc.kind]] = [
            [encode_number(c) for c in row] for row in doc.rows
        ]
    if doc.name:
        payload["name"] = doc.name
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def parse_document(text: str) -> Document:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(payload, dict):
        raise ParseError("document must be a JSON object")
    kind = payload.get("kind")
    if kind not in KINDS:
        raise ParseError(f"unknown document kind {kind!r}")
    dimension = payload.get("dimension")
    if isinstance(dimension, bool) or not isinstance(dimension, int):
        raise ParseError("dimension must be an integer")
    name = payload.get("name", "")
    if not isinstance(name, str):
        raise ParseError("name must be a string")
    if kind == "construction_request":
        construction = payload.get("construction")
        params = payload.get("params", {})
        if not isinstance(construction, str) or not construction:
            raise ParseError("construction_request needs a construction name")
        if not isinstance(params, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in params.items()
        ):
            raise ParseError("params must map strings to string-encoded values")
        return Document(
            kind=kind,
            dimension=dimension,
            name=name,
            construction=construction,
            params=tuple(sorted(params.items())),
        )
    key = _ROW_KEY[kind]
    raw_rows = payload.get(key)
    if not isinstance(raw_rows, list) or not raw_rows:
        raise ParseError(f"{kind} document needs a nonempty {key!r} array")
    rows = []
    for raw in raw_rows:
        if not isinstance(raw, list):
            raise ParseError(f"each row of {key!r} must be an array")
        rows.append(tuple(decode_number(c) for c in raw))
    return Document(kind=kind, dimension=dimension, rows=tuple(rows), name=name)


def load_document(path: str) -> Document:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_document(text)


def _integral_rows(doc: Document) -> list[tuple[int, ...]]:
    out = []
    for row in doc.rows:
        if any(c.denominator != 1 for c in row):
            raise ValidationError(f"row {tuple(map(str, row))} is not integral")
        out.append(tuple(int(c) for c in row))
    return out


def polygon_from_document(doc: Document) -> Polygon2:
    if doc.kind != "polygon":
        raise ValidationError(f"expected a polygon document, got {doc.kind!r}")
    if doc.dimension != 2:
        raise ValidationError("polygon documents must be 2-dimensional")
    return Polygon2(tuple(_integral_rows(doc)))


def point_set_from_document(doc: Document) -> PointSet:
    if doc.kind != "point_set":
        raise ValidationError(f"expected a point_set document, got {doc.kind!r}")
    return PointSet(_integral_rows(doc))
