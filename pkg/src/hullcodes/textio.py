"""Text formats for fields, matrices and codes.

A code file is a header line followed by one generator row per line::

    # comments run to end of line
    field p=2 m=3 poly=1 1 0 1
    1 0 w^3 w
    0 1 w   1

``poly`` lists coefficients constant term first.  ``primitive=<elem>`` is
optional; the element is read in the default ``w = x`` notation.
"""

from __future__ import annotations

import re
from pathlib import Path

from .codes import LinearCode, make_code
from .errors import FieldError, ParseError
from .gf import Field, parse_code, render_code
from .matgf import MatGF

_KEY = re.compile(r"^([a-z]+)=(.*)$")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_field_header(line: str, lineno: int | None = None) -> Field:
    tokens = line.split()
    if not tokens or tokens[0] != "field":
        raise ParseError("expected a 'field p=.. m=.. poly=..' header", lineno)
    values: dict[str, list[str]] = {}
    key = None
    for tok in tokens[1:]:
        m = _KEY.match(tok)
        if m:
            key = m.group(1)
            if key in values:
                raise ParseError(f"duplicate key {key!r}", lineno)
            values[key] = [m.group(2)] if m.group(2) else []
        elif key == "poly":
            values[key].append(tok)
        else:
            raise ParseError(f"unexpected token {tok!r} in field header", lineno)
    unknown = set(values) - {"p", "m", "poly", "primitive"}
    if unknown:
        raise ParseError(f"unknown header keys {sorted(unknown)}", lineno)
    try:
        p = int(values["p"][0])
        m = int(values["m"][0]) if "m" in values else 1
        poly = [int(c) for c in values["poly"]] if "poly" in values else None
    except (KeyError, IndexError, ValueError) as exc:
        raise ParseError(f"bad field header: {exc}", lineno) from None
    try:
        field = Field(p, m, poly)
        if "primitive" in values:
            (text,) = values["primitive"]
            field = Field(p, m, poly, primitive=parse_code(field, text))
    except FieldError as exc:
        raise ParseError(str(exc), lineno) from None
    return field


def render_field_header(field: Field) -> str:
    head = f"field p={field.p} m={field.m} poly={' '.join(map(str, field.poly))}"
    base = Field(field.p, field.m, field.poly)
    if field.primitive != base.primitive:
        head += f" primitive={render_code(base, field.primitive)}"
    return head


def parse_rows(field: Field, lines: list[tuple[int, str]]) -> list[list[int]]:
    rows: list[list[int]] = []
    for lineno, text in lines:
        try:
            row = [parse_code(field, tok) for tok in text.split()]
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"row has {len(row)} entries, expected {len(rows[0])}", lineno)
        rows.append(row)
    return rows


def parse_matrix_text(text: str) -> tuple[Field, MatGF]:
    lines = [(i, _strip(raw)) for i, raw in enumerate(text.splitlines(), start=1)]
    lines = [(i, s) for i, s in lines if s]
    if not lines:
        raise ParseError("empty input")
    field = parse_field_header(lines[0][1], lines[0][0])
    rows = parse_rows(field, lines[1:])
    if not rows:
        raise ParseError("no generator rows", lines[0][0])
    return field, MatGF.from_rows(field, rows)


def parse_code_text(text: str) -> LinearCode:
    field, G = parse_matrix_text(text)
    return make_code(field, G)


def read_code(path: str | Path) -> LinearCode:
    return parse_code_text(Path(path).read_text())


def render_matrix(M: MatGF, indent: str = "") -> str:
    cells = [[render_code(M.field, int(v)) for v in row] for row in M.data]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(indent + " ".join(c.ljust(width) for c in row).rstrip() for row in cells)


def render_code_text(C: LinearCode) -> str:
    return render_field_header(C.field) + "\n" + render_matrix(C.G) + "\n"


def write_code(C: LinearCode, path: str | Path) -> None:
    Path(path).write_text(render_code_text(C))


def parse_vector(field: Field, text: str) -> list[int]:
    return [parse_code(field, tok) for tok in text.replace(",", " ").split()]
