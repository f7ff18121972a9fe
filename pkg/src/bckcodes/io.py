"""Plain-text file formats and JSON reports used by the CLI.

Algebra files: first data line is the order n, followed by n rows of n
integers.  Code files: one codeword of 0/1 characters per line.
Function files: one "label value" pair per line.  In all three, blank
lines and lines starting with '#' are skipped; duplicate codewords are
rejected, not deduplicated.  JSON reports carry a report_version tag
and parse back with `parse_report`.
"""

from __future__ import annotations

import json
from typing import Iterator

from .algebra import CayleyAlgebra
from .codes import BlockCode, Codeword
from .encode import BckFunction
from .errors import ParseError

REPORT_VERSION = 1


def _data_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_algebra(text: str) -> CayleyAlgebra:
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError("no data lines in algebra input")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"expected the order, got {head!r}", lineno) from None
    if n < 1:
        raise ParseError("order must be positive", lineno)
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} table rows, found {len(lines) - 1}")
    rows = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != n:
            raise ParseError(f"expected {n} entries, found {len(parts)}", lineno)
        try:
            row = tuple(int(p) for p in parts)
        except ValueError:
            raise ParseError("table entries must be integers", lineno) from None
        if any(not 0 <= v < n for v in row):
            raise ParseError(f"table entry outside 0..{n - 1}", lineno)
        rows.append(row)
    return CayleyAlgebra(tuple(rows))


def render_algebra(alg: CayleyAlgebra, header: str | None = None) -> str:
    out = []
    if header:
        out.append(f"# {header}")
    if alg.names is not None:
        out.append("# elements: " + " ".join(alg.names))
    out.append(str(alg.order))
    width = len(str(alg.order - 1))
    for row in alg.table:
        out.append(" ".join(str(v).rjust(width) for v in row))
    return "\n".join(out) + "\n"


def parse_code(text: str) -> BlockCode:
    words = []
    seen = set()
    length = None
    for lineno, line in _data_lines(text):
        if any(c not in "01" for c in line):
            raise ParseError(f"codeword may only contain 0 and 1: {line!r}", lineno)
        if length is None:
            length = len(line)
        elif len(line) != length:
            raise ParseError(
                f"codeword length {len(line)} differs from first length {length}",
                lineno,
            )
        if line in seen:
            raise ParseError(f"duplicate codeword {line}", lineno)
        seen.add(line)
        words.append(Codeword.from_string(line))
    if not words:
        raise ParseError("no codewords in code input")
    return BlockCode(tuple(words))


def render_code(code: BlockCode, header: str | None = None) -> str:
    out = []
    if header:
        out.append(f"# {header}")
    out.extend(str(w) for w in code.words)
    return "\n".join(out) + "\n"


def parse_function(text: str, alg: CayleyAlgebra) -> BckFunction:
    labels = []
    values = []
    for lineno, line in _data_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected 'label value'", lineno)
        label, value = parts
        try:
            v = int(value)
        except ValueError:
            raise ParseError(f"value must be an integer, got {value!r}", lineno) from None
        if not 0 <= v < alg.order:
            raise ParseError(f"value {v} outside 0..{alg.order - 1}", lineno)
        if label in labels:
            raise ParseError(f"duplicate label {label!r}", lineno)
        labels.append(label)
        values.append(v)
    if not labels:
        raise ParseError("no entries in function input")
    return BckFunction(tuple(labels), alg, tuple(values))


def render_report(kind: str, payload: dict) -> str:
    body = {"report_version": REPORT_VERSION, "kind": kind}
    body.update(payload)
    return json.dumps(body, indent=2) + "\n"


def parse_report(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON report: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("report must be a JSON object")
    if data.get("report_version") != REPORT_VERSION:
        raise ParseError(f"unsupported report_version {data.get('report_version')!r}")
    return data
