"""Hand-writable text format for named complex matrices.

A file holds entries ``name = [[1+2i, 3i], [0, -1]]`` with complex literals
``a``, ``a+bi``, ``a-bi``, ``bi``, ``i``; ``#`` starts a comment; whitespace
(including newlines inside the brackets) is insignificant.  Rendering uses
repr floats so that parse(render(m)) reproduces every finite matrix exactly.
"""

from __future__ import annotations

import re

import numpy as np

_ENTRY = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(\[\[.*?\]\])", re.DOTALL)
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class MatrixFormatError(ValueError):
    """Raised when a matrix file cannot be parsed."""


def parse_scalar(text: str) -> complex:
    """Parse one complex literal of the i-suffix form."""
    cleaned = re.sub(r"\s+", "", text)
    if not cleaned:
        raise MatrixFormatError("empty scalar")
    if re.search(r"[^0-9eEij+\-.]", cleaned):
        raise MatrixFormatError(f"bad characters in scalar {text!r}")
    try:
        value = complex(cleaned.replace("i", "j"))
    except ValueError as exc:
        raise MatrixFormatError(f"cannot parse scalar {text!r}") from exc
    if not (np.isfinite(value.real) and np.isfinite(value.imag)):
        raise MatrixFormatError(f"non-finite scalar {text!r}")
    return value


def _strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def _parse_rows(block: str) -> np.ndarray:
    inner = block.strip()
    if not (inner.startswith("[[") and inner.endswith("]]")):
        raise MatrixFormatError(f"matrix must look like [[...]]: {block!r}")
    body = inner[1:-1].strip()  # strip the outer brackets, keep row brackets
    rows_text = re.findall(r"\[([^\[\]]*)\]", body)
    if not rows_text:
        raise MatrixFormatError(f"no rows in {block!r}")
    rows = []
    for row_text in rows_text:
        cells = [c for c in row_text.split(",")]
        if any(not c.strip() for c in cells):
            raise MatrixFormatError(f"empty cell in row {row_text!r}")
        rows.append([parse_scalar(c) for c in cells])
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise MatrixFormatError("ragged rows")
    if len(rows) != width:
        raise MatrixFormatError(
            f"matrix must be square, got {len(rows)}x{width}")
    return np.array(rows, dtype=np.complex128)


def parse_text(text: str) -> dict[str, np.ndarray]:
    """Parse all named matrices; insertion order preserved."""
    cleaned = _strip_comments(text)
    out: dict[str, np.ndarray] = {}
    consumed = []
    for m in _ENTRY.finditer(cleaned):
        name = m.group(1)
        if name in out:
            raise MatrixFormatError(f"duplicate entry {name!r}")
        out[name] = _parse_rows(m.group(2))
        consumed.append((m.start(), m.end()))
    remainder = cleaned
    for start, end in reversed(consumed):
        remainder = remainder[:start] + remainder[end:]
    if remainder.strip():
        raise MatrixFormatError(
            f"unparsed content: {remainder.strip()[:40]!r}")
    if not out:
        raise MatrixFormatError("no matrix entries found")
    return out


def parse_file(path) -> dict[str, np.ndarray]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_text(fh.read())


def render_scalar(z: complex) -> str:
    z = complex(z)
    re_part, im_part = z.real, z.imag
    if im_part == 0.0:
        return repr(re_part)
    if re_part == 0.0:
        return f"{repr(im_part)}i"
    sign = "+" if im_part > 0 else "-"
    return f"{repr(re_part)}{sign}{repr(abs(im_part))}i"


def render_matrix(name: str, M) -> str:
    A = np.asarray(M, dtype=np.complex128)
    if not _NAME.fullmatch(name):
        raise MatrixFormatError(f"bad entry name {name!r}")
    rows = ", ".join(
        "[" + ", ".join(render_scalar(z) for z in row) + "]" for row in A)
    return f"{name} = [{rows}]"


def render(entries: dict[str, np.ndarray]) -> str:
    return "\n".join(render_matrix(k, v) for k, v in entries.items()) + "\n"
