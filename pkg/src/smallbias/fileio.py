"""Plain-text matrix and bias-space files.

Matrix file::

    matrix <rows> <cols> field=2^<s>
    <row>            # s == 1: '0'/'1' characters, no separators
    <row>            # s > 1: lowercase hex element indices separated by spaces

Bias-space file::

    biasspace <k> <size>
    <bitstring> <multiplicity>

Every line ends with a single linefeed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .matrices import BiasSpace, BinaryMatrix

_MATRIX_HEADER = re.compile(r"matrix (\d+) (\d+) field=2\^(\d+)")
_SPACE_HEADER = re.compile(r"biasspace (\d+) (\d+)")


class FormatError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FieldMatrix:
    s: int
    entries: np.ndarray

    def as_binary(self) -> BinaryMatrix:
        if self.s != 1:
            raise FormatError(f"expected a binary matrix, got field 2^{self.s}")
        return BinaryMatrix(self.entries.astype(np.uint8))


def format_matrix(entries, s: int) -> str:
    entries = np.asarray(entries)
    rows, cols = entries.shape
    lines = [f"matrix {rows} {cols} field=2^{s}"]
    for row in entries.tolist():
        if s == 1:
            lines.append("".join("1" if v else "0" for v in row))
        else:
            lines.append(" ".join(format(v, "x") for v in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> FieldMatrix:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty matrix file")
    m = _MATRIX_HEADER.fullmatch(lines[0])
    if not m:
        raise FormatError(f"bad matrix header: {lines[0]!r}")
    rows, cols, s = map(int, m.groups())
    body = lines[1:]
    if len(body) != rows:
        raise FormatError(f"header promises {rows} rows, found {len(body)}")
    data = np.zeros((rows, cols), dtype=np.int64)
    for r, line in enumerate(body):
        if s == 1:
            if len(line) != cols or set(line) - {"0", "1"}:
                raise FormatError(f"row {r}: expected {cols} binary digits")
            vals = [c == "1" for c in line]
        else:
            parts = line.split(" ") if line else []
            if len(parts) != cols:
                raise FormatError(f"row {r}: expected {cols} entries, found {len(parts)}")
            try:
                vals = [int(p, 16) for p in parts]
            except ValueError as exc:
                raise FormatError(f"row {r}: {exc}") from None
            if any(v >= 1 << s for v in vals):
                raise FormatError(f"row {r}: entry outside GF(2^{s})")
        data[r] = vals
    return FieldMatrix(s, data)


def format_bias_space(space: BiasSpace) -> str:
    lines = [f"biasspace {space.k} {space.size}"]
    lines += ["".join(map(str, v)) + f" {m}" for v, m in space.entries]
    return "\n".join(lines) + "\n"


def parse_bias_space(text: str) -> BiasSpace:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    m = _SPACE_HEADER.fullmatch(lines[0]) if lines else None
    if not m:
        raise FormatError("bad bias-space header")
    k, size = map(int, m.groups())
    entries = []
    for i, line in enumerate(lines[1:], start=1):
        parts = line.split(" ")
        if len(parts) != 2 or len(parts[0]) != k or set(parts[0]) - {"0", "1"}:
            raise FormatError(f"line {i}: expected '<{k} bits> <multiplicity>'")
        entries.append((tuple(int(c) for c in parts[0]), int(parts[1])))
    space = BiasSpace(k, tuple(entries))
    if space.size != size:
        raise FormatError(f"header size {size} != total multiplicity {space.size}")
    return space


def write_text(path, text: str) -> None:
    Path(path).write_text(text, encoding="ascii", newline="\n")


def read_any(path) -> FieldMatrix | BiasSpace:
    """Load a matrix or bias-space file, dispatching on the header."""
    text = Path(path).read_text(encoding="ascii")
    if text.startswith("matrix "):
        return parse_matrix(text)
    if text.startswith("biasspace "):
        return parse_bias_space(text)
    raise FormatError(f"{path}: unrecognised file header")
