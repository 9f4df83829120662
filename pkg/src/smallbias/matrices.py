"""Binary matrices and bias spaces (multisets of binary vectors)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class BinaryMatrix:
    """Dense 0/1 matrix stored row-major as ``uint8``."""

    bits: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.bits)
        if b.ndim != 2:
            raise ValueError("binary matrix must be 2-D")
        if b.size and not np.isin(b, (0, 1)).all():
            raise ValueError("entries must be 0 or 1")
        b = np.ascontiguousarray(b, dtype=np.uint8)
        b.setflags(write=False)
        object.__setattr__(self, "bits", b)

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> BinaryMatrix:
        rows = [list(r) for r in rows]
        if not rows:
            return cls(np.zeros((0, cols or 0), dtype=np.uint8))
        return cls(np.array(rows, dtype=np.uint8))

    @property
    def rows(self) -> int:
        return self.bits.shape[0]

    @property
    def cols(self) -> int:
        return self.bits.shape[1]

    def __eq__(self, other):
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.bits.shape == other.bits.shape and bool((self.bits == other.bits).all())

    def packed(self) -> np.ndarray:
        """Rows packed little-endian into ``uint64`` words, shape ``(rows, words)``."""
        words = max(1, -(-self.cols // 64))
        padded = np.zeros((self.rows, words * 64), dtype=np.uint8)
        padded[:, : self.cols] = self.bits
        return np.packbits(padded, axis=1, bitorder="little").view("<u8").reshape(self.rows, words)

    def rank(self) -> int:
        """Rank over GF(2)."""
        pivots: dict[int, int] = {}
        for row in self.bits:
            v = int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")
            while v:
                top = v.bit_length() - 1
                if top not in pivots:
                    pivots[top] = v
                    break
                v ^= pivots[top]
        return len(pivots)

    def codeword(self, mask: int) -> np.ndarray:
        """XOR of the rows selected by the bits of ``mask`` (bit i = row i)."""
        sel = [(mask >> i) & 1 for i in range(self.rows)]
        return (np.array(sel, dtype=np.int64) @ self.bits.astype(np.int64)) % 2


@dataclass(frozen=True)
class BiasSpace:
    """Multiset of vectors in GF(2)^k as ``(vector, multiplicity)`` pairs."""

    k: int
    entries: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self):
        for vec, mult in self.entries:
            if len(vec) != self.k:
                raise ValueError(f"vector {vec} does not have length {self.k}")
            if mult < 1:
                raise ValueError("multiplicities must be positive")
        if not self.entries:
            raise ValueError("bias space must be non-empty")

    @classmethod
    def from_vectors(cls, k: int, vectors) -> BiasSpace:
        """Group a sequence of vectors, keeping first-appearance order."""
        counts = Counter(tuple(int(b) for b in v) for v in vectors)
        return cls(k, tuple(counts.items()))

    @property
    def size(self) -> int:
        return sum(m for _, m in self.entries)

    def deduplicated(self) -> BiasSpace:
        return BiasSpace(self.k, tuple((v, 1) for v, _ in self.entries))

    def as_ints(self) -> tuple[np.ndarray, np.ndarray]:
        """Vectors as integers (bit i = coordinate i) and their multiplicities."""
        xs = np.array([sum(b << i for i, b in enumerate(v)) for v, _ in self.entries], dtype=np.int64)
        mults = np.array([m for _, m in self.entries], dtype=np.int64)
        return xs, mults

    def to_matrix(self) -> BinaryMatrix:
        """Generator matrix whose columns list the multiset (multiplicities expanded)."""
        cols = [v for v, m in self.entries for _ in range(m)]
        return BinaryMatrix(np.array(cols, dtype=np.uint8).T.reshape(self.k, len(cols)))


def columns_to_bias_space(m: BinaryMatrix) -> BiasSpace:
    if m.rows < 1:
        raise ValueError("matrix needs at least one row")
    return BiasSpace.from_vectors(m.rows, m.bits.T)


def example_3x12() -> BinaryMatrix:
    """Three-row generator whose 12 columns form a 1/3-biased multiset.

    As a plain set (duplicates dropped) the five distinct columns are only
    3/5-biased.
    """
    return BinaryMatrix.from_rows(
        [
            [0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0],
            [0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0],
            [1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0],
        ]
    )
