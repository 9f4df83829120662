"""Exact bias of multisets and balance of binary codes.

Two independent routes compute the same number:

* ``bias_exact_subsets`` works on the multiset and sums signed characters
  over every non-empty index set;
* ``bias_via_weights`` works on a generator matrix and scans the Hamming
  weight of every nonzero codeword.

Masks are integers with bit ``i`` standing for index/row ``i``. On ties the
smallest attaining mask is reported.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .gf_arith import FieldSpec, make_field
from .hermitian import OuterCode
from .matrices import BiasSpace, BinaryMatrix

SUBSET_LIMIT = 24
WEIGHT_LIMIT = 28
SEARCH_LIMIT = 2**30

# target number of machine words touched per vectorised block
_BLOCK_WORDS = 1 << 21


class InfeasibleSearch(ValueError):
    """Brute-force search space exceeds the configured limit."""


@dataclass(frozen=True)
class BiasReport:
    epsilon: Fraction
    witness: int
    method: str

    @property
    def epsilon_num(self) -> int:
        return self.epsilon.numerator

    @property
    def epsilon_den(self) -> int:
        return self.epsilon.denominator


@dataclass(frozen=True)
class BalanceCheck:
    passed: bool
    witness: int | None = None
    weight: int | None = None

    def __bool__(self):
        return self.passed


@dataclass(frozen=True)
class MinDistance:
    distance: int
    witness: tuple[int, ...]


def _block_bits(total_bits: int, width: int) -> int:
    per = max(1, _BLOCK_WORDS // max(1, width))
    return max(0, min(total_bits, per.bit_length() - 1))


def bias_exact_subsets(space: BiasSpace, limit: int = SUBSET_LIMIT) -> BiasReport:
    """Largest ``|sum_x mult(x) * (-1)^(x.S)| / |X|`` over non-empty index sets ``S``."""
    if space.k > limit:
        raise InfeasibleSearch(f"k={space.k} exceeds subset limit {limit}")
    if space.k == 0:
        raise ValueError("bias needs k >= 1")
    xs, mults = space.as_ints()
    best, best_mask = -1, 0
    chunk = 1 << _block_bits(space.k, len(xs))
    for start in range(0, 1 << space.k, chunk):
        S = np.arange(max(start, 1), min(start + chunk, 1 << space.k), dtype=np.int64)
        if S.size == 0:
            continue
        signs = 1 - 2 * (np.bitwise_count(S[:, None] & xs[None, :]) & 1).astype(np.int64)
        totals = np.abs(signs @ mults)
        i = int(np.argmax(totals))
        if totals[i] > best:
            best, best_mask = int(totals[i]), int(S[i])
    return BiasReport(Fraction(best, space.size), best_mask, "subsets")


def iter_weights(m: BinaryMatrix) -> Iterator[tuple[int, np.ndarray]]:
    """Yield ``(first_mask, weights)`` blocks covering masks ``0 .. 2^rows - 1`` in order."""
    W = m.packed()
    r, words = W.shape
    L = _block_bits(r, words)
    low = np.zeros((1, words), dtype=np.uint64)
    for i in range(L):
        low = np.concatenate([low, low ^ W[i]])
    for high in range(1 << (r - L)):
        h = np.zeros(words, dtype=np.uint64)
        for j in range(r - L):
            if (high >> j) & 1:
                h ^= W[L + j]
        yield high << L, np.bitwise_count(low ^ h).sum(axis=1, dtype=np.int64)


def _check_rows(m: BinaryMatrix, limit: int) -> None:
    if m.rows > limit:
        raise InfeasibleSearch(f"{m.rows} rows exceed codeword-scan limit {limit}")


def bias_via_weights(m: BinaryMatrix, limit: int = WEIGHT_LIMIT) -> BiasReport:
    """Largest ``|n - 2 w(c)| / n`` over nonzero codewords ``c``."""
    _check_rows(m, limit)
    if m.rows == 0 or m.cols == 0:
        raise ValueError("bias needs a non-empty matrix")
    n = m.cols
    best, best_mask = -1, 0
    for first, w in iter_weights(m):
        dev = np.abs(n - 2 * w)
        if first == 0:
            dev[0] = -1
        i = int(np.argmax(dev))
        if dev[i] > best:
            best, best_mask = int(dev[i]), first + i
    return BiasReport(Fraction(best, n), best_mask, "weights")


def epsilon_balanced_check(m: BinaryMatrix, eps, limit: int = WEIGHT_LIMIT) -> BalanceCheck:
    """Check ``(1-eps)/2 <= w/n <= (1+eps)/2`` for every nonzero codeword."""
    _check_rows(m, limit)
    eps = Fraction(eps)
    n = m.cols
    for first, w in iter_weights(m):
        bad = np.abs(n - 2 * w) * eps.denominator > eps.numerator * n
        if first == 0:
            bad[0] = False
        hits = np.flatnonzero(bad)
        if hits.size:
            i = int(hits[0])
            return BalanceCheck(False, first + i, int(w[i]))
    return BalanceCheck(True)


def weight_distribution(m: BinaryMatrix, limit: int = WEIGHT_LIMIT) -> dict[int, int]:
    _check_rows(m, limit)
    if m.rows == 0:
        return {0: 1}
    hist: Counter[int] = Counter()
    for _, w in iter_weights(m):
        vals, counts = np.unique(w, return_counts=True)
        hist.update(dict(zip(vals.tolist(), counts.tolist())))
    return dict(sorted(hist.items()))


def _min_weight_code(f: FieldSpec, G: np.ndarray, limit: int) -> MinDistance:
    """Exhaustive minimum weight over all nonzero GF(2^s) combinations of rows of ``G``.

    Coefficient vector ``c`` has index ``sum c_i * Q^i``; the smallest index
    among minimum-weight codewords is the witness.
    """
    G = np.asarray(G, dtype=np.int64)
    K, N = G.shape
    Q = f.order
    if Q**K - 1 > limit:
        raise InfeasibleSearch(f"{Q}^{K} - 1 codewords exceed limit {limit}")
    multiples = [f.mul_array(np.arange(Q)[:, None], G[i][None, :]) for i in range(K)]
    per = max(1, _BLOCK_WORDS // max(1, N))
    L = 0
    while L < K and Q ** (L + 1) <= per:
        L += 1
    low = np.zeros((1, N), dtype=np.int64)
    for i in range(L):
        low = (low[None, :, :] ^ multiples[i][:, None, :]).reshape(-1, N)
    best, best_idx = N + 1, 0
    for high in range(Q ** (K - L)):
        h = np.zeros(N, dtype=np.int64)
        rest = high
        for j in range(L, K):
            rest, c = divmod(rest, Q)
            h ^= multiples[j][c]
        w = np.count_nonzero(low ^ h, axis=1)
        if high == 0:
            w[0] = N + 1
        i = int(np.argmin(w))
        if w[i] < best:
            best, best_idx = int(w[i]), high * Q**L + i
    if best > N:
        raise ValueError("code has no nonzero codeword")
    witness = []
    for _ in range(K):
        best_idx, c = divmod(best_idx, Q)
        witness.append(c)
    return MinDistance(best, tuple(witness))


def min_distance(code: OuterCode | BinaryMatrix, limit: int = SEARCH_LIMIT) -> MinDistance:
    if isinstance(code, BinaryMatrix):
        return _min_weight_code(make_field(1), code.bits, limit)
    return _min_weight_code(code.field, code.generator, limit)
