"""Concatenation of a GF(2^s) outer code with the [2^s, s] Walsh-Hadamard code.

The binary generator is produced in four stages:

1. ``G1``: the outer generator over GF(2^s).
2. ``G2``: every entry expanded to its ``s`` polynomial-basis bits.
3. ``G3``: each outer row becomes ``s`` rows, one per basis element
   ``x^t``; entry ``j`` of row ``(r, t)`` holds the bits of ``x^t * G1[r][j]``,
   obtained from ``G2`` by the multiply-by-``x`` shift-and-reduce map.
4. ``G4``: every ``s``-bit entry multiplied by the ``s x 2^s`` Walsh-Hadamard
   generator.

Row ``(r, t)`` of ``G4`` sits at index ``r*s + t``; column ``(j, u)`` at
``j*2^s + u``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .gf_arith import FieldSpec
from .hermitian import OuterCode
from .matrices import BinaryMatrix


@lru_cache(maxsize=None)
def _wh_table(s: int) -> np.ndarray:
    """``table[a, u] = parity(a & u)`` for all ``a, u < 2^s``."""
    a = np.arange(1 << s)
    table = (np.bitwise_count(a[:, None] & a[None, :]) & 1).astype(np.uint8)
    table.setflags(write=False)
    return table


def wh_encode(s: int, a: int) -> np.ndarray:
    if not 0 <= a < (1 << s):
        raise ValueError(f"{a} is not an element of GF(2^{s})")
    return _wh_table(s)[a].copy()


def wh_generator(s: int) -> BinaryMatrix:
    if s < 1:
        raise ValueError("s must be positive")
    return BinaryMatrix(_wh_table(s)[[1 << t for t in range(s)]])


def rs_outer(f: FieldSpec, N: int, K: int) -> OuterCode:
    """Reed-Solomon code evaluating ``1, x, ..., x^(K-1)`` at elements ``0..N-1``."""
    if not 1 <= K <= N <= f.order:
        raise ValueError(f"need 1 <= K <= N <= {f.order}, got N={N}, K={K}")
    pts = np.arange(N)
    gen = np.array([f.pow_array(pts, r) for r in range(K)])
    return OuterCode(
        field=f,
        N=N,
        K=K,
        design_distance=N - K + 1,
        family="reed_solomon",
        basis=tuple(range(K)),
        generator=gen,
    )


@dataclass(frozen=True, eq=False)
class ConcatResult:
    matrix: BinaryMatrix
    epsilon_design: Fraction
    outer: OuterCode
    stage_seconds: dict[str, float] = field(default_factory=dict)


def expand_entries(f: FieldSpec, G1: np.ndarray) -> np.ndarray:
    """Stage 2: ``(K, N)`` field matrix to ``(K, N, s)`` bit array."""
    shifts = np.arange(f.s)
    return ((np.asarray(G1, dtype=np.int64)[..., None] >> shifts) & 1).astype(np.uint8)


def times_x_matrix(f: FieldSpec) -> np.ndarray:
    """``s x s`` bit matrix ``A`` with ``bits(x*a) = A @ bits(a) mod 2``."""
    A = np.zeros((f.s, f.s), dtype=np.uint8)
    for i in range(f.s):
        img = f.mul(1 << i, f.alpha)
        A[:, i] = [(img >> r) & 1 for r in range(f.s)]
    return A


def basis_multiples(f: FieldSpec, G2: np.ndarray) -> np.ndarray:
    """Stage 3: ``(K, N, s)`` bits to ``(K*s, N, s)``; row ``r*s + t`` holds ``x^t * G1[r]``.

    For s = 1 there is a single row per outer row, the entry itself.
    """
    K, N, s = G2.shape
    At = np.ascontiguousarray(times_x_matrix(f).T)
    out = np.empty((K, s, N, s), dtype=np.uint8)
    cur = G2
    for t in range(s):
        out[:, t] = cur
        if t + 1 < s:
            cur = (cur @ At) & 1
    return out.reshape(K * s, N, s)


def wh_multiply(G3: np.ndarray) -> np.ndarray:
    """Stage 4: every ``s``-bit entry times the Walsh-Hadamard generator."""
    rows, N, s = G3.shape
    wh = wh_generator(s).bits
    return ((G3 @ wh) & 1).reshape(rows, N << s)


def concatenate(outer: OuterCode) -> ConcatResult:
    f = outer.field
    if not isinstance(f, FieldSpec):
        raise TypeError("outer code must be defined over a binary extension field")
    if not 0 < outer.design_distance <= outer.N:
        raise ValueError(f"design distance {outer.design_distance} outside [1, {outer.N}]")
    timings = {}
    t0 = time.perf_counter()
    G2 = expand_entries(f, outer.generator)
    t1 = time.perf_counter()
    G3 = basis_multiples(f, G2)
    t2 = time.perf_counter()
    G4 = wh_multiply(G3)
    t3 = time.perf_counter()
    timings.update(G2=t1 - t0, G3=t2 - t1, G4=t3 - t2)
    return ConcatResult(
        matrix=BinaryMatrix(G4),
        epsilon_design=Fraction(outer.N - outer.design_distance, outer.N),
        outer=outer,
        stage_seconds=timings,
    )


def concatenate_codeword(f: FieldSpec, word) -> np.ndarray:
    """Inner-encode every symbol of an outer codeword and join the blocks."""
    return _wh_table(f.s)[np.asarray(word, dtype=np.int64)].reshape(-1)
