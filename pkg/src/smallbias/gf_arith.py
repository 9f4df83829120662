"""Arithmetic in GF(2^s) with a fixed modulus per extension degree.

Elements are plain ints in ``[0, 2^s)``; bit ``i`` is the coefficient of
``alpha^i`` in the polynomial basis, where ``alpha`` is the class of ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

MAX_DEGREE = 16

# degree -> modulus bit-vector (bit i = coefficient of x^i)
MODULI: dict[int, int] = {
    1: 0b10,  # x
    2: 0b111,  # x^2 + x + 1
    3: 0b1011,  # x^3 + x + 1
    4: 0b10011,  # x^4 + x + 1
    5: 0b100101,  # x^5 + x^2 + 1
    6: 0b1000011,  # x^6 + x + 1
    7: 0b10000011,  # x^7 + x + 1
    8: 0b100011101,  # x^8 + x^4 + x^3 + x^2 + 1
    9: 0b1000010001,  # x^9 + x^4 + 1
    10: 0b10000001001,  # x^10 + x^3 + 1
    11: 0b100000000101,  # x^11 + x^2 + 1
    12: 0b1000001010011,  # x^12 + x^6 + x^4 + x + 1
    13: 0b10000000011011,  # x^13 + x^4 + x^3 + x + 1
    14: 0b100010001000011,  # x^14 + x^10 + x^6 + x + 1
    15: 0b1000000000000011,  # x^15 + x + 1
    16: 0b10001000000001011,  # x^16 + x^12 + x^3 + x + 1
}


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit-vectors (multiplication in GF(2)[x])."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod(a: int, m: int) -> int:
    """Remainder of ``a`` modulo ``m`` in GF(2)[x]."""
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def is_irreducible(m: int) -> bool:
    """Trial division by every polynomial of degree at most deg(m)/2."""
    d = m.bit_length() - 1
    if d < 1:
        return False
    for p in range(2, 1 << (d // 2 + 1)):
        if poly_mod(m, p) == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(2^s) realised as GF(2)[x] / (modulus)."""

    s: int
    modulus_bits: int

    @property
    def order(self) -> int:
        return 1 << self.s

    def check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element of GF(2^{self.s})")
        return a

    # scalar arithmetic

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return poly_mod(clmul(a, b), self.modulus_bits)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.order - 2)

    def to_bits(self, a: int) -> tuple[int, ...]:
        self.check(a)
        return tuple((a >> i) & 1 for i in range(self.s))

    def from_bits(self, bits) -> int:
        bits = tuple(bits)
        if len(bits) != self.s:
            raise ValueError(f"expected {self.s} bits, got {len(bits)}")
        a = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"bit {i} is {b!r}")
            a |= b << i
        return a

    @property
    def alpha(self) -> int:
        """The polynomial-basis generator (class of x)."""
        return poly_mod(0b10, self.modulus_bits)

    # table-driven vectorised arithmetic

    @cached_property
    def _log_exp(self) -> tuple[np.ndarray, np.ndarray]:
        n = self.order - 1
        for g in range(1, self.order):
            exp = np.zeros(2 * n, dtype=np.int64)
            x = 1
            for i in range(n):
                exp[i] = x
                x = self.mul(x, g)
                if x == 1 and i < n - 1:
                    break
            else:
                exp[n:] = exp[:n]
                log = np.zeros(self.order, dtype=np.int64)
                log[exp[:n]] = np.arange(n)
                return log, exp
        raise AssertionError("no primitive element")  # impossible for a field

    @cached_property
    def mul_table(self) -> np.ndarray:
        """Full ``order x order`` product table; only for s <= 8."""
        if self.s > 8:
            raise ValueError("multiplication table only built for s <= 8")
        a = np.arange(self.order)
        return self.mul_array(a[:, None], a[None, :])

    def mul_array(self, a, b) -> np.ndarray:
        """Elementwise product of broadcastable integer arrays."""
        log, exp = self._log_exp
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = exp[log[a] + log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def pow_array(self, a, e: int) -> np.ndarray:
        log, exp = self._log_exp
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        out = exp[(log[a] * e) % (self.order - 1)]
        return np.where(a == 0, 0, out)


@lru_cache(maxsize=None)
def make_field(s: int) -> FieldSpec:
    if not 1 <= s <= MAX_DEGREE:
        raise ValueError(f"extension degree must be in [1, {MAX_DEGREE}], got {s}")
    return FieldSpec(s, MODULI[s])


def add(f: FieldSpec, a: int, b: int) -> int:
    return f.add(a, b)


def mul(f: FieldSpec, a: int, b: int) -> int:
    return f.mul(a, b)


def inv(f: FieldSpec, a: int) -> int:
    return f.inv(a)


def pow(f: FieldSpec, a: int, e: int) -> int:  # noqa: A001
    return f.pow(a, e)


def to_bits(f: FieldSpec, a: int) -> tuple[int, ...]:
    return f.to_bits(a)


def from_bits(f: FieldSpec, bits) -> int:
    return f.from_bits(bits)


def row_reduce(f: FieldSpec, matrix) -> tuple[np.ndarray, list[int]]:
    """Row echelon form over GF(2^s) and the pivot columns."""
    R = np.array(matrix, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    m, n = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            R[[r, p]] = R[[p, r]]
        R[r] = f.mul_array(R[r], f.inv(int(R[r, c])))
        below = r + 1 + np.flatnonzero(R[r + 1 :, c])
        if below.size:
            R[below] ^= f.mul_array(R[below, c][:, None], R[r][None, :])
        pivots.append(c)
        r += 1
    return R, pivots


def matrix_rank(f: FieldSpec, matrix) -> int:
    return len(row_reduce(f, matrix)[1])
