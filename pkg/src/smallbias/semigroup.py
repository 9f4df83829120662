"""Weighted monomial orders, the Hermitian footprint and the semigroup <q, q+1>.

A monomial ``X^i Y^j`` has weight ``q*i + (q+1)*j``. On the footprint box
``0 <= i < q^2, 0 <= j < q`` this weight is injective, so every box
monomial is identified with its weight. The functions here are field-free
and accept any ``q >= 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple


class Monomial(NamedTuple):
    """``X^i Y^j``."""

    i: int
    j: int


class ProductMonomial(NamedTuple):
    """``X1^i1 Y1^j1 X2^i2 Y2^j2``."""

    i1: int
    j1: int
    i2: int
    j2: int

    @property
    def first(self) -> Monomial:
        return Monomial(self.i1, self.j1)

    @property
    def second(self) -> Monomial:
        return Monomial(self.i2, self.j2)


def _check_q(q: int) -> None:
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")


def _sign(a, b) -> int:
    return (a > b) - (a < b)


def weight(q: int, m: Monomial) -> int:
    _check_q(q)
    return q * m.i + (q + 1) * m.j


def weight_pair(q: int, p: ProductMonomial) -> tuple[int, int]:
    return weight(q, p.first), weight(q, p.second)


def weighted_key(q: int, m: Monomial) -> tuple[int, int]:
    """Sort key realising the weighted order: weight, then Y-exponent."""
    return weight(q, m), m.j


def product_key(q: int, p: ProductMonomial) -> tuple[int, int, int, int, int, int]:
    """Sort key for the product order.

    Weight pairs are compared lexicographically with the first coordinate
    most significant; ties fall back to lex on ``(i1, j1, i2, j2)``.
    """
    return (*weight_pair(q, p), *p)


def compare_weighted(q: int, m1: Monomial, m2: Monomial) -> int:
    """Return -1, 0 or 1 as ``m1`` is below, equal to or above ``m2``."""
    return _sign(weighted_key(q, m1), weighted_key(q, m2))


def compare_product(q: int, p1: ProductMonomial, p2: ProductMonomial) -> int:
    return _sign(product_key(q, p1), product_key(q, p2))


@lru_cache(maxsize=None)
def footprint_box(q: int) -> tuple[Monomial, ...]:
    """All ``q^3`` monomials ``X^i Y^j`` with ``i < q^2, j < q`` in ascending order."""
    _check_q(q)
    box = [Monomial(i, j) for i in range(q * q) for j in range(q)]
    return tuple(sorted(box, key=lambda m: weighted_key(q, m)))


def genus(q: int) -> int:
    return q * (q - 1) // 2


def conductor(q: int) -> int:
    """Smallest c with every integer >= c in <q, q+1>; equals 2g."""
    return 2 * genus(q)


def in_semigroup(q: int, x: int) -> bool:
    """Whether ``x = a*q + b*(q+1)`` with ``a, b >= 0``."""
    if x < 0:
        return False
    # b can be taken below q since q*(q+1) is representable with b = 0
    return any((x - b * (q + 1)) % q == 0 and x >= b * (q + 1) for b in range(q))


@lru_cache(maxsize=None)
def gaps(q: int) -> tuple[int, ...]:
    _check_q(q)
    return tuple(x for x in range(conductor(q)) if not in_semigroup(q, x))


@dataclass(frozen=True)
class SemigroupView:
    q: int
    g: int
    n: int
    T: int
    lambda_star: tuple[int, ...]


def semigroup_view(q: int) -> SemigroupView:
    """Weights of the footprint box, validated against their three-part shape.

    The sorted weights split into ``g`` values ``lam_i <= g - 1 + i``, the
    full run ``2g, ..., n-1`` and ``g`` values above ``n - 1``.
    """
    _check_q(q)
    g, n = genus(q), q**3
    lam = tuple(weight(q, m) for m in footprint_box(q))
    if len(set(lam)) != n:
        raise AssertionError("weight is not injective on the footprint box")
    low, mid, high = lam[:g], lam[g : n - g], lam[n - g :]
    if any(lam_i > g - 1 + i for i, lam_i in enumerate(low, start=1)):
        raise AssertionError(f"low segment {low} violates lam_i <= g-1+i")
    if mid != tuple(range(2 * g, n)):
        raise AssertionError("middle segment is not 2g..n-1")
    if any(x <= n - 1 for x in high) or any(x >= 2 * g for x in low):
        raise AssertionError("segments overlap")
    return SemigroupView(q=q, g=g, n=n, T=n - g, lambda_star=lam)


def residue_count(q: int, lam: int) -> int:
    """Size of ``L minus (lam + L)`` for ``L = <q, q+1>``.

    Beyond ``conductor + lam`` both sets contain every integer, so the
    enumeration window is finite.
    """
    _check_q(q)
    if not in_semigroup(q, lam):
        raise ValueError(f"{lam} is not in <{q}, {q + 1}>")
    return sum(
        1
        for x in range(conductor(q) + lam)
        if in_semigroup(q, x) and not in_semigroup(q, x - lam)
    )
