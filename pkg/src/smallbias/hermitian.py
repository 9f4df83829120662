"""Hermitian curve points and the outer evaluation codes built on them.

Two families live here: the one-point Hermitian code spanned by box
monomials of weight at most ``m_max``, and the product code on two copies
of the curve spanned by monomials whose weight floors multiply to at
least ``delta``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from .gf_arith import FieldSpec, make_field
from .semigroup import (
    Monomial,
    ProductMonomial,
    footprint_box,
    genus,
    product_key,
    weight,
    weighted_key,
)

SUPPORTED_Q = (2, 4, 8, 16)


class CurvePoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True, eq=False)
class OuterCode:
    """A linear code over ``field`` given by a ``K x N`` generator matrix."""

    field: FieldSpec
    N: int
    K: int
    design_distance: int
    family: str
    basis: tuple
    generator: np.ndarray

    def __post_init__(self):
        if self.generator.shape != (self.K, self.N):
            raise ValueError(f"generator shape {self.generator.shape} != ({self.K}, {self.N})")
        if self.K < 1:
            raise ValueError("code must have dimension at least 1")
        self.generator.setflags(write=False)

    def encode(self, coeffs) -> np.ndarray:
        """Codeword for the coefficient vector ``coeffs`` (length K)."""
        coeffs = np.asarray(coeffs, dtype=np.int64)
        prods = self.field.mul_array(coeffs[:, None], self.generator)
        return np.bitwise_xor.reduce(prods, axis=0)


def _element_dtype(f: FieldSpec):
    return np.uint8 if f.s <= 8 else np.uint16


def hermitian_field(q: int) -> FieldSpec:
    if q not in SUPPORTED_Q:
        raise ValueError(f"q must be one of {SUPPORTED_Q}, got {q}")
    return make_field(2 * (q.bit_length() - 1))


@lru_cache(maxsize=None)
def curve_points(q: int) -> tuple[CurvePoint, ...]:
    """Affine points of ``x^(q+1) = y^q + y`` over GF(q^2), sorted by (x, y)."""
    f = hermitian_field(q)
    elems = np.arange(f.order)
    norm = f.pow_array(elems, q + 1)
    trace = f.pow_array(elems, q) ^ elems
    xs, ys = np.nonzero(norm[:, None] == trace[None, :])
    pts = tuple(CurvePoint(int(x), int(y)) for x, y in zip(xs, ys))
    if len(pts) != q**3:
        raise AssertionError(f"expected {q**3} points, found {len(pts)}")
    return pts


def evaluate_monomial(f: FieldSpec, points: Sequence[CurvePoint], m: Monomial) -> np.ndarray:
    xs = np.array([p.x for p in points], dtype=np.int64)
    ys = np.array([p.y for p in points], dtype=np.int64)
    return f.mul_array(f.pow_array(xs, m.i), f.pow_array(ys, m.j))


def evaluate_polynomial(f: FieldSpec, points, terms: dict[Monomial, int]) -> np.ndarray:
    """Evaluate ``sum c * X^i Y^j`` at every point."""
    out = np.zeros(len(points), dtype=np.int64)
    for m, c in terms.items():
        out ^= f.mul_array(c, evaluate_monomial(f, points, m))
    return out


def weight_floor_single(q: int, m: Monomial) -> int:
    """``q^3 - weight(m)``; nonpositive values carry no information."""
    return q**3 - weight(q, m)


def weight_floor_product(q: int, p: ProductMonomial) -> int:
    n = q**3
    return (n - weight(q, p.first)) * (n - weight(q, p.second))


def build_onepoint_code(q: int, m_max: int) -> OuterCode:
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    f = hermitian_field(q)
    pts = curve_points(q)
    basis = tuple(m for m in footprint_box(q) if weight(q, m) <= m_max)
    gen = np.array([evaluate_monomial(f, pts, m) for m in basis], dtype=_element_dtype(f))
    return OuterCode(
        field=f,
        N=q**3,
        K=len(basis),
        design_distance=q**3 - m_max,
        family="one_point_hermitian",
        basis=basis,
        generator=gen,
    )


def select_product_basis(q: int, delta: int) -> tuple[ProductMonomial, ...]:
    """Product-box monomials with both floors positive and floor product >= delta."""
    hermitian_field(q)
    if delta < 1:
        raise ValueError("delta must be positive")
    n = q**3
    box = footprint_box(q)
    floors = np.array([n - weight(q, m) for m in box], dtype=np.int64)
    ok = (
        (floors[:, None] > 0)
        & (floors[None, :] > 0)
        & (floors[:, None] * floors[None, :] >= delta)
    )
    # box is sorted by weight, so row-major order is already the product order
    chosen = tuple(
        ProductMonomial(box[a].i, box[a].j, box[b].i, box[b].j) for a, b in zip(*np.nonzero(ok))
    )
    if not chosen:
        raise ValueError(f"no product monomial reaches delta={delta} (maximum is {n * n})")
    return chosen


def product_points(q: int) -> list[tuple[CurvePoint, CurvePoint]]:
    """Points of the product variety; pair ``(P_s, P_t)`` sits at ``s*q^3 + t``."""
    pts = curve_points(q)
    return [(a, b) for a in pts for b in pts]


def build_product_code(q: int, delta: int) -> OuterCode:
    f = hermitian_field(q)
    basis = select_product_basis(q, delta)
    pts = curve_points(q)
    rows = {m: evaluate_monomial(f, pts, m) for m in footprint_box(q)}
    gen = np.empty((len(basis), q**6), dtype=_element_dtype(f))
    for r, p in enumerate(basis):
        gen[r] = f.mul_array(rows[p.first][:, None], rows[p.second][None, :]).ravel()
    return OuterCode(
        field=f,
        N=q**6,
        K=len(basis),
        design_distance=delta,
        family="product_hermitian",
        basis=basis,
        generator=gen,
    )


def leading_monomial(q: int, terms) -> Monomial:
    """Largest monomial under the weighted order."""
    return max(terms, key=lambda m: weighted_key(q, m))


def leading_product_monomial(q: int, terms) -> ProductMonomial:
    return max(terms, key=lambda p: product_key(q, p))


def dim_lower_bound(q: int, delta: int) -> float:
    """Integral estimate ``T^2 - delta + delta*ln(delta/T^2)`` of the product code dimension."""
    T = q**3 - genus(q)
    if delta < T:
        raise ValueError(f"bound needs delta >= T = {T}, got {delta}")
    return T * T - delta + delta * math.log(delta / (T * T))


@dataclass(frozen=True)
class ParamBound:
    n: int
    T: int
    delta: int
    k_exact: int
    k_lower: float | None  # None when delta < T


def param_bound(q: int, delta: int) -> ParamBound:
    T = q**3 - genus(q)
    k_exact = len(select_product_basis(q, delta))
    k_lower = dim_lower_bound(q, delta) if delta >= T else None
    return ParamBound(n=q**6, T=T, delta=delta, k_exact=k_exact, k_lower=k_lower)
