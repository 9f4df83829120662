"""Asymptotic size exponents of small-bias families.

With ``eps = k^(-alpha)`` each family satisfies ``log_k |X| = a + b*alpha + o(1)``
on some range of ``alpha``. Only the limit lines ``a + b*alpha`` are computed
here; the ``o(1)`` terms are dropped throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class BoundCurve:
    """A family's exponent line ``intercept + slope * alpha``."""

    family: str
    intercept: float
    slope: float
    alpha_min: float = 0.0
    min_inclusive: bool = False
    l: int | None = None

    @property
    def label(self) -> str:
        return f"NormTrace({self.l})" if self.l is not None else self.family

    def is_valid(self, alpha: float) -> bool:
        if self.min_inclusive:
            return alpha >= self.alpha_min
        return alpha > self.alpha_min


RS = BoundCurve("RS", 2.0, 2.0)
AG = BoundCurve("AG", 1.0, 3.0)
BT = BoundCurve("BT", 5 / 4, 5 / 2, alpha_min=0.5)
NEW = BoundCurve("New", 4 / 3, 8 / 3)
GVLP = BoundCurve("GVLP", 1.0, 2.0)


def norm_trace(l: int) -> BoundCurve:
    """``((l+1)/l) * (1 + alpha*(l - sqrt(l)))`` for ``alpha >= 1/sqrt(l)``."""
    if not isinstance(l, int) or l < 4:
        raise ValueError(f"norm-trace family needs an integer l >= 4, got {l!r}")
    c = (l + 1) / l
    return BoundCurve(
        "NormTrace",
        intercept=c,
        slope=c * (l - math.sqrt(l)),
        alpha_min=1 / math.sqrt(l),
        min_inclusive=True,
        l=l,
    )


def logk_exponent(curve: BoundCurve, alpha: float) -> float:
    if not curve.is_valid(alpha):
        raise ValueError(f"alpha={alpha} outside the validity range of {curve.label}")
    return curve.intercept + curve.slope * alpha


@dataclass(frozen=True)
class Crossover:
    alpha: float
    valid_for_both: bool


def crossover(c1: BoundCurve, c2: BoundCurve) -> Crossover | None:
    """Where two exponent lines meet; ``None`` for parallel (or identical) lines."""
    if c1.slope == c2.slope:
        return None
    a = (c2.intercept - c1.intercept) / (c1.slope - c2.slope)
    return Crossover(a, c1.is_valid(a) and c2.is_valid(a))


def _margin_poly(x: float) -> float:
    return x**3 - (4 / 3) * x**2 - (5 / 3) * x


def norm_trace_margin(l: int) -> float:
    """NormTrace(l) minus New at the smallest admissible ``alpha = 1/sqrt(l)``.

    Positive means the New line is lower. With ``x = sqrt(l)`` this equals
    ``(x^3 - 4/3 x^2 - 5/3 x) / x^2``, which is negative below the cubic's
    positive root (about 2.1196) and positive above it. Note that l = 4 sits
    below the root.
    """
    if l < 5:
        raise ValueError(f"margin is defined for l >= 5, got {l}")
    x = math.sqrt(l)
    return _margin_poly(x) / (x * x)


def cubic_positive_root() -> float:
    """Positive root of ``x^3 - 4/3 x^2 - 5/3 x``."""
    return (4 / 3 + math.sqrt(16 / 9 + 20 / 3)) / 2


def bias_denominator(eps: float) -> float:
    """``eps + (1 - eps) * ln(1 - eps)``; behaves like ``eps^2 / 2`` near 0."""
    if not 0 < eps < 1:
        raise ValueError(f"eps must lie in (0, 1), got {eps}")
    return eps + (1 - eps) * math.log1p(-eps)


def default_curves(l_range=range(4, 10)) -> list[BoundCurve]:
    return [RS, AG, BT, *(norm_trace(l) for l in l_range), NEW, GVLP]


def compare_at(alpha: float, l_range=range(4, 10)) -> tuple[list[tuple[str, float]], list[str]]:
    """Valid families sorted by exponent, and the labels of invalid ones."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    valid, invalid = [], []
    for c in default_curves(l_range):
        if c.is_valid(alpha):
            valid.append((c.label, logk_exponent(c, alpha)))
        else:
            invalid.append(c.label)
    valid.sort(key=lambda t: t[1])
    return valid, invalid
