"""Truncated formal power series with exact integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable


@dataclass(frozen=True)
class TruncatedSeries:
    """c[0] + c[1] x + ... + c[N] x^N, everything above degree N discarded."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")

    @classmethod
    def from_terms(cls, terms: dict[int, int] | Iterable[int], degree: int) -> "TruncatedSeries":
        """Build from ``{exponent: coefficient}`` or a coefficient list, padding or cutting at ``degree``."""
        c = [0] * (degree + 1)
        items = terms.items() if isinstance(terms, dict) else enumerate(terms)
        for e, a in items:
            if 0 <= e <= degree:
                c[e] += a
        return cls(tuple(c))

    @classmethod
    def zero(cls, degree: int) -> "TruncatedSeries":
        return cls((0,) * (degree + 1))

    @classmethod
    def one(cls, degree: int) -> "TruncatedSeries":
        return cls.from_terms({0: 1}, degree)

    @property
    def truncation_degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, m: int) -> int:
        return self.coeffs[m]

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def __str__(self) -> str:
        terms = []
        for e, a in enumerate(self.coeffs):
            if a:
                terms.append(f"{a}" if e == 0 else f"{a}*x^{e}")
        return " + ".join(terms) or "0"


def _check_degrees(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.truncation_degree != b.truncation_degree:
        raise ValueError(
            f"truncation degree mismatch: {a.truncation_degree} != {b.truncation_degree}"
        )


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_degrees(a, b)
    return TruncatedSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at the common degree."""
    _check_degrees(a, b)
    n = a.truncation_degree
    out = [0] * (n + 1)
    bc = b.coeffs
    # zero coefficients are skipped: most factors used here are sparse
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(n - i + 1):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(tuple(out))


def geometric_factor(k: int, degree: int) -> TruncatedSeries:
    """x^k + x^2k + x^3k + ... , i.e. x^k / (1 - x^k)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return TruncatedSeries.from_terms({e: 1 for e in range(k, degree + 1, k)}, degree)


def reciprocal_factor(n: int, degree: int) -> TruncatedSeries:
    """1 / (1 - x^n) written out as 1 + x^n + x^2n + ..."""
    return series_add(TruncatedSeries.one(degree), geometric_factor(n, degree))


@lru_cache(maxsize=16)
def euler_product(degree: int) -> TruncatedSeries:
    """Product of 1/(1 - x^n) for n = 1..degree; coefficients are P(0..degree)."""
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    acc = TruncatedSeries.one(degree)
    for n in range(1, degree + 1):
        acc = series_mul(reciprocal_factor(n, degree), acc)
    return acc


def q_generating_series(k: int, degree: int) -> TruncatedSeries:
    """x^k/(1 - x^k) times the Euler product; coefficient of x^m is Q_k(m)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return series_mul(geometric_factor(k, degree), euler_product(degree))


def weighted_geometric(k: int, degree: int) -> TruncatedSeries:
    """x^k + 2x^2k + 3x^3k + ..."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return TruncatedSeries.from_terms({e: e // k for e in range(k, degree + 1, k)}, degree)


def one_minus_power(k: int, degree: int) -> TruncatedSeries:
    """1 - x^k."""
    return TruncatedSeries.from_terms({0: 1, k: -1}, degree)
