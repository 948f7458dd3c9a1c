"""Truncated formal power series in t with Poly coefficients.

The truncation order is part of a value's identity: a Series of order N
stores exactly N coefficients (t^0 .. t^(N-1), trailing zeros included),
and arithmetic between different orders is a hard error rather than a
silent coercion.
"""
from __future__ import annotations

from typing import Iterable

from .poly import H, ONE, ZERO, Poly


class OrderMismatch(ValueError):
    """Arithmetic between series of different truncation orders."""


class NotInvertible(ArithmeticError):
    """Constant coefficient is not a unit of the coefficient ring."""


class Series:
    __slots__ = ("order", "coeffs")

    order: int
    coeffs: tuple[Poly, ...]

    def __init__(self, coeffs: Iterable[Poly], order: int | None = None):
        cs = list(coeffs)
        if order is None:
            order = len(cs)
        if order < 1:
            raise ValueError("order must be positive")
        if len(cs) > order:
            raise ValueError(f"{len(cs)} coefficients exceed order {order}")
        cs.extend([ZERO] * (order - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Series is immutable")

    @staticmethod
    def one(order: int) -> Series:
        return Series([ONE], order)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Series)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def _check_order(self, other: Series) -> None:
        if self.order != other.order:
            raise OrderMismatch(f"order {self.order} vs {other.order}")

    def __add__(self, other: Series) -> Series:
        self._check_order(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: Series) -> Series:
        self._check_order(other)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self) -> Series:
        return Series([-c for c in self.coeffs], self.order)

    def __mul__(self, other: Series) -> Series:
        self._check_order(other)
        n = self.order
        out = [ZERO] * n
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Series(out, n)

    def inverse(self) -> Series:
        """Multiplicative inverse at the same order.

        The constant coefficient must be 1 or -1 (the units of Z[h]).
        """
        c0 = self.coeffs[0]
        if c0.coeffs not in ((1,), (-1,)):
            raise NotInvertible(f"constant coefficient {c0} is not a unit")
        u = c0.coeffs[0]  # 1 or -1, its own inverse
        out = [Poly([u])]
        for n in range(1, self.order):
            acc = ZERO
            for k in range(1, n + 1):
                ak = self.coeffs[k]
                if not ak.is_zero():
                    acc = acc + ak * out[n - k]
            out.append(acc * (-u))
        return Series(out, self.order)

    def __pow__(self, k: int) -> Series:
        if k < 0:
            return self.inverse() ** (-k)
        result = Series.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self) -> Series:
        """Term-wise d/dt, keeping the order.

        The top coefficient is unknowable after truncation and is stored
        as zero; comparisons involving derivatives should stop at index
        order - 2.
        """
        out = [(j + 1) * self.coeffs[j + 1] for j in range(self.order - 1)]
        out.append(ZERO)
        return Series(out, self.order)

    def __str__(self) -> str:
        return " + ".join(f"({c})t^{j}" for j, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"Series({list(self.coeffs)!r}, order={self.order})"

    def to_json(self) -> list[list[str]]:
        return [c.to_json() for c in self.coeffs]


def fib_kernel(order: int) -> Series:
    """1 - h*t - t^2, the reciprocal of the sequence generating function."""
    return Series([ONE, -H, -ONE][:order], order)


def convolved_series(r: int, n_terms: int) -> list[Poly]:
    """First n_terms coefficients of (1 - h*t - t^2)^(-r).

    Coefficient j is the (j+1)-st convolved polynomial of order r.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    return list((fib_kernel(n_terms) ** -r).coeffs)
