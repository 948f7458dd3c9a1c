"""Upper-Hessenberg determinants over Z[h] and what they compute.

The tridiagonal matrix with h on the diagonal, 1 above and -1 below has
the Fibonacci polynomials as determinants, the convolved family as
principal-minor sums, and characteristic-polynomial coefficients that
are again convolved polynomials up to sign.  The determinant kernel is
the last-column Hessenberg expansion, O(n^2) ring multiplications; it
is generic in the entry ring so the same code computes Poly
determinants and TPoly characteristic polynomials.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .poly import H, ONE, ZERO, Poly, binom


class IndexOutOfRange(IndexError):
    """A deletion index list is not strictly increasing inside 1..n."""


class TPoly:
    """Polynomial in t with Poly coefficients, index = power of t."""

    __slots__ = ("coeffs_t",)

    coeffs_t: tuple[Poly, ...]

    def __init__(self, coeffs_t: Iterable[Poly] = ()):
        cs = list(coeffs_t)
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs_t", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("TPoly is immutable")

    @property
    def degree(self) -> int | None:
        return len(self.coeffs_t) - 1 if self.coeffs_t else None

    def is_zero(self) -> bool:
        return not self.coeffs_t

    def __bool__(self) -> bool:
        return bool(self.coeffs_t)

    def coefficient(self, power: int) -> Poly:
        if 0 <= power < len(self.coeffs_t):
            return self.coeffs_t[power]
        return ZERO

    def is_monic(self) -> bool:
        return bool(self.coeffs_t) and self.coeffs_t[-1] == ONE

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TPoly) and self.coeffs_t == other.coeffs_t

    def __hash__(self) -> int:
        return hash(self.coeffs_t)

    def __add__(self, other: TPoly) -> TPoly:
        a, b = self.coeffs_t, other.coeffs_t
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return TPoly(out)

    def __sub__(self, other: TPoly) -> TPoly:
        return self + (-other)

    def __neg__(self) -> TPoly:
        return TPoly([-c for c in self.coeffs_t])

    def __mul__(self, other: TPoly | Poly | int) -> TPoly:
        if isinstance(other, int):
            return TPoly([c * other for c in self.coeffs_t])
        if isinstance(other, Poly):
            return TPoly([c * other for c in self.coeffs_t])
        a, b = self.coeffs_t, other.coeffs_t
        if not a or not b:
            return TPoly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca.is_zero():
                for j, cb in enumerate(b):
                    out[i + j] = out[i + j] + ca * cb
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> TPoly:
        if k < 0:
            raise ValueError("negative exponent")
        result, base = T_ONE, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __str__(self) -> str:
        """Decreasing powers of t; multi-term Poly coefficients are
        parenthesized, single terms inlined with the sign pulled out:
        't^2 - 2ht + (h^2 + 1)'.
        """
        if not self.coeffs_t:
            return "0"
        parts: list[str] = []
        for k in range(len(self.coeffs_t) - 1, -1, -1):
            c = self.coeffs_t[k]
            if c.is_zero():
                continue
            negative = c.coeffs[-1] < 0
            mag = -c if negative else c
            terms = sum(1 for x in mag.coeffs if x)
            if k == 0:
                body = f"({mag})" if terms > 1 else str(mag)
            else:
                t = "t" if k == 1 else f"t^{k}"
                if mag == ONE:
                    body = t
                elif terms > 1:
                    body = f"({mag}){t}"
                else:
                    body = f"{mag}{t}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f" - {body}" if negative else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"TPoly('{self}')"

    def to_json(self) -> list[list[str]]:
        return [c.to_json() for c in self.coeffs_t]


T_ZERO = TPoly()
T_ONE = TPoly([ONE])


class HessMatrix:
    """Square matrix of Poly entries with zeros below the subdiagonal."""

    __slots__ = ("n", "entries")

    n: int
    entries: tuple[tuple[Poly, ...], ...]

    def __init__(self, entries: Sequence[Sequence[Poly]]):
        n = len(entries)
        if n < 1:
            raise ValueError("matrix must be at least 1x1")
        rows = []
        for i, row in enumerate(entries):
            if len(row) != n:
                raise ValueError("matrix must be square")
            for j in range(len(row)):
                if i > j + 1 and not row[j].is_zero():
                    raise ValueError(
                        f"entry ({i + 1},{j + 1}) below the subdiagonal is nonzero"
                    )
            rows.append(tuple(row))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", tuple(rows))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("HessMatrix is immutable")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HessMatrix) and self.entries == other.entries

    def __str__(self) -> str:
        return "\n".join("\t".join(str(e) for e in row) for row in self.entries)


def _hess_det_generic(rows, zero, one):
    """Determinant of an upper-Hessenberg grid by last-column expansion.

    d[k] is the leading k x k determinant; the column-k sum walks rows
    k..1, carrying the alternating-sign product of subdiagonal entries.
    A zero subdiagonal entry kills every remaining term of the column.
    Works over any commutative ring element type with +, -, *.
    """
    n = len(rows)
    d = [one]
    for k in range(1, n + 1):
        col = k - 1
        acc = zero
        prod = one
        positive = True
        for i in range(k, 0, -1):
            e = rows[i - 1][col]
            if e:
                term = e * prod * d[i - 1]
                acc = acc + term if positive else acc - term
            if i > 1:
                sub = rows[i - 1][i - 2]
                if not sub:
                    break
                prod = prod * sub
                positive = not positive
        d.append(acc)
    return d[n]


def hess_det(a: HessMatrix) -> Poly:
    """Exact determinant, O(n^2) Poly multiplications."""
    return _hess_det_generic(a.entries, ZERO, ONE)


def build_fib_matrix(n: int) -> HessMatrix:
    """Tridiagonal n x n matrix: diagonal h, superdiagonal 1, subdiagonal -1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    minus_one = Poly([-1])
    rows = []
    for i in range(n):
        row = [ZERO] * n
        row[i] = H
        if i + 1 < n:
            row[i + 1] = ONE
        if i > 0:
            row[i - 1] = minus_one
        rows.append(row)
    return HessMatrix(rows)


def principal_minor(n: int, deleted: Sequence[int]) -> Poly:
    """Determinant of the Fibonacci matrix with the 1-based rows and
    columns in `deleted` removed (the empty matrix has determinant 1).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    prev = 0
    for i in deleted:
        if not prev < i <= n:
            raise IndexOutOfRange(f"deletion indices must be strictly increasing in 1..{n}")
        prev = i
    gone = set(deleted)
    keep = [i for i in range(1, n + 1) if i not in gone]
    full = build_fib_matrix(n).entries
    rows = [[full[i - 1][j - 1] for j in keep] for i in keep]
    return _hess_det_generic(rows, ZERO, ONE)


def sum_principal_minors(n: int, l: int) -> Poly:
    """Sum of all C(n, l) principal minors of order n - l, by direct
    enumeration of the deletion sets.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= l <= n:
        raise ValueError("l must be in 0..n")
    total = ZERO
    for deleted in combinations(range(1, n + 1), l):
        total = total + principal_minor(n, deleted)
    return total


def char_poly(n: int) -> TPoly:
    """det(t*I - F_n) over the TPoly ring; monic of degree n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    diag = TPoly([-H, ONE])  # t - h
    sup = TPoly([-ONE])
    sub = TPoly([ONE])
    rows = []
    for i in range(n):
        row = [T_ZERO] * n
        row[i] = diag
        if i + 1 < n:
            row[i + 1] = sup
        if i > 0:
            row[i - 1] = sub
        rows.append(row)
    return _hess_det_generic(rows, T_ZERO, T_ONE)


def minor_sum_closed_form(n: int, l: int) -> Poly:
    """Convolved polynomial F(l+1, n-l+1) as the double-binomial sum
    read off the characteristic polynomial: sum over i of
    C(n-i, i) * C(n-2i, l) * h^(n-2i-l).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= l <= n:
        raise ValueError("l must be in 0..n")
    coeffs = [0] * (n - l + 1)
    for i in range((n - l) // 2 + 1):
        coeffs[n - 2 * i - l] += binom(n - i, i) * binom(n - 2 * i, l)
    return Poly(coeffs)


def charpoly_shift_sides(n: int) -> tuple[TPoly, TPoly]:
    """(char_poly(n), classical Fibonacci expansion with t-h substituted).

    The second component is sum over i of C(n-i, i) * (t-h)^(n-2i);
    equality of the pair says the characteristic polynomial is the
    plain Fibonacci polynomial shifted by h.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    shift = TPoly([-H, ONE])
    rhs = T_ZERO
    for i in range(n // 2 + 1):
        rhs = rhs + binom(n - i, i) * shift ** (n - 2 * i)
    return char_poly(n), rhs
