"""The polynomial sequences and the independent routes to them.

fib/lucas are the generalized Fibonacci and Lucas polynomials in the
formal symbol h (specialize afterwards with Poly.compose: h -> 1 gives
Fibonacci numbers, h -> 2 Pell numbers, and so on).  The convolved
family, coefficient j of (1 - h*t - t^2)^(-r), is computed three
different ways here -- a double-binomial closed form, r-fold sequence
convolution, and a three-term recurrence in (r, n) -- so that the
routes can be checked against each other and against the series and
minor-sum routes in their own modules.

Memo tables only ever grow and are filled under a lock; all observable
behavior is pure.
"""
from __future__ import annotations

import threading

from .poly import H, ONE, ZERO, Poly, binom
from .quadext import QuadExt

DISC = Poly([4, 0, 1])  # h^2 + 4

_lock = threading.Lock()
_fib: list[Poly] = [ZERO, ONE]
_lucas: list[Poly] = [Poly([2]), H]
# _conv[r] is the prefix of the r-fold self-convolution of (fib(1), fib(2), ...)
_conv: dict[int, list[Poly]] = {}
# _rec[r][n] holds the recurrence route; row 0 is the convolution unit.
_rec: dict[int, list[Poly]] = {}


def fib(n: int) -> Poly:
    """n-th Fibonacci polynomial: 0, 1, h, h^2 + 1, h^3 + 2h, ..."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n >= len(_fib):
        with _lock:
            while len(_fib) <= n:
                _fib.append(H * _fib[-1] + _fib[-2])
    return _fib[n]


def lucas(n: int) -> Poly:
    """n-th Lucas polynomial: 2, h, h^2 + 2, h^3 + 3h, ..."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n >= len(_lucas):
        with _lock:
            while len(_lucas) <= n:
                _lucas.append(H * _lucas[-1] + _lucas[-2])
    return _lucas[n]


def fib_combinatorial(n: int) -> Poly:
    """fib(n) by direct summation of binomial diagonal terms, n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    coeffs = [0] * n
    for i in range((n - 1) // 2 + 1):
        coeffs[n - 1 - 2 * i] = binom(n - 1 - i, i)
    return Poly(coeffs)


def binet_scaled(n: int) -> tuple[QuadExt, QuadExt]:
    """Denominator-free root forms ((h+s)^n - (h-s)^n, (h+s)^n + (h-s)^n).

    With s^2 = h^2 + 4 these equal 2^n * s * fib(n) and 2^n * lucas(n):
    the root formulas for the two sequences, cleared of halves.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    plus = QuadExt(H, ONE) ** n
    minus = QuadExt(H, -ONE) ** n
    return plus - minus, plus + minus


def convolved_closed_form(r: int, j: int) -> Poly:
    """Convolved polynomial F(r, j+1) as a double-binomial sum over h^(j-2l)."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if j < 0:
        raise ValueError("j must be >= 0")
    coeffs = [0] * (j + 1)
    for l in range(j // 2 + 1):
        coeffs[j - 2 * l] = binom(j + r - l - 1, j - l) * binom(j - l, l)
    return Poly(coeffs)


def _conv_prefix(r: int, length: int) -> list[Poly]:
    """Prefix of the r-fold self-convolution of (fib(1), fib(2), ...)."""
    with _lock:
        prefix = _conv.get(r)
        have = len(prefix) if prefix else 0
    if prefix is not None and have >= length:
        return prefix[:length]
    if r == 1:
        fresh = [fib(i + 1) for i in range(length)]
    else:
        lower = _conv_prefix(r - 1, length)
        base = [fib(i + 1) for i in range(length)]
        fresh = []
        for m in range(length):
            acc = ZERO
            for i in range(m + 1):
                acc = acc + lower[i] * base[m - i]
            fresh.append(acc)
    with _lock:
        prev = _conv.get(r)
        if prev is None or len(prev) < len(fresh):
            _conv[r] = fresh
    return fresh


def convolved_convolution(r: int, m: int) -> Poly:
    """Convolved polynomial F(r, m+1) by r-fold discrete convolution.

    Computed as r-1 pairwise prefix convolutions, never by enumerating
    the compositions of m.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    return _conv_prefix(r, m + 1)[m]


def _rec_row(r: int, n: int) -> list[Poly]:
    row = _rec.get(r)
    if row is not None and len(row) > n:
        return row
    if r == 0:
        # the convolution unit: 1 at index 1, 0 elsewhere
        row = [ZERO, ONE] + [ZERO] * max(0, n - 1)
        _rec[0] = row
        return row
    below = _rec_row(r - 1, n)
    row = _rec.get(r) or [ZERO, ONE]
    while len(row) <= n:
        k = len(row)
        row.append(below[k] + H * row[k - 1] + row[k - 2])
    _rec[r] = row
    return row


def convolved_recurrence(r: int, n: int) -> Poly:
    """Convolved polynomial F(r, n) by the three-term recurrence

        F(r, n) = F(r-1, n) + h*F(r, n-1) + F(r, n-2),   n >= 2,

    with F(r, 0) = 0, F(r, 1) = 1 and the convolution unit as row r = 0.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    with _lock:
        return _rec_row(r, n)[n]


def check_derivative_identity(r: int, n: int) -> bool:
    """True iff n*F(r, n+1) = r*(h*F(r+1, n) + 2*F(r+1, n-1)) holds exactly.

    This is the identity produced by differentiating the generating
    function, which raises the convolution order by one.
    """
    if r < 1 or n < 1:
        raise ValueError("requires r >= 1 and n >= 1")
    lhs = n * convolved_closed_form(r, n)
    prev = convolved_closed_form(r + 1, n - 2) if n >= 2 else ZERO
    rhs = r * (H * convolved_closed_form(r + 1, n - 1) + 2 * prev)
    return lhs == rhs


def lucas_decomposition_sides(r: int, j: int) -> tuple[Poly, Poly]:
    """Both sides of the Fibonacci/Lucas decomposition of F(r, j+1),
    multiplied by (h^2+4)^(r-1) so the identity lives in Z[h].

    Returns (lhs, rhs); the identity under test is lhs == rhs.  Terms of
    even combined parity pick up a Lucas factor, odd ones a Fibonacci
    factor, and the parity condition makes every cleared exponent a
    nonnegative integer.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if j < 0:
        raise ValueError("j must be >= 0")
    lhs = convolved_closed_form(r, j) * DISC ** (r - 1)
    rhs = ZERO
    for l in range(r):
        weight = binom(r + l - 1, l) * binom(r - l + j - 1, j)
        if weight == 0:
            continue
        if (r + l) % 2 == 0:
            term = DISC ** (r - 1 - (r + l) // 2) * lucas(r + j - l)
        else:
            term = DISC ** (r - 1 - (r + l - 1) // 2) * fib(r + j - l)
        rhs = rhs + weight * term
    return lhs, rhs
