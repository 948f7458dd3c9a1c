"""The identity suite: every cross-module equality, run as data.

Each check streams (description, lhs, rhs) instances in lexicographic
parameter order; the first mismatch becomes the counterexample and the
suite never aborts early, so a report always carries one result per
check.  Randomized checks derive their generator from (seed, check_id),
making reports reproducible regardless of execution order.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .hessenberg import (
    HessMatrix,
    TPoly,
    T_ONE,
    build_fib_matrix,
    char_poly,
    charpoly_shift_sides,
    hess_det,
    minor_sum_closed_form,
    principal_minor,
    sum_principal_minors,
)
from .poly import H, ONE, ZERO, Poly, binom
from .quadext import QuadExt
from .sequences import (
    binet_scaled,
    convolved_closed_form,
    convolved_convolution,
    convolved_recurrence,
    fib,
    fib_combinatorial,
    lucas,
    lucas_decomposition_sides,
)
from .series import convolved_series


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    params: dict[str, int]
    passed: bool
    counterexample: str | None
    elapsed_ms: int


@dataclass(frozen=True)
class SuiteReport:
    results: tuple[CheckResult, ...]
    all_passed: bool
    bounds: dict[str, int]


Instance = tuple[str, object, object]


def _corrupted(value: object) -> object:
    """Flip one coefficient of a value (test-only failure injection)."""
    if isinstance(value, Poly):
        return value + ONE
    if isinstance(value, TPoly):
        return value + T_ONE
    if isinstance(value, QuadExt):
        return QuadExt(value.a + ONE, value.b)
    if isinstance(value, bool):
        return not value
    if isinstance(value, int):
        return value + 1
    raise TypeError(f"cannot corrupt {type(value).__name__}")


def _run_check(
    check_id: str,
    params: dict[str, int],
    instances: Iterable[Instance],
    corrupt: bool,
) -> CheckResult:
    start = time.perf_counter()
    passed = True
    counterexample = None
    ran_any = False
    for desc, lhs, rhs in instances:
        if corrupt:
            lhs = _corrupted(lhs)
            corrupt = False
        ran_any = True
        if lhs != rhs:
            passed = False
            counterexample = f"{desc}: lhs = {lhs} ; rhs = {rhs}"
            break
    if not ran_any:
        params = dict(params, skipped=1)
    elapsed_ms = int(1000 * (time.perf_counter() - start))
    return CheckResult(check_id, params, passed, counterexample, elapsed_ms)


def _random_poly(rng: random.Random, max_degree: int, max_coeff: int) -> Poly:
    degree = rng.randint(0, max_degree)
    return Poly([rng.randint(-max_coeff, max_coeff) for _ in range(degree + 1)])


def _naive_det(rows: list[list[Poly]]) -> Poly:
    """Cofactor expansion along the first column; the slow oracle."""
    n = len(rows)
    if n == 0:
        return ONE
    if n == 1:
        return rows[0][0]
    total = ZERO
    for i in range(n):
        if rows[i][0].is_zero():
            continue
        minor = [row[1:] for k, row in enumerate(rows) if k != i]
        term = rows[i][0] * _naive_det(minor)
        total = total + term if i % 2 == 0 else total - term
    return total


def _check_ring_axioms(r_max: int, n_max: int, rng: random.Random) -> Iterator[Instance]:
    for case in range(1000):
        p = _random_poly(rng, 12, 10**6)
        q = _random_poly(rng, 12, 10**6)
        w = _random_poly(rng, 12, 10**6)
        yield f"case={case} add_assoc", (p + q) + w, p + (q + w)
        yield f"case={case} add_comm", p + q, q + p
        yield f"case={case} mul_assoc", (p * q) * w, p * (q * w)
        yield f"case={case} mul_comm", p * q, q * p
        yield f"case={case} distrib", p * (q + w), p * q + p * w
        yield f"case={case} add_ident", p + ZERO, p
        yield f"case={case} mul_ident", p * ONE, p


def _check_five_way(r_max: int, n_max: int, rng: random.Random) -> Iterator[Instance]:
    for r in range(1, r_max + 1):
        from_series = convolved_series(r, n_max + 1)
        for j in range(n_max + 1):
            expected = convolved_closed_form(r, j)
            yield f"r={r} j={j} convolution", convolved_convolution(r, j), expected
            yield f"r={r} j={j} recurrence", convolved_recurrence(r, j + 1), expected
            yield f"r={r} j={j} series", from_series[j], expected


def _check_minor_sums(r_max: int, n_max: int, rng: random.Random) -> Iterator[Instance]:
    for n in range(1, min(n_max, 12) + 1):
        for l in range(n):
            yield (
                f"n={n} l={l}",
                sum_principal_minors(n, l),
                convolved_closed_form(l + 1, n - l),
            )


def _check_fib_comb(r_max: int, n_max: int, rng: random.Random) -> Iterator[Instance]:
    for n in range(1, 2 * n_max + 5):
        yield f"n={n}", fib(n), fib_combinatorial(n)


def _check_binet(r_max: int, n_max: int, rng: random.Random) -> Iterator[Instance]:
    for n in range(n_max + 1):
        diff, total = binet_scaled(n)
        scale = 2**n
        yield f"n={n} fib", diff, QuadExt(ZERO, scale * fib(n))
        yield f"n={n} lucas", total, QuadExt(scale * lucas(n), ZERO)


def _check_lucas_rel(r_max: int, n_max: int, rng: random.Random) -> Iterator[Instance]:
    for n in range(1, 2 * n_max + 5):
        yield f"n={n}", lucas(n), fib(n - 1) + fib(n + 1)


def _check_linear_term(r_max: int, n_max: int, rng: random.Random) -> Iterator[Instance]:
    for r in range(1, 10 * r_max + 1):
        yield f"r={r}", convolved_closed_form(r, 1), r * H


def _check_derivative_identity(r_max: int, n_max: int, rng: random.Random) -> Iterator[Instance]:
    for r in range(1, r_max + 1):
        for n in range(1, n_max + 1):
            lhs = n * convolved_closed_form(r, n)
            prev = convolved_closed_form(r + 1, n - 2) if n >= 2 else ZERO
            rhs = r * (H * convolved_closed_form(r + 1, n - 1) + 2 * prev)
            yield f"r={r} n={n}", lhs, rhs


def _check_decomposition(r_max: int, n_max: int, rng: random.Random) -> Iterator[Instance]:
    for r in range(1, r_max + 1):
        for j in range(2 * n_max // 3 + 1):
            lhs, rhs = lucas_decomposition_sides(r, j)
            yield f"r={r} j={j}", lhs, rhs


def _check_shape(r_max: int, n_max: int, rng: random.Random) -> Iterator[Instance]:
    for r in range(1, r_max + 1):
        for j in range(n_max + 1):
            p = convolved_closed_form(r, j)
            yield f"r={r} j={j} degree", p.degree, j
            parity_ok = all(c == 0 for i, c in enumerate(p.coeffs) if (i - j) % 2)
            yield f"r={r} j={j} parity", parity_ok, True
            yield f"r={r} j={j} leading", p.coeffs[-1], binom(j + r - 1, j)


def _check_specialization(r_max: int, n_max: int, rng: random.Random) -> Iterator[Instance]:
    hi = min(2 * n_max + 4, 20)
    a, b = 0, 1
    fibs = [0]
    while len(fibs) <= hi:
        fibs.append(b)
        a, b = b, a + b
    a, b = 0, 1
    pells = [0]
    while len(pells) <= hi:
        pells.append(b)
        a, b = b, 2 * b + a
    conv2 = [sum(fibs[i + 1] * fibs[m - i + 1] for i in range(m + 1)) for m in range(hi)]
    for n in range(hi + 1):
        yield f"n={n} fibonacci", fib(n)(1), fibs[n]
        yield f"n={n} pell", fib(n)(2), pells[n]
    for m in range(hi):
        yield f"m={m} conv2", convolved_closed_form(2, m)(1), conv2[m]


def _check_det_fib(r_max: int, n_max: int, rng: random.Random) -> Iterator[Instance]:
    for n in range(1, n_max + 11):
        yield f"n={n}", hess_det(build_fib_matrix(n)), fib(n + 1)


def _check_minor_product(r_max: int, n_max: int, rng: random.Random) -> Iterator[Instance]:
    from itertools import combinations

    for n in range(1, min(n_max, 10) + 1):
        for size in range(n + 1):
            for deleted in combinations(range(1, n + 1), size):
                product = ONE
                prev = 0
                for i in deleted:
                    product = product * fib(i - prev)
                    prev = i
                product = product * fib(n - prev + 1)
                desc = f"n={n} deleted={list(deleted)}"
                yield desc, principal_minor(n, deleted), product


def _check_charpoly_signs(r_max: int, n_max: int, rng: random.Random) -> Iterator[Instance]:
    for n in range(1, min(n_max, 12) + 1):
        cp = char_poly(n)
        for l in range(n + 1):
            expected = convolved_closed_form(l + 1, n - l)
            if (n - l) % 2:
                expected = -expected
            yield f"n={n} l={l}", cp.coefficient(l), expected


def _check_charpoly_closed_form(r_max: int, n_max: int, rng: random.Random) -> Iterator[Instance]:
    for n in range(1, min(n_max, 20) + 1):
        for l in range(n + 1):
            yield (
                f"n={n} l={l}",
                minor_sum_closed_form(n, l),
                convolved_closed_form(l + 1, n - l),
            )


def _check_charpoly_shift(r_max: int, n_max: int, rng: random.Random) -> Iterator[Instance]:
    for n in range(1, min(n_max, 12) + 1):
        lhs, rhs = charpoly_shift_sides(n)
        yield f"n={n} monic", lhs.is_monic() and lhs.degree == n, True
        yield f"n={n} shift", lhs, rhs


def _random_weight_instance(
    rng: random.Random, a1: int
) -> tuple[str, Poly, Poly]:
    n = rng.randint(1, 6)
    weights = [[_random_poly(rng, 0, 3) for _ in range(n)] for _ in range(n)]
    rows = []
    for i in range(n):
        row = [ZERO] * n
        for j in range(i, n):
            row[j] = weights[i][j]
        if i > 0:
            row[i - 1] = Poly([-1])
        rows.append(row)
    seq = [Poly([a1])]
    for m in range(1, n + 1):
        acc = ZERO
        for i in range(1, m + 1):
            acc = acc + weights[i - 1][m - 1] * seq[i - 1]
        seq.append(acc)
    det = hess_det(HessMatrix(rows))
    return f"n={n} a1={a1}", Poly([a1]) * det, seq[n]


def _check_hessenberg_recurrence(r_max: int, n_max: int, rng: random.Random) -> Iterator[Instance]:
    for case in range(200):
        desc, lhs, rhs = _random_weight_instance(rng, 1)
        yield f"case={case} {desc}", lhs, rhs
    desc, lhs, rhs = _random_weight_instance(rng, 3)
    yield f"case=200 {desc}", lhs, rhs


def _check_hessenberg_naive(r_max: int, n_max: int, rng: random.Random) -> Iterator[Instance]:
    for case in range(60):
        n = rng.randint(1, 5)
        rows = []
        for i in range(n):
            row = [ZERO] * n
            for j in range(max(0, i - 1), n):
                row[j] = _random_poly(rng, 1, 3)
            rows.append(row)
        m = HessMatrix(rows)
        yield f"case={case} n={n}", hess_det(m), _naive_det([list(r) for r in rows])


_CHECKS: tuple[tuple[str, Callable[[int, int, random.Random], Iterator[Instance]]], ...] = (
    ("ring_axioms", _check_ring_axioms),
    ("five_way", _check_five_way),
    ("minor_sums", _check_minor_sums),
    ("fib_comb", _check_fib_comb),
    ("binet", _check_binet),
    ("lucas_rel", _check_lucas_rel),
    ("linear_term", _check_linear_term),
    ("derivative_identity", _check_derivative_identity),
    ("decomposition", _check_decomposition),
    ("shape", _check_shape),
    ("specialization", _check_specialization),
    ("det_fib", _check_det_fib),
    ("minor_product", _check_minor_product),
    ("charpoly_signs", _check_charpoly_signs),
    ("charpoly_closed_form", _check_charpoly_closed_form),
    ("charpoly_shift", _check_charpoly_shift),
    ("hessenberg_recurrence", _check_hessenberg_recurrence),
    ("hessenberg_naive", _check_hessenberg_naive),
)


def check_ids() -> list[str]:
    return sorted(check_id for check_id, _ in _CHECKS)


def run_suite(
    r_max: int = 5,
    n_max: int = 30,
    seed: int = 0,
    _corrupt: str | None = None,
) -> SuiteReport:
    """Run every check; failures are data, not exceptions.

    Results are ordered by check_id.  `_corrupt` names a check whose
    first instance gets one coefficient flipped -- the harness
    self-test that proves a failure actually produces a counterexample.
    """
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    if seed < 0:
        raise ValueError("seed must be >= 0")
    results = []
    for check_id, generate in sorted(_CHECKS):
        rng = random.Random(f"{seed}:{check_id}")
        params = {"r_max": r_max, "n_max": n_max}
        instances = generate(r_max, n_max, rng)
        results.append(_run_check(check_id, params, instances, _corrupt == check_id))
    return SuiteReport(
        results=tuple(results),
        all_passed=all(r.passed for r in results),
        bounds={"r_max": r_max, "n_max": n_max, "seed": seed},
    )


def report_to_dict(report: SuiteReport) -> dict:
    """SuiteReport as the documented JSON structure."""
    results = []
    for r in report.results:
        entry: dict = {
            "check_id": r.check_id,
            "params": dict(r.params),
            "passed": r.passed,
        }
        if r.counterexample is not None:
            entry["counterexample"] = r.counterexample
        entry["elapsed_ms"] = r.elapsed_ms
        results.append(entry)
    return {
        "bounds": dict(report.bounds),
        "all_passed": report.all_passed,
        "results": results,
    }


def convolved_table(r_list: list[int], n_max: int) -> list[list[Poly]]:
    """Rows n = 0..n_max of the convolved polynomials, one column per r.

    Row 0 is zero by the indexing convention (the sequences start 0, 1,
    r*h, ...); row n >= 1 holds coefficient n-1 of each generating
    function power.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    for r in r_list:
        if r < 1:
            raise ValueError("every r must be >= 1")
    rows = [[ZERO for _ in r_list]]
    for n in range(1, n_max + 1):
        rows.append([convolved_closed_form(r, n - 1) for r in r_list])
    return rows
