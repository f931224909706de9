"""Brute-force enumeration of solution tuples, the ground-truth engine.

Nested loops bounded by the linear constraints and nothing else, so the
code stays auditable by eye.  Work grows with the candidate bound box,
hence ``brute_count`` and friends refuse very large instances unless
forced.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterator

from .counting import CountParams, is_prime

__all__ = [
    "FORCE_THRESHOLD",
    "OracleRefused",
    "SolutionTuple",
    "brute_count",
    "brute_graded",
    "brute_quantum",
    "candidate_box_size",
    "enumerate_quantum_solutions",
    "enumerate_solutions",
]

# Refusal threshold on the candidate box, keeping accidental runs short.
FORCE_THRESHOLD = 10_000_000


class OracleRefused(RuntimeError):
    """Raised when an enumeration is too large to run without force."""


@dataclass(frozen=True)
class SolutionTuple:
    """One lattice solution; a0 is set only for the quantum equation."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    a0: int | None = None

    def degree(self) -> int:
        """Cohomological degree: 2*sum(a) + sum(b) when there is an
        exterior part, plain sum(a) otherwise (the p = 2 case)."""
        if not self.b and self.a0 is None:
            return sum(self.a)
        base = 2 * self.a0 if self.a0 is not None else 0
        return base + 2 * sum(self.a) + sum(self.b)


def _satisfies_classical(p: int, r: int, m: int, n: int,
                         a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    # Doubled defining equation, substituted verbatim.
    if p == 2:
        return m + sum(2**i * a[i - 1] for i in range(1, r + 1)) == 2**r * n
    lhs = m + 2 * b[0]
    for i in range(1, r):
        lhs += 2 * p**i * (a[i - 1] + b[i])
    lhs += 2 * p**r * a[r - 1]
    return lhs == n * p**r


def _satisfies_quantum(p: int, r: int, n: int, a0: int,
                       a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    lhs = 2 * (a0 + b[0])
    for i in range(1, r):
        lhs += 2 * p**i * (a[i - 1] + b[i])
    lhs += 2 * p**r * a[r - 1]
    return lhs == n * p**r


def candidate_box_size(params: CountParams) -> int:
    """Size of the rectangular candidate box the enumeration walks.

    Product of the per-variable bounds (aᵢ <= (n*p^r - m) / (2*p^i) for
    p odd, (2^r*n - m) / 2^i for p = 2, both floor-rounded, times 2 per
    binary variable).  Used as the a-priori work estimate for refusals.
    """
    p, r, m, n = params.p, params.r, params.m, params.n
    if p == 2:
        target = 2**r * n - m
        if target < 0:
            return 0
        return prod(target // 2**i + 1 for i in range(1, r + 1))
    target = n * p**r - m
    if target < 0:
        return 0
    return 2**r * prod(target // (2 * p**i) + 1 for i in range(1, r + 1))


def _check_budget(estimate: int, force: bool) -> None:
    if estimate > FORCE_THRESHOLD and not force:
        raise OracleRefused(
            f"candidate box has {estimate} cells (> {FORCE_THRESHOLD}); "
            "pass force=True to run anyway"
        )


def enumerate_solutions(params: CountParams) -> Iterator[SolutionTuple]:
    """Yield every solution exactly once, in lexicographic order of
    (a_1, ..., a_r, b_1, ..., b_r).

    Each tuple is substituted back into its defining equation before it
    is yielded.
    """
    p, r, m, n = params.p, params.r, params.m, params.n
    if p == 2:
        for a in _walk_p2(r, m, n):
            tup = SolutionTuple(a, ())
            assert _satisfies_classical(p, r, m, n, tup.a, tup.b)
            yield tup
        return
    for a, b in _walk_classical(p, r, m, n):
        tup = SolutionTuple(a, b)
        assert _satisfies_classical(p, r, m, n, tup.a, tup.b)
        yield tup


def _walk_classical(p: int, r: int, m: int, n: int):
    # Lexicographic descent: a_1, ..., a_r, then b_1, ..., b_r.
    target = n * p**r - m
    if target < 0:
        return
    acoef = [2 * p**i for i in range(1, r + 1)]
    bcoef = [2 * p**i for i in range(r)]
    a = [0] * r
    b = [0] * r

    def over_b(j: int, left: int):
        if j == r:
            if left == 0:
                yield tuple(a), tuple(b)
            return
        for bj in (0, 1):
            rem = left - bcoef[j] * bj
            if rem >= 0:
                b[j] = bj
                yield from over_b(j + 1, rem)

    def over_a(i: int, left: int):
        if i == r:
            yield from over_b(0, left)
            return
        c = acoef[i]
        for ai in range(left // c + 1):
            a[i] = ai
            yield from over_a(i + 1, left - c * ai)

    yield from over_a(0, target)


def _walk_p2(r: int, m: int, n: int):
    target = 2**r * n - m
    if target < 0:
        return
    coef = [2**i for i in range(1, r + 1)]
    a = [0] * r

    def over_a(i: int, left: int):
        if i == r:
            if left == 0:
                yield tuple(a)
            return
        c = coef[i]
        for ai in range(left // c + 1):
            a[i] = ai
            yield from over_a(i + 1, left - c * ai)

    yield from over_a(0, target)


def brute_count(params: CountParams, *, force: bool = False) -> int:
    """Streaming count of the solutions, no tuples materialized.

    Refuses when the candidate box exceeds FORCE_THRESHOLD unless forced.
    """
    _check_budget(candidate_box_size(params), force)
    p, r, m, n = params.p, params.r, params.m, params.n
    if p == 2:
        return _count_p2(r, m, n)
    return _count_classical(p, r, m, n)


def _count_classical(p: int, r: int, m: int, n: int) -> int:
    target = n * p**r - m
    if target < 0:
        return 0
    acoef = [2 * p**i for i in range(1, r + 1)]
    bcoef = [2 * p**i for i in range(r)]

    def over_b(j: int, left: int) -> int:
        if j == r:
            return 1 if left == 0 else 0
        hits = over_b(j + 1, left)
        if left >= bcoef[j]:
            hits += over_b(j + 1, left - bcoef[j])
        return hits

    def over_a(i: int, left: int) -> int:
        if i == r:
            return over_b(0, left)
        c = acoef[i]
        return sum(over_a(i + 1, left - c * ai) for ai in range(left // c + 1))

    return over_a(0, target)


def _count_p2(r: int, m: int, n: int) -> int:
    target = 2**r * n - m
    if target < 0:
        return 0
    coef = [2**i for i in range(1, r + 1)]

    def over_a(i: int, left: int) -> int:
        if i == r:
            return 1 if left == 0 else 0
        c = coef[i]
        return sum(over_a(i + 1, left - c * ai) for ai in range(left // c + 1))

    return over_a(0, target)


def brute_graded(params: CountParams, d: int, *, force: bool = False) -> int:
    """Number of solutions of cohomological degree exactly d."""
    if d < 0:
        raise ValueError(f"degree must be >= 0, got {d}")
    _check_budget(candidate_box_size(params), force)
    return sum(1 for tup in enumerate_solutions(params) if tup.degree() == d)


def _quantum_box_size(p: int, r: int, n: int) -> int:
    target = n * p**r
    if target % 2:
        return 0
    return 2**r * prod(target // (2 * p**i) + 1 for i in range(1, r + 1))


def enumerate_quantum_solutions(p: int, r: int, n: int) -> Iterator[SolutionTuple]:
    """Yield quantum solutions in lexicographic order of
    (a_0, a_1, ..., a_r, b_1, ..., b_r)."""
    _validate_quantum(p, r, n)
    target = n * p**r
    if target % 2:
        return
    half = target // 2
    acoef = [p**i for i in range(1, r + 1)]
    bcoef = [p**i for i in range(r)]
    a = [0] * r
    b = [0] * r

    def over_b(j: int, left: int):
        if j == r:
            if left == 0:
                yield tuple(a), tuple(b)
            return
        for bj in (0, 1):
            rem = left - bcoef[j] * bj
            if rem >= 0:
                b[j] = bj
                yield from over_b(j + 1, rem)

    def over_a(i: int, left: int):
        if i == r:
            yield from over_b(0, left)
            return
        c = acoef[i]
        for ai in range(left // c + 1):
            a[i] = ai
            yield from over_a(i + 1, left - c * ai)

    for a0 in range(half + 1):
        for atup, btup in over_a(0, half - a0):
            tup = SolutionTuple(atup, btup, a0=a0)
            assert _satisfies_quantum(p, r, n, a0, atup, btup)
            yield tup


def brute_quantum(p: int, r: int, n: int, *, force: bool = False) -> int:
    """Streaming count of quantum solutions; a_0 soaks up the slack, so the
    walk runs over (a_1, ..., a_r, b_1, ..., b_r) only."""
    _validate_quantum(p, r, n)
    _check_budget(_quantum_box_size(p, r, n), force)
    target = n * p**r
    if target % 2:
        return 0
    half = target // 2
    acoef = [p**i for i in range(1, r + 1)]
    bcoef = [p**i for i in range(r)]

    def over_b(j: int, left: int) -> int:
        if j == r:
            return 1  # a_0 = left >= 0 is forced
        hits = over_b(j + 1, left)
        if left >= bcoef[j]:
            hits += over_b(j + 1, left - bcoef[j])
        return hits

    def over_a(i: int, left: int) -> int:
        if i == r:
            return over_b(0, left)
        c = acoef[i]
        return sum(over_a(i + 1, left - c * ai) for ai in range(left // c + 1))

    return over_a(0, half)


def _validate_quantum(p: int, r: int, n: int) -> None:
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
