"""Exact multiplicity counts for the cohomology of SL2 Frobenius kernels.

The central quantity is the number of lattice tuples
(a_1, ..., a_r, b_1, ..., b_r) in N^r x {0,1}^r solving the weight
equation, written here in doubled integer form so that odd inputs need
no half-integer bookkeeping (p an odd prime):

    m + 2*b_1 + 2*p*(a_1 + b_2) + ... + 2*p^(r-1)*(a_(r-1) + b_r)
      + 2*p^r*a_r  =  n * p^r.

For p = 2 there is no exterior part and the count runs over
(a_1, ..., a_r) in N^r with

    m + 2*a_1 + 4*a_2 + ... + 2^r*a_r = 2^r * n,

while the quantum variant gains a free unit-coefficient variable a_0:

    2*(a_0 + b_1) + 2*p*(a_1 + b_2) + ... + 2*p^r*a_r = n * p^r.

Everything reduces to digit equations

    t + (c_1 + d_1)*p + (c_2 + d_2)*p^2 + ... + (c_r + d_r)*p^r = N * p^r

over c_i >= 0, evaluated by a recursion memoized on (level, residual
target).  All counts are Python integers, hence exact at any input size.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import MutableMapping

__all__ = [
    "CountParams",
    "DigitEquation",
    "count_digit_equation",
    "graded_count",
    "graded_counts",
    "is_prime",
    "n_classical",
    "n_classical_alt_odd",
    "n_classical_p2",
    "n_quantum",
]

# Shared memo mappings may be handed to several counting calls (or threads).
# Entries are pure functions of their key, so concurrent use can at worst
# duplicate work; it never changes a returned value.
Cache = MutableMapping


def is_prime(p: int) -> bool:
    """Deterministic trial-division primality check; inputs here are small."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class CountParams:
    """Parameters (p, r, m, n) of one multiplicity count.

    p is the prime characteristic, r >= 1 the kernel index, and m, n >= 0
    the highest-weight and output-weight coefficients in units of the
    fundamental weight.
    """

    p: int
    r: int
    m: int
    n: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")
        if self.m < 0 or self.n < 0:
            raise ValueError(f"m and n must be >= 0, got m={self.m}, n={self.n}")


@dataclass(frozen=True)
class DigitEquation:
    """The equation  t + sum_i (c_i + d_i)*p^i = N*p^r  over c_i >= 0.

    ``offsets`` holds (d_1, ..., d_r), ``constant`` is t and
    ``target_multiplier`` is N.  The constant may exceed p - 1; carries are
    handled exactly by the counting recursion, not digit by digit.
    """

    p: int
    r: int
    offsets: tuple[int, ...]
    constant: int = 0
    target_multiplier: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "offsets", tuple(self.offsets))
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")
        if len(self.offsets) != self.r:
            raise ValueError(f"expected {self.r} offsets, got {len(self.offsets)}")
        if any(d < 0 for d in self.offsets):
            raise ValueError(f"offsets must be >= 0, got {self.offsets}")
        if self.constant < 0:
            raise ValueError(f"constant must be >= 0, got {self.constant}")
        if self.target_multiplier < 0:
            raise ValueError(
                f"target multiplier must be >= 0, got {self.target_multiplier}"
            )


def count_digit_equation(eq: DigitEquation, cache: Cache | None = None) -> int:
    """Exact number of solutions (c_1, ..., c_r) of a digit equation.

    Recursion over (level k, residual target T): level 0 accepts only
    T = 0, and level k sums the level k-1 counts over every admissible
    value of c_k.  A fresh memo is used per call unless ``cache`` is
    supplied, in which case entries are reused across calls.
    """
    memo: Cache = {} if cache is None else cache
    target = eq.target_multiplier * eq.p**eq.r - eq.constant
    return _count_exact(eq.p, eq.offsets, eq.r, target, memo)


def _count_exact(p: int, offsets: tuple[int, ...], k: int, target: int, memo: Cache) -> int:
    # Solutions of sum_{i <= k} (c_i + offsets[i-1]) * p^i = target.
    if target < 0:
        return 0
    if k == 0:
        return 1 if target == 0 else 0
    if k == 1:
        # c_1 is forced: (c_1 + d_1) * p = target.
        quot, rem = divmod(target, p)
        return 1 if rem == 0 and quot >= offsets[0] else 0
    key = ("eq", p, offsets[:k], target)
    hit = memo.get(key)
    if hit is not None:
        return hit
    step = p**k
    total = 0
    residual = target - offsets[k - 1] * step
    while residual >= 0:
        total += _count_exact(p, offsets, k - 1, residual, memo)
        residual -= step
    memo[key] = total
    return total


def _count_at_most(p: int, k: int, target: int, memo: Cache) -> int:
    # Number of (c_1, ..., c_k) >= 0 with sum c_i * p^i <= target; the slack
    # is what the quantum equation's free unit variable absorbs.
    if target < 0:
        return 0
    if k == 0:
        return 1
    if k == 1:
        return target // p + 1
    key = ("le", p, k, target)
    hit = memo.get(key)
    if hit is not None:
        return hit
    step = p**k
    total = 0
    residual = target
    while residual >= 0:
        total += _count_at_most(p, k - 1, residual, memo)
        residual -= step
    memo[key] = total
    return total


def _halved_count(p: int, r: int, m1: int, n1: int, memo: Cache) -> int:
    """Count (a, b) with m1 + b_1 + sum_{i<r} (a_i + b_{i+1})*p^i + a_r*p^r = n1*p^r.

    The constant part m1 is expanded in base p; digits beyond p^r move to
    the right-hand side, the unit digit joins b_1 as the equation constant,
    and the rest shift the a_i.  One digit count per binary tuple b.
    """
    digits = [(m1 // p**j) % p for j in range(r + 1)]
    target_mult = n1 - p * (m1 // p ** (r + 1))
    if target_mult < 0:
        return 0
    total = 0
    for bits in range(2**r):
        b = [(bits >> i) & 1 for i in range(r)]
        offsets = tuple(
            digits[i] + (b[i] if i < r else 0) for i in range(1, r + 1)
        )
        eq = DigitEquation(p, r, offsets, digits[0] + b[0], target_mult)
        total += count_digit_equation(eq, memo)
    return total


def n_classical(params: CountParams, cache: Cache | None = None) -> int:
    """Number of (a_1..a_r, b_1..b_r) solving the p-odd weight equation.

    Parity and bound short-circuits first: the doubled equation forces
    m = n (mod 2) and m <= n*p^r.  The surviving cases are halved to an
    integer equation and dispatched to the digit recursion.  For odd m, n
    the exact halving adds p^r to m and 1 to n, which leaves the doubled
    equation unchanged.
    """
    p, r, m, n = params.p, params.r, params.m, params.n
    if p == 2:
        raise ValueError("p = 2 has no exterior generators; use n_classical_p2")
    if (m - n) % 2:
        return 0
    if m > n * p**r:
        return 0
    if m % 2 == 0:
        m1, n1 = m // 2, n // 2
    else:
        m1, n1 = (m + p**r) // 2, (n + 1) // 2
    memo: Cache = {} if cache is None else cache
    return _halved_count(p, r, m1, n1, memo)


def n_classical_alt_odd(params: CountParams, cache: Cache | None = None) -> int:
    """Odd-case count under the substitution m -> (m+1)/2, n -> (n+p^r)/2.

    Does not agree with ``n_classical`` in general; it is kept so the two
    odd-case reductions can be compared against the enumeration ground
    truth (see the audit tests).  Requires p odd and m, n both odd.
    """
    p, r, m, n = params.p, params.r, params.m, params.n
    if p == 2:
        raise ValueError("odd-case reduction needs an odd prime")
    if m % 2 == 0 or n % 2 == 0:
        raise ValueError(f"m and n must both be odd, got m={m}, n={n}")
    memo: Cache = {} if cache is None else cache
    return _halved_count(p, r, (m + 1) // 2, (n + p**r) // 2, memo)


def n_classical_p2(params: CountParams, cache: Cache | None = None) -> int:
    """Number of (a_1, ..., a_r) with m + 2*a_1 + 4*a_2 + ... + 2^r*a_r = 2^r*n."""
    if params.p != 2:
        raise ValueError(f"p must be 2, got {params.p}")
    eq = DigitEquation(2, params.r, (0,) * params.r, params.m, params.n)
    return count_digit_equation(eq, cache)


def n_quantum(p: int, r: int, n: int, cache: Cache | None = None) -> int:
    """Number of (a_0..a_r, b_1..b_r) solving the quantum weight equation.

    The left side of  2*(a_0 + b_1) + 2*p*(a_1 + b_2) + ... + 2*p^r*a_r
    = n*p^r  is even, so odd n gives zero outright.  For even n, fixing a
    binary tuple b leaves a_0 as free slack, and the a-part is a bounded
    digit count.  p must be an odd prime.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n % 2:
        return 0
    memo: Cache = {} if cache is None else cache
    half = (n // 2) * p**r
    total = 0
    for bits in range(2**r):
        b = [(bits >> i) & 1 for i in range(r)]
        target = half - b[0] - sum(b[i] * p**i for i in range(1, r))
        total += _count_at_most(p, r, target, memo)
    return total


def graded_counts(params: CountParams) -> dict[int, int]:
    """All nonzero per-degree solution counts for one parameter tuple.

    The cohomological degree of a solution is 2*sum(a) + sum(b) for p odd
    and sum(a) for p = 2; the values of the returned map sum to the total
    count.
    """
    return dict(_graded_items(params.p, params.r, params.m, params.n))


def graded_count(params: CountParams, d: int) -> int:
    """Number of solutions whose cohomological degree is exactly d."""
    if d < 0:
        raise ValueError(f"degree must be >= 0, got {d}")
    return dict(_graded_items(params.p, params.r, params.m, params.n)).get(d, 0)


@lru_cache(maxsize=512)
def _graded_items(p: int, r: int, m: int, n: int) -> tuple[tuple[int, int], ...]:
    # One pass computes the whole degree histogram; per-degree queries read it.
    if p == 2:
        target = 2**r * n - m
        if target < 0 or target % 2:
            return ()
        variables = [(2**i, 1, False) for i in range(r, 0, -1)]
    else:
        doubled = n * p**r - m
        if doubled < 0 or doubled % 2:
            return ()
        target = doubled // 2
        variables = [(p**r, 2, False)]
        for i in range(r - 1, 0, -1):
            variables.append((p**i, 2, False))
            variables.append((p**i, 1, True))
        variables.append((1, 1, True))

    memo: dict[tuple[int, int], dict[int, int]] = {}

    def walk(idx: int, left: int) -> dict[int, int]:
        if idx == len(variables):
            return {0: 1} if left == 0 else {}
        key = (idx, left)
        hit = memo.get(key)
        if hit is not None:
            return hit
        coeff, deg, binary = variables[idx]
        hist: dict[int, int] = {}
        top = 1 if binary else left // coeff
        for v in range(top + 1):
            rem = left - coeff * v
            if rem < 0:
                break
            for sub_deg, cnt in walk(idx + 1, rem).items():
                key_deg = sub_deg + deg * v
                hist[key_deg] = hist.get(key_deg, 0) + cnt
        memo[key] = hist
        return hist

    return tuple(sorted(walk(0, target).items()))
