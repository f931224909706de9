"""Free-module data of the reduced Borel-kernel cohomology ring.

The reduced ring is the invariant subring of a polynomial ring on
generators x_1, ..., x_r spanned by the monomials x^a whose exponents
satisfy the digit congruence

    a_1 + a_2*p + ... + a_(r-1)*p^(r-2)  ==  0   (mod p^(r-1)).

It is a free module over R = k[x_1^(p^(r-1)), x_2^(p^(r-2)), ..., x_r]
on a finite monomial basis: the residue tuples (a_1, ..., a_(r-1)) with
0 <= a_i < p^(r-i) meeting the congruence.  Generators have
cohomological degree 2 for odd p and 1 for p = 2, which fixes the
grading of the Hilbert data below.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from ._series import geometric, mul_trunc
from .counting import is_prime

__all__ = ["ReducedBasis", "basis", "hilbert_coeffs", "hilbert_coeffs_rational"]


@dataclass(frozen=True)
class ReducedBasis:
    """The free-module basis: exponent tuples, lexicographically sorted."""

    p: int
    r: int
    elements: tuple[tuple[int, ...], ...]
    generator_degree: int

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item) -> bool:
        return tuple(item) in self.elements

    def to_json(self) -> str:
        """JSON array of integer arrays, lexicographic order."""
        return json.dumps([list(e) for e in self.elements], separators=(",", ":"))


def _validate(p: int, r: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")


def basis(p: int, r: int) -> ReducedBasis:
    """Enumerate the basis exponent tuples (a_1, ..., a_(r-1)).

    Scans the box 0 <= a_i < p^(r-i) and keeps the tuples satisfying the
    digit congruence; for r = 1 the basis is the single empty tuple (the
    ring is free of rank one over R = k[x_1]).
    """
    _validate(p, r)
    mod = p ** (r - 1)
    found = []
    for combo in itertools.product(*(range(p ** (r - i)) for i in range(1, r))):
        if sum(a * p**i for i, a in enumerate(combo)) % mod == 0:
            found.append(combo)
    found.sort()
    return ReducedBasis(p, r, tuple(found), 2 if p != 2 else 1)


def hilbert_coeffs(p: int, r: int, d_max: int) -> list[int]:
    """Graded dimensions of the reduced ring, degrees 0..d_max.

    The coefficient at degree d counts the exponent tuples
    (a_1, ..., a_r) satisfying the digit congruence with
    g * (a_1 + ... + a_r) = d, where g is the generator degree.
    """
    _validate(p, r)
    if d_max < 0:
        raise ValueError(f"d_max must be >= 0, got {d_max}")
    g = 2 if p != 2 else 1
    mod = p ** (r - 1)
    out = [0] * (d_max + 1)
    for s in range(d_max // g + 1):
        out[g * s] = _count_graded_monomials(p, r, s, mod)
    return out


def _count_graded_monomials(p: int, r: int, s: int, mod: int) -> int:
    # Tuples a in N^r with sum(a) = s and sum a_i p^(i-1) == 0 (mod mod);
    # the x_r coefficient p^(r-1) is 0 mod p^(r-1), so it needs no case.
    state = {(s, 0): 1}  # (remaining sum, residue) -> count
    for i in range(1, r + 1):
        coeff = p ** (i - 1) % mod
        nxt: dict[tuple[int, int], int] = {}
        for (left, res), cnt in state.items():
            for a in range(left + 1):
                key = (left - a, (res + coeff * a) % mod)
                nxt[key] = nxt.get(key, 0) + cnt
        state = nxt
    return sum(cnt for (left, res), cnt in state.items() if left == 0 and res == 0)


def hilbert_coeffs_rational(p: int, r: int, d_max: int) -> list[int]:
    """Same graded dimensions via the closed rational form.

    Expands (sum over basis elements of t^(g*|b|)) divided by the product
    of (1 - t^(g*p^(r-i))) for i = 1..r, by series multiplication; the
    denominators are the degrees of the free generators of R.
    """
    _validate(p, r)
    if d_max < 0:
        raise ValueError(f"d_max must be >= 0, got {d_max}")
    bas = basis(p, r)
    g = bas.generator_degree
    numerator = [0] * (d_max + 1)
    for element in bas.elements:
        degree = g * sum(element)
        if degree <= d_max:
            numerator[degree] += 1
    series = numerator
    for i in range(1, r + 1):
        series = mul_trunc(series, geometric(g * p ** (r - i), d_max), d_max)
    return series
