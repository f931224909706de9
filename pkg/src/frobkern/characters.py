"""Weight characters and Poincare data assembled from the counts.

Weights live on the single integer lattice spanned by the fundamental
weight; the simple root is twice the fundamental weight, so naturally
root-valued data (the quantum characters) sits on even integers.  The
Frobenius untwist is a uniform relabeling of weights by p^r and carries
no combinatorial content, so every weight reported here is untwisted.

A character built from contributions with weight parameter up to some
bound carries that bound as data (``trunc``); mixing two differently
truncated characters raises instead of silently comparing incomplete
series.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from ._series import geometric, mul_trunc
from .counting import (
    Cache,
    CountParams,
    graded_counts,
    is_prime,
    n_classical,
    n_classical_p2,
    n_quantum,
)

__all__ = [
    "CharacterPoly",
    "GradedCharacter",
    "char_Br",
    "char_Gr",
    "char_quantum_Br",
    "char_quantum_Gr",
    "graded_char_Br",
    "poincare_Ur",
    "weyl_char_sl2",
]


def _merge_trunc(x: int | None, y: int | None) -> int | None:
    if x is None:
        return y
    if y is None:
        return x
    if x != y:
        raise ValueError(f"mixed truncation bounds {x} and {y}")
    return x


class CharacterPoly:
    """Finitely supported map from integer weights to multiplicities.

    Multiplicities are exact nonnegative integers and zero coefficients
    are never stored.

    >>> weyl_char_sl2(2).coefficients()
    {-2: 1, 0: 1, 2: 1}
    >>> (weyl_char_sl2(0) + 2 * weyl_char_sl2(1)).coefficients()
    {-1: 2, 0: 1, 1: 2}
    """

    __slots__ = ("_coeffs", "trunc")

    def __init__(self, coeffs: Mapping[int, int] | None = None,
                 trunc: int | None = None) -> None:
        clean: dict[int, int] = {}
        for w, c in (coeffs or {}).items():
            if not isinstance(w, int) or not isinstance(c, int):
                raise TypeError(f"weights and multiplicities must be int, got {w!r}: {c!r}")
            if c < 0:
                raise ValueError(f"negative multiplicity {c} at weight {w}")
            if c:
                clean[w] = c
        self._coeffs = clean
        self.trunc = trunc

    def coefficient(self, weight: int) -> int:
        return self._coeffs.get(weight, 0)

    def coefficients(self) -> dict[int, int]:
        """Fresh weight -> multiplicity dict, weights ascending."""
        return {w: self._coeffs[w] for w in sorted(self._coeffs)}

    def support(self) -> list[int]:
        return sorted(self._coeffs)

    def mass(self) -> int:
        """Total multiplicity (the dimension of the underlying module)."""
        return sum(self._coeffs.values())

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterPoly):
            return NotImplemented
        if (self.trunc is not None and other.trunc is not None
                and self.trunc != other.trunc):
            raise ValueError(
                f"cannot compare characters truncated at {self.trunc} and {other.trunc}"
            )
        return self._coeffs == other._coeffs and self.trunc == other.trunc

    __hash__ = None  # mutable-bound container semantics

    def __add__(self, other: "CharacterPoly") -> "CharacterPoly":
        if not isinstance(other, CharacterPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for w, c in other._coeffs.items():
            out[w] = out.get(w, 0) + c
        return CharacterPoly(out, _merge_trunc(self.trunc, other.trunc))

    def __sub__(self, other: "CharacterPoly") -> "CharacterPoly":
        """Exact difference; raises if any multiplicity would go negative."""
        if not isinstance(other, CharacterPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for w, c in other._coeffs.items():
            out[w] = out.get(w, 0) - c
        return CharacterPoly(out, _merge_trunc(self.trunc, other.trunc))

    def __mul__(self, k: int) -> "CharacterPoly":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError(f"scalar must be >= 0, got {k}")
        return CharacterPoly({w: k * c for w, c in self._coeffs.items()}, self.trunc)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        inner = ", ".join(f"{w}: {c}" for w, c in self.coefficients().items())
        bound = f", trunc={self.trunc}" if self.trunc is not None else ""
        return f"CharacterPoly({{{inner}}}{bound})"

    def to_json(self) -> str:
        """Canonical JSON, bit-exact across platforms: weights ascending,
        every number a signed decimal string."""
        coeffs = {str(w): str(self._coeffs[w]) for w in sorted(self._coeffs)}
        return json.dumps(
            {"unit": "omega", "trunc": self.trunc, "coeffs": coeffs},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "CharacterPoly":
        data = json.loads(text)
        if data.get("unit") != "omega":
            raise ValueError(f"unexpected weight unit {data.get('unit')!r}")
        trunc = data.get("trunc")
        if trunc is not None and not isinstance(trunc, int):
            raise ValueError(f"trunc must be an integer or null, got {trunc!r}")
        coeffs = {int(w): int(c) for w, c in data.get("coeffs", {}).items()}
        return cls(coeffs, trunc)


class GradedCharacter:
    """Characters indexed by cohomological degree, up to a stated bound.

    Degrees above the bound were never computed, so querying them raises
    rather than pretending the answer is zero.
    """

    __slots__ = ("_by_degree", "d_max")

    def __init__(self, by_degree: Mapping[int, CharacterPoly], d_max: int) -> None:
        if d_max < 0:
            raise ValueError(f"degree bound must be >= 0, got {d_max}")
        self._by_degree = {d: chi for d, chi in by_degree.items() if chi}
        for d in self._by_degree:
            if d < 0 or d > d_max:
                raise ValueError(f"degree {d} outside [0, {d_max}]")
        self.d_max = d_max

    def at_degree(self, d: int) -> CharacterPoly:
        if d < 0:
            raise ValueError(f"degree must be >= 0, got {d}")
        if d > self.d_max:
            raise ValueError(f"degree {d} exceeds the truncation bound {self.d_max}")
        return self._by_degree.get(d, CharacterPoly())

    def degrees(self) -> list[int]:
        """Degrees with a nonzero character, ascending."""
        return sorted(self._by_degree)

    def total(self) -> CharacterPoly:
        """Sum over all stored degrees (a plain regrouping of solutions)."""
        out: dict[int, int] = {}
        for chi in self._by_degree.values():
            for w, c in chi.coefficients().items():
                out[w] = out.get(w, 0) + c
        return CharacterPoly(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self.d_max == other.d_max and self._by_degree == other._by_degree

    __hash__ = None


def weyl_char_sl2(n: int) -> CharacterPoly:
    """Character of the (n+1)-dimensional induced module:
    e(n) + e(n-2) + ... + e(-n)."""
    if n < 0:
        raise ValueError(f"weight must be >= 0, got {n}")
    return CharacterPoly({w: 1 for w in range(-n, n + 1, 2)})


def _count_engine(p: int):
    return n_classical_p2 if p == 2 else n_classical


def char_Br(p: int, r: int, m: int, n_max: int, cache: Cache | None = None) -> CharacterPoly:
    """Total character of the Borel-kernel cohomology at highest weight m,
    assembled for output weights 0..n_max.

    The stored coefficients are exact; the bound only says which weights
    were computed at all.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    engine = _count_engine(p)
    memo: Cache = {} if cache is None else cache
    coeffs = {}
    for n in range(n_max + 1):
        coeffs[n] = engine(CountParams(p, r, m, n), memo)
    return CharacterPoly(coeffs, trunc=n_max)


def char_Gr(p: int, r: int, m: int, n_max: int, cache: Cache | None = None) -> CharacterPoly:
    """Truncated character of the full-kernel cohomology of the induced
    module of weight m: the weight-n multiplicity times the n-th induced
    character, summed for n = 0..n_max.

    Arbitrarily large n contribute to every low weight, so no coefficient
    of the result is final; the truncation bound is part of the data.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    engine = _count_engine(p)
    memo: Cache = {} if cache is None else cache
    out: dict[int, int] = {}
    for n in range(n_max + 1):
        cnt = engine(CountParams(p, r, m, n), memo)
        if cnt:
            for w in range(-n, n + 1, 2):
                out[w] = out.get(w, 0) + cnt
    return CharacterPoly(out, trunc=n_max)


def graded_char_Br(p: int, r: int, m: int, d_max: int) -> GradedCharacter:
    """Degree-by-degree character of the Borel-kernel cohomology at
    highest weight m, degrees 0..d_max.

    A solution of degree d has weight n <= (m + d*p^r) / p^r, so each
    stored degree is complete (no truncation inside a degree).
    """
    if d_max < 0:
        raise ValueError(f"d_max must be >= 0, got {d_max}")
    CountParams(p, r, m, 0)  # validate p, r, m
    by_degree: dict[int, dict[int, int]] = {}
    n_hi = (m + d_max * p**r) // p**r
    for n in range(n_hi + 1):
        if p != 2 and (m - n) % 2:
            continue
        for d, cnt in graded_counts(CountParams(p, r, m, n)).items():
            if d <= d_max:
                by_degree.setdefault(d, {})[n] = cnt
    return GradedCharacter(
        {d: CharacterPoly(cs) for d, cs in by_degree.items()}, d_max
    )


def poincare_Ur(p: int, r: int, d_max: int) -> list[int]:
    """Dimensions of the unipotent-kernel cohomology by degree, 0..d_max.

    For odd p the ring has r polynomial generators of degree 2 and r
    exterior generators of degree 1; for p = 2, r polynomial generators
    of degree 1.  No weight condition enters, only the grading.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if d_max < 0:
        raise ValueError(f"d_max must be >= 0, got {d_max}")
    series = [1] + [0] * d_max
    if p == 2:
        for _ in range(r):
            series = mul_trunc(series, geometric(1, d_max), d_max)
    else:
        exterior = [1, 1] if d_max >= 1 else [1]
        for _ in range(r):
            series = mul_trunc(series, exterior, d_max)
            series = mul_trunc(series, geometric(2, d_max), d_max)
    return series


def char_quantum_Br(p: int, r: int, n_max: int, cache: Cache | None = None) -> CharacterPoly:
    """Total character of the quantum Borel-kernel cohomology for root
    multiples 0..n_max.

    The natural weight unit is the simple root, i.e. twice the
    fundamental weight, so coefficients sit on even weights 0..2*n_max
    and the recorded bound is 2*n_max.  The root-of-unity order drops out
    of the counts entirely.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    memo: Cache = {} if cache is None else cache
    coeffs = {}
    for n in range(n_max + 1):
        coeffs[2 * n] = n_quantum(p, r, n, memo)
    return CharacterPoly(coeffs, trunc=2 * n_max)


def char_quantum_Gr(p: int, r: int, n_max: int, cache: Cache | None = None) -> CharacterPoly:
    """Truncated character of the quantum full-kernel cohomology: the
    multiplicity of the n-th root multiple times the induced character of
    weight 2n, summed for n = 0..n_max."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    memo: Cache = {} if cache is None else cache
    out: dict[int, int] = {}
    for n in range(n_max + 1):
        cnt = n_quantum(p, r, n, memo)
        if cnt:
            for w in range(-2 * n, 2 * n + 1, 2):
                out[w] = out.get(w, 0) + cnt
    return CharacterPoly(out, trunc=2 * n_max)
