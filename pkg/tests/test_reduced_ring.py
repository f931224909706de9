import itertools
import json

import pytest

from frobkern.reduced_ring import (
    ReducedBasis,
    basis,
    hilbert_coeffs,
    hilbert_coeffs_rational,
)


def congruence_solutions(p, r, s_max):
    """Every exponent tuple of the reduced ring with sum(a) <= s_max."""
    mod = p ** (r - 1)
    out = []
    for combo in itertools.product(range(s_max + 1), repeat=r):
        if sum(combo) <= s_max:
            if sum(a * p**i for i, a in enumerate(combo[:-1])) % mod == 0:
                out.append(combo)
    return out


# --- basis ------------------------------------------------------------------


def test_basis_examples():
    assert basis(3, 2).elements == ((0,),)
    assert basis(3, 3).elements == ((0, 0), (3, 2), (6, 1))
    assert basis(3, 1).elements == ((),)
    assert basis(2, 1).elements == ((),)


def test_basis_generator_degree():
    assert basis(3, 2).generator_degree == 2
    assert basis(2, 2).generator_degree == 1


def test_basis_rejects_bad_input():
    with pytest.raises(ValueError):
        basis(6, 2)
    with pytest.raises(ValueError):
        basis(3, 0)


@pytest.mark.parametrize("p, r", [(2, 2), (2, 3), (3, 2), (3, 3), (5, 2), (5, 3)])
def test_basis_invariants(p, r):
    bas = basis(p, r)
    mod = p ** (r - 1)
    assert (0,) * (r - 1) in bas.elements
    assert len(set(bas.elements)) == len(bas.elements)
    assert list(bas.elements) == sorted(bas.elements)
    for element in bas.elements:
        assert all(0 <= element[i] < p ** (r - 1 - i) for i in range(r - 1))
        assert sum(a * p**i for i, a in enumerate(element)) % mod == 0


def test_basis_serialization_lexicographic():
    text = basis(3, 3).to_json()
    assert text == "[[0,0],[3,2],[6,1]]"
    assert json.loads(text) == [[0, 0], [3, 2], [6, 1]]


# --- hilbert coefficients -----------------------------------------------------


def test_hilbert_r1_is_single_polynomial_generator():
    assert hilbert_coeffs(3, 1, 6) == [1, 0, 1, 0, 1, 0, 1]
    assert hilbert_coeffs(2, 1, 4) == [1, 1, 1, 1, 1]


def test_hilbert_small_case_by_hand():
    # p = 3, r = 2: monomials x_1^(3j) x_2^k, so degrees 2(3j + k)
    assert hilbert_coeffs(3, 2, 8) == [1, 0, 1, 0, 1, 0, 2, 0, 2]


def test_hilbert_degree_zero_always_one():
    for p, r in ((2, 1), (2, 3), (3, 2), (5, 2)):
        assert hilbert_coeffs(p, r, 0) == [1]


def test_hilbert_matches_direct_enumeration():
    for p, r in ((2, 2), (2, 3), (3, 2), (3, 3)):
        g = 2 if p != 2 else 1
        d_max = 20
        coeffs = hilbert_coeffs(p, r, d_max)
        sols = congruence_solutions(p, r, d_max // g)
        for d in range(d_max + 1):
            expected = sum(1 for a in sols if g * sum(a) == d)
            assert coeffs[d] == expected, (p, r, d)


@pytest.mark.parametrize("p, r", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)])
def test_hilbert_rational_cross_check(p, r):
    assert hilbert_coeffs(p, r, 40) == hilbert_coeffs_rational(p, r, 40)


def test_hilbert_rejects_bad_input():
    with pytest.raises(ValueError):
        hilbert_coeffs(3, 2, -1)
    with pytest.raises(ValueError):
        hilbert_coeffs_rational(4, 2, 10)


# --- free-module factorization --------------------------------------------------


@pytest.mark.parametrize("p, r", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_unique_factorization(p, r):
    # every monomial of the reduced ring splits as (R-monomial) * (basis
    # element) in exactly one way: a_i = beta_i + s_i * p^(r-i)
    bas = basis(p, r)
    g = bas.generator_degree
    for a in congruence_solutions(p, r, 40 // g):
        matches = []
        for beta in bas.elements:  # a_r never carries a basis exponent
            if all(
                a[i] >= beta[i] and (a[i] - beta[i]) % p ** (r - 1 - i) == 0
                for i in range(r - 1)
            ):
                matches.append(beta)
        assert len(matches) == 1, (p, r, a, matches)
