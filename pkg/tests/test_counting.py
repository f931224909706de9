import itertools
import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobkern.counting import (
    CountParams,
    DigitEquation,
    count_digit_equation,
    graded_count,
    graded_counts,
    is_prime,
    n_classical,
    n_classical_alt_odd,
    n_classical_p2,
    n_quantum,
)

from golden import EXPECTED_TABLE1, EXPECTED_TABLE2


# --- independent references used to derive expected values ------------------


def brute_digit(eq: DigitEquation) -> int:
    """Enumerate the digit equation directly, no recursion."""
    target = eq.target_multiplier * eq.p**eq.r - eq.constant
    if target < 0:
        return 0
    ranges = [range(target // eq.p**i + 1) for i in range(1, eq.r + 1)]
    hits = 0
    for combo in itertools.product(*ranges):
        total = sum((c + d) * eq.p**i
                    for i, (c, d) in enumerate(zip(combo, eq.offsets), start=1))
        hits += total == target
    return hits


def ladder_count(p: int, offsets: tuple[int, ...], n: int) -> int:
    """Layer-by-layer reference for the zero-constant digit equation:
    level 1 is forced, and each higher level sums the one below over the
    admissible range of its own digit."""

    def level(i: int, arg: int) -> int:
        if arg == 0:
            return 1
        if i == 1:
            return 0 if offsets[0] > arg // p else 1
        top = arg // p**i
        if offsets[i - 1] > top:
            return 0
        return sum(level(i - 1, j * p**i) for j in range(top - offsets[i - 1] + 1))

    r = len(offsets)
    return level(r, n * p**r)


# --- is_prime / parameter validation ----------------------------------------


def test_is_prime_small_values():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}
    assert {p for p in range(31) if is_prime(p)} == primes


@pytest.mark.parametrize("bad", [
    dict(p=4, r=1, m=0, n=0),
    dict(p=1, r=1, m=0, n=0),
    dict(p=3, r=0, m=0, n=0),
    dict(p=3, r=1, m=-1, n=0),
    dict(p=3, r=1, m=0, n=-2),
])
def test_count_params_rejects_invalid(bad):
    with pytest.raises(ValueError):
        CountParams(**bad)


def test_digit_equation_rejects_invalid():
    with pytest.raises(ValueError):
        DigitEquation(6, 2, (0, 0))
    with pytest.raises(ValueError):
        DigitEquation(3, 2, (0,))
    with pytest.raises(ValueError):
        DigitEquation(3, 2, (0, -1))
    with pytest.raises(ValueError):
        DigitEquation(3, 2, (0, 0), constant=-1)
    with pytest.raises(ValueError):
        DigitEquation(3, 2, (0, 0), target_multiplier=-1)


# --- count_digit_equation ----------------------------------------------------


def test_digit_forced_single_solution():
    # 3*c_1 = 2*3 forces c_1 = 2
    eq = DigitEquation(3, 1, (0,), 0, 2)
    assert count_digit_equation(eq) == 1


def test_digit_two_levels():
    # 3*c_1 + 9*c_2 = 27: c_2 in 0..3 with c_1 determined each time
    eq = DigitEquation(3, 2, (0, 0), 0, 3)
    assert brute_digit(eq) == 4
    assert count_digit_equation(eq) == 4


def test_digit_divisibility_obstruction():
    # constant 1 makes the target 3^2*1 - 1 = 8, not divisible by 3
    eq = DigitEquation(3, 2, (0, 0), 1, 1)
    assert count_digit_equation(eq) == 0


def test_digit_constant_above_p_is_fine():
    # carries out of the constant are handled exactly, not digit by digit
    eq = DigitEquation(3, 2, (1, 0), 5, 2)
    assert count_digit_equation(eq) == brute_digit(eq)


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_digit_matches_brute_reference(p, r):
    for offsets in itertools.product(range(3), repeat=r):
        for t in (0, 1, 4):
            for mult in range(5):
                eq = DigitEquation(p, r, offsets, t, mult)
                assert count_digit_equation(eq) == brute_digit(eq), eq


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_digit_zero_constant_reproduces_ladder(p, r):
    for offsets in itertools.product(range(3), repeat=r):
        for mult in range(6):
            eq = DigitEquation(p, r, offsets, 0, mult)
            assert count_digit_equation(eq) == ladder_count(p, offsets, mult), eq


# --- n_classical --------------------------------------------------------------


@pytest.mark.parametrize("params, expected", [
    ((3, 2, 0, 2), 3),
    ((3, 5, 0, 10), 439201),
    ((5, 5, 0, 10), 9387801),
    ((3, 2, 1, 2), 0),   # parity
    ((3, 1, 0, 2), 1),   # b_1 + 3*a_1 = 3 has the single solution a_1 = 1
])
def test_n_classical_examples(params, expected):
    assert n_classical(CountParams(*params)) == expected


@pytest.mark.parametrize("table, p", [(EXPECTED_TABLE1, 3), (EXPECTED_TABLE2, 5)])
def test_n_classical_golden_tables(table, p):
    for (r, n), expected in table.items():
        assert n_classical(CountParams(p, r, 0, n)) == expected


def test_n_classical_rejects_p2_and_nonprime():
    with pytest.raises(ValueError):
        n_classical(CountParams(2, 1, 0, 0))
    with pytest.raises(ValueError):
        CountParams(9, 1, 0, 0)


def test_n_classical_first_row_pattern():
    # r = 2 rows grow linearly: n + 1 solutions at even n for any odd p
    for p in (3, 5):
        for n in range(0, 11, 2):
            assert n_classical(CountParams(p, 2, 0, n)) == n + 1


def test_n_classical_odd_pair():
    # 1 + 2*b_1 + 6*a_1 = 3 has exactly the solution b_1 = 1, a_1 = 0
    assert n_classical(CountParams(3, 1, 1, 1)) == 1


@settings(max_examples=200, deadline=None)
@given(p=st.sampled_from([3, 5, 7]), r=st.integers(1, 4),
       m=st.integers(0, 20), n=st.integers(0, 20))
def test_parity_and_bound_vanishing(p, r, m, n):
    value = n_classical(CountParams(p, r, m, n))
    if (m - n) % 2:
        assert value == 0
    if m > n * p**r:
        assert value == 0


# --- alternative odd-case reduction ------------------------------------------


def test_alt_odd_requires_odd_inputs():
    with pytest.raises(ValueError):
        n_classical_alt_odd(CountParams(3, 1, 0, 1))
    with pytest.raises(ValueError):
        n_classical_alt_odd(CountParams(3, 1, 1, 2))
    with pytest.raises(ValueError):
        n_classical_alt_odd(CountParams(2, 1, 1, 1))


def test_alt_odd_diverges_from_true_count():
    # the substituted equation 1 + b_1 + 3*a_1 = 6 has no solutions, while
    # the weight equation itself has one; this is why the exact rewrite in
    # n_classical is the normative odd path
    params = CountParams(3, 1, 1, 1)
    assert n_classical_alt_odd(params) == 0
    assert n_classical(params) == 1


# --- n_classical_p2 -----------------------------------------------------------


@pytest.mark.parametrize("params, expected", [
    ((2, 1, 0, 4), 1),   # a_1 = 4 forced
    ((2, 2, 0, 2), 3),   # a_1 in {0, 2, 4}
    ((2, 1, 1, 1), 0),   # odd m makes the left side odd, right side even
])
def test_n_classical_p2_examples(params, expected):
    assert n_classical_p2(CountParams(*params)) == expected


def test_n_classical_p2_rejects_odd_p():
    with pytest.raises(ValueError):
        n_classical_p2(CountParams(3, 1, 0, 0))


# --- n_quantum ----------------------------------------------------------------


@pytest.mark.parametrize("args, expected", [
    ((3, 1, 2), 3),   # (a_0, a_1, b_1) in {(3,0,0), (0,1,0), (2,0,1)}
    ((3, 1, 1), 0),   # odd n, doubled equation parity
    ((3, 1, 0), 1),   # all-zero tuple only
])
def test_n_quantum_examples(args, expected):
    assert n_quantum(*args) == expected


def test_n_quantum_rejects_bad_inputs():
    with pytest.raises(ValueError):
        n_quantum(2, 1, 0)
    with pytest.raises(ValueError):
        n_quantum(9, 1, 0)
    with pytest.raises(ValueError):
        n_quantum(3, 0, 0)
    with pytest.raises(ValueError):
        n_quantum(3, 1, -1)


def test_n_quantum_sum_identity_small():
    for p, r in ((3, 1), (3, 2), (5, 1)):
        for n in (0, 2, 4):
            total = sum(n_classical(CountParams(p, r, m, n))
                        for m in range(n * p**r + 1))
            assert n_quantum(p, r, n) == total


# --- graded counts -------------------------------------------------------------


def test_graded_examples():
    assert graded_count(CountParams(3, 1, 0, 2), 2) == 1
    assert graded_count(CountParams(3, 1, 0, 0), 0) == 1
    assert graded_count(CountParams(2, 3, 0, 0), 0) == 1
    # summed over every reachable degree this is the table value 3
    hist = graded_counts(CountParams(3, 2, 0, 2))
    assert sum(hist.values()) == 3
    assert sum(graded_count(CountParams(3, 2, 0, 2), d) for d in range(19)) == 3


def test_graded_histogram_by_hand():
    # solutions of b_1 + 3(a_1+b_2) + 9a_2 = 9 are a=(0,1), a=(3,0) and
    # a=(2,0),b=(0,1), of degrees 2, 6 and 5
    assert graded_counts(CountParams(3, 2, 0, 2)) == {2: 1, 5: 1, 6: 1}


def test_graded_rejects_negative_degree():
    with pytest.raises(ValueError):
        graded_count(CountParams(3, 1, 0, 0), -1)


@pytest.mark.parametrize("p, engine", [(2, n_classical_p2), (3, n_classical),
                                       (5, n_classical)])
def test_degree_sum_identity(p, engine):
    for r in (1, 2):
        for m in range(7):
            for n in range(7):
                params = CountParams(p, r, m, n)
                assert sum(graded_counts(params).values()) == engine(params)


# --- determinism and cache behavior --------------------------------------------


def test_deterministic_across_cache_states():
    params = CountParams(5, 3, 4, 8)
    cold = n_classical(params)
    shared: dict = {}
    warm1 = n_classical(params, shared)
    warm2 = n_classical(params, shared)
    assert cold == warm1 == warm2


def test_shared_cache_is_safe_across_threads():
    shared: dict = {}
    jobs = [CountParams(3, 3, m, n) for m in range(8) for n in range(8)]
    expected = {params: n_classical(params) for params in jobs}
    results: list[dict] = [dict() for _ in range(4)]

    def worker(out: dict) -> None:
        for params in jobs:
            out[params] = n_classical(params, shared)

    threads = [threading.Thread(target=worker, args=(results[i],)) for i in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for out in results:
        assert out == expected


@settings(max_examples=100, deadline=None)
@given(p=st.sampled_from([2, 3, 5]), r=st.integers(1, 3),
       m=st.integers(0, 10), n=st.integers(0, 10))
def test_graded_sum_equals_total(p, r, m, n):
    params = CountParams(p, r, m, n)
    total = n_classical_p2(params) if p == 2 else n_classical(params)
    assert sum(graded_counts(params).values()) == total
