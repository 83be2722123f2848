import math
import random

import pytest

from charfield.pinum import (
    PrimeSet,
    count_pi_squares,
    is_pi_number,
    is_prime,
    pi_numbers_upto,
    pi_squares_upto,
)


def test_is_prime():
    primes_below_100 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                        47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
    assert [n for n in range(100) if is_prime(n)] == primes_below_100
    assert is_prime(10**9 + 7)
    assert not is_prime(10**9 + 8)
    assert is_prime(2**61 - 1)


def test_primeset_validation():
    assert PrimeSet([5, 3]).primes == (3, 5)
    assert PrimeSet((7,)).t == 1
    with pytest.raises(ValueError):
        PrimeSet([3, 3])
    with pytest.raises(ValueError):
        PrimeSet([2, 3])
    with pytest.raises(ValueError):
        PrimeSet([3, 9])
    with pytest.raises(ValueError):
        PrimeSet([])


def test_is_pi_number():
    assert is_pi_number(45, [3, 5])
    assert not is_pi_number(21, [3, 5])
    assert is_pi_number(1, [3, 5])
    assert is_pi_number(7**12 * 11**3, [7, 11])
    with pytest.raises(ValueError):
        is_pi_number(0, [3, 5])


def test_pi_numbers_upto():
    assert list(pi_numbers_upto([3, 5], 30)) == [1, 3, 5, 9, 15, 25, 27]
    assert list(pi_numbers_upto([3, 5], 2)) == [1]
    assert list(pi_numbers_upto([5, 7], 50)) == [1, 5, 7, 25, 35, 49]


def test_pi_numbers_closed_under_divisors():
    seq = list(pi_numbers_upto([3, 5, 7], 5000))
    got = set(seq)
    assert seq == sorted(got)
    for x in seq:
        for d in range(1, x + 1):
            if x % d == 0:
                assert d in got


def test_generation_matches_filter_and_sort():
    for primes in [(3, 5), (5, 7), (3, 5, 7)]:
        N = 20000
        brute = [m for m in range(1, N + 1) if is_pi_number(m, primes)]
        assert list(pi_numbers_upto(primes, N)) == brute


def test_pi_squares_upto():
    assert list(pi_squares_upto([3, 5], 1000)) == [9, 25, 81, 225, 625, 729]
    assert list(pi_squares_upto([3, 5], 8)) == []
    assert list(pi_squares_upto([5, 7], 100)) == [25, 49]


def test_pi_squares_cross_check():
    for primes in [(3, 5), (5, 7), (7, 11)]:
        N = 10**6
        all_nums = set(pi_numbers_upto(primes, N))
        brute = sorted(x for x in all_nums
                       if x > 1 and math.isqrt(x) ** 2 == x)
        assert list(pi_squares_upto(primes, N)) == brute


def test_count_pi_squares():
    assert count_pi_squares([3, 5], 1000) == 6
    assert count_pi_squares([3, 5], 8) == 0
    assert count_pi_squares([3, 5], 9) == 1


def test_count_monotone_with_unit_jumps():
    seq = set(pi_squares_upto([3, 5], 3000))
    prev = 0
    for n in range(1, 3001):
        c = count_pi_squares([3, 5], n)
        assert c - prev == (1 if n in seq else 0)
        prev = c


def test_sequence_count_upto():
    sq = pi_squares_upto([3, 5], 10**6)
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randrange(1, 10**6)
        assert sq.count_upto(n) == sum(1 for x in sq if x <= n)
