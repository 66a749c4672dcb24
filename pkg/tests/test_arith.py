import math
import random

import pytest
import sympy
from hypothesis import given, strategies as st

from chargraph.arith import (
    DomainError,
    MAX_N,
    as_prime_power,
    factorize,
    is_prime,
    prime_divisors,
    prime_powers,
)


def spf_sieve(limit):
    spf = list(range(limit + 1))
    for i in range(2, math.isqrt(limit) + 1):
        if spf[i] == i:
            for j in range(i * i, limit + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


def sieve_factor(n, spf):
    out = {}
    while n > 1:
        p = spf[n]
        out[p] = out.get(p, 0) + 1
        n //= p
    return tuple(sorted(out.items()))


@pytest.mark.parametrize(
    "n, expected",
    [(1, ()), (12, ((2, 2), (3, 1))), (1092, ((2, 2), (3, 1), (7, 1), (13, 1)))],
)
def test_factorize_examples(n, expected):
    assert factorize(n).factors == expected


@pytest.mark.parametrize("n, expected", [(1, ()), (60, (2, 3, 5)), (14, (2, 7))])
def test_prime_divisors_examples(n, expected):
    assert prime_divisors(n) == expected


@pytest.mark.parametrize("n, expected", [(4, (2, 2)), (13, (13, 1)), (12, None)])
def test_as_prime_power_examples(n, expected):
    assert as_prime_power(n) == expected


@pytest.mark.parametrize("bad", [0, -3, MAX_N])
def test_factorize_domain(bad):
    with pytest.raises(DomainError):
        factorize(bad)


@pytest.mark.parametrize("bad", [0, 1])
def test_as_prime_power_domain(bad):
    with pytest.raises(DomainError):
        as_prime_power(bad)


def test_agrees_with_sieve_up_to_a_million():
    limit = 10**6
    spf = spf_sieve(limit)
    for n in range(1, limit + 1):
        f = factorize(n)
        assert f.value() == n
        assert f.factors == sieve_factor(n, spf), n


def test_prime_power_recognition_for_small_primes():
    for u in sympy.primerange(2, 101):
        q, alpha = u, 1
        while q < MAX_N:
            assert as_prime_power(q) == (u, alpha)
            q *= u
            alpha += 1


def test_large_semiprimes_against_sympy():
    rng = random.Random(2024)
    for _ in range(40):
        a = sympy.randprime(10**6, 3 * 10**9)
        b = sympy.randprime(10**6, MAX_N // a)
        n = a * b
        assert dict(factorize(n).factors) == sympy.factorint(n)
    for _ in range(200):
        n = rng.randrange(1, MAX_N)
        assert dict(factorize(n).factors) == sympy.factorint(n)


def test_pseudoprime_traps():
    # strong pseudoprimes to several small bases
    for n in (2047, 1373653, 25326001, 3215031751, 2152302898747, 3474749660383,
              341550071728321, 3825123056546413051):
        assert not is_prime(n)
        assert factorize(n).value() == n
    assert is_prime(2**61 - 1)


@given(st.integers(min_value=1, max_value=MAX_N - 1))
def test_factorization_invariants(n):
    f = factorize(n)
    assert f.value() == n
    primes = f.primes()
    assert list(primes) == sorted(set(primes))
    assert all(is_prime(p) and e >= 1 for p, e in f.factors)


def test_prime_powers_range():
    assert prime_powers(4, 30) == [4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]
    assert prime_powers(14, 15) == []
