"""Integer arithmetic on character degrees.

Deterministic Miller-Rabin for the 64-bit range, trial division by sieved
primes below 10**6, and Brent's variant of Pollard rho for whatever is left.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

TRIAL_LIMIT = 10**6
MAX_N = 2**63

# Sufficient for every n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class DomainError(ValueError):
    """Argument outside the documented domain of an operation."""


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out


@lru_cache(maxsize=1)
def _sieve_primes() -> tuple[int, ...]:
    flags = bytearray([1]) * (TRIAL_LIMIT + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(TRIAL_LIMIT) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, TRIAL_LIMIT + 1, i)))
    return tuple(i for i, f in enumerate(flags) if f)


def _check_range(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"expected an integer, got {n!r}")
    if n < 1 or n >= MAX_N:
        raise DomainError(f"{n} outside [1, 2**63)")


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**63 (and well beyond)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite n."""
    for c in range(1, n):
        y, r, q, g = 2, 1, 1, 1
        m = 128
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # Batched gcd overshot; step back one at a time.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard rho failed on {n}")  # pragma: no cover


def _split_large(n: int, out: dict[int, int]) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _brent(m)
        stack.extend((d, m // d))


def factorize(n: int) -> Factorization:
    _check_range(n)
    counts: dict[int, int] = {}
    rest = n
    rest_is_prime = False
    for p in _sieve_primes():
        if p * p > rest:
            rest_is_prime = True
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            counts[p] = e
            if rest > TRIAL_LIMIT and is_prime(rest):
                rest_is_prime = True
                break
    if rest > 1:
        if rest_is_prime:
            counts[rest] = 1
        else:
            # Every prime factor of rest exceeds TRIAL_LIMIT.
            _split_large(rest, counts)
    return Factorization(n, tuple(sorted(counts.items())))


def prime_divisors(n: int) -> tuple[int, ...]:
    """Distinct primes dividing n, ascending. ``prime_divisors(1) == ()``."""
    return factorize(n).primes()


def as_prime_power(n: int) -> Optional[tuple[int, int]]:
    """Return ``(u, alpha)`` with ``u**alpha == n`` and u prime, else None."""
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"as_prime_power needs n >= 2, got {n!r}")
    f = factorize(n)
    if len(f.factors) != 1:
        return None
    return f.factors[0]


def is_prime_power(n: int) -> bool:
    return n >= 2 and as_prime_power(n) is not None


def prime_powers(lo: int, hi: int) -> list[int]:
    """All prime powers in [lo, hi], ascending."""
    primes = _sieve_primes()
    if hi > TRIAL_LIMIT:
        return [q for q in range(max(lo, 2), hi + 1) if is_prime_power(q)]
    found = set()
    for p in primes[: bisect_right(primes, hi)]:
        q = p
        while q <= hi:
            if q >= lo:
                found.add(q)
            q *= p
    return sorted(found)
