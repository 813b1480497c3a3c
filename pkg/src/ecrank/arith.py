"""Integer plumbing: primality, factorization, divisors, exact square roots.

Everything here is deterministic.  Pollard rho walks a fixed parameter
schedule, so identical inputs always factor the same way; that property is
what makes the record files byte-reproducible.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .errors import FactorizationIncomplete

# Witnesses proven sufficient for every n below 3.3 * 10**24
# (Sorenson-Webster).  Inputs above that bound get the same witnesses plus
# the extra ones below; for this toolkit's desk-scale use the bound is never
# approached by anything whose primality actually matters.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_EXTRA = (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107)
_MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981

_SIEVE_LIMIT = 1 << 16
_small_primes_cache: list[int] | None = None


def small_primes() -> list[int]:
    """Primes below 2^16, sieved once and cached."""
    global _small_primes_cache
    if _small_primes_cache is None:
        sieve = bytearray([1]) * _SIEVE_LIMIT
        sieve[0] = sieve[1] = 0
        for i in range(2, isqrt(_SIEVE_LIMIT) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
        _small_primes_cache = [i for i in range(_SIEVE_LIMIT) if sieve[i]]
    return _small_primes_cache


def _mr_witness_says_composite(a: int, n: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Miller-Rabin, deterministic below 3.3e24 by the fixed witness set."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    witnesses = _MR_WITNESSES if n < _MR_PROVEN_BOUND else _MR_WITNESSES + _MR_EXTRA
    return not any(_mr_witness_says_composite(a, n, d, s) for a in witnesses)


def primes_from(start: int):
    """Yield primes >= start in increasing order, indefinitely."""
    n = max(2, start)
    if n > 2 and n % 2 == 0:
        n += 1
    while True:
        if is_prime(n):
            yield n
        n += 1 if n == 2 else 2


def _pollard_rho(n: int, budget: int) -> int:
    """One nontrivial factor of composite odd n, Brent's cycle variant.

    The (x0, c) schedule is fixed, so the returned factor is a function of
    n alone.  Raises FactorizationIncomplete when the iteration budget runs
    out before a factor splits off.
    """
    spent = 0
    for c in range(1, 1000):
        y, m, g, r, q = 2, 128, 1, 1, 1
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
                g = gcd(q, n)
                k += m
            r <<= 1
            spent += r
            if spent > budget:
                raise FactorizationIncomplete(f"rho budget exhausted on {n}")
        if g == n:
            g = 1
            ys_ = ys
            while g == 1:
                ys_ = (ys_ * ys_ + c) % n
                g = gcd(abs(x - ys_), n)
        if g != n:
            return g
    raise FactorizationIncomplete(f"rho parameter schedule exhausted on {n}")


def factorize(n: int, rho_budget: int = 5_000_000) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}.

    Trial division by the sieved primes first, Pollard rho for what is left.
    Raises FactorizationIncomplete instead of ever returning a wrong or
    partial answer.
    """
    n = abs(n)
    if n <= 1:
        return {}
    factors: dict[int, int] = {}
    for p in small_primes():
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    if n == 1:
        return factors
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m, rho_budget)
        stack.append(d)
        stack.append(m // d)
    return factors


def divisors(factors: dict[int, int]) -> list[int]:
    """All positive divisors, sorted, from a factorization map."""
    out = [1]
    for p, e in factors.items():
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def square_divisor_root(factors: dict[int, int]) -> int:
    """Largest y such that y^2 divides the factored number."""
    y = 1
    for p, e in factors.items():
        y *= p ** (e // 2)
    return y


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def exact_sqrt(n: int) -> int | None:
    """Integer square root of n when n is a perfect square, else None."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        return None
    rn = exact_sqrt(q.numerator)
    rd = exact_sqrt(q.denominator)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def two_adic_valuation(n: int) -> int:
    """Largest k with 2^k | n; n must be nonzero."""
    if n == 0:
        raise ValueError("2-adic valuation of 0 is unbounded")
    n = abs(n)
    k = 0
    while n % 2 == 0:
        n //= 2
        k += 1
    return k
