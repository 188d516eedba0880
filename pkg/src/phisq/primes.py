"""Exact primality testing and integer factorization at desk scale.

Primality is decided by Miller-Rabin with the first 13 primes as bases, a
combination verified to be a complete test for every n below
3,317,044,064,679,887,385,961,981 (about 3.3e24).  Nothing probabilistic is
ever accepted: numbers at or above that bound raise UnsupportedScaleError
instead of getting a "probably prime" answer.

Factorization trial-divides up to TRIAL_DIVISION_BOUND and then splits any
remaining cofactor with Brent's variant of Pollard's rho, certifying every
piece prime before it is emitted.  The rho stage is seeded from the cofactor
itself, so factorization is deterministic.
"""

from functools import lru_cache
from math import gcd, isqrt
from random import Random

from .errors import FactorizationFailure, UnsupportedScaleError

# Largest n for which the base set below is a proven-exact Miller-Rabin test.
PRIMALITY_BOUND = 3_317_044_064_679_887_385_961_981

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

TRIAL_DIVISION_BOUND = 10**6

# Effort budget for splitting one stubborn cofactor.
RHO_MAX_ATTEMPTS = 16
RHO_MAX_ITERATIONS = 2_000_000


@lru_cache(maxsize=1 << 16)
def is_prime(n: int) -> bool:
    """Decide primality of n >= 0 exactly.

    Raises UnsupportedScaleError for n >= PRIMALITY_BOUND, where no proven
    deterministic base set is available.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n >= PRIMALITY_BOUND:
        raise UnsupportedScaleError(
            f"cannot certify primality of {n}: >= deterministic bound {PRIMALITY_BOUND}"
        )
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho_split(n: int) -> int:
    """Find a nontrivial factor of an odd composite n with Brent's rho.

    Deterministic: parameters come from an RNG seeded with n.  Raises
    FactorizationFailure once the effort budget is exhausted.
    """
    rng = Random(n)
    for _ in range(RHO_MAX_ATTEMPTS):
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        iterations = 0
        x = ys = y
        while g == 1 and iterations < RHO_MAX_ITERATIONS:
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
            r *= 2
            iterations += r
        if g == n:
            # Backtrack one step at a time to recover the factor.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    raise FactorizationFailure(
        f"could not split cofactor {n} within {RHO_MAX_ATTEMPTS} rho attempts"
    )


def factorize(n: int) -> dict[int, int]:
    """Full prime factorization of n >= 1 as a prime -> exponent dict."""
    if n < 1:
        raise ValueError(f"can only factor positive integers, got {n}")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n and f <= TRIAL_DIVISION_BOUND:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n == 1:
        return dict(sorted(out.items()))
    if f * f > n:
        # Trial division reached sqrt(n); the leftover is prime.
        out[n] = out.get(n, 0) + 1
        return dict(sorted(out.items()))
    stack = [n]
    while stack:
        c = stack.pop()
        if is_prime(c):
            out[c] = out.get(c, 0) + 1
            continue
        d = _rho_split(c)
        stack.append(d)
        stack.append(c // d)
    return dict(sorted(out.items()))


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit by a simple sieve of Eratosthenes."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray((limit - p * p) // p + 1)
    return [p for p in range(2, limit + 1) if sieve[p]]


def prime_pi(x: int) -> int:
    """Count of primes <= x."""
    return len(primes_up_to(x))
