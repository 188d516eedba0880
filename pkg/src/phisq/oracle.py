"""Independent brute-force checks for the constructive algorithm.

Everything here works on plain integers with a totient sieve, deliberately
avoiding the factored-arithmetic path it is meant to cross-check.
"""

from dataclasses import dataclass
from random import Random

from .factored import FactoredRational
from .primes import primes_up_to


def sieve_totients(limit: int) -> list[int]:
    """phi(0..limit) by the classic in-place multiplicative sieve."""
    phi = list(range(limit + 1))
    for i in range(2, limit + 1):
        if phi[i] == i:  # i is prime
            for j in range(i, limit + 1, i):
                phi[j] -= phi[j] // i
    return phi


def phi_square_sequence(limit: int) -> list[int]:
    """[phi(1^2), phi(2^2), ..., phi(limit^2)], i.e. k * phi(k) for k = 1..limit."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    phi = sieve_totients(limit)
    return [k * phi[k] for k in range(1, limit + 1)]


def injectivity_scan(limit: int) -> tuple[int, int] | None:
    """First pair (m, n), m < n <= limit, with phi(m^2) = phi(n^2), else None."""
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    seen: dict[int, int] = {}
    phi = sieve_totients(limit)
    for n in range(1, limit + 1):
        v = n * phi[n]
        if v in seen:
            return seen[v], n
        seen[v] = n
    return None


@dataclass(frozen=True)
class SearchResult:
    """Minimal verifying pair under a bound, or an explicit miss."""

    found: bool
    m: int | None
    n: int | None
    bound: int


def brute_force_minimal(r: FactoredRational, bound: int) -> SearchResult:
    """Exhaustively search m, n <= bound for phi(m^2)/phi(n^2) = r.

    Pairs are scanned in increasing (max(m, n), m, n) order, comparing by
    exact cross-multiplication phi(m^2) * q == phi(n^2) * p, so the first hit
    is the minimal one.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    p = r.numerator().value()
    q = r.denominator().value()
    phi = sieve_totients(bound)
    lhs = [0] * (bound + 1)  # phi(k^2) * q
    rhs = [0] * (bound + 1)  # phi(k^2) * p
    for k in range(1, bound + 1):
        v = k * phi[k]
        lhs[k] = v * q
        rhs[k] = v * p
    for top in range(1, bound + 1):
        for m in range(1, top):
            if lhs[m] == rhs[top]:
                return SearchResult(found=True, m=m, n=top, bound=bound)
        for n in range(1, top + 1):
            if lhs[top] == rhs[n]:
                return SearchResult(found=True, m=top, n=n, bound=bound)
    return SearchResult(found=False, m=None, n=None, bound=bound)


def random_rational(rng: Random, max_prime: int = 97, max_exponent: int = 6) -> FactoredRational:
    """Random factored rational for round-trip suites: a few distinct primes
    <= max_prime with nonzero exponents in [-max_exponent, max_exponent]."""
    pool = primes_up_to(max_prime)
    k = rng.randint(0, min(10, len(pool)))
    chosen = rng.sample(pool, k)
    nonzero = [e for e in range(-max_exponent, max_exponent + 1) if e != 0]
    return FactoredRational.from_factors({p: rng.choice(nonzero) for p in chosen})
