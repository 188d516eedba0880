"""Euler's totient and the map n -> phi(n^2), evaluated exactly in factored form.

For n = p1^a1 * ... * pk^ak,

    phi(n)   = prod pi^(ai-1) * (pi - 1)
    phi(n^2) = prod pi^(2*ai-1) * (pi - 1) = n * phi(n)

Results come back fully factored: each (p - 1) is factored eagerly, so the
output is a canonical FactoredInteger ready for further exponent arithmetic.
"""

from .factored import FactoredInteger, factor
from .primes import factorize

# Totient results are plain factored integers; the alias marks intent.
TotientValue = FactoredInteger


def _accumulate(acc: dict[int, int], p: int, e: int) -> None:
    if e:
        acc[p] = acc.get(p, 0) + e
    for q, b in factorize(p - 1).items():
        acc[q] = acc.get(q, 0) + b


def totient(f: FactoredInteger) -> TotientValue:
    """phi of the integer denoted by f, fully factored."""
    acc: dict[int, int] = {}
    for p, a in f.entries:
        _accumulate(acc, p, a - 1)
    return FactoredInteger.from_factors(acc)


def totient_of_square(f: FactoredInteger) -> TotientValue:
    """phi(n^2) for the integer n denoted by f, fully factored."""
    acc: dict[int, int] = {}
    for p, a in f.entries:
        _accumulate(acc, p, 2 * a - 1)
    return FactoredInteger.from_factors(acc)


def phi_square_value(n: int) -> int:
    """n * phi(n) as a plain integer, computed through the factored path."""
    return totient_of_square(factor(n)).value()
