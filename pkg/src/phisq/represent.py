"""Construct (m, n) with phi(m^2)/phi(n^2) = r for any positive rational r.

The construction recurses on the largest prime q of r, with exponent a:

  * a even: drop q from r, solve the rest as (m0, n0), then append q^b to m0
    and q^c to n0 where b - c = a/2 and both are >= 1. The factors (q - 1)
    introduced by the totients cancel, leaving exactly q^a.
  * a odd and positive: divide r by (q - 1) * q^a (which only involves primes
    below q), solve the rest, then append q^((a+1)/2) to m0 alone; its totient
    contributes the removed q^a * (q - 1) back.
  * a odd and negative: solve the inverse and swap the pair.

Every recursive step eliminates the current largest prime, so the recursion
depth is at most the number of primes up to the largest prime of r, and all
primes of m*n stay at or below it.  The base case r = 2^a is a direct
two-power identity; r = 1 gives (1, 1).
"""

from dataclasses import dataclass

from .factored import FactoredInteger, FactoredRational, factor
from .totient import totient_of_square

_ONE = FactoredInteger()

# verify() skips the optional expanded common factor once the expansion would
# exceed this many bits; factored comparison is unaffected.
COMMON_VALUE_BIT_LIMIT = 5_000_000


@dataclass(frozen=True)
class Representation:
    """Result pair in factored form, with the input ratio echoed back."""

    m: FactoredInteger
    n: FactoredInteger
    ratio: FactoredRational
    depth: int


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking phi(m^2)/phi(n^2) against an expected ratio.

    When the check holds and r = p/q in lowest terms, common_value is the
    shared cofactor with phi(m^2) = p * common_value and
    phi(n^2) = q * common_value (omitted if its expansion would be enormous).
    """

    holds: bool
    lhs: FactoredRational
    expected: FactoredRational
    common_value: int | None = None


def represent_power_of_two(a: int) -> tuple[FactoredInteger, FactoredInteger]:
    """Solve r = 2^a directly: phi(2^(2k)) = 2^(2k-1) for k >= 1.

    Even a = 2t uses the pair (2^(t+b), 2^b) with the smallest b keeping both
    exponents >= 1; odd a takes one side to 1.
    """
    if a == 0:
        return _ONE, _ONE
    if a % 2 == 0:
        t = a // 2
        b = max(1, 1 - t)
        return FactoredInteger(((2, t + b),)), FactoredInteger(((2, b),))
    t = (a - 1) // 2
    if t >= 0:
        return FactoredInteger(((2, t + 1),)), _ONE
    return _ONE, FactoredInteger(((2, -t),))


def _construct(r: FactoredRational) -> tuple[FactoredInteger, FactoredInteger, int]:
    if r.is_one:
        return _ONE, _ONE, 0
    q, a = r.entries[-1]
    if q == 2:
        m, n = represent_power_of_two(a)
        return m, n, 1
    if a % 2 == 0:
        m0, n0, d = _construct(r.without(q))
        half = a // 2
        c = max(1, 1 - half)
        b = c + half
        return m0.times_prime_power(q, b), n0.times_prime_power(q, c), d + 1
    if a > 0:
        removed = factor(q - 1).as_rational() * FactoredRational.from_prime_power(q, a)
        m0, n0, d = _construct(r * removed.inverse())
        return m0.times_prime_power(q, (a + 1) // 2), n0, d + 1
    # a odd and negative: represent 1/r and swap sides.
    m_inv, n_inv, d = _construct(r.inverse())
    return n_inv, m_inv, d


def represent(r: FactoredRational) -> Representation:
    """Find (m, n) with phi(m^2)/phi(n^2) = r and all primes of m*n <= max prime of r."""
    m, n, depth = _construct(r)
    return Representation(m=m, n=n, ratio=r, depth=depth)


def verify(m: FactoredInteger, n: FactoredInteger, r: FactoredRational) -> VerificationReport:
    """Check phi(m^2)/phi(n^2) = r by exact factored arithmetic."""
    tm = totient_of_square(m)
    tn = totient_of_square(n)
    lhs = tm.as_rational() * tn.as_rational().inverse()
    holds = lhs == r
    common = None
    if holds and tn.bit_size() <= COMMON_VALUE_BIT_LIMIT:
        q = r.denominator().value()
        common, rem = divmod(tn.value(), q)
        assert rem == 0  # q | phi(n^2) whenever the ratio holds exactly
    return VerificationReport(holds=holds, lhs=lhs, expected=r, common_value=common)
