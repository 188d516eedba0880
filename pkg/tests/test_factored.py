import random
from fractions import Fraction

import pytest

from phisq.errors import ExponentOverflowError, ParseError, ZeroValueError
from phisq.factored import (
    EXPONENT_LIMIT,
    FactoredInteger,
    FactoredRational,
    factor,
    parse_integer,
    parse_rational,
)

PRIMES_TO_100 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                 59, 61, 67, 71, 73, 79, 83, 89, 97]


def rational_of(factors):
    return FactoredRational.from_factors(factors)


def as_fraction(r):
    f = Fraction(1)
    for p, e in r.entries:
        f *= Fraction(p) ** e
    return f


# --- construction invariants ---

def test_integer_rejects_composite_key():
    with pytest.raises(ValueError):
        FactoredInteger(((4, 1),))


def test_integer_rejects_bad_exponents():
    with pytest.raises(ValueError):
        FactoredInteger(((2, 0),))
    with pytest.raises(ValueError):
        FactoredInteger(((2, -1),))


def test_integer_rejects_unsorted_or_duplicate_keys():
    with pytest.raises(ValueError):
        FactoredInteger(((3, 1), (2, 1)))
    with pytest.raises(ValueError):
        FactoredInteger(((2, 1), (2, 1)))


def test_rational_rejects_zero_exponent():
    with pytest.raises(ValueError):
        FactoredRational(((2, 0),))


def test_exponent_limit_enforced():
    FactoredInteger(((2, EXPONENT_LIMIT),))  # the boundary itself is fine
    with pytest.raises(ExponentOverflowError):
        FactoredInteger(((2, EXPONENT_LIMIT + 1),))


def test_empty_maps_denote_one():
    assert FactoredInteger().value() == 1
    assert FactoredRational().value() == Fraction(1)
    assert str(FactoredInteger()) == "1"


# --- expand / factor ---

def test_expand_fixtures():
    assert FactoredInteger.from_factors({2: 2, 7: 1, 11: 1, 47: 1}).value() == 14476
    assert FactoredInteger.from_factors({3: 2}).value() == 9


def test_factor_fixtures():
    assert factor(39330).factors == {2: 1, 3: 2, 5: 1, 19: 1, 23: 1}
    assert factor(20010).factors == {2: 1, 3: 1, 5: 1, 23: 1, 29: 1}
    assert factor(1).factors == {}


def test_factor_expand_round_trip():
    for n in range(1, 3000):
        assert factor(n).value() == n


# --- rational arithmetic ---

def test_mul_fixtures():
    assert rational_of({19: 1}) * rational_of({19: -1}) == FactoredRational()
    assert rational_of({2: 1}) * rational_of({2: 1}) == rational_of({2: 2})
    assert rational_of({19: 1, 47: -1}) * rational_of({47: 1}) == rational_of({19: 1})


def test_mul_identity_and_commutativity():
    a = rational_of({2: 3, 5: -1})
    one = FactoredRational()
    assert a * one == a
    assert one * a == a
    b = rational_of({3: 2, 5: 4})
    assert a * b == b * a


def test_inverse_fixtures():
    assert FactoredRational().inverse() == FactoredRational()
    assert rational_of({2: -1}).inverse() == rational_of({2: 1})
    assert rational_of({19: 1, 47: -1}).inverse() == rational_of({19: -1, 47: 1})


def test_inverse_is_involution_and_cancels():
    rng = random.Random(11)
    for _ in range(100):
        a = random_rational_under_100(rng)
        assert a.inverse().inverse() == a
        assert a * a.inverse() == FactoredRational()


def random_rational_under_100(rng):
    chosen = rng.sample(PRIMES_TO_100, rng.randint(0, 6))
    exps = [e for e in range(-6, 7) if e != 0]
    return rational_of({p: rng.choice(exps) for p in chosen})


def test_mul_is_a_homomorphism():
    # Cross-multiplied integer comparison, independent of Fraction internals.
    rng = random.Random(13)
    for _ in range(300):
        a = random_rational_under_100(rng)
        b = random_rational_under_100(rng)
        ab = a * b
        na, da = a.numerator().value(), a.denominator().value()
        nb, db = b.numerator().value(), b.denominator().value()
        nab, dab = ab.numerator().value(), ab.denominator().value()
        assert nab * da * db == na * nb * dab


def test_canonical_form_after_arithmetic():
    rng = random.Random(17)
    for _ in range(200):
        r = random_rational_under_100(rng) * random_rational_under_100(rng)
        keys = [p for p, _ in r.entries]
        assert keys == sorted(keys)
        assert all(e != 0 for _, e in r.entries)
        assert not (set(r.numerator().factors) & set(r.denominator().factors))


def test_mul_exponent_overflow_is_reported():
    a = rational_of({2: EXPONENT_LIMIT})
    with pytest.raises(ExponentOverflowError):
        a * a


# --- parsing ---

def test_parse_fraction_fixtures():
    assert parse_rational("19/47") == rational_of({19: 1, 47: -1})
    assert parse_rational("1") == FactoredRational()
    assert parse_rational("6/4") == rational_of({2: -1, 3: 1})


def test_parse_accepts_non_lowest_terms():
    assert parse_rational("100/10") == rational_of({2: 1, 5: 1})


def test_parse_factored_literal():
    assert parse_rational("2^3 * 5^-1") == rational_of({2: 3, 5: -1})
    assert parse_rational("47^+2") == rational_of({47: 2})
    assert parse_rational("  19 ^ 1*47^-1 ") == rational_of({19: 1, 47: -1})


def test_literal_round_trips_through_str():
    rng = random.Random(19)
    for _ in range(100):
        r = random_rational_under_100(rng)
        if r.is_one:
            continue
        assert parse_rational(str(r)) == r


def test_parse_rejects_malformed_input():
    for bad in ["", "abc", "1/2/3", "2^", "^3", "2**3", "2^1 * x^2", "-3", "1.5"]:
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_parse_rejects_zero_values():
    with pytest.raises(ZeroValueError):
        parse_rational("0")
    with pytest.raises(ZeroValueError):
        parse_rational("0/5")
    with pytest.raises(ZeroValueError):
        parse_rational("5/0")


def test_parse_rejects_bad_literals():
    with pytest.raises(ParseError):
        parse_rational("4^2")  # composite base
    with pytest.raises(ParseError):
        parse_rational("2^1 * 2^1")  # duplicate prime
    with pytest.raises(ParseError):
        parse_rational("2^0")  # zero exponent


def test_parse_integer():
    assert parse_integer("55836").factors == {2: 2, 3: 3, 11: 1, 47: 1}
    assert parse_integer("2^2 * 3^3 * 11^1 * 47^1").value() == 55836
    assert parse_integer("1").factors == {}
    with pytest.raises(ParseError):
        parse_integer("2^-1")
    with pytest.raises(ZeroValueError):
        parse_integer("0")


def test_numerator_denominator_split():
    r = parse_rational("19/47")
    assert r.numerator().value() == 19
    assert r.denominator().value() == 47
    assert r.value() == Fraction(19, 47)


def test_factored_values_are_immutable_and_hashable():
    a = factor(12)
    b = factor(12)
    assert a == b and hash(a) == hash(b)
    with pytest.raises(AttributeError):
        a.entries = ()
