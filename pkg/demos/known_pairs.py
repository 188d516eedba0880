#!/usr/bin/env python3
"""Two classic verifying pairs, checked end to end.

19/47 = phi(39330^2) / phi(55836^2)   and   47/58 = phi(14476^2) / phi(20010^2)

Both sides of each quotient share one large cofactor; verify() recovers it.
"""

from phisq import factor, parse_rational, totient_of_square, verify

PAIRS = [
    (39330, 55836, "19/47"),
    (14476, 20010, "47/58"),
]

for m_int, n_int, ratio_text in PAIRS:
    m = factor(m_int)
    n = factor(n_int)
    r = parse_rational(ratio_text)
    print(f"claim: {ratio_text} = phi({m_int}^2) / phi({n_int}^2)")
    print(f"  {m_int} = {m}")
    print(f"  {n_int} = {n}")
    print(f"  phi({m_int}^2) = {totient_of_square(m)} = {totient_of_square(m).value()}")
    print(f"  phi({n_int}^2) = {totient_of_square(n)} = {totient_of_square(n).value()}")
    report = verify(m, n, r)
    p = r.numerator().value()
    q = r.denominator().value()
    print(f"  holds: {report.holds}")
    print(f"  shared cofactor c = {report.common_value}:")
    print(f"    phi({m_int}^2) = {p} * c = {p * report.common_value}")
    print(f"    phi({n_int}^2) = {q} * c = {q * report.common_value}")
    print()
