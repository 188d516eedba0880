#!/usr/bin/env python3
"""The phi(n^2) sequence and the brute-force cross-checks.

phi(n^2) = n * phi(n) (OEIS A002618) is injective, so an exhaustive scan can
hunt for the smallest pair representing a ratio, and the scan's results can
be played against the constructive algorithm.
"""

from phisq import (
    brute_force_minimal,
    injectivity_scan,
    parse_rational,
    phi_square_sequence,
    represent,
)

print("phi(n^2) for n = 1..20:")
print(" ", phi_square_sequence(20))
print()

limit = 10**5
print(f"injectivity: scanning n <= {limit} for phi(m^2) = phi(n^2), m < n ...")
print(f"  collision found: {injectivity_scan(limit)}")
print()

print("smallest pairs by exhaustive search (m, n <= 200) vs the construction:")
for text in ["2", "3", "4/5", "19/47", "7/10"]:
    r = parse_rational(text)
    search = brute_force_minimal(r, 200)
    rep = represent(r)
    built = f"({rep.m.value()}, {rep.n.value()})" if rep.m.bit_size() < 64 else "(huge)"
    if search.found:
        print(f"  r = {text:7}  minimal: ({search.m}, {search.n})   constructed: {built}")
    else:
        print(f"  r = {text:7}  none with max(m, n) <= {search.bound}   constructed: {built}")
