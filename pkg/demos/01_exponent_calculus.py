"""
Exponent calculus walkthrough
=============================

Incidence bounds for k-dimensional flats in R^d are indexed by chains of
dimension pairs.  This script enumerates the chains for a few (k, d),
prints the exact exponents of every bound term, and cross-checks the
closed form against the defining linear system.
"""

from fractions import Fraction

from inclab import (
    enumerate_chains,
    leading_exponents,
    problematic_pairs,
    ratio_dominates,
    term_from_chain,
    term_from_system,
)

# The ratio k/d governs everything.  For 3-flats in R^5 the problematic
# higher-ratio shapes are (2,3) and (3,4):
print("problematic pairs for (3,5):", [(p.k, p.d) for p in problematic_pairs(3, 5)])

# Each chain starting at (3,5) contributes one term to the upper bound.
for s in (2, 3):
    print(f"\nbound terms for (k,d)=(3,5), s={s}:")
    for chain in enumerate_chains(3, 5):
        term = term_from_chain(chain, s)
        assert term == term_from_system(chain, s)  # exact, both routes
        qs = " ".join(
            f"q[{p.k},{p.d}]^{e}" for p, e in term.q_exponents
        )
        label = ",".join(f"({p.k},{p.d})" for p in chain)
        print(f"  chain {label:24s} m^({term.alpha}+eps) n^{term.beta} {qs}")

# The singleton chain reproduces the conjectured leading term.
alpha, beta = leading_exponents(1, 2, 2)
print("\npoint-line base case exponents:", alpha, beta)
assert (alpha, beta) == (Fraction(2, 3), Fraction(2, 3))

# Smaller dimension ratio means a dominated leading term whenever
# n <= m^s; the comparison is certified symbolically over the whole
# constraint cone, not sampled.
report = ratio_dominates(3, 5, 1, 2, s=2, samples=32, seed=7)
print(
    f"\nT(1,2) dominated by T(3,5) under n <= m^2: certified={report.certified},"
    f" strict off the boundary={report.interior_strict}"
)
