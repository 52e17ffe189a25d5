"""Ruling out singularities with local volumes.

A cyclic quotient singularity of large index has small normalized volume,
which contradicts the global volume of a K-semistable pair. The exclusion
engine searches for a monomial valuation that makes this precise.
"""
from fractions import Fraction as F

from kwall.intervals import Interval
from kwall.localvol import (QuotientSing, exclude_singularity, lct_catalog, markov_classes,
                            weighted_projective_from_markov)

iv = Interval(F(0), F(1, 2))
for e, n, a in [(1, 3, 1), (1, 4, 1), (1, 5, 2), (1, 2, 1)]:
    s = QuotientSing(e, n, a)
    res = exclude_singularity(s, 4, iv)
    print(f"{s.label():>10}: {type(res).__name__}")

print("\nsmall solutions of a^2 + b^2 + 2c^2 = 4abc and their weighted planes:")
for t in markov_classes(12):
    print(f"  {t.as_tuple()} -> P{weighted_projective_from_markov(t)}")

print("\nlog canonical thresholds:")
for entry in ("A_7", "E_12", "J_{3,0}", "quadruple conic"):
    r = lct_catalog(entry)
    note = " (nondegeneracy assumed)" if r.nondegeneracy_assumed else ""
    print(f"  {entry}: {r.lct}{note}")
