"""From the CM class to the wall list.

The CM class of the universal family of (P3, cQ) pairs is a combination of two
generators. We compute it by pushing forward the fourth power of the log
anticanonical class, then read off the VGIT slope it selects. Finally we walk
through the eight walls for d = 4.
"""
from fractions import Fraction as F

from kwall.chow import cm_class_pe, proportionality_check
from kwall.walls import BETA_WALLS, C_WALLS, T_WALLS, catalog_row, chamber_of

cls = cm_class_pe(4)
print("CM class for d = 4, coefficients as polynomials in c:")
for e, p in cls.terms.items():
    print(f"  {e}: {p}")

# The class is a positive multiple of eta + t xi; t is where the GIT quotient lives.
for c in (F(1, 8), F(1, 4), F(3, 8)):
    p = proportionality_check(4, c)
    print(f"c = {c}: rho = {p.rho}, slope t = {p.t}")

print("\nwalls (c, t, beta):")
for c, t, b in zip(C_WALLS, T_WALLS, BETA_WALLS):
    print(f"  {str(c):>5} {str(t):>5} {str(b):>4}")

ch = chamber_of(F(3, 20))
print(f"\nc = 3/20 sits in the open chamber ({ch.lo}, {ch.hi})")
row = catalog_row(2)
print(f"crossing c = {row.c}: '{row.minus_side}' is replaced by '{row.plus_side}'")
