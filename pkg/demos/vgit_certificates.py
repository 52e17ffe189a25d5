"""Destabilizing certificates for pairs (Q, D) with Q a singular quadric.

For a quadric of rank at most two, a single subgroup bounds the weight by
-2 + d t, which is negative on the whole slope range. Rank three only gives
the shorter interval (0, 2/(3d)). A chamber scan shows where each applies.
"""
import random

from kwall.vgit import chamber_scan, destabilizing_interval, generic_section, normal_form_certificate, random_quadric

rng = random.Random(1)
d = 4
for rank in (2, 3):
    cert = normal_form_certificate(random_quadric(rank, rng), generic_section(d, rng))
    print(f"rank {rank}: sigma {cert.sigma.weights}, bound {cert.bound[0]} + {cert.bound[1]} t, "
          f"interval {destabilizing_interval(cert, d)}")
    for ch in chamber_scan([cert], d):
        print(f"   ({ch.lo}, {ch.hi}) {ch.status}")
