"""Is the regulator smooth? Deciding it without knowing R.

Only an upper bound for R is needed, here the Hasse-Weil bound, plus the
distance-one element. The verdict is compared with the factorization of the
regulator obtained by enumeration.
"""

import random

from sympy import factorint

from cyclic_infra import FRepGroup, SmoothnessQuery, enumerate_cycle, hasse_weil_bound, is_smooth, random_curve

rng = random.Random(4)
for q, g in [(5, 2), (7, 2), (13, 2)]:
    curve = random_curve(rng, q, g)
    G = FRepGroup(curve)
    bound = hasse_weil_bound(q, g)
    R = enumerate_cycle(curve).R
    print(f"q={q} g={g}: R' = {bound}, actual R = {R} = {factorint(R)}")
    for B in (2, 3, 5, 7, 11, 13, 31):
        v = is_smooth(G.with_ledger(), SmoothnessQuery(B, bound, G.unit()))
        print(f"  B = {B:>2}: smooth = {v.smooth!s:<5}  m has {v.m_bits:>3} bits, "
              f"{v.group_ops['gs']} giant steps")
