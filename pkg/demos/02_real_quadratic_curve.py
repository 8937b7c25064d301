"""Reduced ideals of a real quadratic function field as infrastructure points.

For a few random curves the script prints the reduced ideals along the cycle,
the baby-step deltas (never more than g + 1), and the regulator R next to
the class number h recovered from point counting, R * h = L(1).
"""

import random

from cyclic_infra import FieldPoly, count_points_zeta, enumerate_cycle, hasse_weil_bound, make_curve, random_curve

C = make_curve(5, [1, 1, 0, 0, 1])
E = enumerate_cycle(C)
print("y^2 = x^4 + x + 1 over F_5, floor of sqrt(D) =", FieldPoly(C.d, 5))
for x, dist in zip(E.points, E.distances):
    ideal = C.as_ideal(x)
    _, delta = C.bs(x)
    print(f"  d = {dist}:  u = {ideal.u!r:<22} v = {ideal.v!r:<14} next delta {delta}")

print("\nrandom curves:")
rng = random.Random(2)
for q, g in [(3, 1), (7, 1), (5, 2), (13, 2)]:
    c = random_curve(rng, q, g)
    e = enumerate_cycle(c)
    info = count_points_zeta(c, e.R)
    print(f"  q={q:>2} g={g}  D={list(c.D)}")
    print(f"        R = {e.R} <= {hasse_weil_bound(q, g)},  L = {list(info.l_poly)},"
          f"  L(1) = {info.pic0_order} = R * {info.h},  deltas in {sorted(set(e.gaps()))}")
