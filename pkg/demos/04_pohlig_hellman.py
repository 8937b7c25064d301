"""Computing absolute distances with Pohlig-Hellman.

When R (or any multiple of it) has a known factorization, the distance of a
point is a discrete logarithm in the f-representation group with respect to
the distance-one element. The solver needs only group operations.
"""

import random

from sympy import factorint

from cyclic_infra import (
    DlogInstance,
    Factorization,
    FRep,
    FRepGroup,
    NotInSubgroup,
    enumerate_cycle,
    random_curve,
    solve_distance,
    trim_multiple,
)

curve = random_curve(random.Random(0), 13, 2)
E = enumerate_cycle(curve)
G = FRepGroup(curve)
gen = G.unit()
R = E.R
print(f"curve over F_13 of genus 2 with R = {R} = {factorint(R)}")

rng = random.Random(0)
for x in rng.sample(E.points, 4):
    for k in (1, 6):
        fac = Factorization.from_dict(factorint(k * R))
        rep = solve_distance(G.with_ledger(), DlogInstance(gen, FRep(x, 0), fac))
        print(f"  modulus {k}R: n = {rep.n:>3} (oracle {E.distance(x):>3}), "
              f"{rep.ledger.gs} group ops, digits {[r.digits for r in rep.per_prime]}")

fac = Factorization.from_dict(factorint(12 * R))
print("\ntrimming the multiple 12R back to R:", trim_multiple(G, fac, gen).value())

c = min(factorint(R))
sub_gen = G.scalar_mul(c, gen)
print(f"\na generator of distance {c} only reaches multiples of {c}:")
order = Factorization.from_dict(factorint(R // c))
for d in range(8):
    target = G.scalar_mul(d, gen)
    try:
        n = solve_distance(G, DlogInstance(sub_gen, target, order)).n
        print(f"  distance {d}: n = {n}, i.e. {n} * {c} = {d}")
    except NotInSubgroup:
        print(f"  distance {d}: not in the subgroup")
