"""The group of f-representations.

An f-representation (x, f) names the distance d(x) + f without ever writing
d(x) down. The group law costs one giant step plus a few baby steps, and
the ledger shows exactly how many.
"""

from cyclic_infra import FRep, FRepGroup, TableInfra, enumerate_cycle, make_curve

T = TableInfra(10, (0, 2, 3, 7))
G = FRepGroup(T)


def show(a):
    return f"({a.point.payload}, {a.f})"


print("normalization on T:")
for d, f in [(3, 5), (0, 0), (2, -1), (7, 12)]:
    print(f"  normalize({d}, {f}) = {show(G.normalize(T.point(d), f))}")

print("\nthe group law, with costs (gs, bs, bs_inv):")
for a, b in [(FRep(T.point(2), 0), FRep(T.point(3), 1)), (FRep(T.point(0), 1), FRep(T.point(0), 1))]:
    c = G.op(a, b)
    print(f"  {show(a)} o {show(b)} = {show(c)}   cost {G.ledger.cost_of_last_op()}")

gen = G.unit()
print("\nmultiples of the distance-one element:", [show(G.scalar_mul(n, gen)) for n in range(11)])

C = make_curve(5, [1, 1, 0, 0, 1])
GC = FRepGroup(C)
E = enumerate_cycle(C)
u = GC.unit()
print(f"\non the curve (R = {E.R}) the same works with ideals:")
for n in range(E.R + 1):
    a = GC.scalar_mul(n, u)
    print(f"  {n} * unit: ideal u = {list(a.point.payload[0])}, f = {a.f}, distance {E.distance(a.point) + a.f}")
print("ledger after all that:", GC.ledger.snapshot())
