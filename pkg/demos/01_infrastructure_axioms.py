"""A discrete infrastructure, hands on.

Builds the toy table T (R = 10, points at 0, 2, 3, 7), walks it with baby
steps, takes a few giant steps, and then checks the axioms both on T and on
the real quadratic curve y^2 = x^4 + x + 1 over F_5.
"""

from cyclic_infra import TableInfra, enumerate_cycle, make_curve, validate_axioms

T = TableInfra(10, (0, 2, 3, 7))
print("toy table:", T.to_json())

x, walked = T.identity_point(), 0
print("\nbaby steps from the identity:")
for _ in range(4):
    y, delta = T.bs(x)
    walked += delta
    print(f"  {x.payload:>2} -> {y.payload:>2}  (delta {delta}, walked {walked})")
    x = y
print("  back at the identity after walking R =", walked)

print("\ngiant steps land on the first point at or after the sum:")
for a, b in [(2, 2), (3, 7), (2, 3), (7, 7)]:
    z, delta = T.gs(T.point(a), T.point(b))
    print(f"  gs({a}, {b}): sum {(a + b) % 10}, lands on {z.payload}, overshoot {delta}")

print("\naxiom check on T:", validate_axioms(T, enumerate_cycle(T)).to_json())

C = make_curve(5, [1, 1, 0, 0, 1])
E = enumerate_cycle(C)
print(f"\ncurve y^2 = x^4 + x + 1 over F_5: genus {C.g}, R = {E.R}, distances {list(E.distances)}")
print("axiom check on the curve:", validate_axioms(C, E).to_json())
