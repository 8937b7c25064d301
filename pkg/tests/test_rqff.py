import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclic_infra import (
    CurveTooLarge,
    EvenCharacteristic,
    FieldPoly,
    InvalidInput,
    NotRealModel,
    NotReduced,
    NotSquarefree,
    RealQuadraticCurve,
    ReducedIdeal,
    count_points_zeta,
    enumerate_cycle,
    hasse_weil_bound,
    l_polynomial,
    make_curve,
    random_curve,
    rq_baby_step,
    rq_giant_step,
    rq_inverse_baby_step,
    validate_axioms,
)
from cyclic_infra.ff_poly import pmod, pmul, psub

import fleet

# y^2 = x^4 + x + 1 over F_5, coefficients lowest degree first
C5 = make_curve(5, [1, 1, 0, 0, 1])


def seeded_curves(n=8):
    rng = random.Random(99)
    return [random_curve(rng, rng.choice([3, 5, 7]), rng.choice([1, 2])) for _ in range(n)]


def test_make_curve_examples():
    assert C5.g == 1 and C5.p == 5
    with pytest.raises(NotSquarefree):
        make_curve(5, [0, 0, 1, 0, 1])  # x^2 (x^2 + 1)
    with pytest.raises(NotRealModel):
        make_curve(5, [1, 0, 0, 1])  # x^3 + 1
    with pytest.raises(NotRealModel):
        make_curve(5, [1, 1, 0, 0, 2])  # 2 is not a square mod 5
    with pytest.raises(NotRealModel):
        make_curve(5, [1, 0, 1])
    with pytest.raises(EvenCharacteristic):
        make_curve(2, [1, 1, 0, 0, 1])
    assert make_curve(5, FieldPoly((1, 1, 0, 0, 1), 5)).D == C5.D


def test_point_count_by_hand():
    # x = 0..4 gives D = 1, 3, 4, 0, 1: 2 + 0 + 2 + 1 + 2 affine points, 2 at infinity
    info = count_points_zeta(C5)
    assert info.l_poly == (1, 3, 5)
    assert info.pic0_order == 9


def test_c5_cycle_is_frozen():
    e = enumerate_cycle(C5)
    assert e.R == 9
    assert e.distances == (0, 2, 3, 4, 5, 6, 7, 8)
    assert count_points_zeta(C5, e.R).h == 1
    assert set(e.gaps()) <= {1, 2}


def test_baby_step_cycle_and_inverse_pairs():
    x, total, steps = C5.identity_point(), 0, 0
    while True:
        y, delta = rq_baby_step(C5, x)
        assert rq_inverse_baby_step(C5, y) == (x, delta)
        total += delta
        steps += 1
        x = y
        if C5.is_identity(x):
            break
    assert total == 9 and steps == 8


@pytest.mark.parametrize("curve", seeded_curves(), ids=repr)
def test_forward_and_backward_walks_agree(curve):
    e = enumerate_cycle(curve)
    n = len(e.distances)
    fwd, bwd = [curve.identity_point()], [curve.identity_point()]
    for _ in range(n - 1):
        fwd.append(curve.bs(fwd[-1])[0])
        bwd.append(curve.bs_inv(bwd[-1])[0])
    assert set(fwd) == set(bwd) == set(e.points)
    assert curve.bs_inv(curve.identity_point())[1] == e.gaps()[-1]


def test_reduced_ideal_interface():
    one = C5.as_ideal(C5.identity_point())
    assert one == ReducedIdeal(FieldPoly((1,), 5), FieldPoly((), 5))
    nxt, delta = rq_baby_step(C5, one)
    assert isinstance(nxt, ReducedIdeal) and delta == 2
    assert rq_inverse_baby_step(C5, nxt) == (one, 2)
    assert rq_giant_step(C5, one, nxt) == (nxt, 0)


@pytest.mark.parametrize("curve", [C5] + seeded_curves(), ids=repr)
def test_giant_step_identity_commutative_and_matches_oracle(curve):
    e = enumerate_cycle(curve)
    pts = e.points
    one = curve.identity_point()
    for b in pts:
        assert curve.gs(one, b) == (b, 0)
    for a in pts:
        for b in pts:
            assert curve.gs(a, b) == curve.gs(b, a)
    assert validate_axioms(curve, e).passed


@pytest.mark.parametrize("curve", seeded_curves(4), ids=repr)
def test_composition_keeps_u_dividing_D_minus_v_squared(curve):
    p, D = curve.p, curve.D
    pts = enumerate_cycle(curve).points
    for a in pts:
        for b in pts:
            u3, v3, _ = curve.compose(*a.payload, *b.payload)
            assert not pmod(psub(D, pmul(v3, v3, p), p), u3, p)
            Q, P = u3, v3
            while len(Q) - 1 > curve.g:
                Q, P, _ = curve._cf_step(Q, P)
                assert not pmod(psub(D, pmul(P, P, p), p), Q, p)


def test_delta_bound_on_fleet():
    for m in fleet.curves():
        g = m.backend.g
        assert all(1 <= d <= g + 1 for d in m.enum.gaps()), m.name


def test_genus_one_over_f5_in_hasse_weil_interval():
    rng = random.Random(5)
    for _ in range(40):
        c = random_curve(rng, 5, 1)
        pic0 = sum(l_polynomial(c))
        assert (math.sqrt(5) - 1) ** 2 <= pic0 <= (math.sqrt(5) + 1) ** 2
        assert 2 <= pic0 <= 10


def test_regulator_divides_class_number_on_fleet():
    for m in fleet.curves():
        c = m.backend
        info = count_points_zeta(c, m.R)
        assert info.R * info.h == info.pic0_order and info.h >= 1
        assert m.R <= hasse_weil_bound(c.p, c.g)


def _count_quadratic_extension(D, p):
    """Points of y^2 = D over F_{p^2} = F_p(t), t^2 = n with n a non-residue (independent oracle)."""
    n = next(a for a in range(2, p) if pow(a, (p - 1) // 2, p) == p - 1)

    def mul(a, b):
        return ((a[0] * b[0] + n * a[1] * b[1]) % p, (a[0] * b[1] + a[1] * b[0]) % p)

    field = [(a, b) for a in range(p) for b in range(p)]
    squares = {mul(z, z) for z in field}
    total = 2
    for x in field:
        acc = (0, 0)
        for c in reversed(D):
            acc = mul(acc, x)
            acc = ((acc[0] + c) % p, acc[1])
        total += 1 if acc == (0, 0) else (2 if acc in squares else 0)
    return total


@pytest.mark.parametrize("curve", [c for c in seeded_curves(12) if c.g == 2][:4], ids=repr)
def test_l_polynomial_against_independent_count(curve):
    p = curve.p
    c0, a1, a2, *_ = l_polynomial(curve)
    values = [sum(c * x**i for i, c in enumerate(curve.D)) % p for x in range(p)]
    n1 = 2 + sum(1 if v == 0 else (2 if pow(v, (p - 1) // 2, p) == 1 else 0) for v in values)
    n2 = _count_quadratic_extension(curve.D, p)
    s1, s2 = n1 - p - 1, n2 - p * p - 1
    assert a1 == s1
    assert 2 * a2 == s1 * a1 + s2


def test_curve_too_large():
    c = random_curve(random.Random(1), 3, 4)
    with pytest.raises(CurveTooLarge):
        l_polynomial(c)


def test_wrong_regulator_rejected():
    with pytest.raises(InvalidInput):
        count_points_zeta(C5, 4)


def test_json_round_trips():
    assert RealQuadraticCurve.from_json(C5.to_json()).D == C5.D
    assert C5.to_json() == {"p": 5, "D": [1, 1, 0, 0, 1]}
    for x in enumerate_cycle(C5).points:
        assert C5.point_from_json(C5.point_to_json(x)) == x
    with pytest.raises(NotReduced):
        C5.point_from_json({"u": [1, 0, 1], "v": [0]})
    with pytest.raises(NotReduced):
        C5.point_from_json({"u": [1, 1], "v": [0]})  # D(-1) = 1, so x + 1 does not divide D
    with pytest.raises(InvalidInput):
        RealQuadraticCurve.from_json({"p": 5})


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([3, 5, 7]), st.sampled_from([1, 2]))
def test_random_curves_are_valid_infrastructures(seed, q, g):
    c = random_curve(random.Random(seed), q, g)
    e = enumerate_cycle(c)
    assert validate_axioms(c, e).passed
    assert sum(l_polynomial(c)) % e.R == 0
