import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import factorint, primerange

from cyclic_infra import (
    FRep,
    FRepGroup,
    InvalidInput,
    SmoothnessQuery,
    TableInfra,
    build_smooth_exponent,
    full_cyclic_table,
    hasse_weil_bound,
    identity_test,
    is_smooth,
    make_curve,
)

import fleet

T = TableInfra(10, (0, 2, 3, 7))
G = FRepGroup(T)


def verdict(group, B, R_upper):
    return is_smooth(group, SmoothnessQuery(B, R_upper, group.unit()))


def test_hasse_weil_examples():
    assert hasse_weil_bound(5, 1) == 11
    assert hasse_weil_bound(9, 1) == 16
    assert hasse_weil_bound(5, 2) == 110
    assert hasse_weil_bound(5, 1, 1, 2) == 21  # 2 * 10.47...
    assert hasse_weil_bound(5, 1, 2, 2) == 11


@pytest.mark.parametrize("q", [2, 3, 5, 7, 9, 13, 25, 101])
@pytest.mark.parametrize("g", [1, 2, 3])
def test_hasse_weil_is_the_exact_ceiling(q, g):
    # compare against high-precision decimal evaluation
    from decimal import Decimal, getcontext

    getcontext().prec = 60
    exact = (1 + Decimal(q).sqrt()) ** (2 * g)
    b = hasse_weil_bound(q, g)
    assert b - 1 < exact <= b


def test_smooth_exponent_examples():
    assert build_smooth_exponent(5, 16).m == 720
    assert build_smooth_exponent(2, 2).m == 2
    se = build_smooth_exponent(3, 16)
    assert se.m == 144 and se.primes == (2, 3) and se.exponents == (4, 2)
    with pytest.raises(InvalidInput):
        build_smooth_exponent(1, 10)
    with pytest.raises(InvalidInput):
        build_smooth_exponent(10**6 + 1, 10)


@given(st.integers(2, 200), st.integers(2, 10**9))
def test_smooth_exponents_are_maximal(B, R_upper):
    se = build_smooth_exponent(B, R_upper)
    assert se.primes == tuple(primerange(2, B + 1))
    for p, e in zip(se.primes, se.exponents):
        assert p**e <= R_upper < p ** (e + 1)
    assert se.m == math.prod(p**e for p, e in zip(se.primes, se.exponents))


def test_is_smooth_examples_on_T():
    v = verdict(G, 5, 16)
    assert v.smooth and v.witness == FRep(T.point(0), 0)
    v = verdict(G, 3, 16)
    assert not v.smooth and v.witness == FRep(T.point(3), 1)
    v = verdict(G, 2, 10)
    assert not v.smooth
    assert T.distance(v.witness.point) + v.witness.f == 8
    assert v.m_bits == 4


def test_identity_test_examples():
    assert identity_test(G, FRep(T.point(0), 0))
    assert not identity_test(G, FRep(T.point(0), 1))
    c = make_curve(5, [1, 1, 0, 0, 1])
    gc = FRepGroup(c)
    assert identity_test(gc, FRep(c.identity_point(), 0))


def test_query_validation():
    with pytest.raises(InvalidInput):
        SmoothnessQuery(1, 10, G.unit())
    with pytest.raises(InvalidInput):
        SmoothnessQuery(3, 1, G.unit())


@pytest.mark.parametrize("member", fleet.curves() + fleet.random_tables()[:10], ids=lambda m: m.name)
def test_verdict_matches_factorization_monotone_and_robust(member):
    grp = member.group()
    big = max(factorint(member.R))
    R_upper = member.R
    previous = False
    for B in primerange(2, 54):
        v = verdict(grp, B, R_upper)
        assert v.smooth == (big <= B)
        assert not previous or v.smooth
        previous = v.smooth
        assert verdict(grp, B, 7 * R_upper + 3).smooth == v.smooth


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 3000), st.integers(2, 60), st.integers(0, 5000))
def test_verdict_on_cyclic_groups(R, B, slack):
    grp = FRepGroup(full_cyclic_table(R))
    v = verdict(grp, B, R + slack)
    assert v.smooth == (max(factorint(R)) <= B)
    t = len(list(primerange(2, B + 1)))
    assert v.group_ops["gs"] <= 10 * t * math.log2(R + slack)
