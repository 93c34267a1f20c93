# tests/test_weak_gb.py
import time

import pytest

from app.errors import IterationCeilingError, ZeroInputError
from app.field_engine import buchberger
from app.parser import parse_poly
from app.polynomials import MonomialOrder, minimal_monomial_generators, mono_divides
from app.rings import IntegerRing, RationalField
from app.weak_gb import (
    SaturatedSet,
    enumerate_saturated_sets,
    is_weak_gb,
    moeller_weak,
    reduce_tail,
    reduces_to_zero,
    saturate,
    weak_reduce,
    weak_s_polynomials,
)

from .systems import random_system, three_component_system

XY, X2, XY2, X, Y4 = (1, 1), (2, 0), (1, 2), (1, 0), (0, 4)


def test_saturate():
    assert saturate((2, 1), [XY, X2]) == SaturatedSet((1, 2), (2, 1))
    assert saturate((0, 0), [XY, X2]).indices == ()
    s = saturate(XY2, [XY, X2, XY2, XY, X])
    assert s.indices == (1, 3, 4, 5) and s.lcm_mono == XY2


def test_enumerate_saturated_sets():
    order = MonomialOrder.LEX
    assert enumerate_saturated_sets([XY, X2], 2, order) == [SaturatedSet((1, 2), (2, 1))]
    assert enumerate_saturated_sets([XY], 1, order) == []
    lms = [XY, X2, XY2, XY, X, Y4, Y4]
    found = enumerate_saturated_sets(lms, 7, order)
    assert [s.lcm_mono for s in found] == [(0, 4), (1, 4), (2, 4)]
    assert found[0].indices == (6, 7)
    assert found[1].indices == (1, 3, 4, 5, 6, 7)
    assert found[2].indices == (1, 2, 3, 4, 5, 6, 7)


def test_weak_reduce_combines_several_reducers(zz_lex):
    F = [parse_poly(s, zz_lex) for s in ("4*x*y + x", "3*x^2 + y", "5*x", "4*y^2 + y", "5*y")]
    f = parse_poly("2*x*y + 13*y - 5", zz_lex)
    assert weak_reduce(f, F) == parse_poly("2*x + 13*y - 5", zz_lex)


def test_weak_reduce_leaves_irreducible_input(zz_lex):
    f = parse_poly("y^3 + 1", zz_lex)
    assert weak_reduce(f, [parse_poly("x", zz_lex)]) is f


def test_weak_s_polynomials(zz_lex, worked_example):
    g1, g2 = worked_example
    J = saturate((2, 1), [g1.LM, g2.LM])
    assert weak_s_polynomials(J, 2, [g1, g2]) == [parse_poly("-x^2 - x*y^2", zz_lex)]

    g3 = parse_poly("-x*y^2", zz_lex)
    basis = [g1, g2, g3]
    J13 = saturate(XY2, [g.LM for g in basis])
    assert J13.indices == (1, 3)
    assert weak_s_polynomials(J13, 3, basis) == [parse_poly("x*y + y^3", zz_lex)]

    twins = [g1, g1]
    assert weak_s_polynomials(saturate(XY, [XY, XY]), 2, twins) == [zz_lex.zero()]


def test_moeller_weak_single_generator(worked_example):
    state = moeller_weak(worked_example[:1])
    assert state.basis == worked_example[:1]
    assert state.stats.saturated_sets_considered == 0
    assert state.stats.basis_size == 1


def test_moeller_weak_worked_example(worked_example):
    state = moeller_weak(worked_example)
    assert is_weak_gb(state.basis)
    assert is_weak_gb(state.basis, exhaustive=True)
    assert all(reduces_to_zero(f, state.basis) for f in worked_example)
    lms = [g.LM for g in state.basis]
    for m in (XY, X2, XY2, X):
        assert any(mono_divides(lm, m) for lm in lms)
    assert state.stats.basis_size == len(state.basis)


def test_moeller_weak_rejects_zero_input(zz_lex):
    with pytest.raises(ZeroInputError):
        moeller_weak([parse_poly("x", zz_lex), zz_lex.zero()])


def test_moeller_weak_iteration_ceiling(worked_example):
    with pytest.raises(IterationCeilingError):
        moeller_weak(worked_example, max_sets=1)


def test_is_weak_gb_small_cases(zz_lex):
    two_x, three_x = parse_poly("2*x", zz_lex), parse_poly("3*x", zz_lex)
    assert is_weak_gb([two_x, three_x])
    assert is_weak_gb([two_x])
    # S-polynomial y*(x^2) - x*(x*y + 1) = -x does not reduce
    assert not is_weak_gb([parse_poly("x*y + 1", zz_lex), parse_poly("x^2", zz_lex)])


def test_moeller_weak_matches_buchberger_over_q():
    for seed in range(10):
        F = random_system(seed, RationalField())
        weak = moeller_weak(F).basis
        classical = buchberger(F)
        assert minimal_monomial_generators(g.LM for g in weak) == minimal_monomial_generators(
            g.LM for g in classical
        ), f"seed {seed}"


def test_moeller_weak_random_systems_over_z():
    for seed in range(100, 110):
        F = random_system(seed, IntegerRing())
        state = moeller_weak(F)
        assert is_weak_gb(state.basis), f"seed {seed}"
        assert all(reduces_to_zero(f, state.basis) for f in F), f"seed {seed}"


def test_reduce_tail_keeps_the_leading_term(zz_lex):
    basis = [parse_poly("4*x", zz_lex), parse_poly("6*y", zz_lex)]
    p = parse_poly("x^2 + 7*x + 13*y + 3", zz_lex)
    reduced = reduce_tail(p, basis)
    assert reduced == parse_poly("x^2 - x + y + 3", zz_lex)
    assert reduced.LT == p.LT
    assert reduces_to_zero(p - reduced, basis)
    assert reduce_tail(zz_lex.zero(), basis) == zz_lex.zero()


@pytest.mark.timeout(120)
def test_moeller_weak_coefficients_stay_small():
    F = three_component_system()
    t0 = time.perf_counter()
    state = moeller_weak(F)
    assert time.perf_counter() - t0 < 60
    assert is_weak_gb(state.basis)
    assert all(reduces_to_zero(f, state.basis) for f in F)
    widest = max(abs(c).bit_length() for g in state.basis for _, c in g)
    assert widest <= 1024
