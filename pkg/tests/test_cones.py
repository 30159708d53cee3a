import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import oracles
from toricvgit.cones import (
    QCone,
    cone_from_generators,
    cone_from_inequalities,
    contains,
    dim,
    equal,
    in_relative_interior,
    intersect,
    intersect_all,
)
from toricvgit._linalg import solve_in_span
from toricvgit.errors import ShapeError


def C(*gens):
    return cone_from_generators(gens)


def test_scaling_collapses():
    assert C((1, 0), (2, 0)).rays == ((1, 0),)


def test_interior_generator_dropped():
    assert C((1, 0), (1, 1), (0, 1)).rays == ((0, 1), (1, 0))


def test_lineality_detected():
    c = C((1, 0), (-1, 0))
    assert c.rays == ()
    assert c.lineality == ((1, 0),)
    assert not c.is_pointed


def test_half_plane():
    c = C((1, 0), (-1, 0), (0, 1))
    assert c.lineality == ((1, 0),)
    assert c.rays == ((0, 1),)
    assert c.contains((-5, 1)) and not c.contains((0, -1))


def test_zero_vectors_discarded():
    assert C((0, 0)).is_zero
    assert C((0, 0), (1, 1)) == C((1, 1))


def test_dim_examples():
    assert dim(QCone.zero(2)) == 0
    assert dim(C((1, 1))) == 1
    assert dim(C((1, 0), (1, 1))) == 2


def test_contains_examples():
    c = C((1, 0), (1, 1))
    assert contains(c, (2, 1))
    assert contains(c, (0, 0))
    assert not contains(c, (0, 1))
    assert c.contains((2, 1), method="lp") and not c.contains((0, 1), method="lp")
    assert c.contains((Fraction(3, 2), Fraction(1, 2)))
    with pytest.raises(ShapeError):
        c.contains((1, 2, 3))


def test_relative_interior_examples():
    c = C((1, 0), (1, 1))
    assert in_relative_interior(c, (2, 1))
    assert not in_relative_interior(c, (1, 1))
    assert in_relative_interior(QCone.zero(2), (0, 0))
    assert C((1, 1)).in_relative_interior((2, 2))


def test_intersect_examples():
    a, b = C((1, 0), (1, 1)), C((1, 1), (0, 1))
    assert intersect(a, b) == C((1, 1))
    assert intersect(a, a) == a
    assert intersect(C((1, 0), (0, 1)), a) == a
    with pytest.raises(ShapeError):
        intersect(a, C((1, 0, 0)))


def test_equal_examples():
    assert equal(C((1, 0), (2, 0)), C((1, 0)))
    assert not equal(C((1, 0), (0, 1)), C((1, 0), (1, 1)))
    assert equal(QCone.zero(2), QCone.zero(2))
    with pytest.raises(ShapeError):
        equal(QCone.zero(2), QCone.zero(3))


def test_h_description_round_trip():
    c = cone_from_inequalities([(1, 0), (0, 1)], ambient_dim=2)
    assert c.rays == ((0, 1), (1, 0))
    assert cone_from_inequalities([], [], 3) == QCone.full(3)
    e = cone_from_inequalities([(1, 0, 0)], [(0, 0, 1)], 3)
    assert e.dim == 2 and e.lineality == ((0, 1, 0),)


def test_string_forms():
    assert str(C((1, 0), (1, 1))) == "cone((1,0), (1,1))"
    assert str(QCone.zero(2)) == "{0}"


def test_intersect_all_empty_list_is_full_space():
    assert intersect_all([], 2) == QCone.full(2)


def gens_strategy(max_dim=3, max_gens=6, bound=3):
    return st.integers(1, max_dim).flatmap(
        lambda d: st.lists(
            st.tuples(*[st.integers(-bound, bound)] * d), min_size=1, max_size=max_gens
        ).map(lambda gs: (d, gs))
    )


@settings(max_examples=120, deadline=None)
@given(gens_strategy(), st.data())
def test_representation_duality(dg, data):
    d, gens = dg
    c = cone_from_generators(gens, d)
    for _ in range(8):
        p = tuple(data.draw(st.integers(-4, 4)) for _ in range(d))
        h_side = c.contains(p)
        assert h_side == c.contains(p, method="lp")
        assert h_side == oracles.in_cone([g for g in gens if any(g)], p)


@settings(max_examples=120, deadline=None)
@given(gens_strategy())
def test_generators_satisfy_inequalities(dg):
    d, gens = dg
    c = cone_from_generators(gens, d)
    for g in gens:
        assert c.contains(g)
    for r in c.rays:
        assert oracles.in_cone([g for g in gens if any(g)], r)
        assert oracles.primitive(r) == r
    assert list(c.rays) == sorted(set(c.rays))


@settings(max_examples=80, deadline=None)
@given(gens_strategy(max_dim=3, max_gens=6))
def test_facets_match_brute_force_for_full_dimensional_pointed_cones(dg):
    d, gens = dg
    gens = [g for g in gens if any(g)]
    c = cone_from_generators(gens, d)
    if not c.is_full_dimensional or not c.is_pointed or d < 2:
        return
    assert set(c.inequalities) == oracles.facet_normals(gens, d)


@settings(max_examples=80, deadline=None)
@given(st.lists(gens_strategy(max_dim=2, max_gens=3), min_size=3, max_size=3))
def test_intersection_laws(items):
    d = items[0][0]
    cones = [cone_from_generators([g[:d] + (0,) * (d - len(g)) for g in gs], d) for _, gs in items]
    a, b, c = cones
    assert a.intersect(b) == b.intersect(a)
    assert a.intersect(b).intersect(c) == a.intersect(b.intersect(c))
    assert a.intersect(a) == a
    assert intersect_all([a, b, c], d) == a.intersect(b).intersect(c)


@settings(max_examples=120, deadline=None)
@given(gens_strategy(), st.data())
def test_relative_interior_laws(dg, data):
    d, gens = dg
    c = cone_from_generators(gens, d)
    assert c.in_relative_interior(c.relative_interior_point())
    for _ in range(6):
        p = tuple(data.draw(st.integers(-3, 3)) for _ in range(d))
        if c.in_relative_interior(p):
            assert c.contains(p)
        if c.contains(p) and not c.on_facets(p):
            assert c.in_relative_interior(p)


def test_high_dimensional_hypercube_cone():
    # cone over a 4-cube: 16 generators, 8 facets
    gens = [(1, a, b, c, e) for a in (-1, 1) for b in (-1, 1) for c in (-1, 1) for e in (-1, 1)]
    c = cone_from_generators(gens)
    assert len(c.rays) == 16
    assert len(c.inequalities) == 8


def test_lineality_cone_equality_is_set_equality():
    a = C((1, 0, 0), (-1, 0, 0), (0, 1, 0))
    b = C((1, 0, 0), (-1, 0, 0), (3, 2, 0))
    assert a == b
    rng = random.Random(5)
    for _ in range(50):
        p = tuple(rng.randint(-3, 3) for _ in range(3))
        assert a.contains(p) == b.contains(p)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 4), st.data())
def test_solve_in_span_against_cramer(dim, data):
    k = data.draw(st.integers(1, dim))
    cols = [tuple(data.draw(st.integers(-4, 4)) for _ in range(dim)) for _ in range(k)]
    assume(oracles.rank(cols) == k)
    target = [Fraction(data.draw(st.integers(-9, 9)), data.draw(st.integers(1, 3))) for _ in range(dim)]
    coef = solve_in_span(cols, target)
    rows = [list(r) for r in zip(*cols)]
    # k independent rows give the unique candidate via a square system
    sel = next(S for S in combinations(range(dim), k) if oracles.rank([rows[i] for i in S]) == k)
    cand = oracles.solve([rows[i] for i in sel], [target[i] for i in sel])
    consistent = all(sum(r[j] * cand[j] for j in range(k)) == t for r, t in zip(rows, target))
    assert coef == (cand if consistent else None)
