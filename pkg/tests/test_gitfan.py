import pytest

import oracles
from toricvgit.cones import cone_from_generators
from toricvgit.errors import DomainError, InvalidModelError, PreconditionError
from toricvgit.gitfan import (
    Fan,
    chamber_of,
    empty_virtual_facets,
    enumerate_chambers,
    fan_of_chamber,
    gale_dual,
    gale_dual_inverse,
    git_cone,
    in_corollary_domain,
    irrelevant_ideal,
    is_gale_dual,
    is_generic,
    is_geometric_configuration,
    moving_cone,
    nef_cone,
    point_semistable_for_character,
    separated_pair,
    stable_subsets,
    walls,
)
from toricvgit.grading import DegreeMatrix, PointSupport, monomic_relevant_generators
from toricvgit.lattice import FgAbelianGroup

BLP2_RAYS = [(1, 0), (0, 1), (-1, -1), (1, 1)]
P2_RAYS = [(1, 0), (0, 1), (-1, -1)]
P1_RAYS = [(1,), (-1,)]
P1XP1_RAYS = [(1, 0), (-1, 0), (0, 1), (0, -1)]
C1 = cone_from_generators([(1, 0), (1, 1)])
C2 = cone_from_generators([(0, 1), (1, 1)])
RAY = cone_from_generators([(1,)])


def C(*gens):
    return cone_from_generators(gens)


def mons(g, supports):
    return sorted(g.monomial(s) for s in supports)


def blp2_fan():
    return Fan(2, BLP2_RAYS, [(1, 2), (0, 2), (1, 3), (0, 3)])


def test_git_cone_examples(blp2):
    assert git_cone(blp2, (2, 1)) == C1
    assert git_cone(blp2, (1, 2)) == C2
    assert git_cone(blp2, (1, 1)) == C((1, 1))
    assert git_cone(blp2, (0, 0)).is_zero
    with pytest.raises(DomainError):
        git_cone(blp2, (-1, 0))


def test_git_cone_methods_agree_on_generic_points(blp2):
    for a in [(2, 1), (1, 2), (5, 1), (1, 7)]:
        assert git_cone(blp2, a, "bases") == git_cone(blp2, a) == git_cone(blp2, a, "relint")


def test_git_cone_on_boundary_ray(blp2):
    assert not in_corollary_domain(blp2, (1, 0))
    assert git_cone(blp2, (1, 0)) == C((1, 0))
    assert git_cone(blp2, (0, 3)) == C((0, 1))


def test_is_generic_examples(blp2):
    assert is_generic(blp2, (2, 1))
    assert not is_generic(blp2, (1, 1))
    assert not is_generic(blp2, (-1, 0))
    assert not is_generic(blp2, (0, 0))


def test_irrelevant_ideal_examples(blp2):
    assert mons(blp2, irrelevant_ideal(blp2, (2, 1))) == ["xw", "xz", "yw", "yz"]
    assert mons(blp2, irrelevant_ideal(blp2, (1, 2))) == ["xw", "yw", "zw"]
    assert mons(blp2, irrelevant_ideal(blp2, (2, 1), "lp")) == ["xw", "xz", "yw", "yz"]
    assert mons(blp2, irrelevant_ideal(blp2, (1, 2), "lp")) == ["xw", "yw", "zw"]
    assert mons(blp2, irrelevant_ideal(blp2, (0, 0))) == ["1"]


def test_irrelevant_ideal_on_wall(blp2):
    # the ray (1,1) is reached by z alone, or by x or y together with w
    assert mons(blp2, irrelevant_ideal(blp2, (1, 1))) == ["xw", "yw", "z"]


def test_point_semistability_examples(blp2):
    assert point_semistable_for_character(blp2, PointSupport((0, 3)), (2, 1))
    assert not point_semistable_for_character(blp2, PointSupport((2,)), (2, 1))
    for x in [(), (2,), (0, 1)]:
        assert point_semistable_for_character(blp2, PointSupport(x), (0, 0))


def test_empty_virtual_facets(blp2):
    assert empty_virtual_facets(blp2, (1, 2)) == (3,)
    assert empty_virtual_facets(blp2, (2, 1)) == ()


def test_chambers_blp2(blp2):
    chambers = enumerate_chambers(blp2)
    assert [ch.cone for ch in chambers] == [C2, C1]
    assert mons(blp2, chambers[0].b_generators) == ["xw", "yw", "zw"]
    assert mons(blp2, chambers[1].b_generators) == ["xw", "xz", "yw", "yz"]
    assert chambers[0].unused_indices == (3,)
    assert chambers[1].unused_indices == ()
    for ch in chambers:
        assert ch.cone.in_relative_interior(ch.sample_point)
        assert ch.defining_bases == ch.b_generators


def test_chambers_rank_one(p2, z_plus_z2):
    assert [ch.cone for ch in enumerate_chambers(p2)] == [RAY]
    assert [ch.cone for ch in enumerate_chambers(z_plus_z2)] == [RAY]


def test_chambers_need_positive_rank():
    g = DegreeMatrix(FgAbelianGroup(0, (2,)), ("x",), (FgAbelianGroup(0, (2,)).element([], [1]),))
    with pytest.raises(DomainError):
        enumerate_chambers(g)
    with pytest.raises(DomainError):
        moving_cone(g)


def test_walls_blp2(blp2):
    # hyperplanes spanned by single degrees (1,0), (1,1), (0,1)
    assert walls(blp2) == [(0, 1), (1, -1), (1, 0)]


def test_chamber_of(blp2):
    assert chamber_of(blp2, (3, 1)).cone == C1
    with pytest.raises(DomainError):
        chamber_of(blp2, (1, 1))


def test_moving_cone_examples(blp2, p2):
    assert moving_cone(blp2) == C1
    assert moving_cone(p2) == RAY
    assert moving_cone(DegreeMatrix.from_free([(1, 0), (0, 1)])).is_zero


def test_geometric_configuration_examples():
    assert is_geometric_configuration(BLP2_RAYS)
    assert not is_geometric_configuration([(1, 0), (1, 0), (1, 1), (0, 1)])
    assert not is_geometric_configuration([(1, 0), (0, 0)])
    assert not is_geometric_configuration([(1, 0), (2, 0)])
    assert is_geometric_configuration([(1, 0), (-1, 0)])


def test_gale_dual_examples():
    g = gale_dual(P2_RAYS)
    assert g.group == FgAbelianGroup(1)
    assert oracles.gl_equivalent(g.free_degrees, [(1,), (1,), (1,)])
    g = gale_dual(BLP2_RAYS)
    assert g.group == FgAbelianGroup(2)
    assert oracles.gl_equivalent(g.free_degrees, [(1, 0), (1, 0), (1, 1), (0, 1)])
    g = gale_dual(P1_RAYS)
    assert g.group == FgAbelianGroup(1) and g.free_degrees == ((1,), (1,))
    with pytest.raises(DomainError):
        gale_dual([(1, 0), (-1, 0)])


def test_gale_dual_with_torsion():
    # Z^2 / <(2, -2)> = Z + Z/2
    g = gale_dual([(2,), (-2,)])
    assert g.group == FgAbelianGroup(1, (2,))


def test_gale_dual_inverse_torsion_example(z_plus_z2):
    nu = gale_dual_inverse(z_plus_z2)
    assert is_gale_dual(z_plus_z2, nu)
    assert oracles.same_matroid(nu, [(1, 0), (1, 2), (-1, 0)])


def test_fan_of_chamber_examples(blp2, p2):
    chambers = {ch.cone: ch for ch in enumerate_chambers(blp2)}
    big = fan_of_chamber(blp2, chambers[C1], BLP2_RAYS)
    assert len(big.max_cones) == 4 and big.unused_rays == ()
    small = fan_of_chamber(blp2, chambers[C2], BLP2_RAYS)
    assert len(small.max_cones) == 3 and small.unused_rays == (3,)
    assert set(small.max_cones) == {(0, 1), (0, 2), (1, 2)}
    (only,) = enumerate_chambers(p2)
    assert set(fan_of_chamber(p2, only, P2_RAYS).max_cones) == {(0, 1), (0, 2), (1, 2)}
    with pytest.raises(DomainError):
        fan_of_chamber(blp2, chambers[C1], [(1, 0), (0, 1), (-1, -1), (2, 1)])


def test_nef_cone_examples(blp2, p2):
    assert nef_cone(blp2, blp2_fan()) == C1
    assert nef_cone(p2, Fan(2, P2_RAYS, [(0, 1), (1, 2), (0, 2)])) == RAY
    g = DegreeMatrix.from_free([(1, 0), (1, 0), (0, 1), (0, 1)])
    fan = Fan(2, P1XP1_RAYS, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert nef_cone(g, fan) == C((1, 0), (0, 1))
    with pytest.raises(DomainError):
        nef_cone(p2, blp2_fan())


def test_fan_validation():
    with pytest.raises(InvalidModelError):
        Fan(2, [(1, 0), (2, 0)], [(0,), (1,)])
    with pytest.raises(InvalidModelError):
        Fan(2, [(1, 0), (0, 1), (1, 1)], [(0, 1, 2)])
    with pytest.raises(InvalidModelError):
        Fan(2, [(1, 0), (0, 1)], [(0, 1), (0,)])
    with pytest.raises(InvalidModelError):
        # overlapping cones that do not meet in a common face
        Fan(2, [(1, 0), (0, 1), (1, 1), (-1, 2)], [(0, 1), (2, 3)])
    with pytest.raises(InvalidModelError):
        Fan(2, [(0, 0)], [])


def test_separated_pair_examples(blp2):
    assert separated_pair(blp2, "xw", "yw")
    assert not separated_pair(blp2, "xz", "zw")
    for b in monomic_relevant_generators(blp2):
        assert separated_pair(blp2, b, b)
    with pytest.raises(PreconditionError):
        separated_pair(blp2, "xy", "zw")


def test_stable_subsets_examples(blp2, p2, z_plus_z2):
    subsets = [sorted(blp2.monomial(c) for c in charts) for _, charts in stable_subsets(blp2)]
    assert sorted(subsets) == [["xw", "xz", "yw", "yz"], ["xw", "yw", "zw"]]
    assert [[p2.monomial(c) for c in charts] for _, charts in stable_subsets(p2)] == [["x", "y", "z"]]
    assert [[z_plus_z2.monomial(c) for c in charts] for _, charts in stable_subsets(z_plus_z2)] == [["x", "z"]]


def test_full_cone_weight_space():
    # degrees spanning all of R^2: weight space has lineality
    g = DegreeMatrix.from_free([(1, 0), (-1, 0), (0, 1), (0, -1)])
    chambers = enumerate_chambers(g)
    assert len(chambers) == 4
    # each deletion leaves a half-plane; the four half-planes meet in the origin
    assert moving_cone(g).is_zero
