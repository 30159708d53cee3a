"""Variation of GIT quotients of affine space by diagonalizable groups.

Exact computations for a polynomial ring graded by a finitely generated
abelian group: relevant monomials, weight and orbit cones, GIT cones and
chambers, irrelevant ideals of characters, Gale duality with toric fans,
moving and nef cones.
"""
from toricvgit.cones import QCone, cone_from_generators, cone_from_inequalities
from toricvgit.errors import (
    DomainError,
    InvalidModelError,
    NonEffectiveGradingError,
    PreconditionError,
    ShapeError,
    VGITError,
)
from toricvgit.gitfan import (
    Chamber,
    Fan,
    chamber_of,
    empty_virtual_facets,
    enumerate_chambers,
    fan_of_chamber,
    gale_dual,
    gale_dual_inverse,
    git_cone,
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
from toricvgit.grading import (
    DegreeMatrix,
    MonomialSupport,
    PointSupport,
    is_effective,
    is_geometrically_semistable,
    is_relevant,
    is_semistable,
    monomic_relevant_generators,
    orbit_cone,
    orbit_cone_cover,
    weight_cone,
    weight_space,
)
from toricvgit.kernels import BACKEND
from toricvgit.lattice import (
    DegreeVector,
    FgAbelianGroup,
    IntMatrix,
    cokernel,
    integer_kernel,
    smith_normal_form,
)
from toricvgit.lp import LpProblem, lp_feasible

__version__ = "0.1.0"
