"""GIT cones, chambers of the secondary fan and the toric models they carry.

Characters are identified with degrees ``a`` in ``D``; only their free part
(the image in ``D_R``) matters for every cone computation below.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

from toricvgit._linalg import dot, nullspace, solve_in_span
from toricvgit.cones import QCone, cone_from_inequalities, intersect_all
from toricvgit.errors import DomainError, InvalidModelError, PreconditionError, ShapeError
from toricvgit.grading import (
    DegreeLike,
    DegreeMatrix,
    MonomialSupport,
    SupportLike,
    is_relevant,
    monomic_relevant_generators,
    weight_cone,
    weight_space,
)
from toricvgit.kernels import int_rank, primitive
from toricvgit.lattice import IntMatrix, cokernel, integer_kernel, _row_echelon
from toricvgit.lp import LpProblem, lp_feasible

__all__ = [
    "Fan",
    "Chamber",
    "git_cone",
    "in_corollary_domain",
    "is_generic",
    "irrelevant_ideal",
    "empty_virtual_facets",
    "point_semistable_for_character",
    "walls",
    "enumerate_chambers",
    "moving_cone",
    "is_geometric_configuration",
    "gale_dual",
    "gale_dual_inverse",
    "is_gale_dual",
    "fan_of_chamber",
    "nef_cone",
    "separated_pair",
    "stable_subsets",
]


@dataclass(frozen=True)
class Fan:
    """Simplicial fan: rays in ``Z^lattice_dim`` and maximal cones as index sets.

    Rays not used by any maximal cone are allowed (they index the empty
    virtual facets of a chamber). For ``lattice_dim <= 3`` the constructor
    also checks that maximal cones meet along common faces.
    """

    lattice_dim: int
    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rays = tuple(tuple(int(x) for x in r) for r in self.rays)
        cones = tuple(sorted({tuple(sorted(set(int(i) for i in c))) for c in self.max_cones}))
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "max_cones", cones)
        d = self.lattice_dim
        for r in rays:
            if len(r) != d:
                raise ShapeError(f"ray {r} does not live in Z^{d}")
            if not any(r):
                raise InvalidModelError("fan rays must be nonzero")
        used = sorted({i for c in cones for i in c})
        if any(not 0 <= i < len(rays) for i in used):
            raise InvalidModelError("maximal cone refers to a missing ray")
        directions = [primitive(rays[i]) for i in used]
        if len(set(directions)) != len(directions):
            raise InvalidModelError("two rays of the fan span the same ray")
        for c in cones:
            if int_rank([rays[i] for i in c]) != len(c):
                raise InvalidModelError(f"maximal cone {c} is not simplicial")
        sets = [set(c) for c in cones]
        for a, b in combinations(sets, 2):
            if a <= b or b <= a:
                raise InvalidModelError("a maximal cone contains another")
        if d <= 3:
            self._check_faces()

    def _check_faces(self):
        cones = [self.cone(i) for i in range(len(self.max_cones))]
        for i, j in combinations(range(len(cones)), 2):
            common = set(self.max_cones[i]) & set(self.max_cones[j])
            face = _cone([self.rays[k] for k in common], self.lattice_dim)
            if cones[i].intersect(cones[j]) != face:
                raise InvalidModelError(
                    f"maximal cones {self.max_cones[i]} and {self.max_cones[j]} "
                    "do not meet in a common face"
                )

    def cone(self, k: int) -> QCone:
        return _cone([self.rays[i] for i in self.max_cones[k]], self.lattice_dim)

    @property
    def unused_rays(self) -> tuple[int, ...]:
        used = {i for c in self.max_cones for i in c}
        return tuple(i for i in range(len(self.rays)) if i not in used)


def _cone(vectors, dim):
    from toricvgit.cones import cone_from_generators
    return cone_from_generators(vectors, dim)


@dataclass(frozen=True)
class Chamber:
    """Full-dimensional GIT cone with the relevant data that cuts it out."""

    cone: QCone
    defining_bases: tuple[MonomialSupport, ...]
    b_generators: tuple[MonomialSupport, ...]
    sample_point: tuple[int, ...]

    @property
    def unused_indices(self) -> tuple[int, ...]:
        """Variables dividing every generator of the irrelevant ideal (empty virtual facets)."""
        if not self.b_generators:
            return ()
        common = set(self.b_generators[0].indices)
        for b in self.b_generators[1:]:
            common &= set(b.indices)
        return tuple(sorted(common))


def _scaled(a) -> list[int]:
    if all(type(x) is int for x in a):
        return list(a)
    den = 1
    for x in a:
        den = lcm(den, Fraction(x).denominator)
    return [int(Fraction(x) * den) for x in a]


def _in_simplicial(columns, a) -> bool:
    coef = solve_in_span(columns, a)
    return coef is not None and all(c >= 0 for c in coef)


def _independent_subsets(g: DegreeMatrix, max_size: int):
    frees = g.free_degrees
    for k in range(1, max_size + 1):
        for T in combinations(range(g.n), k):
            if int_rank([frees[i] for i in T]) == k:
                yield T


def in_corollary_domain(g: DegreeMatrix, a: DegreeLike) -> bool:
    """Whether ``a`` lies in the relative interior of the weight space."""
    return weight_space(g).in_relative_interior(g.free_part(a))


def git_cone(g: DegreeMatrix, a: DegreeLike, method: str = "supports") -> QCone:
    """GIT cone of ``a``: intersection of all weight cones containing it.

    ``method``:

    ``"supports"``
        all variable supports whose weight cone contains ``a`` (total on the
        weight space). Weight cones grow with the support and every minimal
        such support is linearly independent, so only independent supports
        are intersected.
    ``"bases"``
        only the monomic relevant generators containing ``a``; equals the
        above for generic ``a``.
    ``"relint"``
        relevant supports whose weight cone has ``a`` in its relative
        interior; meaningful for ``a`` inside the weight space's interior.
    """
    a = g.free_part(a)
    if not weight_space(g).contains(a):
        raise DomainError(f"degree ({','.join(str(x) for x in a)}) lies outside the weight space")
    if method == "supports":
        frees = g.free_degrees
        if any(a):
            cones = [weight_cone(g, T) for T in _independent_subsets(g, g.rank)
                     if _in_simplicial([frees[i] for i in T], a)]
        else:
            cones = [weight_cone(g, (i,)) for i in range(g.n)]
    elif method == "bases":
        cones = [weight_cone(g, b) for b in monomic_relevant_generators(g)
                 if weight_cone(g, b).contains(a)]
    elif method == "relint":
        cones = []
        for k in range(g.rank, g.n + 1):
            for T in combinations(range(g.n), k):
                c = weight_cone(g, T)
                if c.is_full_dimensional and c.in_relative_interior(a):
                    cones.append(c)
    else:
        raise ValueError(f"unknown method {method!r}")
    return intersect_all(cones, g.rank)


def is_generic(g: DegreeMatrix, a: DegreeLike) -> bool:
    """``a`` is in the weight space but in no cone spanned by fewer than rank(D) independent degrees."""
    a = g.free_part(a)
    if not weight_space(g).contains(a):
        return False
    if not any(a):
        return g.rank == 0
    frees = g.free_degrees
    for T in _independent_subsets(g, g.rank - 1):
        if _in_simplicial([frees[i] for i in T], a):
            return False
    return True


def _feasible(g: DegreeMatrix, a, zero: Iterable[int]) -> bool:
    A = [[d[i] for d in g.free_degrees] for i in range(g.rank)]
    return lp_feasible(LpProblem(A, _scaled(a), zero))


def irrelevant_ideal(g: DegreeMatrix, a: DegreeLike, method: str = "auto") -> list[MonomialSupport]:
    """Minimal monomial generators of the irrelevant ideal ``B(chi^a)``.

    ``"generic"`` returns the bases whose weight cone contains ``a`` (valid
    for generic ``a``). ``"lp"`` scans supports ``J`` by size and keeps the
    minimal ones for which ``A x = a, x >= 0, x_i = 0 (i not in J)`` is
    feasible, i.e. the virtual facets indexed by the complement meet.
    ``"auto"`` picks ``"generic"`` when ``a`` is generic.
    """
    a = g.free_part(a)
    if method == "auto":
        method = "generic" if is_generic(g, a) else "lp"
    if method == "generic":
        return [b for b in monomic_relevant_generators(g) if weight_cone(g, b).contains(a)]
    if method != "lp":
        raise ValueError(f"unknown method {method!r}")
    found: list[tuple[int, ...]] = []
    for k in range(g.n + 1):
        for J in combinations(range(g.n), k):
            if any(set(m) <= set(J) for m in found):
                continue
            if _feasible(g, a, [i for i in range(g.n) if i not in J]):
                found.append(J)
    return sorted(MonomialSupport(J) for J in found)


def empty_virtual_facets(g: DegreeMatrix, a: DegreeLike) -> tuple[int, ...]:
    """Indices ``i`` whose virtual facet is empty: ``a`` not in the cone of the other degrees."""
    a = g.free_part(a)
    return tuple(
        i for i in range(g.n)
        if not weight_cone(g, [j for j in range(g.n) if j != i]).contains(a)
    )


def point_semistable_for_character(g: DegreeMatrix, x: SupportLike, a: DegreeLike) -> bool:
    """Semistability via virtual facets: the facets of the zero coordinates must meet."""
    idx = g.indices(x)
    return _feasible(g, g.free_part(a), [i for i in range(g.n) if i not in idx])


def walls(g: DegreeMatrix) -> list[tuple[int, ...]]:
    """Normals of the hyperplanes spanned by ``rank - 1`` independent degrees."""
    r = g.rank
    frees = g.free_degrees
    out = set()
    for T in combinations(range(g.n), r - 1):
        rows = [frees[i] for i in T]
        if T and int_rank(rows) != r - 1:
            continue
        (normal,) = nullspace(rows, r)
        if next(x for x in normal if x) < 0:
            normal = tuple(-x for x in normal)
        out.add(normal)
    return sorted(out)


def _cells(g: DegreeMatrix) -> list[QCone]:
    cells = [weight_space(g)]
    for h in walls(g):
        neg_h = tuple(-x for x in h)
        nxt = []
        for c in cells:
            vals = [dot(h, r) for r in c.rays]
            cut = any(dot(h, v) for v in c.lineality) or (
                any(v > 0 for v in vals) and any(v < 0 for v in vals))
            if cut:
                nxt.append(cone_from_inequalities(c.inequalities + (h,), c.equations, g.rank))
                nxt.append(cone_from_inequalities(c.inequalities + (neg_h,), c.equations, g.rank))
            else:
                nxt.append(c)
        cells = nxt
    return cells


def enumerate_chambers(g: DegreeMatrix) -> list[Chamber]:
    """All full-dimensional GIT cones, in canonical order.

    The weight space is cut by every wall hyperplane; each resulting cell has
    an interior witness (sum of its rays) that is generic, and the chamber
    through it is the intersection of the basis cones containing it. Cells
    with the same set of containing bases lie in the same chamber.
    """
    if g.rank == 0:
        raise DomainError("chambers need a grading group of positive rank")

    def compute():
        bases = monomic_relevant_generators(g)
        groups: dict[tuple, list] = {}
        for cell in _cells(g):
            w = cell.relative_interior_point()
            key = tuple(b for b in bases if weight_cone(g, b).contains(w))
            groups.setdefault(key, []).append(w)
        chambers = []
        for key in groups:
            cone = intersect_all([weight_cone(g, b) for b in key], g.rank)
            chambers.append(Chamber(cone, key, key, cone.relative_interior_point()))
        chambers.sort(key=lambda ch: ch.cone.rays)
        return tuple(chambers)

    return list(g.cached("chambers", compute))


def chamber_of(g: DegreeMatrix, a: DegreeLike) -> Chamber:
    """The chamber whose interior contains the generic degree ``a``."""
    a = g.free_part(a)
    if not is_generic(g, a):
        raise DomainError("degree is not generic")
    for ch in enumerate_chambers(g):
        if ch.cone.in_relative_interior(a):
            return ch
    raise AssertionError("generic degree in no chamber")


def moving_cone(g: DegreeMatrix) -> QCone:
    """Intersection over ``i`` of the cones spanned by all degrees except the ``i``-th."""
    if g.rank == 0:
        raise DomainError("moving cone needs a grading group of positive rank")
    return intersect_all(
        [weight_cone(g, [j for j in range(g.n) if j != i]) for i in range(g.n)], g.rank
    )


def is_geometric_configuration(vectors: Sequence[Sequence[int]]) -> bool:
    """All vectors nonzero and spanning pairwise distinct rays."""
    seen = set()
    for v in vectors:
        if not any(v):
            return False
        p = primitive(tuple(int(x) for x in v))
        if p in seen:
            return False
        seen.add(p)
    return True


def _rays_of(fan_or_rays) -> list[tuple[int, ...]]:
    rays = fan_or_rays.rays if isinstance(fan_or_rays, Fan) else fan_or_rays
    return [tuple(int(x) for x in r) for r in rays]


def gale_dual(fan_or_rays, names: Sequence[str] | None = None) -> DegreeMatrix:
    """Grading of the Cox ring: ``D = Z^n / {(<m, nu_i>)_i : m in M}`` with degrees the classes of ``e_i``."""
    from toricvgit.grading import default_names

    rays = _rays_of(fan_or_rays)
    if not rays:
        raise DomainError("empty ray configuration")
    d = len(rays[0])
    if any(len(r) != d for r in rays):
        raise ShapeError("rays of mixed dimension")
    if int_rank(rays) != d:
        raise DomainError("rays do not span the lattice over Q (torus factor)")
    group, proj = cokernel(IntMatrix.from_rows(rays, d))
    names = tuple(names) if names is not None else default_names(len(rays))
    return DegreeMatrix(group, names, tuple(proj.images()))


def gale_dual_inverse(g: DegreeMatrix) -> list[tuple[int, ...]]:
    """Ray configuration ``nu_i`` dual to the grading: coordinates of a basis of ``ker(gamma)``."""
    r, k, n = g.rank, len(g.group.torsion), g.n
    rows = [[d.free[i] for d in g.degrees] + [0] * k for i in range(r)]
    rows += [[d.torsion[i] for d in g.degrees] + [m if j == i else 0 for j in range(k)]
             for i, m in enumerate(g.group.torsion)]
    if rows:
        K = integer_kernel(IntMatrix.from_rows(rows, n + k))
        basis = [K.column(j)[:n] for j in range(K.cols)]
    else:
        basis = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    basis = _row_echelon([list(b) for b in basis])
    return [tuple(b[i] for b in basis) for i in range(n)]


def is_gale_dual(g: DegreeMatrix, rays: Sequence[Sequence[int]]) -> bool:
    """Whether ``0 -> M -> Z^n -> D -> 0`` built from ``rays`` and ``g`` is exact."""
    rays = [tuple(int(x) for x in r) for r in rays]
    if len(rays) != g.n or not rays:
        return False
    d = len(rays[0])
    if any(len(r) != d for r in rays) or int_rank(rays) != d:
        return False
    for j in range(d):
        col = [r[j] for r in rays]
        if any(dot([deg.free[i] for deg in g.degrees], col) for i in range(g.rank)):
            return False
        for i, m in enumerate(g.group.torsion):
            if dot([deg.torsion[i] for deg in g.degrees], col) % m:
                return False
    group, _ = cokernel(IntMatrix.from_rows(rays, d))
    return group == g.group


def fan_of_chamber(g: DegreeMatrix, chamber: Chamber, rays: Sequence[Sequence[int]] | Fan) -> Fan:
    """Fan whose maximal cones are spanned by the rays outside each irrelevant-ideal generator."""
    rays = _rays_of(rays)
    if not is_gale_dual(g, rays):
        raise DomainError("ray configuration is not Gale dual to the grading")
    cones = {tuple(i for i in range(g.n) if i not in b.indices) for b in chamber.b_generators}
    return Fan(len(rays[0]), tuple(rays), tuple(cones))


def nef_cone(g: DegreeMatrix, fan: Fan) -> QCone:
    """Intersection over maximal cones of the weight cone of the complementary variables."""
    if not is_gale_dual(g, fan.rays):
        raise DomainError("fan rays are not Gale dual to the grading")
    return intersect_all(
        [weight_cone(g, [i for i in range(g.n) if i not in c]) for c in fan.max_cones], g.rank
    )


def separated_pair(g: DegreeMatrix, f: SupportLike, h: SupportLike) -> bool:
    """Relevant ``f`` and ``h`` glue separatedly iff their weight cones meet full-dimensionally."""
    for s in (f, h):
        if not is_relevant(g, s):
            raise PreconditionError(f"{g.monomial(s)} is not relevant")
    return weight_cone(g, f).intersect(weight_cone(g, h)).dim == g.rank


def stable_subsets(g: DegreeMatrix) -> list[tuple[Chamber, list[MonomialSupport]]]:
    """One maximal separated collection of relevant charts per chamber."""
    return [(ch, list(ch.b_generators)) for ch in enumerate_chambers(g)]

