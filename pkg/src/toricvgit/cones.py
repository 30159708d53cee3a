"""Rational polyhedral cones with exact double representation.

A :class:`QCone` always carries both descriptions in canonical form:

* V-side: ``rays`` (primitive, orthogonal to the lineality space, sorted) and
  a canonical ``lineality`` basis;
* H-side: ``inequalities`` (facet normals ``n`` with ``<n, x> >= 0``, primitive
  and lying in the linear span of the cone) and a canonical basis of
  ``equations`` (``<e, x> = 0``) cutting out that span.

Conversions run the incremental double description kernel from
:mod:`toricvgit.kernels`; no floating point is involved anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from toricvgit._linalg import canonical_basis, dot, project_out, to_integer
from toricvgit.errors import ShapeError
from toricvgit.kernels import dd_cone, int_rank, primitive
from toricvgit.lp import LpProblem, lp_feasible

__all__ = [
    "QCone",
    "cone_from_generators",
    "cone_from_inequalities",
    "dim",
    "contains",
    "in_relative_interior",
    "intersect",
    "equal",
]

Vector = Sequence[int]


def _canon_rays(raw, lineality):
    out = set()
    for r in raw:
        r = project_out(r, lineality) if lineality else primitive(r)
        if any(r):
            out.add(tuple(r))
    return tuple(sorted(out))


def _neg(v):
    return tuple(-x for x in v)


class QCone:
    """Closed rational polyhedral cone in ``R^ambient_dim``.

    Build instances with :func:`cone_from_generators` or
    :func:`cone_from_inequalities`; the constructor expects canonical data.
    """

    __slots__ = ("ambient_dim", "rays", "lineality", "inequalities", "equations", "_hash")

    def __init__(self, ambient_dim, rays, lineality, inequalities, equations):
        self.ambient_dim = ambient_dim
        self.rays = rays
        self.lineality = lineality
        self.inequalities = inequalities
        self.equations = equations
        self._hash = hash((ambient_dim, rays, lineality))

    # construction -------------------------------------------------------

    @classmethod
    def _from_v(cls, gens, lin_gens, dim):
        # V -> H via the dual cone, then H -> V for the extreme rays.
        dual_cons = list(gens) + list(lin_gens) + [_neg(v) for v in lin_gens]
        facets_raw, eqs_raw = dd_cone(dual_cons, dim)
        equations = canonical_basis(eqs_raw, dim)
        facets = _canon_rays(facets_raw, equations)
        cons = list(facets) + list(equations) + [_neg(e) for e in equations]
        rays_raw, lin_raw = dd_cone(cons, dim)
        lineality = canonical_basis(lin_raw, dim)
        return cls(dim, _canon_rays(rays_raw, lineality), lineality, facets, equations)

    @classmethod
    def _from_h(cls, ineqs, eqs, dim):
        cons = list(ineqs) + list(eqs) + [_neg(e) for e in eqs]
        rays_raw, lin_raw = dd_cone(cons, dim)
        lineality = canonical_basis(lin_raw, dim)
        rays = _canon_rays(rays_raw, lineality)
        dual_cons = list(rays) + list(lineality) + [_neg(v) for v in lineality]
        facets_raw, eqs_raw = dd_cone(dual_cons, dim)
        equations = canonical_basis(eqs_raw, dim)
        return cls(dim, rays, lineality, _canon_rays(facets_raw, equations), equations)

    @classmethod
    def zero(cls, dim: int) -> QCone:
        eqs = tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))
        return cls(dim, (), (), (), eqs)

    @classmethod
    def full(cls, dim: int) -> QCone:
        lin = tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))
        return cls(dim, (), lin, (), ())

    # queries ------------------------------------------------------------

    @property
    def generators(self) -> tuple[tuple[int, ...], ...]:
        """Extreme rays followed by both signs of the lineality basis."""
        return self.rays + self.lineality + tuple(_neg(v) for v in self.lineality)

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.equations)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @property
    def is_zero(self) -> bool:
        return not self.rays and not self.lineality

    @property
    def is_full_dimensional(self) -> bool:
        return not self.equations

    def _check_point(self, p):
        if len(p) != self.ambient_dim:
            raise ShapeError(f"point of length {len(p)} in R^{self.ambient_dim}")

    def contains(self, p: Sequence, method: str = "h") -> bool:
        """Closed-cone membership of a rational point.

        ``method="h"`` evaluates the inequality description; ``method="lp"``
        decides whether ``p`` is a nonnegative combination of the generators.
        """
        self._check_point(p)
        if method == "lp":
            gens = self.generators
            den = 1
            for x in p:
                den = den * Fraction(x).denominator
            b = [int(Fraction(x) * den) for x in p]
            A = [[g[i] for g in gens] for i in range(self.ambient_dim)]
            if not gens:
                return not any(b)
            return lp_feasible(LpProblem(A, b))
        if method != "h":
            raise ValueError(f"unknown membership method {method!r}")
        return all(dot(e, p) == 0 for e in self.equations) and all(
            dot(n, p) >= 0 for n in self.inequalities
        )

    def __contains__(self, p) -> bool:
        return self.contains(p)

    def in_relative_interior(self, p: Sequence) -> bool:
        self._check_point(p)
        return all(dot(e, p) == 0 for e in self.equations) and all(
            dot(n, p) > 0 for n in self.inequalities
        )

    def on_facets(self, p: Sequence) -> tuple[tuple[int, ...], ...]:
        """Facet normals vanishing at ``p``."""
        self._check_point(p)
        return tuple(n for n in self.inequalities if dot(n, p) == 0)

    def relative_interior_point(self) -> tuple[int, ...]:
        """An integer point in the relative interior (sum of the extreme rays)."""
        out = [0] * self.ambient_dim
        for r in self.rays:
            out = [a + b for a, b in zip(out, r)]
        return tuple(out)

    def intersect(self, other: QCone) -> QCone:
        if other.ambient_dim != self.ambient_dim:
            raise ShapeError("intersecting cones in different ambient spaces")
        if self == other:
            return self
        return QCone._from_h(
            self.inequalities + other.inequalities,
            self.equations + other.equations,
            self.ambient_dim,
        )

    def contains_cone(self, other: QCone) -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise ShapeError("comparing cones in different ambient spaces")
        return all(self.contains(g) for g in other.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QCone):
            return NotImplemented
        if other.ambient_dim != self.ambient_dim:
            raise ShapeError("comparing cones in different ambient spaces")
        return self.rays == other.rays and self.lineality == other.lineality

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        return (-self.dim, self.lineality, self.rays)

    def __repr__(self) -> str:
        s = f"QCone(rays={[list(r) for r in self.rays]}"
        if self.lineality:
            s += f", lineality={[list(v) for v in self.lineality]}"
        return s + ")"

    def __str__(self) -> str:
        if self.is_zero:
            return "{0}"
        parts = [fmt_vector(r) for r in self.rays]
        parts += ["±" + fmt_vector(v) for v in self.lineality]
        return "cone(" + ", ".join(parts) + ")"


def fmt_vector(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def cone_from_generators(vectors: Iterable[Vector], ambient_dim: int | None = None) -> QCone:
    """Closed conic hull of integer (or rational) vectors; zero vectors are discarded."""
    vectors = [tuple(v) for v in vectors]
    if ambient_dim is None:
        if not vectors:
            raise ShapeError("ambient dimension needed for an empty generator list")
        ambient_dim = len(vectors[0])
    if any(len(v) != ambient_dim for v in vectors):
        raise ShapeError("generators of mixed dimension")
    gens = [to_integer(v) for v in vectors]
    gens = sorted({g for g in gens if any(g)})
    if not gens:
        return QCone.zero(ambient_dim)
    return QCone._from_v(gens, (), ambient_dim)


def cone_from_inequalities(
    inequalities: Iterable[Vector], equations: Iterable[Vector] = (), ambient_dim: int | None = None
) -> QCone:
    """The cone ``{x : <n, x> >= 0, <e, x> = 0}``."""
    ineqs = [tuple(v) for v in inequalities]
    eqs = [tuple(v) for v in equations]
    if ambient_dim is None:
        if not ineqs and not eqs:
            raise ShapeError("ambient dimension needed for an empty constraint list")
        ambient_dim = len((ineqs or eqs)[0])
    if any(len(v) != ambient_dim for v in ineqs + eqs):
        raise ShapeError("constraints of mixed dimension")
    return QCone._from_h(
        [to_integer(v) for v in ineqs], [to_integer(v) for v in eqs], ambient_dim
    )


def dim(c: QCone) -> int:
    return c.dim


def contains(c: QCone, p: Sequence) -> bool:
    return c.contains(p)


def in_relative_interior(c: QCone, p: Sequence) -> bool:
    return c.in_relative_interior(p)


def intersect(c1: QCone, c2: QCone) -> QCone:
    return c1.intersect(c2)


def intersect_all(cones: Iterable[QCone], ambient_dim: int) -> QCone:
    """Intersection of many cones in one double description pass."""
    cones = list(dict.fromkeys(cones))
    if not cones:
        return QCone.full(ambient_dim)
    if len(cones) == 1:
        return cones[0]
    ineqs, eqs = [], []
    for c in cones:
        if c.ambient_dim != ambient_dim:
            raise ShapeError("intersecting cones in different ambient spaces")
        ineqs.extend(c.inequalities)
        eqs.extend(c.equations)
    return QCone._from_h(list(dict.fromkeys(ineqs)), list(dict.fromkeys(eqs)), ambient_dim)


def equal(c1: QCone, c2: QCone) -> bool:
    return c1 == c2


def span_rank(vectors: Iterable[Vector]) -> int:
    vectors = [tuple(v) for v in vectors]
    return int_rank(vectors) if vectors else 0
