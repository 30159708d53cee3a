"""Graded polynomial rings: degrees, relevance, weight and orbit cones.

Everything here depends only on *supports*: the weight cone of a monomial is
spanned by the degrees of the variables dividing it, so exponents are kept
for display only. Torsion parts of degrees enter the effectivity check and
nothing else; all cones live in the real span ``D_R = R^rank``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

from toricvgit.cones import QCone, cone_from_generators
from toricvgit.errors import NonEffectiveGradingError, PreconditionError, ShapeError
from toricvgit.kernels import int_rank
from toricvgit.lattice import DegreeVector, FgAbelianGroup, IntMatrix, smith_normal_form

__all__ = [
    "DegreeMatrix",
    "MonomialSupport",
    "PointSupport",
    "is_effective",
    "weight_cone",
    "is_relevant",
    "monomic_relevant_generators",
    "brute_force_bases",
    "weight_space",
    "orbit_cone",
    "is_semistable",
    "is_geometrically_semistable",
    "orbit_cone_cover",
]


@dataclass(frozen=True, order=True)
class MonomialSupport:
    """Set of variable indices of a monomial; ``exponents`` are cosmetic."""

    indices: tuple[int, ...]
    exponents: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(sorted(set(int(i) for i in self.indices))))
        if any(i < 0 for i in self.indices):
            raise ShapeError("negative variable index")

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def issubset(self, other: Iterable[int]) -> bool:
        return set(self.indices) <= set(other)


@dataclass(frozen=True, order=True)
class PointSupport:
    """Indices of the nonzero coordinates of a point of affine space."""

    nonzero: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "nonzero", tuple(sorted(set(int(i) for i in self.nonzero))))
        if any(i < 0 for i in self.nonzero):
            raise ShapeError("negative variable index")

    def zero_set(self, n: int) -> tuple[int, ...]:
        return tuple(i for i in range(n) if i not in self.nonzero)


SupportLike = Union[MonomialSupport, PointSupport, Iterable[int], str]
DegreeLike = Union[DegreeVector, Sequence[int], Sequence[Fraction]]


def is_effective(group: FgAbelianGroup, degrees: Sequence[DegreeVector]) -> bool:
    """Whether the degrees generate ``group``.

    The generated subgroup is all of ``D`` iff the cokernel of
    ``[free | 0; torsion | diag(m)]`` is trivial, i.e. every Smith invariant is 1.
    """
    r, k, n = group.rank, len(group.torsion), len(degrees)
    rows = []
    for i in range(r):
        rows.append([d.free[i] for d in degrees] + [0] * k)
    for i, m in enumerate(group.torsion):
        rows.append([d.torsion[i] for d in degrees] + [m if j == i else 0 for j in range(k)])
    if not rows:
        return True
    _, S, _ = smith_normal_form(IntMatrix.from_rows(rows, n + k))
    diag = [S[i, i] for i in range(min(S.rows, S.cols))]
    return len(diag) == r + k and all(d == 1 for d in diag)


@dataclass(frozen=True)
class DegreeMatrix:
    """An effective grading of ``base[x_1, ..., x_n]`` by a group ``D``."""

    group: FgAbelianGroup
    variable_names: tuple[str, ...]
    degrees: tuple[DegreeVector, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "variable_names", tuple(self.variable_names))
        object.__setattr__(self, "degrees", tuple(self.degrees))
        n = len(self.degrees)
        if n < 1:
            raise ShapeError("a grading needs at least one variable")
        if len(self.variable_names) != n:
            raise ShapeError(f"{len(self.variable_names)} names for {n} degrees")
        if len(set(self.variable_names)) != n:
            raise ShapeError("variable names must be distinct")
        shape = (self.group.rank, self.group.torsion)
        for d in self.degrees:
            if d.shape != shape:
                raise ShapeError(f"degree {d} does not belong to {self.group}")
        if not is_effective(self.group, self.degrees):
            raise NonEffectiveGradingError(
                f"degrees do not generate {self.group}; the grading is not effective"
            )

    @classmethod
    def from_free(cls, free_degrees: Sequence[Sequence[int]], names: Sequence[str] | None = None,
                  torsion: Sequence[int] = (), torsion_degrees: Sequence[Sequence[int]] | None = None
                  ) -> DegreeMatrix:
        """Convenience constructor from free parts (and optional torsion residues)."""
        free_degrees = [tuple(d) for d in free_degrees]
        rank = len(free_degrees[0]) if free_degrees else 0
        group = FgAbelianGroup(rank, tuple(torsion))
        if torsion_degrees is None:
            torsion_degrees = [()] * len(free_degrees)
        degs = tuple(group.element(f, t) for f, t in zip(free_degrees, torsion_degrees))
        if names is None:
            names = default_names(len(degs))
        return cls(group, tuple(names), degs)

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def rank(self) -> int:
        return self.group.rank

    @property
    def free_degrees(self) -> tuple[tuple[int, ...], ...]:
        return tuple(d.free for d in self.degrees)

    def cached(self, key, compute):
        # compute-twice-keep-one; setdefault keeps the first stored value
        try:
            return self._cache[key]
        except KeyError:
            return self._cache.setdefault(key, compute())

    def indices(self, support: SupportLike) -> tuple[int, ...]:
        """Normalize a support given as object, index iterable or monomial string."""
        if isinstance(support, MonomialSupport):
            idx = support.indices
        elif isinstance(support, PointSupport):
            idx = support.nonzero
        elif isinstance(support, str):
            idx = self.parse_monomial(support).indices
        else:
            idx = tuple(sorted(set(int(i) for i in support)))
        if any(not 0 <= i < self.n for i in idx):
            raise ShapeError(f"variable index out of range in {idx}")
        return idx

    def parse_monomial(self, text: str) -> MonomialSupport:
        """Parse ``"xz"``, ``"x*z"``, ``"x z"`` or ``"x^2*z"`` into a support."""
        text = text.strip()
        if text in ("", "1"):
            return MonomialSupport(())
        pos = {name: i for i, name in enumerate(self.variable_names)}
        if re.search(r"[*\s,]", text) or any(len(nm) > 1 for nm in self.variable_names):
            tokens = [t for t in re.split(r"[*\s,]+", text) if t]
        else:
            tokens = re.findall(r"[A-Za-z_]\^?\d*", text)
        idx, exps = [], []
        for tok in tokens:
            name, _, e = tok.partition("^")
            if name not in pos:
                raise ShapeError(f"unknown variable {name!r} in monomial {text!r}")
            idx.append(pos[name])
            exps.append(int(e) if e else 1)
        order = sorted(range(len(idx)), key=lambda j: idx[j])
        return MonomialSupport(tuple(idx[j] for j in order), tuple(exps[j] for j in order))

    def monomial(self, support: SupportLike) -> str:
        """Display name: ``xz`` for one-letter names, ``x1*x3`` otherwise; ``1`` if empty."""
        idx = self.indices(support)
        if not idx:
            return "1"
        names = [self.variable_names[i] for i in idx]
        if all(len(nm) == 1 for nm in self.variable_names):
            return "".join(names)
        return "*".join(names)

    def free_part(self, d: DegreeLike) -> tuple:
        """Free part of a degree as a tuple of rationals, checked against the group."""
        if isinstance(d, DegreeVector):
            if d.shape != (self.group.rank, self.group.torsion):
                raise ShapeError(f"degree {d} does not belong to {self.group}")
            return d.free
        d = tuple(Fraction(x) for x in d)
        if len(d) != self.rank:
            raise ShapeError(f"degree of length {len(d)} in a group of rank {self.rank}")
        return tuple(int(x) if x.denominator == 1 else x for x in d)


def default_names(n: int) -> tuple[str, ...]:
    if n <= 4:
        return tuple("xyzw"[:n])
    return tuple(f"x{i + 1}" for i in range(n))


def weight_cone(g: DegreeMatrix, f: SupportLike) -> QCone:
    """Cone spanned by the degrees of the variables in the support (zero cone if empty)."""
    idx = g.indices(f)
    return g.cached(("wc", idx), lambda: cone_from_generators(
        [g.degrees[i].free for i in idx], g.rank))


def support_rank(g: DegreeMatrix, f: SupportLike) -> int:
    idx = g.indices(f)
    if not idx:
        return 0
    return int_rank([g.degrees[i].free for i in idx])


def is_relevant(g: DegreeMatrix, f: SupportLike) -> bool:
    """Relevant iff the weight cone is full-dimensional in ``D_R``."""
    return support_rank(g, f) == g.rank


def brute_force_bases(g: DegreeMatrix) -> list[MonomialSupport]:
    """Every ``rank``-subset of variables scanned with an independent rank test."""
    from toricvgit._linalg import rref

    out = []
    for T in combinations(range(g.n), g.rank):
        R, _ = rref([g.degrees[i].free for i in T], g.rank)
        if len(R) == g.rank:
            out.append(MonomialSupport(T))
    return out


def monomic_relevant_generators(g: DegreeMatrix) -> list[MonomialSupport]:
    """Bases of the linear matroid of the degree configuration.

    Supports of size ``rank(D)`` whose degrees are linearly independent, in
    lexicographic order of their index tuples.
    """
    if not is_effective(g.group, g.degrees):
        raise PreconditionError("relevant generators require an effective grading")

    def compute():
        r = g.rank
        frees = g.free_degrees
        bases = []
        # grow independent sets depth-first; prune dependent prefixes early
        def extend(prefix, start):
            if len(prefix) == r:
                bases.append(MonomialSupport(tuple(prefix)))
                return
            for i in range(start, g.n - (r - len(prefix)) + 1):
                cand = prefix + [i]
                if int_rank([frees[j] for j in cand]) == len(cand):
                    extend(cand, i + 1)
        extend([], 0)
        return tuple(bases)

    return list(g.cached("bases", compute))


def weight_space(g: DegreeMatrix) -> QCone:
    """Closed cone spanned by all variable degrees."""
    return g.cached("ws", lambda: cone_from_generators(g.free_degrees, g.rank))


def orbit_cone(g: DegreeMatrix, x: SupportLike) -> QCone:
    """Cone of degrees of the variables not vanishing at the point."""
    return weight_cone(g, x)


def is_semistable(g: DegreeMatrix, x: SupportLike, d: DegreeLike) -> bool:
    """``x`` is semistable for ``d`` iff ``d`` lies in the orbit cone of ``x``."""
    return orbit_cone(g, x).contains(g.free_part(d))


def is_geometrically_semistable(g: DegreeMatrix, x: SupportLike, d: DegreeLike | None = None) -> bool:
    """Semistable for ``d`` (when given) and with a full-dimensional orbit cone."""
    if d is not None and not is_semistable(g, x, d):
        return False
    return support_rank(g, x) == g.rank


def orbit_cone_cover(g: DegreeMatrix, x: SupportLike) -> list[QCone]:
    """Weight cones of the bases inside the nonzero set; their union is the orbit cone."""
    idx = set(g.indices(x))
    if support_rank(g, idx) != g.rank:
        raise PreconditionError("the orbit cone is not full-dimensional")
    return [weight_cone(g, b) for b in monomic_relevant_generators(g) if b.issubset(idx)]
