"""Integer linear algebra over finitely generated abelian groups.

Matrices act on column vectors. A presentation ``Z^n / im(A)`` uses the
*columns* of ``A`` as relations, so for a fan with ray matrix ``N`` (one ray
per row) the class group is ``cokernel(N)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from toricvgit.errors import ShapeError
from toricvgit.kernels import int_rank

__all__ = [
    "IntMatrix",
    "FgAbelianGroup",
    "DegreeVector",
    "Projection",
    "smith_normal_form",
    "cokernel",
    "integer_kernel",
    "rank_of_span",
]


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix with arbitrary-precision entries, row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int | None = None) -> IntMatrix:
        return cls.from_rows(columns, rows).T

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(
            self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum(a * b for a, b in zip(r, c)) for c in cols)
        return IntMatrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise ShapeError(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(self.row(i), v)) for i in range(self.rows))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def det(self) -> int:
        """Determinant (Bareiss); square matrices only."""
        if self.rows != self.cols:
            raise ShapeError("determinant of a non-square matrix")
        n = self.rows
        M = self.to_rows()
        sign, prev = 1, 1
        for k in range(n):
            p = next((i for i in range(k, n) if M[i][k] != 0), None)
            if p is None:
                return 0
            if p != k:
                M[k], M[p] = M[p], M[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            prev = M[k][k]
        return sign * (M[n - 1][n - 1] if n else 1)

    def rank(self) -> int:
        return int_rank(self.to_rows())

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_rows()})"


@dataclass(frozen=True)
class FgAbelianGroup:
    """``Z^rank + Z/m_1 + ... + Z/m_k`` with ``m_1 | m_2 | ... | m_k`` and all ``m_i >= 2``."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(m) for m in self.torsion))
        if self.rank < 0:
            raise ShapeError("group rank must be nonnegative")
        for i, m in enumerate(self.torsion):
            if m < 2:
                raise ShapeError(f"torsion invariant {m} < 2")
            if i and m % self.torsion[i - 1]:
                raise ShapeError(f"torsion invariants {self.torsion} are not a divisibility chain")

    def element(self, free: Sequence[int], torsion: Sequence[int] = ()) -> DegreeVector:
        """Element with the given free part; torsion residues are reduced."""
        if len(free) != self.rank:
            raise ShapeError(f"free part of length {len(free)} in a group of rank {self.rank}")
        if not torsion:
            torsion = (0,) * len(self.torsion)
        if len(torsion) != len(self.torsion):
            raise ShapeError(f"{len(torsion)} torsion residues for {len(self.torsion)} invariants")
        return DegreeVector(
            tuple(int(x) for x in free),
            tuple(int(t) % m for t, m in zip(torsion, self.torsion)),
            self.torsion,
        )

    def zero(self) -> DegreeVector:
        return self.element((0,) * self.rank)

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = [f"Z^{self.rank}" if self.rank != 1 else "Z"] if self.rank else []
        parts += [f"Z/{m}" for m in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class DegreeVector:
    """Element of a finitely generated abelian group.

    ``moduli`` repeats the torsion invariants of the ambient group so that a
    vector can validate itself and be compared for shape without the group.
    """

    free: tuple[int, ...]
    torsion: tuple[int, ...] = ()
    moduli: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "free", tuple(int(x) for x in self.free))
        object.__setattr__(self, "torsion", tuple(int(x) for x in self.torsion))
        object.__setattr__(self, "moduli", tuple(int(x) for x in self.moduli))
        if len(self.torsion) != len(self.moduli):
            raise ShapeError("torsion part and moduli differ in length")
        for t, m in zip(self.torsion, self.moduli):
            if not 0 <= t < m:
                raise ShapeError(f"residue {t} not reduced modulo {m}")

    @property
    def shape(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.free), self.moduli)

    def __add__(self, other: DegreeVector) -> DegreeVector:
        if self.shape != other.shape:
            raise ShapeError("adding elements of different groups")
        return DegreeVector(
            tuple(a + b for a, b in zip(self.free, other.free)),
            tuple((a + b) % m for a, b, m in zip(self.torsion, other.torsion, self.moduli)),
            self.moduli,
        )

    def __rmul__(self, k: int) -> DegreeVector:
        return DegreeVector(
            tuple(k * a for a in self.free),
            tuple((k * a) % m for a, m in zip(self.torsion, self.moduli)),
            self.moduli,
        )

    @property
    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)

    def __str__(self) -> str:
        s = ",".join(str(x) for x in self.free)
        if self.torsion:
            s += ";" + ",".join(f"{t} mod {m}" for t, m in zip(self.torsion, self.moduli))
        return f"({s})"


@dataclass(frozen=True)
class Projection:
    """Surjection ``Z^n -> group`` given by integer rows.

    ``free`` is ``rank x n``; ``torsion`` is ``k x n`` with row ``i`` read
    modulo ``group.torsion[i]``.
    """

    group: FgAbelianGroup
    free: IntMatrix
    torsion: IntMatrix

    @property
    def n(self) -> int:
        return self.free.cols

    def __call__(self, x: Sequence[int]) -> DegreeVector:
        tors = self.torsion.apply(x) if self.torsion.rows else ()
        return self.group.element(self.free.apply(x), tors)

    def images(self) -> list[DegreeVector]:
        """Classes of the standard basis vectors ``e_1, ..., e_n``."""
        n = self.n
        return [self(tuple(int(i == j) for j in range(n))) for i in range(n)]


def smith_normal_form(A: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return unimodular ``U``, ``V`` and diagonal ``S`` with ``U @ A @ V == S``.

    The diagonal of ``S`` is nonnegative and each entry divides the next.
    """
    m, n = A.rows, A.cols
    S = A.to_rows()
    U = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()

    def row_add(dst, src, q):  # row_dst += q * row_src
        S[dst] = [a + q * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def col_add(dst, src, q):  # col_dst += q * col_src
        for M in (S, V):
            for r in M:
                r[dst] += q * r[src]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (S, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = S[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = S[t][t]
            clean = True
            for i in range(t + 1, m):
                q = S[i][t] // p
                if q:
                    row_add(i, t, -q)
                if S[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = S[t][j] // p
                if q:
                    col_add(j, t, -q)
                if S[t][j]:
                    clean = False
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % p),
                None,
            )
            if bad is None:
                break
            row_add(t, bad, 1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
        if best is None:
            break
    return IntMatrix.from_rows(U, m), IntMatrix.from_rows(S, n), IntMatrix.from_rows(V, n)


def _diagonal(S: IntMatrix) -> list[int]:
    return [S[i, i] for i in range(min(S.rows, S.cols))]


def _row_echelon(rows: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite form of a full-row-rank integer matrix (unimodular row ops only)."""
    M = [list(r) for r in rows]
    m = len(M)
    if not m:
        return M
    n = len(M[0])
    k = 0
    for c in range(n):
        if k == m:
            break
        while True:
            nz = [i for i in range(k, m) if M[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(M[i][c]))
            M[k], M[p] = M[p], M[k]
            done = True
            for i in range(k + 1, m):
                q = M[i][c] // M[k][c]
                if q:
                    M[i] = [a - q * b for a, b in zip(M[i], M[k])]
                if M[i][c]:
                    done = False
            if done:
                break
        if not M[k][c]:
            continue
        if M[k][c] < 0:
            M[k] = [-a for a in M[k]]
        for i in range(k):
            q = M[i][c] // M[k][c]
            if q:
                M[i] = [a - q * b for a, b in zip(M[i], M[k])]
        k += 1
    return M


def cokernel(A: IntMatrix) -> tuple[FgAbelianGroup, Projection]:
    """``Z^n / (column span of A)`` in invariant-factor form, with its projection.

    ``A`` has ``n`` rows. The free rows of the projection are brought to
    row-echelon form with positive pivots so that presentations are stable.
    """
    n = A.rows
    U, S, _ = smith_normal_form(A)
    diag = [d for d in _diagonal(S) if d]
    s = len(diag)
    torsion_idx = [i for i, d in enumerate(diag) if d > 1]
    group = FgAbelianGroup(n - s, tuple(diag[i] for i in torsion_idx))
    urows = U.to_rows()
    free_rows = _row_echelon(urows[s:])
    tors_rows = [[x % diag[i] for x in urows[i]] for i in torsion_idx]
    return group, Projection(
        group, IntMatrix.from_rows(free_rows, n), IntMatrix.from_rows(tors_rows, n)
    )


def integer_kernel(A: IntMatrix) -> IntMatrix:
    """Matrix whose columns form a basis of the lattice ``{x in Z^n : A x = 0}``."""
    _, S, V = smith_normal_form(A)
    r = sum(1 for d in _diagonal(S) if d)
    cols = [V.column(j) for j in range(r, A.cols)]
    return IntMatrix.from_columns(cols, A.cols) if cols else IntMatrix.zeros(A.cols, 0)


def rank_of_span(vectors: Iterable[DegreeVector]) -> int:
    """Dimension of the Q-span of the free parts; torsion parts are ignored."""
    vectors = list(vectors)
    if not vectors:
        return 0
    shape = vectors[0].shape
    for v in vectors:
        if v.shape != shape:
            raise ShapeError("vectors belong to different groups")
    return int_rank([v.free for v in vectors])


def gcd_all(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
