"""Exact feasibility of ``A x = b, x >= 0`` with some coordinates forced to zero."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from toricvgit.errors import ShapeError
from toricvgit.kernels import lp_phase_one

__all__ = ["LpProblem", "lp_feasible"]


@dataclass(frozen=True)
class LpProblem:
    A: tuple[tuple[int, ...], ...]
    b: tuple[int, ...]
    forced_zero: frozenset[int] = frozenset()

    def __init__(self, A: Sequence[Sequence[int]], b: Sequence[int], forced_zero=()):
        A = tuple(tuple(int(x) for x in row) for row in A)
        b = tuple(int(x) for x in b)
        if len(A) != len(b):
            raise ShapeError(f"{len(A)} equations but right-hand side of length {len(b)}")
        n = len(A[0]) if A else 0
        if any(len(r) != n for r in A):
            raise ShapeError("ragged constraint matrix")
        forced = frozenset(int(i) for i in forced_zero)
        if any(not 0 <= i < n for i in forced):
            raise ShapeError("forced-zero index out of range")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "forced_zero", forced)

    @property
    def num_vars(self) -> int:
        return len(self.A[0]) if self.A else 0


def lp_feasible(problem: LpProblem) -> bool:
    """True iff some ``x >= 0`` with ``x_i = 0`` (i forced) solves ``A x = b``.

    Phase-one simplex in exact integer arithmetic; Bland's rule for entering
    and leaving variables guarantees termination.
    """
    keep = [j for j in range(problem.num_vars) if j not in problem.forced_zero]
    A = [[row[j] for j in keep] for row in problem.A]
    return lp_phase_one(A, list(problem.b))
