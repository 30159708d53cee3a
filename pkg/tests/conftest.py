import random
import sys
from pathlib import Path

import pytest

from toricvgit.errors import NonEffectiveGradingError
from toricvgit.grading import DegreeMatrix

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def blp2():
    return DegreeMatrix.from_free([(1, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def p2():
    return DegreeMatrix.from_free([(1,), (1,), (1,)])


@pytest.fixture
def z_plus_z2():
    return DegreeMatrix.from_free([(1,), (0,), (1,)], torsion=(2,), torsion_degrees=[(0,), (1,), (1,)])


def random_grading(rng: random.Random, max_n=8, max_rank=3, bound=3, min_rank=1):
    """Random effective grading over Z^r with entries in [-bound, bound]."""
    while True:
        r = rng.randint(min_rank, max_rank)
        n = rng.randint(r, max_n)
        degs = [tuple(rng.randint(-bound, bound) for _ in range(r)) for _ in range(n)]
        try:
            return DegreeMatrix.from_free(degs)
        except NonEffectiveGradingError:
            continue


def random_point_in(g, rng: random.Random, count=None):
    """Random nonnegative integer combination of the degrees (a point of the weight space)."""
    frees = g.free_degrees
    k = count if count is not None else rng.randint(1, g.n)
    picks = rng.sample(range(g.n), min(k, g.n))
    out = [0] * g.rank
    for i in picks:
        c = rng.randint(1, 4)
        out = [a + c * b for a, b in zip(out, frees[i])]
    return tuple(out)
