"""Compare the compiled and pure-Python kernels.

Kernel timings call both implementations directly on identical inputs. The end-to-end
workload (bases, chambers, GIT cones and both irrelevant-ideal paths over random gradings)
runs in a subprocess per backend so the selector picks each one at import.

    python3 benchmarks/bench_kernels.py [--gradings 200] [--repeat 3]
"""
import argparse
import os
import random
import subprocess
import sys
import time

from toricvgit import _pykernels

try:
    from toricvgit import _ckernels
except ImportError:
    _ckernels = None

WORKLOAD = """
import random, sys, time
from toricvgit.errors import NonEffectiveGradingError
from toricvgit.gitfan import enumerate_chambers, git_cone, irrelevant_ideal
from toricvgit.grading import DegreeMatrix, monomic_relevant_generators
from toricvgit.kernels import BACKEND

rng = random.Random(5)
gs = []
while len(gs) < {count}:
    r = rng.randint(1, 3)
    n = rng.randint(r, 8)
    try:
        gs.append(DegreeMatrix.from_free([tuple(rng.randint(-3, 3) for _ in range(r)) for _ in range(n)]))
    except NonEffectiveGradingError:
        pass
t = time.perf_counter()
for g in gs:
    monomic_relevant_generators(g)
    for ch in enumerate_chambers(g):
        a = ch.sample_point
        git_cone(g, a)
        irrelevant_ideal(g, a, "generic")
        irrelevant_ideal(g, a, "lp")
print(BACKEND, time.perf_counter() - t)
"""


def kernel_inputs(seed=1):
    rng = random.Random(seed)
    dd, lp = [], []
    for _ in range(400):
        d = rng.randint(2, 4)
        dd.append(([tuple(rng.randint(-4, 4) for _ in range(d)) for _ in range(rng.randint(3, 14))], d))
        m, k = rng.randint(1, 3), rng.randint(2, 8)
        lp.append(([[rng.randint(-3, 3) for _ in range(k)] for _ in range(m)], [rng.randint(-4, 4) for _ in range(m)]))
    return dd, lp


def best_of(repeat, fn):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def bench_kernels(repeat):
    dd, lp = kernel_inputs()
    rows = []
    for name, call, inputs in (
        ("int_rank", lambda mod, x: mod.int_rank(x[0]), dd),
        ("dd_cone", lambda mod, x: mod.dd_cone(x[0], x[1]), dd),
        ("lp_phase_one", lambda mod, x: mod.lp_phase_one(x[0], x[1]), lp),
    ):
        py = best_of(repeat, lambda: [call(_pykernels, x) for x in inputs])
        if _ckernels is not None:
            cy = best_of(repeat, lambda: [call(_ckernels, x) for x in inputs])
            assert [call(_ckernels, x) for x in inputs] == [call(_pykernels, x) for x in inputs]
        else:
            cy = None
        rows.append((name, len(inputs), py, cy))
    return rows


def bench_workload(count):
    out = {}
    for pure in (False, True):
        env = dict(os.environ)
        env.pop("TORICVGIT_PURE_PYTHON", None)
        if pure:
            env["TORICVGIT_PURE_PYTHON"] = "1"
        res = subprocess.run([sys.executable, "-c", WORKLOAD.format(count=count)], env=env,
                             capture_output=True, text=True, check=True)
        backend, seconds = res.stdout.split()
        out[backend] = float(seconds)
    return out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--gradings", type=int, default=200)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)

    print(f"{'kernel':<14}{'calls':>7}{'python s':>11}{'cython s':>11}{'speedup':>9}")
    for name, calls, py, cy in bench_kernels(args.repeat):
        if cy is None:
            print(f"{name:<14}{calls:>7}{py:>11.4f}{'n/a':>11}{'':>9}")
        else:
            print(f"{name:<14}{calls:>7}{py:>11.4f}{cy:>11.4f}{py / cy:>8.1f}x")
    res = bench_workload(args.gradings)
    print()
    print(f"end-to-end workload, {args.gradings} gradings:")
    for backend in sorted(res):
        print(f"  {backend:<8}{res[backend]:.3f} s")


if __name__ == "__main__":
    main()
