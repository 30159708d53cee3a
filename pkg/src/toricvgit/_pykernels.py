"""Pure-Python implementations of the hot integer kernels.

These are the reference versions. ``toricvgit._ckernels`` (Cython) provides
the same functions on machine integers and falls back to this module whenever
an intermediate value would overflow 64 bits, so both routes are exact.
"""
from math import gcd

__all__ = ["int_rank", "dd_cone", "primitive", "lp_phase_one"]


def primitive(v):
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in v)
    return tuple(v)


def int_rank(rows):
    """Rank of an integer matrix given as a list of rows (Bareiss elimination)."""
    M = [list(r) for r in rows]
    m = len(M)
    if m == 0:
        return 0
    n = len(M[0])
    rank = 0
    prev = 1
    for c in range(n):
        if rank == m:
            break
        p = rank
        while p < m and M[p][c] == 0:
            p += 1
        if p == m:
            continue
        if p != rank:
            M[p], M[rank] = M[rank], M[p]
        piv_row = M[rank]
        piv = piv_row[c]
        for i in range(rank + 1, m):
            row = M[i]
            f = row[c]
            for j in range(c + 1, n):
                row[j] = (row[j] * piv - f * piv_row[j]) // prev
            row[c] = 0
        prev = piv
        rank += 1
    return rank


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def dd_cone(constraints, dim):
    """Extreme rays and lineality of ``{x in R^dim : <a, x> >= 0 for a in constraints}``.

    Incremental double description with the combinatorial adjacency test.
    Returns ``(rays, lineality)`` as lists of primitive integer tuples; rays
    are extreme modulo the lineality space but not yet projected onto its
    orthogonal complement.
    """
    lin = [tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)]
    rays = []
    tight = []
    for k, a in enumerate(constraints):
        bit = 1 << k
        piv = -1
        for idx, l in enumerate(lin):
            if _dot(a, l) != 0:
                piv = idx
                break
        if piv >= 0:
            l0 = lin.pop(piv)
            s0 = _dot(a, l0)
            if s0 < 0:
                l0 = tuple(-x for x in l0)
                s0 = -s0
            new_lin = []
            for l in lin:
                s = _dot(a, l)
                if s:
                    l = primitive([s0 * x - s * y for x, y in zip(l, l0)])
                new_lin.append(l)
            lin = new_lin
            new_rays = []
            for r in rays:
                s = _dot(a, r)
                if s:
                    r = primitive([s0 * x - s * y for x, y in zip(r, l0)])
                new_rays.append(r)
            rays = new_rays
            tight = [t | bit for t in tight]
            rays.append(l0)
            tight.append(bit - 1)
            continue

        pos, neg = [], []
        new_rays, new_tight = [], []
        for i, (r, t) in enumerate(zip(rays, tight)):
            s = _dot(a, r)
            if s > 0:
                pos.append((i, r, s, t))
                new_rays.append(r)
                new_tight.append(t)
            elif s < 0:
                neg.append((i, r, s, t))
            else:
                new_rays.append(r)
                new_tight.append(t | bit)
        if neg:
            need = dim - len(lin) - 2
            for ip, p, sp, tp in pos:
                for iq, q, sq, tq in neg:
                    z = tp & tq
                    if z.bit_count() < need:
                        continue
                    adjacent = True
                    for i, t in enumerate(tight):
                        if i != ip and i != iq and z & ~t == 0:
                            adjacent = False
                            break
                    if adjacent:
                        new_rays.append(primitive([sp * y - sq * x for x, y in zip(p, q)]))
                        new_tight.append(z | bit)
        rays, tight = new_rays, new_tight
    return rays, lin


def lp_phase_one(A, b):
    """Whether ``A x = b, x >= 0`` has a solution (integer data).

    Phase-one simplex with Bland's rule on a fraction-free tableau: entries
    are kept as integers scaled by the previous pivot, so every update
    ``(p * t - f * u) / d`` divides exactly.
    """
    m = len(b)
    if m == 0:
        return True
    k = len(A[0]) if A else 0
    if k == 0:
        return not any(b)
    T = []
    for i in range(m):
        row = list(A[i])
        rhs = b[i]
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        T.append(row + [1 if j == i else 0 for j in range(m)] + [rhs])
    width = k + m
    z = [-sum(T[i][j] for i in range(m)) for j in range(k)] + [0] * m
    z.append(-sum(T[i][width] for i in range(m)))
    T.append(z)
    basis = [k + i for i in range(m)]
    d = 1
    while True:
        z = T[m]
        e = -1
        for j in range(width):
            if z[j] < 0:
                e = j
                break
        if e < 0:
            break
        r = -1
        for i in range(m):
            a = T[i][e]
            if a > 0:
                if r < 0:
                    r = i
                    continue
                # compare T[i][rhs] / a with T[r][rhs] / T[r][e]
                lhs = T[i][width] * T[r][e]
                rhs = T[r][width] * a
                if lhs < rhs or (lhs == rhs and basis[i] < basis[r]):
                    r = i
        if r < 0:
            break
        prow = T[r]
        p = prow[e]
        for i in range(m + 1):
            if i == r:
                continue
            row = T[i]
            f = row[e]
            if f:
                T[i] = [(p * x - f * y) // d for x, y in zip(row, prow)]
            elif p != d:
                T[i] = [(p * x) // d for x in row]
        d = p
        basis[r] = e
    return T[m][width] == 0
