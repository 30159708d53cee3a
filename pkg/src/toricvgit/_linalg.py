"""Exact rational linear algebra helpers used by the cone engine."""
from fractions import Fraction
from math import gcd, lcm

from toricvgit.kernels import primitive


def rref(rows, ncols):
    """Reduced row echelon form over Q. Returns (nonzero rows, pivot columns)."""
    M = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        pv = M[r][c]
        M[r] = [x / pv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def to_integer(v):
    """Scale a rational vector to a primitive integer vector (same direction)."""
    if all(type(x) is int for x in v):
        return primitive(v)
    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    return primitive([int(Fraction(x) * den) for x in v])


def canonical_basis(vectors, dim):
    """Canonical integer basis (scaled RREF rows) of the span of ``vectors``."""
    R, _ = rref(vectors, dim)
    return tuple(to_integer(r) for r in R)


def nullspace(rows, ncols):
    """Integer basis of ``{x : <r, x> = 0 for all rows r}`` (canonical RREF form)."""
    R, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return canonical_basis(basis, ncols)


def project_out(v, basis):
    """Orthogonal projection of ``v`` onto the complement of span(basis), as primitive ints."""
    if not basis:
        return primitive(v)
    k = len(basis)
    gram = [[sum(a * b for a, b in zip(basis[i], basis[j])) for j in range(k)] for i in range(k)]
    rhs = [sum(a * b for a, b in zip(basis[i], v)) for i in range(k)]
    coef = solve_square(gram, rhs)
    w = [Fraction(x) for x in v]
    for c, b in zip(coef, basis):
        if c:
            w = [x - c * y for x, y in zip(w, b)]
    return to_integer(w)


def solve_square(A, b):
    """Solve a nonsingular square system exactly."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    for c in range(n):
        p = next(i for i in range(c, n) if M[i][c] != 0)
        M[c], M[p] = M[p], M[c]
        pv = M[c][c]
        M[c] = [x / pv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return [M[i][n] for i in range(n)]


def solve_in_span(columns, target):
    """Coefficients c with sum c_i columns_i = target, or None if target is outside the span.

    ``columns`` must be linearly independent.
    """
    k = len(columns)
    den = 1
    if all(type(x) is int for x in target):
        t = list(target)
    else:
        for x in target:
            den = lcm(den, Fraction(x).denominator)
        t = [int(Fraction(x) * den) for x in target]
    rows = [[columns[j][i] for j in range(k)] + [t[i]] for i in range(len(t))]
    # fraction-free forward elimination; rows are kept primitive
    r = 0
    for c in range(k + 1):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        if c == k:
            return None
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        q = pr[c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = primitive([q * x - f * y for x, y in zip(rows[i], pr)])
        r += 1
    coef = [Fraction(0)] * k
    for j in range(k - 1, -1, -1):
        row = rows[j]
        rest = row[k] - sum(row[l] * coef[l] for l in range(j + 1, k))
        coef[j] = Fraction(rest) / row[j]
    return [c / den for c in coef] if den != 1 else coef


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def content(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g
