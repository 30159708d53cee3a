# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the integer kernels in ``toricvgit._pykernels``.

Arithmetic runs on 64-bit integers with overflow detection. Any overflow
(or an input entry that does not fit) reruns the call in pure Python, so
results are always exact and identical to the reference implementation.
"""
from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy
from libc.stdint cimport uint64_t

from toricvgit import _pykernels

cdef extern from *:
    """
    static inline int tv_mul(long long a, long long b, long long *r) { return __builtin_mul_overflow(a, b, r); }
    static inline int tv_add(long long a, long long b, long long *r) { return __builtin_add_overflow(a, b, r); }
    static inline int tv_sub(long long a, long long b, long long *r) { return __builtin_sub_overflow(a, b, r); }
    static inline int tv_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    """
    int tv_mul(long long a, long long b, long long *r) nogil
    int tv_add(long long a, long long b, long long *r) nogil
    int tv_sub(long long a, long long b, long long *r) nogil
    int tv_popcount(unsigned long long x) nogil

cdef long long LL_MIN = -9223372036854775807LL - 1


# ---------------------------------------------------------------- helpers

cdef inline int _dot(const long long* a, const long long* b, int n, long long* out) noexcept nogil:
    cdef long long acc = 0, t
    cdef int i
    for i in range(n):
        if tv_mul(a[i], b[i], &t) or tv_add(acc, t, &acc):
            return 1
    out[0] = acc
    return 0


cdef inline long long _gcd(long long a, long long b) noexcept nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline void _make_primitive(long long* v, int n) noexcept nogil:
    cdef long long g = 0
    cdef int i
    for i in range(n):
        g = _gcd(g, v[i])
    if g > 1:
        for i in range(n):
            v[i] //= g


cdef inline int _combine(long long s0, const long long* x, long long s, const long long* y,
                         int n, long long* out) noexcept nogil:
    """out = primitive(s0 * x - s * y); nonzero return on overflow."""
    cdef long long u, w
    cdef int i
    for i in range(n):
        if tv_mul(s0, x[i], &u) or tv_mul(s, y[i], &w) or tv_sub(u, w, &out[i]):
            return 1
        if out[i] == LL_MIN:
            return 1
    _make_primitive(out, n)
    return 0


# ----------------------------------------------------------------- int_rank

def int_rank(rows):
    """Rank of an integer matrix given as a list of rows (Bareiss elimination)."""
    rows = [tuple(r) for r in rows]
    cdef int m = len(rows)
    if m == 0:
        return 0
    cdef int n = len(rows[0])
    if n == 0:
        return 0
    cdef long long* M = <long long*>malloc(sizeof(long long) * m * n)
    if M == NULL:
        raise MemoryError()
    cdef int i, j, c, p, rank = 0, bad = 0
    cdef long long prev = 1, piv, f, u, w, t
    try:
        try:
            for i in range(m):
                for j in range(n):
                    M[i * n + j] = rows[i][j]
        except OverflowError:
            return _pykernels.int_rank(rows)
        with nogil:
            for c in range(n):
                if rank == m:
                    break
                p = rank
                while p < m and M[p * n + c] == 0:
                    p += 1
                if p == m:
                    continue
                if p != rank:
                    for j in range(n):
                        t = M[p * n + j]
                        M[p * n + j] = M[rank * n + j]
                        M[rank * n + j] = t
                piv = M[rank * n + c]
                for i in range(rank + 1, m):
                    f = M[i * n + c]
                    for j in range(c + 1, n):
                        if (tv_mul(M[i * n + j], piv, &u) or tv_mul(f, M[rank * n + j], &w)
                                or tv_sub(u, w, &t)):
                            bad = 1
                            break
                        M[i * n + j] = t // prev
                    if bad:
                        break
                    M[i * n + c] = 0
                if bad:
                    break
                prev = piv
                rank += 1
        if bad:
            return _pykernels.int_rank(rows)
        return rank
    finally:
        free(M)


# ------------------------------------------------------------------ dd_cone

cdef struct Store:
    long long* v
    uint64_t* t
    Py_ssize_t n
    Py_ssize_t cap
    int dim
    int W


cdef int _store_init(Store* s, int dim, int W) noexcept:
    s.dim = dim
    s.W = W
    s.n = 0
    s.cap = 16
    s.v = <long long*>malloc(sizeof(long long) * s.cap * (dim if dim > 0 else 1))
    s.t = <uint64_t*>malloc(sizeof(uint64_t) * s.cap * W)
    if s.v == NULL or s.t == NULL:
        return -1
    return 0


cdef void _store_free(Store* s) noexcept:
    free(s.v)
    free(s.t)
    s.v = NULL
    s.t = NULL


cdef int _store_push(Store* s, const long long* v, const uint64_t* t) noexcept nogil:
    cdef Py_ssize_t newcap
    cdef long long* nv
    cdef uint64_t* nt
    if s.n == s.cap:
        newcap = s.cap * 2
        nv = <long long*>realloc(s.v, sizeof(long long) * newcap * (s.dim if s.dim > 0 else 1))
        if nv == NULL:
            return -1
        s.v = nv
        nt = <uint64_t*>realloc(s.t, sizeof(uint64_t) * newcap * s.W)
        if nt == NULL:
            return -1
        s.t = nt
        s.cap = newcap
    memcpy(s.v + s.n * s.dim, v, sizeof(long long) * s.dim)
    memcpy(s.t + s.n * s.W, t, sizeof(uint64_t) * s.W)
    s.n += 1
    return 0


# status codes of the core loop
cdef enum:
    OK = 0
    OVERFLOW = 1
    NOMEM = 2


cdef int _dd_core(const long long* A, int m, int dim, int W, long long* L, int* nlin_out,
                  Store* cur, Store* nxt, long long** svals_p, Py_ssize_t* svcap,
                  long long* buf, long long* l0, uint64_t* z) noexcept nogil:
    cdef int k, idx, piv, i, w, cnt, need, adjacent, neg_count, nlin = dim
    cdef Py_ssize_t ip, iq, r, nr
    cdef long long s0, s, sp, sq
    cdef const long long* a
    cdef uint64_t bitw
    cdef Store tmp
    cdef long long* svals = svals_p[0]
    for k in range(m):
        a = A + k * dim
        w = k >> 6
        bitw = (<uint64_t>1) << (k & 63)
        piv = -1
        for idx in range(nlin):
            if _dot(a, L + idx * dim, dim, &s):
                return OVERFLOW
            if s != 0:
                piv = idx
                s0 = s
                break
        if piv >= 0:
            memcpy(l0, L + piv * dim, sizeof(long long) * dim)
            for idx in range(piv, nlin - 1):
                memcpy(L + idx * dim, L + (idx + 1) * dim, sizeof(long long) * dim)
            nlin -= 1
            if s0 < 0:
                for i in range(dim):
                    l0[i] = -l0[i]
                s0 = -s0
            for idx in range(nlin):
                if _dot(a, L + idx * dim, dim, &s):
                    return OVERFLOW
                if s:
                    if _combine(s0, L + idx * dim, s, l0, dim, buf):
                        return OVERFLOW
                    memcpy(L + idx * dim, buf, sizeof(long long) * dim)
            for r in range(cur.n):
                if _dot(a, cur.v + r * dim, dim, &s):
                    return OVERFLOW
                if s:
                    if _combine(s0, cur.v + r * dim, s, l0, dim, buf):
                        return OVERFLOW
                    memcpy(cur.v + r * dim, buf, sizeof(long long) * dim)
                cur.t[r * W + w] |= bitw
            # the old lineality generator is tight at every earlier constraint
            for i in range(W):
                z[i] = 0
            for i in range(k):
                z[i >> 6] |= (<uint64_t>1) << (i & 63)
            if _store_push(cur, l0, z):
                return NOMEM
            continue

        nr = cur.n
        nxt.n = 0
        neg_count = 0
        if nr > svcap[0]:
            svals = <long long*>realloc(svals, sizeof(long long) * nr)
            if svals == NULL:
                return NOMEM
            svals_p[0] = svals
            svcap[0] = nr
        for r in range(nr):
            if _dot(a, cur.v + r * dim, dim, &svals[r]):
                return OVERFLOW
        for r in range(nr):
            if svals[r] > 0:
                if _store_push(nxt, cur.v + r * dim, cur.t + r * W):
                    return NOMEM
            elif svals[r] < 0:
                neg_count += 1
            else:
                if _store_push(nxt, cur.v + r * dim, cur.t + r * W):
                    return NOMEM
                nxt.t[(nxt.n - 1) * W + w] |= bitw
        if neg_count:
            need = dim - nlin - 2
            for ip in range(nr):
                sp = svals[ip]
                if sp <= 0:
                    continue
                for iq in range(nr):
                    sq = svals[iq]
                    if sq >= 0:
                        continue
                    cnt = 0
                    for i in range(W):
                        z[i] = cur.t[ip * W + i] & cur.t[iq * W + i]
                        cnt += tv_popcount(z[i])
                    if cnt < need:
                        continue
                    adjacent = 1
                    for r in range(nr):
                        if r == ip or r == iq:
                            continue
                        for i in range(W):
                            if z[i] & ~cur.t[r * W + i]:
                                break
                        else:
                            adjacent = 0
                            break
                    if adjacent:
                        if _combine(sp, cur.v + iq * dim, sq, cur.v + ip * dim, dim, buf):
                            return OVERFLOW
                        z[w] |= bitw
                        if _store_push(nxt, buf, z):
                            return NOMEM
        tmp = cur[0]
        cur[0] = nxt[0]
        nxt[0] = tmp
    nlin_out[0] = nlin
    return OK


def dd_cone(constraints, int dim):
    """Extreme rays and lineality of ``{x : <a, x> >= 0 for a in constraints}``.

    Same contract and output order as the pure-Python kernel.
    """
    cons = [tuple(c) for c in constraints]
    cdef int m = len(cons)
    cdef int W = (m + 63) // 64 if m > 0 else 1
    cdef int d1 = dim if dim > 0 else 1
    cdef long long* A = <long long*>malloc(sizeof(long long) * (m if m > 0 else 1) * d1)
    cdef long long* L = <long long*>malloc(sizeof(long long) * d1 * d1)
    cdef long long* buf = <long long*>malloc(sizeof(long long) * d1)
    cdef long long* l0 = <long long*>malloc(sizeof(long long) * d1)
    cdef uint64_t* z = <uint64_t*>malloc(sizeof(uint64_t) * W)
    cdef long long* svals = NULL
    cdef Py_ssize_t svcap = 64
    cdef Store cur, nxt
    cdef int status, nlin = 0, i, j
    cdef Py_ssize_t r
    cur.v = NULL
    cur.t = NULL
    nxt.v = NULL
    nxt.t = NULL
    try:
        if A == NULL or L == NULL or buf == NULL or l0 == NULL or z == NULL:
            raise MemoryError()
        if _store_init(&cur, dim, W) or _store_init(&nxt, dim, W):
            raise MemoryError()
        try:
            for i in range(m):
                if len(cons[i]) != dim:
                    raise ValueError("constraint of wrong length")
                for j in range(dim):
                    A[i * dim + j] = cons[i][j]
        except OverflowError:
            return _pykernels.dd_cone(cons, dim)
        for i in range(dim):
            for j in range(dim):
                L[i * dim + j] = 1 if i == j else 0
        svals = <long long*>malloc(sizeof(long long) * svcap)
        if svals == NULL:
            raise MemoryError()
        with nogil:
            status = _dd_core(A, m, dim, W, L, &nlin, &cur, &nxt, &svals, &svcap, buf, l0, z)
        if status == OVERFLOW:
            return _pykernels.dd_cone(cons, dim)
        if status == NOMEM:
            raise MemoryError()
        rays = [tuple(cur.v[r * dim + j] for j in range(dim)) for r in range(cur.n)]
        lin = [tuple(L[i * dim + j] for j in range(dim)) for i in range(nlin)]
        return rays, lin
    finally:
        free(A)
        free(L)
        free(buf)
        free(l0)
        free(z)
        free(svals)
        _store_free(&cur)
        _store_free(&nxt)


# ------------------------------------------------------------- lp_phase_one

cdef int _lp_core(long long* T, int m, int width, long long* basis, int* result) noexcept nogil:
    cdef int stride = width + 1, i, j, e, r
    cdef long long d = 1, p, f, a, u, w, t, lhs, rhs
    cdef long long* z = T + m * stride
    cdef long long* prow
    cdef long long* row
    while True:
        e = -1
        for j in range(width):
            if z[j] < 0:
                e = j
                break
        if e < 0:
            break
        r = -1
        for i in range(m):
            a = T[i * stride + e]
            if a > 0:
                if r < 0:
                    r = i
                    continue
                if tv_mul(T[i * stride + width], T[r * stride + e], &lhs):
                    return OVERFLOW
                if tv_mul(T[r * stride + width], a, &rhs):
                    return OVERFLOW
                if lhs < rhs or (lhs == rhs and basis[i] < basis[r]):
                    r = i
        if r < 0:
            break
        prow = T + r * stride
        p = prow[e]
        for i in range(m + 1):
            if i == r:
                continue
            row = T + i * stride
            f = row[e]
            if f == 0 and p == d:
                continue
            for j in range(stride):
                if tv_mul(p, row[j], &u) or tv_mul(f, prow[j], &w) or tv_sub(u, w, &t):
                    return OVERFLOW
                row[j] = t // d
        d = p
        basis[r] = e
    result[0] = z[width] == 0
    return OK


def lp_phase_one(A, b):
    """Whether ``A x = b, x >= 0`` has a solution; same pivots as the Python kernel."""
    A = [tuple(r) for r in A]
    b = list(b)
    cdef int m = len(b)
    if m == 0:
        return True
    cdef int k = len(A[0]) if A else 0
    if k == 0:
        return not any(b)
    cdef int width = k + m, stride = k + m + 1, i, j, status, result = 0
    cdef long long* T = <long long*>malloc(sizeof(long long) * (m + 1) * stride)
    cdef long long* basis = <long long*>malloc(sizeof(long long) * m)
    cdef long long sgn, acc
    try:
        if T == NULL or basis == NULL:
            raise MemoryError()
        try:
            for i in range(m):
                sgn = -1 if b[i] < 0 else 1
                for j in range(k):
                    T[i * stride + j] = sgn * A[i][j]
                for j in range(m):
                    T[i * stride + k + j] = 1 if i == j else 0
                T[i * stride + width] = sgn * b[i]
                basis[i] = k + i
            for j in range(stride):
                acc = 0
                if j < k or j == width:
                    for i in range(m):
                        if tv_sub(acc, T[i * stride + j], &acc):
                            raise OverflowError()
                T[m * stride + j] = acc
        except OverflowError:
            return _pykernels.lp_phase_one(A, b)
        with nogil:
            status = _lp_core(T, m, width, basis, &result)
        if status == OVERFLOW:
            return _pykernels.lp_phase_one(A, b)
        return bool(result)
    finally:
        free(T)
        free(basis)
