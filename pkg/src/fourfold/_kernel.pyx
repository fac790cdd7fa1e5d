# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search backend.

Mirror of _pure.sweep restricted to int64 arithmetic.  The dispatcher only
routes a call here after proving that no intermediate value can exceed the
int64 range, so the narrowing is safe.  Iteration order is identical to the
pure backend and both return the same witnesses.
"""

from libc.stdlib cimport free, malloc

MODE_FIRST = 0
MODE_SHELL = 1
MODE_COLLECT = 2


cdef inline long long _llabs(long long v):
    return -v if v < 0 else v


def sweep(object qflat, object residues, int rank, long long limit,
          long long target, int mode):
    """int64 twin of fourfold._pure.sweep; same arguments, same results."""
    if rank == 0:
        hit = target == 0 and (mode != MODE_SHELL or limit == 0)
        if mode == MODE_COLLECT:
            return [()] if hit else []
        return () if hit else None

    cdef int n = rank
    cdef long long *q = <long long *> malloc(n * n * sizeof(long long))
    cdef long long *lo = <long long *> malloc(n * sizeof(long long))
    cdef long long *cur = <long long *> malloc(n * sizeof(long long))
    cdef long long *qval = <long long *> malloc((n + 1) * sizeof(long long))
    cdef long long *maxabs = <long long *> malloc((n + 1) * sizeof(long long))
    cdef long long *cross = <long long *> malloc((n + 1) * n * sizeof(long long))
    if q == NULL or lo == NULL or cur == NULL or qval == NULL \
            or maxabs == NULL or cross == NULL:
        free(q); free(lo); free(cur); free(qval); free(maxabs); free(cross)
        raise MemoryError()

    cdef int i, d
    cdef long long v, av, m, qnext, start
    cdef bint empty = False
    hits = [] if mode == MODE_COLLECT else None
    found = None

    try:
        for i in range(n * n):
            q[i] = qflat[i]
        for i in range(n):
            start = -limit
            if (start - <long long> residues[i]) % 2 != 0:
                start += 1
            lo[i] = start
            if start > limit:
                empty = True
        if empty:
            return [] if mode == MODE_COLLECT else None

        for i in range((n + 1) * n):
            cross[i] = 0
        qval[0] = 0
        maxabs[0] = 0

        d = 0
        cur[0] = lo[0]
        while d >= 0:
            v = cur[d]
            if v > limit:
                d -= 1
                if d >= 0:
                    cur[d] += 2
                continue
            qnext = qval[d] + q[d * n + d] * v * v + 2 * v * cross[d * n + d]
            if d == n - 1:
                if qnext == target:
                    m = maxabs[d]
                    av = _llabs(v)
                    if av > m:
                        m = av
                    if mode != MODE_SHELL or m == limit:
                        found = tuple(cur[i] for i in range(n))
                        if mode == MODE_COLLECT:
                            hits.append(found)
                        else:
                            return found
                cur[d] += 2
                continue
            for i in range(d + 1, n):
                cross[(d + 1) * n + i] = cross[d * n + i] + q[i * n + d] * v
            qval[d + 1] = qnext
            av = _llabs(v)
            maxabs[d + 1] = av if av > maxabs[d] else maxabs[d]
            d += 1
            cur[d] = lo[d]

        return hits if mode == MODE_COLLECT else None
    finally:
        free(q); free(lo); free(cur); free(qval); free(maxabs); free(cross)


def first_hit(qflat, residues, rank, limit, target):
    return sweep(qflat, residues, rank, limit, target, MODE_FIRST)


def first_hit_on_shell(qflat, residues, rank, shell, target):
    return sweep(qflat, residues, rank, shell, target, MODE_SHELL)


def all_hits(qflat, residues, rank, limit, target):
    return sweep(qflat, residues, rank, limit, target, MODE_COLLECT)
