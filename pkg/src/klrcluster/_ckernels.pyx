# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled shuffle kernels. Same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef inline int _cartan(long i, long j) nogil:
    if i == j:
        return 2
    if i - j == 1 or j - i == 1:
        return -1
    return 0


cdef inline bint _next_combination(int* pos, int r, int total) nogil:
    # advance pos[0..r) to the next r-subset of range(total) in lex order
    cdef int i = r - 1
    while i >= 0 and pos[i] == total - r + i:
        i -= 1
    if i < 0:
        return False
    pos[i] += 1
    i += 1
    while i < r:
        pos[i] = pos[i - 1] + 1
        i += 1
    return True


cdef void _fill(long* a, int r, long* b, int s, int* pos, long* out,
                int* bpos) nogil:
    cdef int total = r + s
    cdef int p, k = 0, idx = 0
    for p in range(total):
        if k < r and pos[k] == p:
            out[p] = a[k]
            k += 1
        else:
            out[p] = b[idx]
            bpos[idx] = p
            idx += 1


def max_shuffle(a, b):
    cdef int r = len(a), s = len(b)
    cdef int total = r + s
    cdef int i, p
    cdef bint greater
    if total == 0:
        return ()
    cdef long* ca = <long*> malloc((r + 1) * sizeof(long))
    cdef long* cb = <long*> malloc((s + 1) * sizeof(long))
    cdef int* pos = <int*> malloc((r + 1) * sizeof(int))
    cdef int* bpos = <int*> malloc((s + 1) * sizeof(int))
    cdef long* out = <long*> malloc(total * sizeof(long))
    cdef long* best = <long*> malloc(total * sizeof(long))
    try:
        for i in range(r):
            ca[i] = a[i]
            pos[i] = i
        for i in range(s):
            cb[i] = b[i]
        _fill(ca, r, cb, s, pos, best, bpos)
        while _next_combination(pos, r, total):
            _fill(ca, r, cb, s, pos, out, bpos)
            greater = False
            for p in range(total):
                if out[p] != best[p]:
                    greater = out[p] > best[p]
                    break
            if greater:
                for p in range(total):
                    best[p] = out[p]
        return tuple([best[p] for p in range(total)])
    finally:
        free(ca); free(cb); free(pos); free(bpos); free(out); free(best)


def shuffle_terms(a, b):
    cdef int r = len(a), s = len(b)
    cdef int total = r + s
    cdef int i, k, l, p
    cdef long e
    cdef long* ca = <long*> malloc((r + 1) * sizeof(long))
    cdef long* cb = <long*> malloc((s + 1) * sizeof(long))
    cdef int* pos = <int*> malloc((r + 1) * sizeof(int))
    cdef int* bpos = <int*> malloc((s + 1) * sizeof(int))
    cdef long* out = <long*> malloc((total + 1) * sizeof(long))
    terms = []
    try:
        for i in range(r):
            ca[i] = a[i]
            pos[i] = i
        for i in range(s):
            cb[i] = b[i]
        while True:
            _fill(ca, r, cb, s, pos, out, bpos)
            e = 0
            for k in range(r):
                for l in range(s):
                    if pos[k] > bpos[l]:
                        e += _cartan(ca[k], cb[l])
            terms.append((tuple([out[p] for p in range(total)]), e))
            if not _next_combination(pos, r, total):
                break
        return terms
    finally:
        free(ca); free(cb); free(pos); free(bpos); free(out)
