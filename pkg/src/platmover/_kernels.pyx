# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot loops; same signatures and results as ``_kernels_py``."""

from libc.stdlib cimport malloc, free


cdef inline int _conj(int t, int al, int ah) nogil:
    # image of symbol t under the transposition (al ah)
    if t == al:
        return ah
    if t == ah:
        return al
    return t


cdef void _transport(int m, int *idx, int *sgn, int *lo, int *hi) nogil:
    cdef int t, k, al, ah, bl, bh, x, y
    for t in range(m):
        k = idx[t]
        al = lo[k]; ah = hi[k]; bl = lo[k + 1]; bh = hi[k + 1]
        if sgn[t] > 0:
            x = _conj(bl, al, ah); y = _conj(bh, al, ah)
            if x > y:
                x, y = y, x
            lo[k] = x; hi[k] = y
            lo[k + 1] = al; hi[k + 1] = ah
        else:
            x = _conj(al, bl, bh); y = _conj(ah, bl, bh)
            if x > y:
                x, y = y, x
            lo[k] = bl; hi[k] = bh
            lo[k + 1] = x; hi[k + 1] = y


cdef int *_ints(seq) except NULL:
    cdef Py_ssize_t i, n = len(seq)
    cdef int *out = <int *>malloc((n + 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    for i in range(n):
        out[i] = seq[i]
    return out


def transport(idx, sgn, lo, hi):
    cdef Py_ssize_t m = len(idx), n = len(lo), i
    for i in range(m):
        if not 0 <= idx[i] < n - 1:
            raise IndexError(f"generator {idx[i]} out of range")
    cdef int *ci = _ints(idx)
    cdef int *cs = _ints(sgn)
    cdef int *cl = _ints(lo)
    cdef int *ch = _ints(hi)
    try:
        _transport(<int>m, ci, cs, cl, ch)
        return [cl[i] for i in range(n)], [ch[i] for i in range(n)]
    finally:
        free(ci); free(cs); free(cl); free(ch)


def liftable(idx, sgn, lo, hi):
    blo, bhi = transport(idx, sgn, lo, hi)
    return list(blo) == list(lo) and list(bhi) == list(hi)


cdef inline int _coef(int t, int l, int h) nogil:
    if t == l:
        return 1
    if t == h:
        return -1
    return 0


def lift_free_word(word, lo, hi, start):
    cdef Py_ssize_t n = len(lo)
    vec = [0] * n
    cdef int t = start, g, l, h
    for g, _s in word:
        l = lo[g]; h = hi[g]
        vec[g] += _coef(t, l, h)
        t = _conj(t, l, h)
    return vec, t


def chain_matrix(idx, sgn, lo, hi):
    cdef Py_ssize_t m = len(idx), n = len(lo), r, c, t
    for t in range(m):
        if not 0 <= idx[t] < n - 1:
            raise IndexError(f"generator {idx[t]} out of range")
    cdef int *ci = _ints(idx)
    cdef int *cs = _ints(sgn)
    cdef int *cl = _ints(lo)
    cdef int *ch = _ints(hi)
    # column-major: cols[c * n + r]
    cdef long long *cols = <long long *>malloc((n * n + 1) * sizeof(long long))
    cdef long long *tmp = <long long *>malloc((n + 1) * sizeof(long long))
    cdef int k, al, ah, bl, bh, x, y, s, c1, c2, c3
    cdef long long a, b
    if cols == NULL or tmp == NULL:
        free(ci); free(cs); free(cl); free(ch); free(cols); free(tmp)
        raise MemoryError()
    try:
        with nogil:
            for c in range(n):
                for r in range(n):
                    cols[c * n + r] = 1 if r == c else 0
            for t in range(m):
                k = ci[t]
                al = cl[k]; ah = ch[k]; bl = cl[k + 1]; bh = ch[k + 1]
                if cs[t] > 0:
                    x = _conj(bl, al, ah); y = _conj(bh, al, ah)
                    if x > y:
                        x, y = y, x
                    c1 = _coef(x, al, ah); s = _conj(x, al, ah)
                    c2 = _coef(s, bl, bh); s = _conj(s, bl, bh)
                    c3 = _coef(s, al, ah)
                    a = c1 + c3
                    b = c2
                    for r in range(n):
                        tmp[r] = cols[k * n + r]
                        cols[k * n + r] = a * tmp[r] + b * cols[(k + 1) * n + r]
                        cols[(k + 1) * n + r] = tmp[r]
                    cl[k] = x; ch[k] = y
                    cl[k + 1] = al; ch[k + 1] = ah
                else:
                    x = _conj(al, bl, bh); y = _conj(ah, bl, bh)
                    if x > y:
                        x, y = y, x
                    c1 = _coef(x, bl, bh); s = _conj(x, bl, bh)
                    c2 = _coef(s, al, ah); s = _conj(s, al, ah)
                    c3 = _coef(s, bl, bh)
                    a = c2
                    b = c1 + c3
                    for r in range(n):
                        tmp[r] = cols[(k + 1) * n + r]
                        cols[(k + 1) * n + r] = a * cols[k * n + r] + b * tmp[r]
                        cols[k * n + r] = tmp[r]
                    cl[k] = bl; ch[k] = bh
                    cl[k + 1] = x; ch[k + 1] = y
        out = [[cols[c * n + r] for r in range(n)] for c in range(n)]
        return out, [cl[r] for r in range(n)], [ch[r] for r in range(n)]
    finally:
        free(ci); free(cs); free(cl); free(ch); free(cols); free(tmp)
