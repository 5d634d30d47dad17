# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``; identical contracts."""

from libc.stdlib cimport malloc, free

cdef enum:
    FREE = 0
    FORCE_IN = 1
    FORCE_OUT = 2


def dp_tables(int n, postorder, child_ptr, child_idx, forced):
    cdef int *es = <int *> malloc(n * sizeof(int))
    cdef int *fs = <int *> malloc(n * sizeof(int))
    cdef int *ps = <int *> malloc(n * sizeof(int))
    cdef int *cp = <int *> malloc((n + 1) * sizeof(int))
    cdef int *ci = <int *> malloc(max(len(child_idx), 1) * sizeof(int))
    cdef int *fv = <int *> malloc(n * sizeof(int))
    cdef list ec = [0] * n
    cdef list fc = [0] * n
    cdef list pc = [0] * n
    cdef int i, t, v, c, lo, hi, d, b, n_bad, bad, e_size, f_size, p_size, s
    cdef object e_cnt, f_cnt, p_cnt, k, suf
    cdef list pre
    try:
        for i in range(n + 1):
            cp[i] = child_ptr[i]
        for i in range(len(child_idx)):
            ci[i] = child_idx[i]
        for i in range(n):
            es[i] = -1
            fs[i] = -1
            ps[i] = -1
            fv[i] = FREE if forced is None else forced[i]

        for v in postorder:
            lo = cp[v]
            hi = cp[v + 1]

            e_size = 0
            e_cnt = 1
            for i in range(lo, hi):
                c = ci[i]
                b = es[c]
                if fs[c] > b:
                    b = fs[c]
                if ps[c] > b:
                    b = ps[c]
                if b < 0:
                    e_size = -1
                    break
                k = 0
                if es[c] == b:
                    k += ec[c]
                if fs[c] == b:
                    k += fc[c]
                if ps[c] == b:
                    k += pc[c]
                e_size += b
                e_cnt *= k

            f_size = 1
            f_cnt = 1
            n_bad = 0
            bad = -1
            for i in range(lo, hi):
                c = ci[i]
                if es[c] < 0:
                    n_bad += 1
                    bad = c
                else:
                    f_size += es[c]
                    f_cnt *= ec[c]
            if n_bad:
                f_size = -1

            p_size = -1
            p_cnt = 0
            d = hi - lo
            if n_bad <= 1 and d:
                if n_bad == 1:
                    if fs[bad] >= 0:
                        p_size = 1 + fs[bad]
                        p_cnt = fc[bad]
                        for i in range(lo, hi):
                            c = ci[i]
                            if c != bad:
                                p_size += es[c]
                                p_cnt *= ec[c]
                else:
                    pre = [1] * (d + 1)
                    for t in range(d):
                        pre[t + 1] = pre[t] * ec[ci[lo + t]]
                    suf = 1
                    for t in range(d - 1, -1, -1):
                        c = ci[lo + t]
                        if fs[c] >= 0:
                            s = f_size - es[c] + fs[c]
                            if s > p_size:
                                p_size = s
                                p_cnt = pre[t] * suf * fc[c]
                            elif s == p_size:
                                p_cnt += pre[t] * suf * fc[c]
                        suf *= ec[c]

            if fv[v] == FORCE_IN:
                e_size = -1
            elif fv[v] == FORCE_OUT:
                f_size = -1
                p_size = -1
            if e_size >= 0:
                es[v] = e_size
                ec[v] = e_cnt
            if f_size >= 0:
                fs[v] = f_size
                fc[v] = f_cnt
            if p_size >= 0:
                ps[v] = p_size
                pc[v] = p_cnt

        return ([es[i] for i in range(n)], ec,
                [fs[i] for i in range(n)], fc,
                [ps[i] for i in range(n)], pc)
    finally:
        free(es)
        free(fs)
        free(ps)
        free(cp)
        free(ci)
        free(fv)


cdef struct Search:
    int n
    int best
    int *order
    int *eptr      # CSR of earlier-decided neighbours, indexed by position
    int *eidx
    int *deg


cdef void _rec(Search *st, int i, unsigned long long mask, int size, list found):
    cdef int v, w, k, nch, c0, c1
    if size + (st.n - i) < st.best:
        return
    if i == st.n:
        if size > st.best:
            st.best = size
            del found[:]
        found.append(mask)
        return
    v = st.order[i]
    nch = 0
    c0 = -1
    c1 = -1
    for k in range(st.eptr[i], st.eptr[i + 1]):
        w = st.eidx[k]
        if (mask >> w) & 1:
            if nch == 0:
                c0 = w
            else:
                c1 = w
            nch += 1
    if nch == 0:
        _rec(st, i + 1, mask | (1ULL << v), size + 1, found)
    elif nch == 1 and st.deg[c0] == 0:
        st.deg[c0] = 1
        st.deg[v] = 1
        _rec(st, i + 1, mask | (1ULL << v), size + 1, found)
        st.deg[c0] = 0
        st.deg[v] = 0
    _rec(st, i + 1, mask, size, found)


def mds_search(int n, order, nbr_ptr, nbr_idx):
    if n > 64:
        raise ValueError("compiled search supports at most 64 vertices")
    cdef Search st
    cdef int i, v, w, k, m
    cdef list pos = [0] * n
    cdef list found = []
    st.n = n
    st.best = -1
    st.order = <int *> malloc(n * sizeof(int))
    st.eptr = <int *> malloc((n + 1) * sizeof(int))
    st.eidx = <int *> malloc(max(len(nbr_idx), 1) * sizeof(int))
    st.deg = <int *> malloc(n * sizeof(int))
    try:
        for i in range(n):
            v = order[i]
            st.order[i] = v
            pos[v] = i
            st.deg[i] = 0
        m = 0
        for i in range(n):
            v = st.order[i]
            st.eptr[i] = m
            for k in range(nbr_ptr[v], nbr_ptr[v + 1]):
                w = nbr_idx[k]
                if pos[w] < i:
                    st.eidx[m] = w
                    m += 1
        st.eptr[n] = m
        _rec(&st, 0, 0, 0, found)
        return st.best, found
    finally:
        free(st.order)
        free(st.eptr)
        free(st.eidx)
        free(st.deg)
