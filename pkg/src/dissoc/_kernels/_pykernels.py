"""Pure-Python implementations of the hot loops.

Both kernels mirror ``_ckernels.pyx`` exactly; the compiled module is preferred
when importable. Sizes use ``-1`` for an infeasible state.
"""

from __future__ import annotations

FREE, FORCE_IN, FORCE_OUT = 0, 1, 2


def dp_tables(n, postorder, child_ptr, child_idx, forced):
    """Three-state max-plus-with-counting DP over a rooted tree.

    States per vertex ``v`` (restricted to the subtree of ``v``):
    excluded (``v`` not chosen), free (chosen, no chosen child),
    paired (chosen, exactly one chosen child, that child in its free state).
    ``forced`` is ``None`` or a per-vertex list of FREE / FORCE_IN / FORCE_OUT.

    Returns ``(es, ec, fs, fc, ps, pc)``: sizes and counts for each state.
    """
    es = [-1] * n
    ec = [0] * n
    fs = [-1] * n
    fc = [0] * n
    ps = [-1] * n
    pc = [0] * n
    for v in postorder:
        lo, hi = child_ptr[v], child_ptr[v + 1]
        fv = forced[v] if forced is not None else FREE

        # excluded: each child independently takes its best state
        e_size, e_cnt = 0, 1
        for i in range(lo, hi):
            c = child_idx[i]
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

        # free: all children excluded
        f_size, f_cnt = 1, 1
        n_bad = 0
        bad = -1
        for i in range(lo, hi):
            c = child_idx[i]
            if es[c] < 0:
                n_bad += 1
                bad = c
            else:
                f_size += es[c]
                f_cnt *= ec[c]
        if n_bad:
            f_size = -1

        # paired: one child j in its free state, the rest excluded
        p_size, p_cnt = -1, 0
        d = hi - lo
        if n_bad <= 1 and d:
            if n_bad == 1:
                # the one child that cannot be excluded must be the partner
                if fs[bad] >= 0:
                    p_size = 1 + fs[bad]
                    p_cnt = fc[bad]
                    for i in range(lo, hi):
                        c = child_idx[i]
                        if c != bad:
                            p_size += es[c]
                            p_cnt *= ec[c]
            else:
                # prefix/suffix products of excluded counts
                pre = [1] * (d + 1)
                for t in range(d):
                    pre[t + 1] = pre[t] * ec[child_idx[lo + t]]
                suf = 1
                for t in range(d - 1, -1, -1):
                    c = child_idx[lo + t]
                    if fs[c] >= 0:
                        s = f_size - es[c] + fs[c]
                        if s > p_size:
                            p_size = s
                            p_cnt = pre[t] * suf * fc[c]
                        elif s == p_size:
                            p_cnt += pre[t] * suf * fc[c]
                    suf *= ec[c]

        if fv == FORCE_IN:
            e_size, e_cnt = -1, 0
        elif fv == FORCE_OUT:
            f_size = p_size = -1
        if e_size >= 0:
            es[v], ec[v] = e_size, e_cnt
        if f_size >= 0:
            fs[v], fc[v] = f_size, f_cnt
        if p_size >= 0:
            ps[v], pc[v] = p_size, p_cnt
    return es, ec, fs, fc, ps, pc


def mds_search(n, order, nbr_ptr, nbr_idx):
    """Exhaustive include/exclude search for all maximum dissociation sets.

    Vertices are decided in ``order``. A branch dies when an inclusion would
    give some chosen vertex two chosen neighbours, or when even taking every
    undecided vertex cannot reach the best size found so far.
    Returns ``(best_size, masks)`` with one bitmask per maximum set.
    """
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    # neighbours decided before v, by position
    earlier = []
    for v in order:
        earlier.append([w for w in nbr_idx[nbr_ptr[v]:nbr_ptr[v + 1]] if pos[w] < pos[v]])
    deg = [0] * n
    best = [-1]
    found: list[int] = []

    def rec(i, mask, size):
        if size + (n - i) < best[0]:
            return
        if i == n:
            if size > best[0]:
                best[0] = size
                found.clear()
            found.append(mask)
            return
        v = order[i]
        chosen = [w for w in earlier[i] if mask >> w & 1]
        if len(chosen) <= 1 and all(deg[w] == 0 for w in chosen):
            for w in chosen:
                deg[w] += 1
            deg[v] = len(chosen)
            rec(i + 1, mask | (1 << v), size + 1)
            for w in chosen:
                deg[w] -= 1
            deg[v] = 0
        rec(i + 1, mask, size)

    rec(0, 0, 0)
    return best[0], found
