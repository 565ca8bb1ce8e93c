# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_kernel_py``; same functions, same results."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"

_DELTA = {(1, -1): 1, (-1, -1): -1, (0, 0): 1}
_DELTA_POWERS = [{(0, 0): 1}]


def padd(dict f, dict g, int scale=1):
    cdef dict out = dict(f)
    cdef object k
    cdef object c, s
    for k, c in g.items():
        s = out.get(k, 0) + scale * c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def pmul(dict f, dict g):
    cdef dict out = {}
    cdef int i1, j1, i2, j2
    cdef object c1, c2, k
    for (i1, j1), c1 in f.items():
        for (i2, j2), c2 in g.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, 0) + c1 * c2
    return {k: c1 for k, c1 in out.items() if c1}


def pshift(dict f, int da, int dz):
    cdef int i, j
    return {(i + da, j + dz): c for (i, j), c in f.items()}


def delta_power(int n):
    while len(_DELTA_POWERS) <= n:
        _DELTA_POWERS.append(pmul(_DELTA_POWERS[len(_DELTA_POWERS) - 1], _DELTA))
    return dict(_DELTA_POWERS[n])


def smooth(list p, int x, pairs):
    cdef int base = 4 * x
    cdef int mate[4]
    cdef int done[4]
    cdef int i, j, j0, s, t, u, e1, e2, loops, n, v
    for i, j in pairs:
        mate[i] = j
        mate[j] = i
    for i in range(4):
        done[i] = 0
    cdef list q = list(p)
    for j0 in range(4):
        s = base + j0
        if done[j0] or base <= <int>p[s] < base + 4:
            continue
        done[j0] = 1
        t = mate[j0]
        while True:
            done[t] = 1
            u = p[base + t]
            if base <= u < base + 4:
                done[u - base] = 1
                t = mate[u - base]
            else:
                break
        e1 = p[s]
        e2 = p[base + t]
        q[e1] = e2
        q[e2] = e1
    loops = 0
    for j0 in range(4):
        if done[j0]:
            continue
        loops += 1
        t = j0
        while not done[t]:
            done[t] = 1
            u = <int>p[base + t] - base
            done[u] = 1
            t = mate[u]
    n = len(p) // 4
    cdef list out = []
    for s in range(n * 4):
        if base <= s < base + 4:
            continue
        v = q[s]
        out.append(v - 4 if v >= base + 4 else v)
    return out, loops


def switch(list p, int x):
    cdef int base = 4 * x
    cdef int m = len(p)
    cdef int s, a, b
    cdef list q = [0] * m
    for s in range(m):
        a = s
        if base <= a < base + 4:
            a = base + (a - base + 3) % 4
        b = p[s]
        if base <= b < base + 4:
            b = base + (b - base + 3) % 4
        q[a] = b
    return q


def components(list p):
    cdef int n = len(p) // 4
    cdef int x0, x, j, y
    cdef list seen = [False] * n
    cdef list out = []
    cdef list stack, comp
    for x0 in range(n):
        if seen[x0]:
            continue
        seen[x0] = True
        stack = [x0]
        comp = []
        while stack:
            x = stack.pop()
            comp.append(x)
            for j in range(4):
                y = <int>p[4 * x + j] // 4
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comp.sort()
        out.append(comp)
    return out


def restrict(list p, list comp):
    cdef dict idx = {x: i for i, x in enumerate(comp)}
    cdef list out = []
    cdef int v, j
    for x in comp:
        for j in range(4):
            v = p[4 * <int>x + j]
            out.append(4 * <int>idx[v // 4] + v % 4)
    return out


def find_kink(list p):
    cdef int s, x, j
    for s in range(len(p)):
        x = s // 4
        j = s % 4
        if <int>p[s] == 4 * x + (j + 1) % 4:
            return x, j
    return None


def descend(list p):
    cdef int n = len(p) // 4
    cdef int m = 4 * n
    cdef int *first = <int *>malloc(max(n, 1) * sizeof(int))
    cdef int *first_comp = <int *>malloc(max(n, 1) * sizeof(int))
    cdef int *pp = <int *>malloc(max(m, 1) * sizeof(int))
    cdef char *visited = <char *>malloc(max(m, 1))
    cdef int i, s0, s, t, x, j, under, over, sign
    cdef int wr = 0
    cdef int ncomp = 0
    cdef list bad = []
    try:
        for i in range(n):
            first[i] = -1
            first_comp[i] = -1
        for i in range(m):
            visited[i] = 0
            pp[i] = p[i]
        for s0 in range(m):
            if visited[s0]:
                continue
            s = s0
            while not visited[s]:
                t = pp[s]
                visited[s] = 1
                visited[t] = 1
                x = t // 4
                j = t % 4
                if first[x] < 0:
                    first[x] = j
                    first_comp[x] = ncomp
                    if j % 2 == 0:
                        bad.append(x)
                elif first_comp[x] == ncomp:
                    if first[x] % 2 == 0:
                        under = first[x]
                        over = j
                    else:
                        under = j
                        over = first[x]
                    sign = 1 if (over - under + 4) % 4 == 3 else -1
                    wr += -sign if first[x] % 2 == 0 else sign
                s = 4 * x + (j + 2) % 4
            ncomp += 1
    finally:
        free(first)
        free(first_comp)
        free(pp)
        free(visited)
    return bad, wr, ncomp


cdef int _code_from(int *pp, int n, int s0, int *label, int *rot, int *order,
                    char *used, int *pending, int *code):
    """Fill ``code`` with the relabeling started at dart ``s0``."""
    cdef int m = 4 * n
    cdef int i, norder, k, npend, x, r, s, t, y, jj, v, found
    for i in range(n):
        label[i] = -1
    for i in range(m):
        used[i] = 0
    x = s0 // 4
    label[x] = 0
    rot[x] = (s0 % 4) & 2
    order[0] = x
    norder = 1
    pending[0] = s0
    npend = 1
    k = 0
    while True:
        if npend == 0:
            found = 0
            while k < norder:
                x = order[k]
                for r in range(4):
                    s = 4 * x + (rot[x] + r) % 4
                    if not used[s]:
                        pending[0] = s
                        npend = 1
                        found = 1
                        break
                if found:
                    break
                k += 1
            if not found:
                break
        npend -= 1
        s = pending[npend]
        while not used[s]:
            t = pp[s]
            used[s] = 1
            used[t] = 1
            y = t // 4
            jj = t % 4
            if label[y] < 0:
                label[y] = norder
                rot[y] = jj & 2
                order[norder] = y
                norder += 1
            s = 4 * y + (jj + 2) % 4
    if norder < n:
        return -1
    i = 0
    for k in range(n):
        x = order[k]
        for r in range(4):
            v = pp[4 * x + (rot[x] + r) % 4]
            y = v // 4
            jj = v % 4
            code[i] = 4 * label[y] + (jj - rot[y] + 4) % 4
            i += 1
    return 0


def canonical_code(list p):
    cdef int n = len(p) // 4
    cdef int m = 4 * n
    if n == 0:
        return ()
    cdef int *pp = <int *>malloc(m * sizeof(int))
    cdef int *label = <int *>malloc(n * sizeof(int))
    cdef int *rot = <int *>malloc(n * sizeof(int))
    cdef int *order = <int *>malloc(n * sizeof(int))
    cdef char *used = <char *>malloc(m)
    cdef int *pending = <int *>malloc(m * sizeof(int))
    cdef int *code = <int *>malloc(m * sizeof(int))
    cdef int *best = <int *>malloc(m * sizeof(int))
    cdef int i, s0, better
    try:
        for i in range(m):
            pp[i] = p[i]
        for s0 in range(m):
            if _code_from(pp, n, s0, label, rot, order, used, pending, code) < 0:
                raise ValueError("canonical_code needs a connected diagram")
            if s0 == 0:
                better = 1
            else:
                better = 0
                for i in range(m):
                    if code[i] != best[i]:
                        better = code[i] < best[i]
                        break
            if better:
                for i in range(m):
                    best[i] = code[i]
        return tuple([best[i] for i in range(m)])
    finally:
        free(pp)
        free(label)
        free(rot)
        free(order)
        free(used)
        free(pending)
        free(code)
        free(best)


def dubrovnik_regular(list p, dict memo):
    cdef int factor, x, j, la, lb, wr, ncomp
    if not p:
        return {(0, 0): 1}
    comps = components(p)
    if len(comps) > 1:
        out = delta_power(len(comps) - 1)
        for comp in comps:
            out = pmul(out, dubrovnik_regular(restrict(p, comp), memo))
        return out
    factor = 0
    kink = find_kink(p)
    while kink is not None:
        x, j = kink
        factor += 1 if j % 2 == 0 else -1
        p, loops = smooth(p, x, ((j, (j + 3) % 4), ((j + 1) % 4, (j + 2) % 4)))
        if not p:
            return {(factor, 0): 1}
        kink = find_kink(p)
    if len(components(p)) > 1:
        return pshift(dubrovnik_regular(p, memo), factor, 0)
    key = canonical_code(p)
    hit = memo.get(key)
    if hit is None:
        bad, wr, ncomp = descend(p)
        hit = pshift(delta_power(ncomp - 1), wr, 0)
        diff = {}
        for x in bad:
            pa, la = smooth(p, x, ((0, 1), (2, 3)))
            pb, lb = smooth(p, x, ((0, 3), (1, 2)))
            fa = pmul(dubrovnik_regular(pa, memo), delta_power(la)) if pa else delta_power(la - 1)
            fb = pmul(dubrovnik_regular(pb, memo), delta_power(lb)) if pb else delta_power(lb - 1)
            diff = padd(diff, padd(fa, fb, -1))
            p = switch(p, x)
        hit = padd(hit, pshift(diff, 0, 1))
        memo[key] = hit
    return pshift(hit, factor, 0)


def ruling_masks(kinds, positions, int n_cross):
    cdef long m
    cdef list out = []
    for m in range(1L << n_cross):
        if check_mask(kinds, positions, m):
            out.append(m)
    return out


def check_mask(kinds, positions, long mask):
    cdef int ne = len(kinds)
    cdef int cap = 2 * ne + 2
    cdef int *strands = <int *>malloc(cap * sizeof(int))
    cdef int *kk = <int *>malloc(max(ne, 1) * sizeof(int))
    cdef int *pos = <int *>malloc(max(ne, 1) * sizeof(int))
    cdef int ns = 0
    cdef int eyes = 0
    cdef int c = 0
    cdef int e, k, i, q, a, b, a1, a2, b1, b2
    try:
        for e in range(ne):
            kk[e] = kinds[e]
            pos[e] = positions[e]
        for e in range(ne):
            k = kk[e]
            i = pos[e]
            if k == 0:
                for q in range(ns - 1, i - 1, -1):
                    strands[q + 2] = strands[q]
                strands[i] = eyes
                strands[i + 1] = eyes
                ns += 2
                eyes += 1
            elif k == 1:
                if strands[i] != strands[i + 1]:
                    return False
                for q in range(i, ns - 2):
                    strands[q] = strands[q + 2]
                ns -= 2
            else:
                a = strands[i]
                b = strands[i + 1]
                if a == b:
                    return False
                if (mask >> c) & 1:
                    a1 = -1
                    b1 = -1
                    for q in range(ns):
                        if strands[q] == a:
                            if a1 < 0:
                                a1 = q
                            else:
                                a2 = q
                        elif strands[q] == b:
                            if b1 < 0:
                                b1 = q
                            else:
                                b2 = q
                    if (a1 < b1 < a2 < b2) or (b1 < a1 < b2 < a2):
                        return False
                else:
                    strands[i] = b
                    strands[i + 1] = a
                c += 1
        return True
    finally:
        free(strands)
        free(kk)
        free(pos)
