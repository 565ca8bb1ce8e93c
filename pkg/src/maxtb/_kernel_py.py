"""Pure-Python hot kernels.  ``_kernel.pyx`` mirrors this module line for line.

Diagrams here are unoriented and stored as a slot involution ``p``: slot
``4*x + j`` is position ``j`` of crossing ``x`` (under-strand on positions 0
and 2, counterclockwise order), and ``p[s]`` is the slot at the other end of
the same arc.  Polynomials are plain dicts ``{(a_exp, z_exp): coeff}``.
"""

BACKEND = "python"

_DELTA = {(1, -1): 1, (-1, -1): -1, (0, 0): 1}


def padd(f, g, scale=1):
    out = dict(f)
    for k, c in g.items():
        s = out.get(k, 0) + scale * c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def pmul(f, g):
    out = {}
    for (i1, j1), c1 in f.items():
        for (i2, j2), c2 in g.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def pshift(f, da, dz):
    return {(i + da, j + dz): c for (i, j), c in f.items()}


def delta_power(n):
    out = {(0, 0): 1}
    for _ in range(n):
        out = pmul(out, _DELTA)
    return out


def smooth(p, x, pairs):
    """Remove crossing ``x`` joining its positions in ``pairs``.

    Returns ``(new_p, free_loops)``.
    """
    base = 4 * x
    mate = [0, 0, 0, 0]
    for i, j in pairs:
        mate[i] = j
        mate[j] = i
    q = list(p)
    done = [False, False, False, False]
    for j0 in range(4):
        s = base + j0
        if done[j0] or base <= p[s] < base + 4:
            continue
        done[j0] = True
        t = mate[j0]
        while True:
            done[t] = True
            u = p[base + t]
            if base <= u < base + 4:
                done[u - base] = True
                t = mate[u - base]
            else:
                break
        e1, e2 = p[s], p[base + t]
        q[e1] = e2
        q[e2] = e1
    loops = 0
    for j0 in range(4):
        if done[j0]:
            continue
        loops += 1
        t = j0
        while not done[t]:
            done[t] = True
            u = p[base + t] - base
            done[u] = True
            t = mate[u]
    n = len(p) // 4
    out = []
    for s in range(n * 4):
        if base <= s < base + 4:
            continue
        v = q[s]
        out.append(v - 4 if v >= base + 4 else v)
    return out, loops


def switch(p, x):
    """Exchange over and under at crossing ``x`` (positions rotate by one)."""
    base = 4 * x

    def m(s):
        if base <= s < base + 4:
            return base + (s - base + 3) % 4
        return s

    q = [0] * len(p)
    for s in range(len(p)):
        q[m(s)] = m(p[s])
    return q


def components(p):
    """Crossing sets of the connected pieces, as sorted lists."""
    n = len(p) // 4
    seen = [False] * n
    out = []
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
                y = p[4 * x + j] // 4
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comp.sort()
        out.append(comp)
    return out


def restrict(p, comp):
    idx = {x: i for i, x in enumerate(comp)}
    out = []
    for x in comp:
        for j in range(4):
            v = p[4 * x + j]
            out.append(4 * idx[v // 4] + v % 4)
    return out


def find_kink(p):
    """Return ``(x, j)`` for a loop joining positions ``j`` and ``j+1``, else None."""
    for s in range(len(p)):
        x, j = divmod(s, 4)
        if p[s] == 4 * x + (j + 1) % 4:
            return x, j
    return None


def descend(p):
    """Walk every strand from a fixed base point, overpassing first.

    Returns ``(bad, self_writhe, ncomp)``: ``bad`` lists, in walk order, the
    crossings first met as an underpass, and the writhe counts self-crossings
    only and is taken after those switches.  Switching every crossing in
    ``bad`` gives a descending diagram, and switching never changes which
    crossings are met first.
    """
    n = len(p) // 4
    first = [-1] * n   # position entered on the first passage
    first_comp = [-1] * n
    visited = [False] * (4 * n)
    bad = []
    wr = 0
    ncomp = 0
    for s0 in range(4 * n):
        if visited[s0]:
            continue
        s = s0
        while not visited[s]:
            t = p[s]
            visited[s] = True
            visited[t] = True
            x, j = divmod(t, 4)
            if first[x] < 0:
                first[x] = j
                first_comp[x] = ncomp
                if j % 2 == 0:
                    bad.append(x)
            elif first_comp[x] == ncomp:
                # under entering at 0 with over entering at 3 is positive
                under, over = (first[x], j) if first[x] % 2 == 0 else (j, first[x])
                sign = 1 if (over - under) % 4 == 3 else -1
                # bad crossings get switched, flipping their sign
                wr += -sign if first[x] % 2 == 0 else sign
            s = 4 * x + (j + 2) % 4
        ncomp += 1
    return bad, wr, ncomp


def canonical_code(p):
    """Lexicographically least relabeling over all starting darts."""
    n = len(p) // 4
    best = None
    for s0 in range(4 * n):
        label = [-1] * n
        rot = [0] * n
        order = []
        x0, j0 = divmod(s0, 4)
        label[x0] = 0
        rot[x0] = j0 & 2
        order.append(x0)
        pending = [s0]
        k = 0
        used = [False] * (4 * n)
        while True:
            if not pending:
                # next unused slot of the lowest labelled crossing
                found = False
                while k < len(order):
                    x = order[k]
                    for r in range(4):
                        s = 4 * x + (rot[x] + r) % 4
                        if not used[s]:
                            pending.append(s)
                            found = True
                            break
                    if found:
                        break
                    k += 1
                if not found:
                    break
            s = pending.pop()
            while not used[s]:
                t = p[s]
                used[s] = True
                used[t] = True
                y, jj = divmod(t, 4)
                if label[y] < 0:
                    label[y] = len(order)
                    rot[y] = jj & 2
                    order.append(y)
                s = 4 * y + (jj + 2) % 4
        if len(order) < n:
            raise ValueError("canonical_code needs a connected diagram")
        code = []
        for x in order:
            for r in range(4):
                v = p[4 * x + (rot[x] + r) % 4]
                y, jj = divmod(v, 4)
                code.append(4 * label[y] + (jj - rot[y]) % 4)
        code = tuple(code)
        if best is None or code < best:
            best = code
    return best


def dubrovnik_regular(p, memo):
    """Regular-isotopy Dubrovnik polynomial of the diagram ``p`` (unknot = 1)."""
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
        # D(p) = D(p with all of bad switched) + z * sum of smoothing terms,
        # each taken with the earlier bad crossings already switched
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


def ruling_masks(kinds, positions, n_cross):
    """Bitmasks over crossings whose switch sets are ungraded rulings.

    ``kinds[e]`` is 0 for a left cusp, 1 for a right cusp, 2 for a crossing;
    ``positions[e]`` is the 0-based upper strand index of the event.
    """
    return [m for m in range(1 << n_cross) if check_mask(kinds, positions, m)]


def check_mask(kinds, positions, mask):
    """True when the crossings in ``mask`` are the switches of an ungraded ruling.

    Each strand carries the id of the eye it belongs to.  A switch keeps the
    ids in place, any other crossing swaps them.
    """
    strands = []
    eyes = 0
    c = 0
    for e in range(len(kinds)):
        k = kinds[e]
        i = positions[e]
        if k == 0:
            strands[i:i] = [eyes, eyes]
            eyes += 1
        elif k == 1:
            if strands[i] != strands[i + 1]:
                return False
            del strands[i:i + 2]
        else:
            a, b = strands[i], strands[i + 1]
            if a == b:
                return False
            if (mask >> c) & 1:
                # normality: the two eyes are nested or disjoint
                pa = [q for q, v in enumerate(strands) if v == a]
                pb = [q for q, v in enumerate(strands) if v == b]
                if pa[0] < pb[0] < pa[1] < pb[1] or pb[0] < pa[0] < pb[1] < pa[1]:
                    return False
            else:
                strands[i], strands[i + 1] = b, a
            c += 1
    return True
