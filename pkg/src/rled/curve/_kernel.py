"""Numba kernel for piecewise-linear curves with gradients in {-1, 0, +1}.

Segments live in a treap stored row-wise in one int64 array ``nd`` (one row
per node, columns below).  Row 0 is the nil sentinel.  Free rows form a
singly linked list through the ``LC`` column, bookkept in ``meta``.

All coordinates are doubled so half-integers stay exact.  Window widths
(``DT``, ``TMIN``) are in undoubled x units.

Deferred updates on a node apply to its whole subtree in the order
sliding-window minimum (``DT``), gradient change (``DG``), shift
(``DX``, ``DY``).  ``TMIN``, ``GMIN`` and ``GMAX`` already account for the
node's own deferred updates.  Every public operation leaves the leftmost
and rightmost root paths free of deferred updates.
"""
import numpy as np
from numba import njit

LC, RC, PRI, SZ, XL, YL, XR, YR, G, GL, GR, DT, DG, DX, DY, TMIN, GMIN, GMAX = range(18)
# Scratch column holding a path stack indexed by row.  Tree depth never
# exceeds the row count, and iterative treap routines let numba cache them.
STK = 18
NF = 19

FREE_HEAD, N_FREE, CREATED, DISCARDED, COLLAPSED, RNG, OPS = range(7)
NMETA = 8

BND = 2  # neighbour gradient class at a curve boundary
INF = np.iinfo(np.int64).max
SCRATCH_ROWS = 16
# columns of the scratch buffer: XL YL XR YR G GL GR node
B_NODE = 7


def new_pool(capacity, seed=0):
    nd = np.zeros((capacity + 1, NF), dtype=np.int64)
    nd[0, TMIN] = INF
    nd[0, GMIN] = 3
    nd[0, GMAX] = -3
    meta = np.zeros(NMETA, dtype=np.int64)
    _link_free(nd, meta, 1, capacity + 1)
    meta[RNG] = (seed * 0x9E3779B97F4A7C15 + 1) & 0x7FFFFFFFFFFFFFFF
    buf = np.zeros((SCRATCH_ROWS, 8), dtype=np.int64)
    return nd, meta, buf


def grow_pool(nd, meta, extra):
    old = nd.shape[0]
    bigger = np.zeros((old + extra, NF), dtype=np.int64)
    bigger[:old] = nd
    _link_free(bigger, meta, old, old + extra)
    return bigger


def _link_free(nd, meta, lo, hi):
    nd[lo:hi, LC] = np.arange(lo + 1, hi + 1)
    nd[hi - 1, LC] = meta[FREE_HEAD]
    meta[FREE_HEAD] = lo
    meta[N_FREE] += hi - lo


# -- node storage -----------------------------------------------------------

@njit(cache=True, inline="always")
def _rand(meta):
    s = meta[RNG] * 6364136223846793005 + 1442695040888963407
    meta[RNG] = s
    return s >> 20


@njit(cache=True, inline="always")
def alloc(nd, meta):
    v = meta[FREE_HEAD]
    if v == 0:
        raise MemoryError("segment pool exhausted")
    meta[FREE_HEAD] = nd[v, LC]
    meta[N_FREE] -= 1
    meta[CREATED] += 1
    for f in range(NF):
        nd[v, f] = 0
    nd[v, PRI] = _rand(meta)
    return v


@njit(cache=True, inline="always")
def release(nd, meta, v, counter):
    nd[v, LC] = meta[FREE_HEAD]
    meta[FREE_HEAD] = v
    meta[N_FREE] += 1
    meta[counter] += 1


@njit(cache=True)
def release_tree(nd, meta, v, counter):
    if v == 0:
        return
    top = 0
    nd[0, STK] = v
    while top >= 0:
        u = nd[top, STK]
        top -= 1
        l = nd[u, LC]
        r = nd[u, RC]
        if l != 0:
            top += 1
            nd[top, STK] = l
        if r != 0:
            top += 1
            nd[top, STK] = r
        release(nd, meta, u, counter)


@njit(cache=True, inline="always")
def new_seg(nd, meta, xl, yl, xr, yr, g, gl, gr):
    v = alloc(nd, meta)
    nd[v, XL] = xl
    nd[v, YL] = yl
    nd[v, XR] = xr
    nd[v, YR] = yr
    nd[v, G] = g
    nd[v, GL] = gl
    nd[v, GR] = gr
    pull(nd, v)
    return v


# -- lazy propagation -------------------------------------------------------

@njit(cache=True, inline="always")
def collapse_time(nd, v):
    a = nd[v, GL]
    g = nd[v, G]
    b = nd[v, GR]
    # the three collapsing kinds: ID-DF, IF-FD, FI-ID
    if (a == 1 and g == -1 and b == 0) or (a == 1 and g == 0 and b == -1) or (a == 0 and g == 1 and b == -1):
        return (abs(nd[v, XR] - nd[v, XL]) + abs(nd[v, YR] - nd[v, YL])) // 2
    return INF


@njit(cache=True, inline="always")
def pull(nd, v):
    l = nd[v, LC]
    r = nd[v, RC]
    nd[v, SZ] = 1 + nd[l, SZ] + nd[r, SZ]
    nd[v, TMIN] = min(collapse_time(nd, v), nd[l, TMIN], nd[r, TMIN])
    g = nd[v, G]
    nd[v, GMIN] = min(g, nd[l, GMIN], nd[r, GMIN])
    nd[v, GMAX] = max(g, nd[l, GMAX], nd[r, GMAX])


@njit(cache=True, inline="always")
def _motion(a, b):
    """Doubled displacement per unit window of a turning point typed (a, b)."""
    if a == BND:
        if b == 1:
            raise ValueError("left endpoint of type -I reached a sliding-window step")
        return 0, 0
    if b == BND:
        if a == -1:
            raise ValueError("right endpoint of type D- reached a sliding-window step")
        return 2, 0
    if a == 0:
        if b == 1:
            return 2, 0
        if b == -1:
            return 0, 0
    elif a == 1:
        if b == 0:
            return 2, 0
        if b == -1:
            return 1, -1
    elif a == -1 and b == 0:
        return 0, 0
    raise ValueError("turning point type has no sliding-window motion")


@njit(cache=True, inline="always")
def req_shift(nd, v, dx, dy):
    if v != 0:
        nd[v, DX] += dx
        nd[v, DY] += dy


@njit(cache=True, inline="always")
def req_grad(nd, v, dg):
    if v != 0:
        nd[v, DG] += dg
        nd[v, DY] += dg * nd[v, DX]
        nd[v, GMIN] += dg
        nd[v, GMAX] += dg


@njit(cache=True, inline="always")
def req_swm(nd, v, dt):
    if v == 0 or dt == 0:
        return
    dg = nd[v, DG]
    if dg != 0:
        # A pending gradient change means the subtree is monotone and holds
        # no boundary point: the window is void (non-increasing) or a pure
        # shift by (dt, 0) (non-decreasing).
        if nd[v, GMAX] > 0:
            rising = True
        elif nd[v, GMIN] < 0:
            rising = False
        else:
            gl = nd[v, GL]
            gr = nd[v, GR]
            rising = (gl != BND and gl + dg == 1) or (gr != BND and gr + dg == 1)
        if rising:
            nd[v, DX] += 2 * dt
        return
    nd[v, DT] += dt
    if nd[v, TMIN] != INF:
        nd[v, TMIN] -= dt


@njit(cache=True, inline="always")
def push(nd, v):
    l = nd[v, LC]
    r = nd[v, RC]
    dt = nd[v, DT]
    if dt != 0:
        req_swm(nd, l, dt)
        req_swm(nd, r, dt)
        mx, my = _motion(nd[v, GL], nd[v, G])
        nd[v, XL] += mx * dt
        nd[v, YL] += my * dt
        mx, my = _motion(nd[v, G], nd[v, GR])
        nd[v, XR] += mx * dt
        nd[v, YR] += my * dt
        nd[v, DT] = 0
    dg = nd[v, DG]
    if dg != 0:
        req_grad(nd, l, dg)
        req_grad(nd, r, dg)
        nd[v, YL] += dg * nd[v, XL]
        nd[v, YR] += dg * nd[v, XR]
        if nd[v, XL] != nd[v, XR]:
            nd[v, G] += dg
        if nd[v, GL] != BND:
            nd[v, GL] += dg
        if nd[v, GR] != BND:
            nd[v, GR] += dg
        nd[v, DG] = 0
    dx = nd[v, DX]
    dy = nd[v, DY]
    if dx != 0 or dy != 0:
        req_shift(nd, l, dx, dy)
        req_shift(nd, r, dx, dy)
        nd[v, XL] += dx
        nd[v, XR] += dx
        nd[v, YL] += dy
        nd[v, YR] += dy
        nd[v, DX] = 0
        nd[v, DY] = 0


# -- treap primitives -------------------------------------------------------

@njit(cache=True, inline="always")
def _pull_path(nd, depth):
    for i in range(depth - 1, -1, -1):
        pull(nd, nd[i, STK])


@njit(cache=True)
def merge(nd, a, b):
    if a == 0:
        return b
    if b == 0:
        return a
    root = 0
    parent = 0
    side = LC
    depth = 0
    while a != 0 and b != 0:
        if nd[a, PRI] > nd[b, PRI]:
            v = a
            push(nd, v)
            a = nd[v, RC]
            nxt = RC
        else:
            v = b
            push(nd, v)
            b = nd[v, LC]
            nxt = LC
        if parent == 0:
            root = v
        else:
            nd[parent, side] = v
        nd[depth, STK] = v
        depth += 1
        parent = v
        side = nxt
    nd[parent, side] = a if a != 0 else b
    _pull_path(nd, depth)
    return root


@njit(cache=True)
def _split(nd, v, k, x, by_pos):
    """Top-down split; left part gets the first ``k`` segments or those with XL < x."""
    a_root = 0
    b_root = 0
    a_last = 0
    b_last = 0
    depth = 0
    while v != 0:
        push(nd, v)
        nd[depth, STK] = v
        depth += 1
        if by_pos:
            go_left = nd[nd[v, LC], SZ] < k
        else:
            go_left = nd[v, XL] < x
        if go_left:
            if by_pos:
                k -= nd[nd[v, LC], SZ] + 1
            if a_last == 0:
                a_root = v
            else:
                nd[a_last, RC] = v
            a_last = v
            v = nd[v, RC]
        else:
            if b_last == 0:
                b_root = v
            else:
                nd[b_last, LC] = v
            b_last = v
            v = nd[v, LC]
    if a_last != 0:
        nd[a_last, RC] = 0
    if b_last != 0:
        nd[b_last, LC] = 0
    _pull_path(nd, depth)
    return a_root, b_root


@njit(cache=True)
def split_pos(nd, v, k):
    """Split off the first ``k`` segments."""
    return _split(nd, v, k, 0, True)


@njit(cache=True)
def split_x(nd, v, x):
    """Split into segments starting left of ``x`` and the rest."""
    return _split(nd, v, 0, x, False)


@njit(cache=True)
def _flush_side(nd, v, child):
    depth = 0
    while v != 0:
        push(nd, v)
        nd[depth, STK] = v
        depth += 1
        v = nd[v, child]
    _pull_path(nd, depth)


@njit(cache=True)
def flush(nd, v):
    _flush_side(nd, v, LC)
    _flush_side(nd, v, RC)


@njit(cache=True)
def node_at(nd, v, k):
    while v != 0:
        push(nd, v)
        l = nd[v, LC]
        if k < nd[l, SZ]:
            v = l
        elif k == nd[l, SZ]:
            return v
        else:
            k -= nd[l, SZ] + 1
            v = nd[v, RC]
    raise IndexError("segment index out of range")


@njit(cache=True)
def first_node(nd, v):
    push(nd, v)
    while nd[v, LC] != 0:
        v = nd[v, LC]
        push(nd, v)
    return v


@njit(cache=True)
def last_node(nd, v):
    push(nd, v)
    while nd[v, RC] != 0:
        v = nd[v, RC]
        push(nd, v)
    return v


@njit(cache=True)
def collect(nd, v, out, k):
    """In-order node indices of ``v``'s subtree into ``out[k:]`` with pushes."""
    top = -1
    while v != 0 or top >= 0:
        while v != 0:
            push(nd, v)
            top += 1
            nd[top, STK] = v
            v = nd[v, LC]
        v = nd[top, STK]
        top -= 1
        out[k] = v
        k += 1
        v = nd[v, RC]
    return k


# -- local renormalisation --------------------------------------------------

@njit(cache=True, inline="always")
def _drop_row(buf, k, i):
    for j in range(i, k - 1):
        for c in range(7):
            buf[j, c] = buf[j + 1, c]
    return k - 1


@njit(cache=True, inline="always")
def _droppable(i, k, left_end, right_end):
    return (0 < i < k - 1) or (i == 0 and left_end) or (i == k - 1 and right_end)


@njit(cache=True)
def normalize(buf, k, gl_out, gr_out, left_end, right_end):
    """Canonicalise a short run of segments in ``buf[:k]``.

    Removes zero-length segments (keeping the DF/FI pair standing for a DI
    point), merges equal-gradient neighbours, replaces DI points, and fills
    in neighbour gradients.  Returns the new row count.
    """
    lo_g = BND if left_end else gl_out
    hi_g = BND if right_end else gr_out
    # Rows at a window edge that is not a curve end are never dropped: their
    # outside neighbours must keep seeing the same gradient.
    i = 0
    while i < k:
        if k > 1 and buf[i, 0] == buf[i, 2] and buf[i, 4] != 0 and _droppable(i, k, left_end, right_end):
            k = _drop_row(buf, k, i)
        else:
            i += 1
    changed = True
    while changed and k > 1:
        changed = False
        for i in range(k):
            if buf[i, 0] == buf[i, 2] and _droppable(i, k, left_end, right_end):
                pg = buf[i - 1, 4] if i > 0 else lo_g
                ng = buf[i + 1, 4] if i < k - 1 else hi_g
                if not (pg == -1 and ng == 1):
                    k = _drop_row(buf, k, i)
                    changed = True
                    break
    i = 0
    while i < k - 1:
        if buf[i, 4] == buf[i + 1, 4]:
            buf[i, 2] = buf[i + 1, 2]
            buf[i, 3] = buf[i + 1, 3]
            k = _drop_row(buf, k, i + 1)
        else:
            i += 1
    i = 0
    while i < k - 1:
        if buf[i, 4] == -1 and buf[i + 1, 4] == 1:
            for j in range(k, i + 1, -1):
                for c in range(7):
                    buf[j, c] = buf[j - 1, c]
            buf[i + 1, 0] = buf[i, 2]
            buf[i + 1, 1] = buf[i, 3]
            buf[i + 1, 2] = buf[i, 2]
            buf[i + 1, 3] = buf[i, 3]
            buf[i + 1, 4] = 0
            k += 1
            i += 2
        else:
            i += 1
    for i in range(k):
        buf[i, 5] = buf[i - 1, 4] if i > 0 else lo_g
        buf[i, 6] = buf[i + 1, 4] if i < k - 1 else hi_g
    return k


@njit(cache=True)
def renormalize(nd, meta, buf, a, w, b, counter):
    """Canonicalise window ``w`` sitting between ``a`` and ``b``; returns the joined root.

    The window's outermost segments keep their gradients, so neighbours
    outside it never need retyping.
    """
    k = collect(nd, w, buf[:, B_NODE], 0)
    for i in range(k):
        v = buf[i, B_NODE]
        buf[i, 0] = nd[v, XL]
        buf[i, 1] = nd[v, YL]
        buf[i, 2] = nd[v, XR]
        buf[i, 3] = nd[v, YR]
        buf[i, 4] = nd[v, G]
    gl_out = nd[buf[0, B_NODE], GL]
    gr_out = nd[buf[k - 1, B_NODE], GR]
    k2 = normalize(buf, k, gl_out, gr_out, a == 0, b == 0)
    for i in range(k2, k):
        release(nd, meta, buf[i, B_NODE], counter)
    w = 0
    for i in range(k2):
        if i < k:
            v = buf[i, B_NODE]
            nd[v, LC] = 0
            nd[v, RC] = 0
        else:
            v = alloc(nd, meta)
        nd[v, XL] = buf[i, 0]
        nd[v, YL] = buf[i, 1]
        nd[v, XR] = buf[i, 2]
        nd[v, YR] = buf[i, 3]
        nd[v, G] = buf[i, 4]
        nd[v, GL] = buf[i, 5]
        nd[v, GR] = buf[i, 6]
        pull(nd, v)
        w = merge(nd, w, v)
    return merge(nd, a, merge(nd, w, b))


# -- curve operations -------------------------------------------------------

@njit(cache=True)
def create(nd, meta, xl, yl, xr, yr):
    if xr < xl:
        raise ValueError("create needs x_l <= x_r")
    dx = xr - xl
    dy = yr - yl
    if dx == 0:
        if dy != 0:
            raise ValueError("length-0 segment must be flat")
        g = 0
    elif dy == dx:
        g = 1
    elif dy == -dx:
        g = -1
    elif dy == 0:
        g = 0
    else:
        raise ValueError("segment gradient must be -1, 0 or +1")
    meta[OPS] += 1
    return new_seg(nd, meta, xl, yl, xr, yr, g, BND, BND)


@njit(cache=True)
def evaluate(nd, v, x):
    while v != 0:
        push(nd, v)
        if x < nd[v, XL]:
            v = nd[v, LC]
        elif x > nd[v, XR]:
            v = nd[v, RC]
        else:
            return nd[v, YL] + nd[v, G] * (x - nd[v, XL])
    raise ValueError("x outside curve domain")


@njit(cache=True)
def shift(nd, meta, root, dx, dy):
    meta[OPS] += 1
    req_shift(nd, root, dx, dy)
    flush(nd, root)
    return root


@njit(cache=True)
def gradient_change(nd, meta, root, dg):
    return gradient_change_shift(nd, meta, root, dg, 0, 0)


@njit(cache=True)
def gradient_change_shift(nd, meta, root, dg, dx, dy):
    """Gradient change followed by a shift, flushed once.  Counts as two operations."""
    if dg == -1:
        if nd[root, GMIN] < 0:
            raise ValueError("gradient change by -1 needs a non-decreasing curve")
    elif dg == 1:
        if nd[root, GMAX] > 0:
            raise ValueError("gradient change by +1 needs a non-increasing curve")
    else:
        raise ValueError("gradient change must be -1 or +1")
    req_grad(nd, root, dg)
    meta[OPS] += 1
    if dx != 0 or dy != 0:
        req_shift(nd, root, dx, dy)
        meta[OPS] += 1
    flush(nd, root)
    return root


@njit(cache=True, inline="always")
def _set_end_type(nd, v, child, field, g):
    """Set the outer neighbour type of the extreme segment; the path is clean."""
    depth = 0
    while v != 0:
        nd[depth, STK] = v
        depth += 1
        v = nd[v, child]
    nd[nd[depth - 1, STK], field] = g
    _pull_path(nd, depth)


@njit(cache=True)
def join(nd, meta, buf, a, b):
    meta[OPS] += 1
    al = last_node(nd, a)
    bf = first_node(nd, b)
    ga = nd[al, G]
    gb = nd[bf, G]
    if nd[al, XL] != nd[al, XR] and nd[bf, XL] != nd[bf, XR] and ga != gb and not (ga == -1 and gb == 1):
        # the junction is already canonical
        _set_end_type(nd, a, RC, GR, gb)
        _set_end_type(nd, b, LC, GL, ga)
        root = merge(nd, a, b)
        flush(nd, root)
        return root
    a1, al = split_pos(nd, a, nd[a, SZ] - 1)
    bf, b2 = split_pos(nd, b, 1)
    root = renormalize(nd, meta, buf, a1, merge(nd, al, bf), b2, DISCARDED)
    flush(nd, root)
    return root


@njit(cache=True)
def split(nd, meta, buf, root, x):
    meta[OPS] += 1
    a, b = split_x(nd, root, x)
    if a == 0:
        bf = first_node(nd, b)
        y = nd[bf, YL]
        a = new_seg(nd, meta, x, y, x, y, 0, BND, BND)
    else:
        a, al = split_pos(nd, a, nd[a, SZ] - 1)
        if nd[al, XR] > x:
            y = nd[al, YL] + nd[al, G] * (x - nd[al, XL])
            z = new_seg(nd, meta, x, y, nd[al, XR], nd[al, YR], nd[al, G], BND, nd[al, GR])
            nd[al, XR] = x
            nd[al, YR] = y
            b = merge(nd, z, b)
        y = nd[al, YR]
        nd[al, GR] = BND
        pull(nd, al)
        a = merge(nd, a, al)
        if b == 0:
            b = new_seg(nd, meta, x, y, x, y, 0, BND, BND)
        else:
            bf, b2 = split_pos(nd, b, 1)
            while b2 != 0 and nd[bf, XL] == nd[bf, XR]:
                release(nd, meta, bf, DISCARDED)
                bf, b2 = split_pos(nd, b2, 1)
            nd[bf, GL] = BND
            pull(nd, bf)
            b = merge(nd, bf, b2)
    flush(nd, a)
    flush(nd, b)
    return a, b


@njit(cache=True)
def _find_collapsed(nd, v):
    base = 0
    while v != 0:
        push(nd, v)
        l = nd[v, LC]
        if nd[l, TMIN] == 0:
            v = l
        elif collapse_time(nd, v) == 0:
            return base + nd[l, SZ]
        else:
            base += nd[l, SZ] + 1
            v = nd[v, RC]
    raise RuntimeError("t_min is 0 but no collapsed segment found")


@njit(cache=True)
def swm(nd, meta, buf, root, t):
    if t < 0:
        raise ValueError("window width must be non-negative")
    meta[OPS] += 1
    if t == 0:
        return root
    f, rest = split_pos(nd, root, 1)
    if nd[f, G] == 1:
        z = new_seg(nd, meta, nd[f, XL], nd[f, YL], nd[f, XL], nd[f, YL], 0, BND, 1)
        nd[f, GL] = 0
        pull(nd, f)
        f = merge(nd, z, f)
    root = merge(nd, f, rest)
    rest, l = split_pos(nd, root, nd[root, SZ] - 1)
    if nd[l, G] == -1:
        z = new_seg(nd, meta, nd[l, XR], nd[l, YR], nd[l, XR], nd[l, YR], 0, -1, BND)
        nd[l, GR] = 0
        pull(nd, l)
        l = merge(nd, l, z)
    root = merge(nd, rest, l)
    remaining = t
    while remaining > 0:
        step = min(remaining, nd[root, TMIN])
        req_swm(nd, root, step)
        remaining -= step
        while nd[root, TMIN] == 0:
            k = _find_collapsed(nd, root)
            lo = max(k - 2, 0)
            hi = min(k + 3, nd[root, SZ])
            a, rest = split_pos(nd, root, lo)
            w, b = split_pos(nd, rest, hi - lo)
            root = renormalize(nd, meta, buf, a, w, b, COLLAPSED)
    flush(nd, root)
    return root


@njit(cache=True)
def combine(nd, meta, buf, f1, f2):
    """Pointwise minimum of two curves on one domain that cross at most once.

    ``f1`` must lie strictly above ``f2`` left of the crossing and not above
    it from the crossing on.
    """
    meta[OPS] += 1
    x_lo = nd[first_node(nd, f1), XL]
    x_hi = nd[last_node(nd, f1), XR]
    if evaluate(nd, f1, x_lo) <= evaluate(nd, f2, x_lo):
        if evaluate(nd, f1, x_hi) > evaluate(nd, f2, x_hi):
            raise ValueError("combine: curves cross the wrong way")
        release_tree(nd, meta, f2, DISCARDED)
        return f1
    if evaluate(nd, f1, x_hi) > evaluate(nd, f2, x_hi):
        release_tree(nd, meta, f1, DISCARDED)
        return f2
    k = 0
    while True:
        s1 = node_at(nd, f1, k)
        if nd[s1, YR] <= evaluate(nd, f2, nd[s1, XR]):
            break
        k += 1
    k = nd[f2, SZ] - 1
    while True:
        s2 = node_at(nd, f2, k)
        if evaluate(nd, f1, nd[s2, XL]) > nd[s2, YL]:
            break
        k -= 1
    lo = max(nd[s1, XL], nd[s2, XL])
    d = (nd[s1, YL] + nd[s1, G] * (lo - nd[s1, XL])) - (nd[s2, YL] + nd[s2, G] * (lo - nd[s2, XL]))
    if d <= 0:
        xm = lo
    else:
        slope = nd[s2, G] - nd[s1, G]
        if slope <= 0 or d % slope != 0:
            raise ValueError("combine: crossing is not on the half-integer grid")
        xm = lo + d // slope
    l1, r1 = split(nd, meta, buf, f1, xm)
    l2, r2 = split(nd, meta, buf, f2, xm)
    release_tree(nd, meta, l1, DISCARDED)
    release_tree(nd, meta, r2, DISCARDED)
    return join(nd, meta, buf, l2, r1)


@njit(cache=True)
def segments(nd, root):
    """Materialise every segment as a row ``XL YL XR YR G GL GR``."""
    n = nd[root, SZ]
    idx = np.empty(n, dtype=np.int64)
    collect(nd, root, idx, 0)
    out = np.empty((n, 7), dtype=np.int64)
    for i in range(n):
        v = idx[i]
        out[i, 0] = nd[v, XL]
        out[i, 1] = nd[v, YL]
        out[i, 2] = nd[v, XR]
        out[i, 3] = nd[v, YR]
        out[i, 4] = nd[v, G]
        out[i, 5] = nd[v, GL]
        out[i, 6] = nd[v, GR]
    return out
