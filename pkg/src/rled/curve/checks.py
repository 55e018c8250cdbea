"""Structural invariant checks for curves, used by the test and acceptance suites."""
from __future__ import annotations

from rled.curve import Curve
from rled.curve import _kernel as K

COLLAPSING = {(1, -1, 0), (1, 0, -1), (0, 1, -1)}


class InvariantViolation(AssertionError):
    pass


def _fail(msg: str):
    raise InvariantViolation(msg)


def boundary_paths_clean(c: Curve) -> None:
    nd = c.pool.nd
    for child in (K.LC, K.RC):
        v = c.root
        while v:
            if nd[v, K.DT] or nd[v, K.DG] or nd[v, K.DX] or nd[v, K.DY]:
                _fail(f"deferred update on boundary path at node {v}")
            v = nd[v, child]


def check_curve(c: Curve) -> None:
    """Assert every stored-curve invariant; raises :class:`InvariantViolation`.

    Checks boundary-path cleanliness and reads ``t_min`` first, since
    materialising propagates all deferred updates.
    """
    boundary_paths_clean(c)
    nd = c.pool.nd
    root = c.root
    tmin_root = int(nd[root, K.TMIN])
    segs = c.segments()
    n = len(segs)
    if n != nd[root, K.SZ]:
        _fail("size field disagrees with segment count")
    scan_tmin = K.INF
    for i, (xl, yl, xr, yr, g, gl, gr) in enumerate(segs.tolist()):
        dx, dy = xr - xl, yr - yl
        if dx < 0:
            _fail(f"segment {i} runs backwards")
        if g not in (-1, 0, 1) or dy != g * dx:
            _fail(f"segment {i} gradient {g} does not match ({dx}, {dy})")
        if dx == 0 and g != 0:
            _fail(f"length-0 segment {i} is not flat")
        # integer x must carry integer y
        if xl % 2 == 0 and yl % 2:
            _fail(f"odd value at integer x on segment {i}")
        if xl % 2 and dx and (yl + g) % 2:
            _fail(f"odd value at integer x on segment {i}")
        want_gl = segs[i - 1][4] if i else K.BND
        want_gr = segs[i + 1][4] if i < n - 1 else K.BND
        if gl != want_gl or gr != want_gr:
            _fail(f"segment {i} neighbour types ({gl},{gr}) != ({want_gl},{want_gr})")
        if i < n - 1:
            nxt = segs[i + 1]
            if (xr, yr) != (nxt[0], nxt[1]):
                _fail(f"segments {i} and {i + 1} do not share a point")
            if g == nxt[4]:
                _fail(f"segments {i} and {i + 1} share gradient {g}")
            if g == -1 and nxt[4] == 1:
                _fail(f"DI turning point at segment {i}")
        if dx == 0 and n > 1 and not (gl == -1 and gr == 1):
            _fail(f"stray length-0 segment {i}")
        if (gl, g, gr) in COLLAPSING:
            scan_tmin = min(scan_tmin, (abs(dx) + abs(dy)) // 2)
    if scan_tmin != tmin_root:
        _fail(f"root t_min {tmin_root} != scanned minimum collapse time {scan_tmin}")


def check_accounting(pool, max_created_per_op: int) -> None:
    freed = pool.discarded + pool.collapsed
    if freed > pool.created:
        _fail(f"freed {freed} segments but only created {pool.created}")
    if pool.created > max_created_per_op * max(pool.ops, 1):
        _fail(f"created {pool.created} segments over {pool.ops} operations")
