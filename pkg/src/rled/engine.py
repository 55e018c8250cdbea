"""Edit distance between run-length encoded strings, block by block.

The DP table is cut into one block per pair of runs.  Every block border is
a curve over the diagonal index ``d = column - row``; the value at ``d`` is
the DP value of the unique border cell on that diagonal.  A block's input
border (left column bottom-to-top, then top row) and its output border
(bottom row, then right column) cover the same diagonal interval
``[c0 - r1, c1 - r0]``, so a match block is the identity and a mismatch block
is a couple of sliding-window minima followed by a pointwise minimum.

All curve coordinates are doubled (see :mod:`rled.curve`).
"""
from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np
from numba import njit

from rled.curve import Curve, SegmentPool
from rled.curve import _kernel as K
from rled.rle import RleString

__all__ = [
    "BlockCtx",
    "SweepStats",
    "blocks",
    "debug_borders",
    "init_borders",
    "process_match_block",
    "process_mismatch_block",
    "rle_edit_distance",
    "sweep",
]

# M + N above this could overflow doubled int64 coordinates after shifts.
MAX_TOTAL_LENGTH = 2**60
# Free nodes the sweep keeps in hand before each block.
BLOCK_BUDGET = 64

_DONE, _NEED_GROW = 0, 1


@dataclass(frozen=True)
class BlockCtx:
    p: int
    q: int
    r0: int
    r1: int
    c0: int
    c1: int
    is_match: bool

    @property
    def h(self) -> int:
        return self.r1 - self.r0 + 1

    @property
    def w(self) -> int:
        return self.c1 - self.c0 + 1

    @property
    def split_at(self) -> int:
        """Diagonal where the bottom row meets the right column."""
        return self.c1 - self.r1


@dataclass
class SweepStats:
    ops: int = 0
    created: int = 0
    discarded: int = 0
    collapsed: int = 0
    blocks: int = 0


def _prefix(s: RleString) -> np.ndarray:
    out = np.zeros(s.m + 1, dtype=np.int64)
    np.cumsum([r.length for r in s.runs], out=out[1:])
    return out


def _symbol_codes(x: RleString, y: RleString) -> tuple[np.ndarray, np.ndarray]:
    codes: dict[str, int] = {}
    xs = np.array([codes.setdefault(r.symbol, len(codes)) for r in x.runs], dtype=np.int64)
    ys = np.array([codes.setdefault(r.symbol, len(codes)) for r in y.runs], dtype=np.int64)
    return xs, ys


def blocks(x: RleString, y: RleString):
    """Yield a :class:`BlockCtx` for every block in row-major order."""
    rp, cp = _prefix(x), _prefix(y)
    for p, a in enumerate(x.runs):
        for q, b in enumerate(y.runs):
            yield BlockCtx(p, q, int(rp[p]), int(rp[p + 1]), int(cp[q]), int(cp[q + 1]), a.symbol == b.symbol)


# -- kernel-level block processing ----------------------------------------

@njit(cache=True)
def _top_piece(nd, meta, c0, c1):
    # ED(0, j) = j on diagonals d = j
    return K.create(nd, meta, 2 * c0, 2 * c0, 2 * c1, 2 * c1)


@njit(cache=True)
def _left_piece(nd, meta, r0, r1):
    # ED(i, 0) = i on diagonals d = -i
    return K.create(nd, meta, -2 * r1, 2 * r1, -2 * r0, 2 * r0)


@njit(cache=True)
def _match_block(nd, meta, buf, left, top, r1, c1):
    out = K.join(nd, meta, buf, left, top)
    return K.split(nd, meta, buf, out, 2 * (c1 - r1))


@njit(cache=True)
def _mismatch_block(nd, meta, buf, left, top, r0, r1, c0, c1):
    h1 = r1 - r0
    w1 = c1 - c0
    xs = 2 * (c1 - r1)
    # paths entering through the left column
    s = K.swm(nd, meta, buf, left, w1)
    a, b = K.split(nd, meta, buf, s, xs)
    a = K.gradient_change_shift(nd, meta, a, 1, 0, -2 * (c0 - r1))
    b = K.shift(nd, meta, b, 0, 2 * w1)
    out_left = K.join(nd, meta, buf, a, b)
    # paths entering through the top row
    s = K.swm(nd, meta, buf, top, h1)
    s = K.shift(nd, meta, s, -2 * h1, 0)
    a, b = K.split(nd, meta, buf, s, xs)
    a = K.shift(nd, meta, a, 0, 2 * h1)
    b = K.gradient_change_shift(nd, meta, b, -1, 0, 2 * (c1 - r0))
    out_top = K.join(nd, meta, buf, a, b)
    out = K.combine(nd, meta, buf, out_top, out_left)
    return K.split(nd, meta, buf, out, xs)


@njit(cache=True)
def _block(nd, meta, buf, left, top, match, r0, r1, c0, c1):
    if match:
        return _match_block(nd, meta, buf, left, top, r1, c1)
    return _mismatch_block(nd, meta, buf, left, top, r0, r1, c0, c1)


@njit(cache=True)
def _sweep_core(nd, meta, buf, xsym, rp, ysym, cp, bottoms, state):
    """Process blocks from ``state = [p, q, right, answer]`` on; resumable.

    Returns ``_NEED_GROW`` when the pool runs low, leaving ``state`` at the
    next unprocessed block.
    """
    m = xsym.shape[0]
    n = ysym.shape[0]
    p = state[0]
    q = state[1]
    right = state[2]
    while p < m:
        while q < n:
            if meta[K.N_FREE] < BLOCK_BUDGET:
                state[0] = p
                state[1] = q
                state[2] = right
                return _NEED_GROW
            r0 = rp[p]
            r1 = rp[p + 1]
            c0 = cp[q]
            c1 = cp[q + 1]
            left = _left_piece(nd, meta, r0, r1) if q == 0 else right
            top = _top_piece(nd, meta, c0, c1) if p == 0 else bottoms[q]
            bottom, right = _block(nd, meta, buf, left, top, xsym[p] == ysym[q], r0, r1, c0, c1)
            if p == m - 1 and q == n - 1:
                state[3] = K.evaluate(nd, bottom, 2 * (c1 - r1)) // 2
            bottoms[q] = bottom
            q += 1
        q = 0
        p += 1
    state[0] = p
    state[1] = q
    state[2] = right
    return _DONE


# -- Curve-level API -------------------------------------------------------

def init_borders(x: RleString, y: RleString, pool: SegmentPool) -> tuple[list[Curve], list[Curve]]:
    """Table-edge pieces: ``(tops per column run, lefts per row run)``."""
    if x.m == 0 or y.m == 0:
        raise ValueError("init_borders needs two non-empty strings")
    rp, cp = _prefix(x), _prefix(y)
    tops, lefts = [], []
    for q in range(y.m):
        pool.reserve()
        tops.append(Curve(pool, _top_piece(pool.nd, pool.meta, cp[q], cp[q + 1])))
    for p in range(x.m):
        pool.reserve()
        lefts.append(Curve(pool, _left_piece(pool.nd, pool.meta, rp[p], rp[p + 1])))
    return tops, lefts


def _check_input_domains(ctx: BlockCtx, left: Curve, top: Curve) -> SegmentPool:
    if left.pool is not top.pool:
        raise ValueError("left and top borders belong to different pools")
    want_left = (2 * (ctx.c0 - ctx.r1), 2 * (ctx.c0 - ctx.r0))
    want_top = (2 * (ctx.c0 - ctx.r0), 2 * (ctx.c1 - ctx.r0))
    if left.domain != want_left or top.domain != want_top:
        raise ValueError(f"border domains {left.domain}, {top.domain} do not fit block {ctx}")
    return left.pool


def _run_block(ctx: BlockCtx, left: Curve, top: Curve, match: bool) -> tuple[Curve, Curve]:
    pool = _check_input_domains(ctx, left, top)
    # one block allocates a bounded number of nodes
    pool.reserve(BLOCK_BUDGET)
    lr, tr = left._take(), top._take()
    bottom, right = _block(pool.nd, pool.meta, pool.buf, lr, tr, match, ctx.r0, ctx.r1, ctx.c0, ctx.c1)
    return Curve(pool, bottom), Curve(pool, right)


def process_match_block(ctx: BlockCtx, left: Curve, top: Curve) -> tuple[Curve, Curve]:
    """Equal run symbols: values copy along diagonals, so the border passes through."""
    if not ctx.is_match:
        raise ValueError("process_match_block called on a mismatch block")
    return _run_block(ctx, left, top, True)


def process_mismatch_block(ctx: BlockCtx, left: Curve, top: Curve) -> tuple[Curve, Curve]:
    """Distinct run symbols: best path through the left column or the top row."""
    if ctx.is_match:
        raise ValueError("process_mismatch_block called on a match block")
    return _run_block(ctx, left, top, False)


def sweep(x: RleString, y: RleString, pool: SegmentPool | None = None, record=None) -> Curve:
    """Run every block in row-major order; returns the last block's output border.

    ``record(ctx, bottom, right)`` is called after each block when given.
    Both input strings must be non-empty.
    """
    pool = pool or SegmentPool()
    tops, lefts = init_borders(x, y, pool)
    bottoms: list[Curve] = tops
    right = None
    for ctx in blocks(x, y):
        left = lefts[ctx.p] if ctx.q == 0 else right
        if ctx.is_match:
            bottom, right = process_match_block(ctx, left, bottoms[ctx.q])
        else:
            bottom, right = process_mismatch_block(ctx, left, bottoms[ctx.q])
        if record is not None:
            record(ctx, bottom, right)
        bottoms[ctx.q] = bottom
    last_bottom = bottoms[-1]
    pool.reserve()
    return Curve(pool, K.join(pool.nd, pool.meta, pool.buf, last_bottom._take(), right._take()))


def _check_total(x: RleString, y: RleString) -> None:
    if x.M + y.M > MAX_TOTAL_LENGTH:
        raise OverflowError(f"M + N = {x.M + y.M} exceeds 2**60")


def rle_edit_distance(x: RleString, y: RleString, stats: SweepStats | None = None, seed: int = 0) -> int:
    """Exact Levenshtein distance between the expansions of ``x`` and ``y``.

    >>> from rled.rle import parse_rle
    >>> rle_edit_distance(parse_rle("a3b6a3"), parse_rle("a9"))
    6
    """
    _check_total(x, y)
    if x.m == 0 or y.m == 0:
        return x.M + y.M
    xsym, ysym = _symbol_codes(x, y)
    rp, cp = _prefix(x), _prefix(y)
    pool = SegmentPool(capacity=8 * (x.m + y.m) + 4 * BLOCK_BUDGET, seed=seed)
    bottoms = np.zeros(y.m, dtype=np.int64)
    state = np.zeros(4, dtype=np.int64)
    while _sweep_core(pool.nd, pool.meta, pool.buf, xsym, rp, ysym, cp, bottoms, state) == _NEED_GROW:
        pool.reserve(max(BLOCK_BUDGET, pool.nd.shape[0]))
    if stats is not None:
        stats.ops = pool.ops
        stats.created = pool.created
        stats.discarded = pool.discarded
        stats.collapsed = pool.collapsed
        stats.blocks = x.m * y.m
    return int(state[3])


def timed_distance(x: RleString, y: RleString, stats: SweepStats | None = None) -> tuple[int, int]:
    """``(distance, wall time in ns)``."""
    t0 = time.perf_counter_ns()
    d = rle_edit_distance(x, y, stats)
    return d, time.perf_counter_ns() - t0


def debug_borders(x: RleString, y: RleString) -> tuple[int, list[dict]]:
    """Distance plus every block's output border as turning points.

    Points are in doubled coordinates ``(2d, 2 * value)``.  Runs the
    Python-level sweep, so keep inputs small.
    """
    _check_total(x, y)
    if x.m == 0 or y.m == 0:
        return x.M + y.M, []
    dump = []

    def record(ctx, bottom, right):
        dump.append({
            "p": ctx.p, "q": ctx.q,
            "rows": [ctx.r0, ctx.r1], "cols": [ctx.c0, ctx.c1],
            "match": ctx.is_match,
            "bottom": [list(pt) for pt in bottom.materialize()],
            "right": [list(pt) for pt in right.materialize()],
        })

    out = sweep(x, y, record=record)
    return out.evaluate(2 * (y.M - x.M)) // 2, dump
