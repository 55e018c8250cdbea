import numpy as np
import pytest

from rled import curve as C
from rled.curve import SegmentPool
from rled.curve.checks import check_curve
from rled.engine import (
    BlockCtx,
    SweepStats,
    blocks,
    debug_borders,
    init_borders,
    process_match_block,
    process_mismatch_block,
    rle_edit_distance,
    sweep,
)
from rled.oracle import brute_block_borders, mismatch_output, rle_naive_ed
from rled.rle import RleString, parse_rle, random_rle

from . import figure2

K = 10**12


def dist(a, b):
    return rle_edit_distance(parse_rle(a), parse_rle(b))


def test_distance_examples():
    assert dist(figure2.X, figure2.Y) == figure2.DISTANCE
    assert dist("a3b4c1", "a3b4c1") == 0
    assert dist("a5", "b3") == 5
    assert dist(f"a{K}b{K}", f"a{K}") == K


def test_empty_strings():
    assert dist("", "") == 0
    assert dist("", "a3b2") == 5
    assert dist("c7", "") == 7


def test_huge_runs_closed_forms():
    assert dist(f"a{K}", f"b{K}") == K
    assert dist(f"a{K}", f"a{K - 7}") == 7
    assert dist(f"a{2**59}", f"a{2**59 - 3}b2") == 3


def test_total_length_guard():
    with pytest.raises(OverflowError):
        dist(f"a{2**61}", f"b{2**61}")


def test_init_borders():
    pool = SegmentPool()
    tops, lefts = init_borders(parse_rle("a2"), parse_rle("a3b4"), pool)
    assert [t.domain for t in tops] == [(0, 6), (6, 14)]
    for t in tops:
        lo, hi = t.domain
        assert all(t.evaluate(x) == x for x in range(lo, hi + 1, 2))
    (left,) = lefts
    assert left.domain == (-4, 0)
    assert all(left.evaluate(x) == -x for x in range(-4, 1, 2))
    assert pool.created == 3 and pool.ops == 3
    assert tops[0].evaluate(6) == tops[1].evaluate(6)


def test_match_block_example():
    pool = SegmentPool()
    ctx = BlockCtx(0, 0, 0, 1, 0, 1, True)
    left = pool.create(-2, 2, 0, 0)  # [1, 0] on d = -1..0
    top = pool.create(0, 0, 2, 2)  # [0, 1] on d = 0..1
    bottom, right = process_match_block(ctx, left, top)
    assert [bottom.evaluate(x) // 2 for x in (-2, 0)] == [1, 0]
    assert [right.evaluate(x) // 2 for x in (0, 2)] == [0, 1]


def test_match_block_is_identity():
    pool = SegmentPool()
    ctx = BlockCtx(0, 0, 2, 5, 3, 5, True)
    lpts = [(-2, 3), (-1, 2), (0, 3), (1, 3)]
    tpts = [(1, 3), (3, 1)]
    left = _from_plain(pool, lpts)
    top = _from_plain(pool, tpts)
    bottom, right = process_match_block(ctx, left, top)
    want = dict((d, v) for d, v in _plain_values(lpts + tpts[1:]))
    for c in (bottom, right):
        lo, hi = c.domain
        for x in range(lo, hi + 1, 2):
            assert c.evaluate(x) // 2 == want[x // 2]


def _from_plain(pool, plain):
    c = None
    for (xa, ya), (xb, yb) in zip(plain, plain[1:]):
        s = pool.create(2 * xa, 2 * ya, 2 * xb, 2 * yb)
        c = s if c is None else C.join(c, s)
    return c


def _plain_values(plain):
    out = [plain[0]]
    for (xa, ya), (xb, yb) in zip(plain, plain[1:]):
        g = (yb - ya) // (xb - xa)
        out += [(x, ya + g * (x - xa)) for x in range(xa + 1, xb + 1)]
    return out


def test_block_kind_is_checked():
    pool = SegmentPool()
    ctx = BlockCtx(0, 0, 0, 1, 0, 1, True)
    with pytest.raises(ValueError):
        process_mismatch_block(ctx, pool.create(-2, 2, 0, 0), pool.create(0, 0, 2, 2))
    with pytest.raises(ValueError):
        process_match_block(BlockCtx(0, 0, 0, 1, 0, 1, False), pool.create(-2, 2, 0, 0), pool.create(0, 0, 2, 2))


def test_block_domains_are_checked():
    pool = SegmentPool()
    with pytest.raises(ValueError):
        process_match_block(BlockCtx(0, 0, 0, 1, 0, 2, True), pool.create(-2, 2, 0, 0), pool.create(0, 0, 2, 2))


@pytest.mark.parametrize("seed", range(30))
def test_mismatch_block_against_brute_force(seed):
    rng = np.random.default_rng(seed)
    h, w = int(rng.integers(2, 8)), int(rng.integers(2, 8))
    r0, c0 = int(rng.integers(0, 5)), int(rng.integers(0, 5))
    r1, c1 = r0 + h - 1, c0 + w - 1
    # borders read off a real table
    a = random_rle(rng, 4, 3, 2)
    b = random_rle(rng, 4, 3, 2)
    from rled.oracle import DenseTable
    from rled.rle import decompress

    ed = DenseTable.build(decompress(a) + "x" * 20, decompress(b) + "y" * 20).ed
    left = [int(ed[r, c0]) for r in range(r1, r0 - 1, -1)]
    top = [int(ed[r0, c]) for c in range(c0, c1 + 1)]
    pool = SegmentPool()
    lc = _from_plain(pool, [(c0 - r1 + j, v) for j, v in enumerate(left)])
    tc = _from_plain(pool, [(c0 - r0 + j, v) for j, v in enumerate(top)])
    ctx = BlockCtx(0, 0, r0, r1, c0, c1, False)
    bottom, right = process_mismatch_block(ctx, lc, tc)
    check_curve(bottom), check_curve(right)
    got = [bottom.evaluate(2 * d) // 2 for d in range(c0 - r1, c1 - r1 + 1)]
    got += [right.evaluate(2 * d) // 2 for d in range(c1 - r1 + 1, c1 - r0 + 1)]
    assert got == mismatch_output(left, top, h, w)


def test_figure_mismatch_block_bottom_row():
    x, y = parse_rle(figure2.X), parse_rle(figure2.Y)
    seen = {}
    sweep(x, y, record=lambda ctx, b, r: seen.setdefault((ctx.p, ctx.q), (ctx, b.materialize(), r.materialize())))
    ctx, bottom, _ = seen[(1, 0)]
    assert not ctx.is_match
    values = _values_from_points(bottom)
    assert values == figure2.TABLE[9]


def _values_from_points(points):
    """Plain values at every integer diagonal of a doubled polyline."""
    xs, ys = zip(*points)
    return [int(v) // 2 for v in np.interp(np.arange(xs[0], xs[-1] + 1, 2), xs, ys)]


def test_blocks_order_and_shape():
    ctxs = list(blocks(parse_rle("a2b1"), parse_rle("b3")))
    assert [(c.p, c.q) for c in ctxs] == [(0, 0), (1, 0)]
    assert (ctxs[0].h, ctxs[0].w, ctxs[0].is_match) == (3, 4, False)
    assert ctxs[1].is_match and ctxs[1].split_at == 3 - 3


def gen_pair(rng):
    def one():
        return random_rle(rng, int(rng.integers(0, 9)), 6, 3)

    return one(), one()


def test_random_against_naive():
    rng = np.random.default_rng(123)
    for _ in range(2000):
        x, y = gen_pair(rng)
        assert rle_edit_distance(x, y) == rle_naive_ed(x, y), (str(x), str(y))


def test_borders_against_dense_table():
    rng = np.random.default_rng(321)
    for _ in range(100):
        x, y = gen_pair(rng)
        if x.m == 0 or y.m == 0:
            continue
        want = brute_block_borders(x, y)
        _, dump = debug_borders(x, y)
        for rec in dump:
            got = _values_from_points(rec["bottom"]) + _values_from_points(rec["right"])[1:]
            assert got == want[(rec["p"], rec["q"])]


def test_metric_properties():
    rng = np.random.default_rng(8)
    for _ in range(200):
        x, y, z = (random_rle(rng, int(rng.integers(0, 12)), 20, 3) for _ in range(3))
        dxy, dyz, dxz = rle_edit_distance(x, y), rle_edit_distance(y, z), rle_edit_distance(x, z)
        assert rle_edit_distance(x, x) == 0
        assert dxy == rle_edit_distance(y, x)
        assert dxz <= dxy + dyz
        assert abs(x.M - y.M) <= dxy <= max(x.M, y.M)


def test_stats_and_pool_growth():
    rng = np.random.default_rng(0)
    x, y = random_rle(rng, 60, 10**9, 4), random_rle(rng, 60, 10**9, 4)
    st = SweepStats()
    d = rle_edit_distance(x, y, st)
    assert abs(x.M - y.M) <= d <= max(x.M, y.M)
    assert st.blocks == 3600 and st.ops <= 16 * st.blocks
    assert st.discarded + st.collapsed <= st.created


def test_sweep_returns_last_block_border():
    x, y = parse_rle(figure2.X), parse_rle(figure2.Y)
    out = sweep(x, y)
    # last block spans rows 9..12 and columns 0..9
    assert out.domain == (2 * (0 - 12), 2 * (9 - 9))
    assert out.evaluate(2 * (y.M - x.M)) // 2 == figure2.DISTANCE
    want = figure2.TABLE[12] + [figure2.TABLE[r][9] for r in (11, 10, 9)]
    assert _values_from_points(out.materialize()) == want


def test_empty_sweep_rejected():
    with pytest.raises(ValueError):
        sweep(RleString(), parse_rle("a1"))
