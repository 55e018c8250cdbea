import random

import numpy as np
import pytest

from rled.oracle import (
    DenseTable,
    OracleRefused,
    array_out_left,
    array_out_top,
    array_swm,
    brute_block_borders,
    linear_space_ed,
    mismatch_output,
    naive_ed,
    rle_naive_ed,
    three_piece_out_left,
)
from rled.rle import parse_rle

from . import figure2


def test_naive_examples():
    assert naive_ed("aaabbbbbbaaa", "aaaaaaaaa") == 6
    assert naive_ed("", "abc") == 3
    assert naive_ed("kitten", "sitting") == 3
    assert linear_space_ed("kitten", "sitting") == 3


def test_dense_table_reproduces_figure():
    t = DenseTable.build("aaabbbbbbaaa", "aaaaaaaaa")
    assert t.ed.tolist() == figure2.TABLE


def test_dense_table_invariants():
    rng = random.Random(2)
    for _ in range(50):
        a = "".join(rng.choice("ab") for _ in range(rng.randint(0, 12)))
        b = "".join(rng.choice("ab") for _ in range(rng.randint(0, 12)))
        ed = DenseTable.build(a, b).ed
        assert ed[0].tolist() == list(range(len(b) + 1))
        assert ed[:, 0].tolist() == list(range(len(a) + 1))
        assert np.abs(np.diff(ed, axis=0)).max(initial=0) <= 1
        assert np.abs(np.diff(ed, axis=1)).max(initial=0) <= 1
        assert np.abs(ed[1:, 1:] - ed[:-1, :-1]).max(initial=0) <= 1


def test_second_implementation_agrees():
    rng = random.Random(7)
    for _ in range(500):
        a = "".join(rng.choice("abc") for _ in range(rng.randint(0, 20)))
        b = "".join(rng.choice("abc") for _ in range(rng.randint(0, 20)))
        assert naive_ed(a, b) == linear_space_ed(a, b)


def test_guard():
    with pytest.raises(OracleRefused):
        naive_ed("a" * 100, "b" * 100, guard=1000)
    with pytest.raises(OracleRefused):
        rle_naive_ed(parse_rle("a100000"), parse_rle("b100000"))


def test_array_swm_examples():
    assert array_swm([5, 3, 4], 2) == [5, 3, 3, 4]
    assert array_swm([4, 1, 7], 1) == [4, 1, 7]
    assert array_swm([7], 3) == [7, 7, 7]
    with pytest.raises(ValueError):
        array_swm([], 2)


def test_border_formula_examples():
    for gen in (True, False):
        assert array_out_left([2, 0], 2, 3, gen) == [2, 1, 2, 2]
        assert array_out_top([1, 0, 2], 2, 3, gen) == [2, 1, 1, 2]
    assert [min(a, b) for a, b in zip([2, 1, 2, 2], [2, 1, 1, 2])] == [2, 1, 1, 2]
    c = 4
    assert array_out_left([c, c], 2, 2, False) == [c, c + 1, c + 1]


def test_paper_form_needs_h_le_w():
    with pytest.raises(ValueError):
        array_out_left([1, 2, 3], 3, 2, False)
    with pytest.raises(ValueError):
        array_out_top([1, 2], 3, 2, False)
    with pytest.raises(ValueError):
        three_piece_out_left([1, 2, 3], 3, 2)


def _lipschitz(rng, n, start):
    v = [start]
    for _ in range(n - 1):
        v.append(v[-1] + rng.choice((-1, 0, 1)))
    return v


def test_formulas_match_brute_force_and_each_other():
    rng = random.Random(11)
    for _ in range(2000):
        h, w = rng.randint(2, 8), rng.randint(2, 8)
        left = _lipschitz(rng, h, rng.randint(6, 12))
        top = _lipschitz(rng, w, left[-1])
        ol, ot = array_out_left(left, h, w), array_out_top(top, h, w)
        assert [min(a, b) for a, b in zip(ol, ot)] == mismatch_output(left, top, h, w)
        if h <= w:
            assert ol == array_out_left(left, h, w, False) == three_piece_out_left(left, h, w)
            assert ot == array_out_top(top, h, w, False)


def _crossings_once(top_vals, left_vals):
    """Once OUT_TOP <= OUT_LEFT somewhere, it stays so to the right."""
    seen = False
    for a, b in zip(top_vals, left_vals):
        if a <= b:
            seen = True
        elif seen:
            return False
    return True


def test_single_crossing_on_real_tables_both_orientations():
    # borders taken from real tables, including blocks with h > w
    rng = random.Random(5)
    shapes = {"le": 0, "gt": 0}
    for _ in range(400):
        a = "".join(rng.choice("ab") * rng.randint(1, 5) for _ in range(rng.randint(1, 5)))
        b = "".join(rng.choice("ab") * rng.randint(1, 5) for _ in range(rng.randint(1, 5)))
        ed = DenseTable.build(a, b).ed
        for r0 in range(len(a)):
            for c0 in range(len(b)):
                r1 = r0 + rng.randint(1, 4)
                c1 = c0 + rng.randint(1, 4)
                if r1 > len(a) or c1 > len(b):
                    continue
                h, w = r1 - r0 + 1, c1 - c0 + 1
                left = [int(ed[r, c0]) for r in range(r1, r0 - 1, -1)]
                top = [int(ed[r0, c]) for c in range(c0, c1 + 1)]
                ol, ot = array_out_left(left, h, w), array_out_top(top, h, w)
                assert _crossings_once(ot, ol), (a, b, r0, r1, c0, c1)
                shapes["gt" if h > w else "le"] += 1
    assert shapes["gt"] > 100 and shapes["le"] > 100


def test_brute_block_borders_examples():
    one = brute_block_borders(parse_rle("a1"), parse_rle("a1"))
    # the 2x2 table [[0,1],[1,0]]: bottom row then right column upwards
    assert one == {(0, 0): [1, 0, 1]}
    fig = brute_block_borders(parse_rle(figure2.X), parse_rle(figure2.Y))
    assert fig[(1, 0)][:10] == figure2.TABLE[9]
    assert fig[(2, 0)][:10] == figure2.TABLE[12]
    for border in fig.values():
        assert all(abs(u - v) <= 1 for u, v in zip(border, border[1:]))
