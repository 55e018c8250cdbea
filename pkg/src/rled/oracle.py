"""Slow, obviously-correct references for differential testing.

Everything here works on plain Python sequences and the full DP table, so
it is independent of the curve machinery.  Arrays in the border formulas
are 1-indexed in the docstrings and 0-indexed in code.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from rled.rle import RleString, decompress

NAIVE_GUARD = 10**8


class OracleRefused(RuntimeError):
    """The naive table would exceed the size guard."""


def _guard(la: int, lb: int, guard: int) -> None:
    if la * lb > guard:
        raise OracleRefused(f"table of {la} x {lb} cells exceeds the guard of {guard}")


@dataclass
class DenseTable:
    """The full ``(M+1) x (N+1)`` Levenshtein table, ``ed[i, j] = ED(i, j)``."""

    ed: np.ndarray

    @classmethod
    def build(cls, a: Sequence, b: Sequence, guard: int = NAIVE_GUARD) -> "DenseTable":
        la, lb = len(a), len(b)
        _guard(la, lb, guard)
        ed = np.zeros((la + 1, lb + 1), dtype=np.int64)
        ed[0, :] = np.arange(lb + 1)
        ed[:, 0] = np.arange(la + 1)
        bb = np.array([ord(c) if isinstance(c, str) else c for c in b], dtype=np.int64)
        for i in range(1, la + 1):
            ai = ord(a[i - 1]) if isinstance(a[i - 1], str) else a[i - 1]
            sub = ed[i - 1, :-1] + (bb != ai)
            dele = ed[i - 1, 1:] + 1
            row = np.minimum(sub, dele)
            # insertions chain along the row: ed[i, j] = min_k row[k] + (j - k)
            row = np.concatenate(([ed[i, 0]], row))
            ed[i] = np.minimum.accumulate(row - np.arange(lb + 1)) + np.arange(lb + 1)
        return cls(ed)

    @property
    def distance(self) -> int:
        return int(self.ed[-1, -1])


def naive_ed(a: Sequence, b: Sequence, guard: int = NAIVE_GUARD) -> int:
    """Levenshtein distance through the full table.

    >>> naive_ed("kitten", "sitting")
    3
    """
    return DenseTable.build(a, b, guard).distance


def linear_space_ed(a: Sequence, b: Sequence, guard: int = NAIVE_GUARD) -> int:
    """Same distance from a plain two-row loop, written independently of :class:`DenseTable`."""
    _guard(len(a), len(b), guard)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def rle_naive_ed(x: RleString, y: RleString, guard: int = NAIVE_GUARD) -> int:
    _guard(x.M, y.M, guard)
    return naive_ed(decompress(x), decompress(y), guard)


# -- array forms of the block formulas ---------------------------------------

def array_swm(s: Sequence[int], h: int) -> list[int]:
    """Window minimum: ``out[i] = min S[j]`` over ``i-h+1 <= j <= i``, length ``n+h-1``.

    >>> array_swm([5, 3, 4], 2)
    [5, 3, 3, 4]
    """
    if h < 1:
        raise ValueError("window must be at least 1")
    if len(s) == 0:
        raise ValueError("array must be non-empty")
    n = len(s)
    return [min(s[max(0, i - h + 1):min(n, i + 1)]) for i in range(n + h - 1)]


def array_out_left(left: Sequence[int], h: int, w: int, generalized: bool = True) -> list[int]:
    """Output border values reached through the left column of a mismatch block.

    ``left`` lists the left column bottom-to-top.  The paper form needs
    ``h <= w``; the generalized form takes any shape.
    """
    if len(left) != h:
        raise ValueError("left border must have h entries")
    if generalized:
        s = array_swm(left, w)
        return [s[i - 1] + min(i, w) - 1 for i in range(1, w + h)]
    if h > w:
        raise ValueError("paper form needs h <= w")
    s = array_swm(left, h)
    out = []
    for i in range(1, w + h):
        if i <= h:
            out.append(s[i - 1] + i - 1)
        elif i <= w:
            # the middle stretch: best of the whole column plus the horizontal walk
            out.append(s[h - 1] + i - 1)
        else:
            out.append(s[i - 1 - (w - h)] + w - 1)
    return out


def array_out_top(top: Sequence[int], h: int, w: int, generalized: bool = True) -> list[int]:
    """Output border values reached through the top row of a mismatch block.

    ``top`` lists the top row left-to-right.  The paper form needs ``h <= w``.
    """
    if len(top) != w:
        raise ValueError("top border must have w entries")
    if generalized:
        s = array_swm(top, h)
        return [s[i - 1] + min(h, w + h - i) - 1 for i in range(1, w + h)]
    if h > w:
        raise ValueError("paper form needs h <= w")
    s = array_swm(top, h)
    out = []
    for i in range(1, w + h):
        if i <= w:
            out.append(s[i - 1] + h - 1)
        else:
            out.append(s[i - 1] + w + h - i - 1)
    return out


def three_piece_out_left(left: Sequence[int], h: int, w: int) -> list[int]:
    """Left-column output built as window minimum, flat middle, then tail (needs ``h <= w``)."""
    if h > w:
        raise ValueError("three-piece construction needs h <= w")
    s = array_swm(left, h)
    head = [s[i] + i for i in range(h)]
    middle = [s[h - 1] + i for i in range(h, w)]
    tail = [s[h - 1 + k] + w - 1 for k in range(1, h)]
    return head + middle + tail


def mismatch_output(left: Sequence[int], top: Sequence[int], h: int, w: int) -> list[int]:
    """Output border of a mismatch block by brute force over every entry cell."""
    # cells of the input border: left column rows r1..r0 at column 0, top row
    cells = [(h - 1 - j, 0, left[j]) for j in range(h)] + [(0, j, top[j]) for j in range(w)]
    outs = [(h - 1, i) for i in range(w)] + [(h - 1 - k, w - 1) for k in range(1, h)]
    res = []
    for r, c in outs:
        best = None
        for er, ec, v in cells:
            if er <= r and ec <= c:
                cost = v + max(r - er, c - ec)
                best = cost if best is None else min(best, cost)
        res.append(best)
    return res


# -- dense per-block borders --------------------------------------------------

def _prefix(s: RleString) -> list[int]:
    out = [0]
    for r in s.runs:
        out.append(out[-1] + r.length)
    return out


def brute_block_borders(x: RleString, y: RleString, guard: int = NAIVE_GUARD) -> dict[tuple[int, int], list[int]]:
    """Every block's output border read off the dense table.

    Keys are ``(p, q)``; each value lists the bottom row left-to-right and
    then the right column bottom-to-top, with the corner once.  This is the
    border's value sequence at increasing diagonals ``c0-r1 .. c1-r0``.
    """
    _guard(x.M, y.M, guard)
    table = DenseTable.build(decompress(x), decompress(y), guard).ed
    rp, cp = _prefix(x), _prefix(y)
    out = {}
    for p in range(x.m):
        r0, r1 = rp[p], rp[p + 1]
        for q in range(y.m):
            c0, c1 = cp[q], cp[q + 1]
            bottom = [int(v) for v in table[r1, c0:c1 + 1]]
            right = [int(table[r, c1]) for r in range(r1 - 1, r0 - 1, -1)]
            out[(p, q)] = bottom + right
    return out
