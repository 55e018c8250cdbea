"""Piecewise-linear curves with gradients in {-1, 0, +1}.

Coordinates are *doubled* integers throughout this API: a point ``(x, y)``
is passed and returned as ``(2x, 2y)``, so half-integers are exact.

Curves are single-use.  Every operation except :meth:`Curve.evaluate`,
:meth:`Curve.materialize` and friends consumes its inputs and returns fresh
handles; touching a consumed handle raises :class:`CurveConsumedError`.
Curves that are combined must come from the same :class:`SegmentPool`.
"""
from __future__ import annotations

import json

import numpy as np

from rled.curve import _kernel as K

__all__ = [
    "Curve",
    "CurveConsumedError",
    "SegmentPool",
    "combine",
    "create",
    "gradient_change",
    "join",
    "shift",
    "split",
    "swm",
]

# Upper bound on nodes a single public operation can allocate.
OP_RESERVE = 64


class CurveConsumedError(RuntimeError):
    pass


class SegmentPool:
    """Node storage shared by a family of curves."""

    def __init__(self, capacity: int = 1024, seed: int = 0):
        self.nd, self.meta, self.buf = K.new_pool(capacity, seed)

    def reserve(self, n: int = OP_RESERVE) -> None:
        if self.meta[K.N_FREE] < n:
            self.nd = K.grow_pool(self.nd, self.meta, max(n, self.nd.shape[0]))

    @property
    def created(self) -> int:
        return int(self.meta[K.CREATED])

    @property
    def discarded(self) -> int:
        return int(self.meta[K.DISCARDED])

    @property
    def collapsed(self) -> int:
        return int(self.meta[K.COLLAPSED])

    @property
    def ops(self) -> int:
        return int(self.meta[K.OPS])

    @property
    def live(self) -> int:
        return self.nd.shape[0] - 1 - int(self.meta[K.N_FREE])

    def create(self, xl: int, yl: int, xr: int, yr: int) -> "Curve":
        self.reserve()
        return Curve(self, K.create(self.nd, self.meta, xl, yl, xr, yr))


class Curve:
    __slots__ = ("pool", "_root")

    def __init__(self, pool: SegmentPool, root: int):
        self.pool = pool
        self._root = root

    @property
    def root(self) -> int:
        if self._root is None:
            raise CurveConsumedError("curve was already used as an input")
        return self._root

    def _take(self) -> int:
        r = self.root
        self._root = None
        return r

    @property
    def consumed(self) -> bool:
        return self._root is None

    def __len__(self) -> int:
        return int(self.pool.nd[self.root, K.SZ])

    @property
    def domain(self) -> tuple[int, int]:
        # boundary paths never hold deferred updates, so plain reads are exact
        nd, v = self.pool.nd, self.root
        lo = hi = v
        while nd[lo, K.LC]:
            lo = nd[lo, K.LC]
        while nd[hi, K.RC]:
            hi = nd[hi, K.RC]
        return int(nd[lo, K.XL]), int(nd[hi, K.XR])

    def evaluate(self, x: int) -> int:
        lo, hi = self.domain
        if not lo <= x <= hi:
            raise ValueError(f"x2={x} outside domain [{lo}, {hi}]")
        return int(K.evaluate(self.pool.nd, self.root, x))

    def segments(self) -> np.ndarray:
        """Rows ``x_l y_l x_r y_r gradient left_nb_gradient right_nb_gradient``."""
        return K.segments(self.pool.nd, self.root)

    def materialize(self) -> list[tuple[int, int]]:
        """Turning points in order, coinciding points collapsed."""
        segs = self.segments()
        pts = [(int(segs[0, 0]), int(segs[0, 1]))]
        for row in segs:
            p = (int(row[2]), int(row[3]))
            if p != pts[-1]:
                pts.append(p)
        return pts

    def to_json(self) -> str:
        return json.dumps({"domain": list(self.domain), "points": [list(p) for p in self.materialize()]})

    def __repr__(self) -> str:
        if self.consumed:
            return "Curve(<consumed>)"
        return f"Curve({self.materialize()})"


def create(xl: int, yl: int, xr: int, yr: int, pool: SegmentPool | None = None) -> Curve:
    """Single-segment curve from ``(xl, yl)`` to ``(xr, yr)``."""
    return (pool or SegmentPool()).create(xl, yl, xr, yr)


def _same_pool(a: Curve, b: Curve) -> SegmentPool:
    if a.pool is not b.pool:
        raise ValueError("curves belong to different pools")
    return a.pool


def join(left: Curve, right: Curve) -> Curve:
    pool = _same_pool(left, right)
    (_, xm), (xm2, _) = left.domain, right.domain
    if xm != xm2:
        raise ValueError(f"domains do not meet: left ends at {xm}, right starts at {xm2}")
    if left.evaluate(xm) != right.evaluate(xm):
        raise ValueError(f"values differ at the junction x2={xm}")
    pool.reserve()
    return Curve(pool, K.join(pool.nd, pool.meta, pool.buf, left._take(), right._take()))


def split(f: Curve, x: int) -> tuple[Curve, Curve]:
    lo, hi = f.domain
    if not lo <= x <= hi:
        raise ValueError(f"split point x2={x} outside domain [{lo}, {hi}]")
    pool = f.pool
    pool.reserve()
    a, b = K.split(pool.nd, pool.meta, pool.buf, f._take(), x)
    return Curve(pool, a), Curve(pool, b)


def shift(f: Curve, dx: int, dy: int) -> Curve:
    pool = f.pool
    return Curve(pool, K.shift(pool.nd, pool.meta, f._take(), dx, dy))


def gradient_change(f: Curve, dg: int) -> Curve:
    pool = f.pool
    root = f.root
    K.gradient_change(pool.nd, pool.meta, root, dg)  # validates before consuming
    f._take()
    return Curve(pool, root)


def swm(f: Curve, t: int) -> Curve:
    """Sliding-window minimum over the trailing window ``[x - t, x]``; ``t`` in undoubled units."""
    if int(t) != t or t < 0:
        raise ValueError(f"window width must be a non-negative integer, got {t!r}")
    pool = f.pool
    pool.reserve()
    return Curve(pool, K.swm(pool.nd, pool.meta, pool.buf, f._take(), int(t)))


def combine(f1: Curve, f2: Curve) -> Curve:
    """Pointwise minimum of two single-crossing curves on a shared domain."""
    pool = _same_pool(f1, f2)
    if f1.domain != f2.domain:
        raise ValueError(f"domains differ: {f1.domain} vs {f2.domain}")
    pool.reserve()
    root1, root2 = f1.root, f2.root
    out = K.combine(pool.nd, pool.meta, pool.buf, root1, root2)
    f1._take()
    f2._take()
    return Curve(pool, out)
