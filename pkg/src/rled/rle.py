"""Run-length encoded strings: model, text grammar and (capped) expansion.

The text form is ``symbol count`` repeated, e.g. ``a3b4a3``.  A count may be
omitted, meaning 1.  Digits are reserved for counts, so any other character
can be a symbol.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable

MAX_RUN = 2**61
DEFAULT_DECOMPRESS_CAP = 10**7


class RleParseError(ValueError):
    """Raised for malformed RLE text.  ``offset`` is the byte offset of the bad token."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte offset {offset}")
        self.offset = offset


class DecompressionRefused(RuntimeError):
    """Raised when expanding a string would exceed the configured size cap."""


@dataclass(frozen=True)
class Run:
    symbol: str
    length: int

    def __post_init__(self):
        if not 1 <= self.length <= MAX_RUN:
            raise ValueError(f"run length {self.length} outside [1, 2**61]")


@dataclass(frozen=True)
class RleString:
    runs: tuple[Run, ...] = ()
    M: int = field(init=False)

    def __post_init__(self):
        runs = tuple(self.runs)
        for a, b in zip(runs, runs[1:]):
            if a.symbol == b.symbol:
                raise ValueError(f"adjacent runs share symbol {a.symbol!r}; not canonical")
        object.__setattr__(self, "runs", runs)
        object.__setattr__(self, "M", sum(r.length for r in runs))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, int]]) -> "RleString":
        """Build a canonical string, merging neighbouring pairs with equal symbols."""
        merged: list[list] = []
        for sym, n in pairs:
            if merged and merged[-1][0] == sym:
                merged[-1][1] += n
            else:
                merged.append([sym, n])
        return cls(tuple(Run(s, n) for s, n in merged))

    @property
    def m(self) -> int:
        return len(self.runs)

    def __len__(self) -> int:
        return len(self.runs)

    def __iter__(self):
        return iter(self.runs)

    def __str__(self) -> str:
        return render(self)

    def pairs(self) -> list[tuple[str, int]]:
        return [(r.symbol, r.length) for r in self.runs]


def render(s: RleString) -> str:
    """Print every run as symbol followed by its count (count 1 included)."""
    return "".join(f"{r.symbol}{r.length}" for r in s.runs)


_DIGITS = frozenset("0123456789")


def parse_rle(text: str) -> RleString:
    """Parse ``(symbol count?)*`` text into a canonical :class:`RleString`.

    >>> parse_rle("a2a3b").pairs()
    [('a', 5), ('b', 1)]
    """
    pairs: list[tuple[str, int]] = []
    i, n = 0, len(text)
    while i < n:
        sym = text[i]
        if sym in _DIGITS:
            raise RleParseError(f"expected a symbol, found digit {sym!r}", _byte_offset(text, i))
        j = i + 1
        while j < n and text[j] in _DIGITS:
            j += 1
        digits = text[i + 1:j]
        if not digits:
            count = 1
        elif digits[0] == "0":
            raise RleParseError(f"count {digits!r} must start with 1-9", _byte_offset(text, i + 1))
        else:
            if len(digits) > 19:
                raise RleParseError("count overflows", _byte_offset(text, i + 1))
            count = int(digits)
            if count > MAX_RUN:
                raise RleParseError(f"count {count} exceeds 2**61", _byte_offset(text, i + 1))
        pairs.append((sym, count))
        i = j
    return RleString.from_pairs(pairs)


def _byte_offset(text: str, char_index: int) -> int:
    return len(text[:char_index].encode("utf-8"))


def encode_raw(text: str) -> RleString:
    """Run-length encode literal text."""
    pairs: list[tuple[str, int]] = []
    for ch in text:
        if pairs and pairs[-1][0] == ch:
            pairs[-1] = (ch, pairs[-1][1] + 1)
        else:
            pairs.append((ch, 1))
    return RleString(tuple(Run(s, n) for s, n in pairs))


def decompress_cap() -> int:
    """Current expansion cap; ``RLED_NAIVE_CAP`` overrides the default of 10**7."""
    raw = os.environ.get("RLED_NAIVE_CAP")
    return int(raw) if raw else DEFAULT_DECOMPRESS_CAP


def decompress(s: RleString, cap: int | None = None) -> str:
    cap = decompress_cap() if cap is None else cap
    if s.M > cap:
        raise DecompressionRefused(f"uncompressed length {s.M} exceeds cap {cap}")
    return "".join(r.symbol * r.length for r in s.runs)


SYMBOLS = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"


def random_rle(rng, m: int, max_run: int, alphabet: int) -> RleString:
    """Canonical string of exactly ``m`` runs, lengths uniform in ``[1, max_run]``.

    ``rng`` is a :class:`numpy.random.Generator`.  Neighbouring runs get
    distinct symbols, so ``m >= 2`` needs ``alphabet >= 2``.
    """
    if m < 0 or max_run < 1 or not 1 <= alphabet <= len(SYMBOLS):
        raise ValueError(f"need m >= 0, max_run >= 1 and 1 <= alphabet <= {len(SYMBOLS)}")
    if m >= 2 and alphabet < 2:
        raise ValueError("two or more runs need an alphabet of at least 2 symbols")
    if max_run > MAX_RUN:
        raise ValueError("max_run exceeds 2**61")
    runs = []
    prev = -1
    for _ in range(m):
        if prev < 0:
            s = int(rng.integers(alphabet))
        else:
            # uniform over the other alphabet - 1 symbols
            s = int(rng.integers(alphabet - 1))
            s += s >= prev
        runs.append(Run(SYMBOLS[s], int(rng.integers(1, max_run, endpoint=True))))
        prev = s
    return RleString(tuple(runs))
