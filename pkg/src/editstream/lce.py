"""Slide evaluation: naive character-by-character, and a constant-time
longest-common-extension index over a block.

The index is a suffix array (prefix-doubling), an LCP array (Kasai), and a
sparse-table range-minimum structure over the LCP array.  Blocks are O(k)
long, so the log factor in the build is within budget.  Sentinels sit
outside the byte alphabet, so an extension can never cross from the x block
into the y block.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .core import Counters

SEP1 = 256
SEP2 = 257
PAD = 258  # block padding: matches nothing that can occur in input


def naive_slide(x: bytes, y: bytes, d: int, i: int,
                counters: Optional[Counters] = None) -> int:
    """Furthest row q >= i reachable from row i on diagonal d at no cost.

    Compares one character at a time; the comparison at row q checks
    x[q] against y[q + d] (0-indexed), i.e. the slide never looks at the
    characters aligned strictly before row i.
    """
    if i < 0 or i + d < 0:
        raise ValueError(f"slide start ({d}, {i}) before the matrix")
    limit = min(len(x), len(y) - d)
    if i > limit:
        raise ValueError(f"slide start {i} past the end of diagonal {d}")
    q = i
    cmps = 0
    while q < limit:
        cmps += 1
        if x[q] != y[q + d]:
            break
        q += 1
    if counters is not None:
        counters.comparisons += cmps
    return q


def _suffix_array(text: Sequence[int]) -> list[int]:
    """Prefix-doubling suffix array; O(L log L) with sort-based ranking."""
    length = len(text)
    sa = sorted(range(length), key=lambda p: text[p])
    rank = [0] * length
    for idx in range(1, length):
        rank[sa[idx]] = rank[sa[idx - 1]] + (text[sa[idx]] != text[sa[idx - 1]])
    step = 1
    while step < length and rank[sa[-1]] < length - 1:
        def key(p: int) -> tuple[int, int]:
            second = rank[p + step] if p + step < length else -1
            return (rank[p], second)

        sa.sort(key=key)
        new_rank = [0] * length
        for idx in range(1, length):
            new_rank[sa[idx]] = new_rank[sa[idx - 1]] + (key(sa[idx]) != key(sa[idx - 1]))
        rank = new_rank
        step *= 2
    return sa


def _lcp_array(text: Sequence[int], sa: list[int], rank: list[int]) -> list[int]:
    """Kasai: lcp[r] = common prefix length of sa[r] and sa[r+1]."""
    length = len(text)
    lcp = [0] * max(0, length - 1)
    h = 0
    for p in range(length):
        r = rank[p]
        if r == length - 1:
            h = 0
            continue
        q = sa[r + 1]
        while p + h < length and q + h < length and text[p + h] == text[q + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp


class _SparseMin:
    """Range minimum over a fixed array; O(L log L) build, O(1) query."""

    __slots__ = ("rows",)

    def __init__(self, data: list[int]):
        rows = [list(data)]
        length = len(data)
        span = 1
        while 2 * span <= length:
            prev = rows[-1]
            rows.append([min(prev[i], prev[i + span])
                         for i in range(length - 2 * span + 1)])
            span *= 2
        self.rows = rows

    def min(self, lo: int, hi: int) -> int:
        """Minimum of data[lo:hi]; hi > lo."""
        level = (hi - lo).bit_length() - 1
        row = self.rows[level]
        return min(row[lo], row[hi - (1 << level)])


class BlockIndex:
    """LCE queries over the concatenation xblock . SEP1 . yblock . SEP2."""

    __slots__ = ("x_len", "y_len", "y_offset", "_rank", "_rmq", "text")

    def __init__(self, xblock: Sequence[int], yblock: Sequence[int]):
        for sym in (SEP1, SEP2):
            if sym in xblock or sym in yblock:
                raise ValueError("blocks must not contain the index sentinels")
        text = list(xblock) + [SEP1] + list(yblock) + [SEP2]
        self.text = text
        self.x_len = len(xblock)
        self.y_len = len(yblock)
        self.y_offset = len(xblock) + 1
        sa = _suffix_array(text)
        rank = [0] * len(text)
        for r, p in enumerate(sa):
            rank[p] = r
        self._rank = rank
        self._rmq = _SparseMin(_lcp_array(text, sa, rank))

    def lce(self, xpos: int, ypos: int) -> int:
        """Length of the longest common extension of xblock[xpos:] and
        yblock[ypos:]; zero when either start is out of range."""
        if xpos >= self.x_len or ypos >= self.y_len or xpos < 0 or ypos < 0:
            return 0
        ra = self._rank[xpos]
        rb = self._rank[self.y_offset + ypos]
        if ra > rb:
            ra, rb = rb, ra
        return self._rmq.min(ra, rb)


def build_block_index(xblock: Sequence[int], yblock: Sequence[int],
                      counters: Optional[Counters] = None) -> BlockIndex:
    index = BlockIndex(xblock, yblock)
    if counters is not None:
        counters.block_builds += 1
    return index


def indexed_slide(index: BlockIndex, d_shifted: int, i: int,
                  counters: Optional[Counters] = None) -> int:
    """Block-local slide via one LCE query: the furthest block row reachable
    from row i on shifted diagonal d_shifted (= k + d) at no cost."""
    if counters is not None:
        counters.slides += 1
    return i + index.lce(i, i + d_shifted)
