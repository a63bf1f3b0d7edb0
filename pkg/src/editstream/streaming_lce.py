"""Single-pass distance via overlapping blocks with a per-block LCE index.

The input is consumed in blocks of k rows.  Within block j, row lists
L_0..L_{k-1} hold the slides starting there; a slide that runs past the
block's last row is parked on L_k and resumed at the start of the next block
(list rollover), so a long slide is split into pieces of at most one block.
Only O(k) state survives between blocks.
"""

from __future__ import annotations

from collections import deque
from typing import Optional, Union

from .core import EXCEEDS_K, Counters, ExceedsK, FrontierTable, SlideEntry, WaveState
from .lce import PAD, build_block_index
from .readers import BufferedSource, as_buffered, read_to_end


class BlockWindow:
    """Block j of the two inputs plus its LCE index.

    The x block holds rows jk+1..(j+3)k+1 (1-based character positions); the
    y block sits k columns earlier, y rows (j-1)k+1..(j+2)k+1, so that block
    diagonal k+d aligns with input diagonal d.  For j = 0 the y block is
    front-padded with a symbol that matches nothing.
    """

    __slots__ = ("j", "k", "base", "xblock", "yblock", "index")

    def __init__(self, j: int, k: int, xs: BufferedSource, ys: BufferedSource,
                 counters: Optional[Counters] = None):
        self.j = j
        self.k = k
        self.base = j * k
        self.xblock = list(xs.slice(j * k, (j + 3) * k + 1))
        if j == 0:
            self.yblock = [PAD] * k + list(ys.slice(0, (j + 2) * k + 1))
        else:
            self.yblock = list(ys.slice((j - 1) * k, (j + 2) * k + 1))
        self.index = build_block_index(self.xblock, self.yblock, counters)

    def slide_from(self, d: int, local_row: int,
                   counters: Optional[Counters] = None) -> int:
        """Block-local slide end on input diagonal d from block row local_row."""
        if counters is not None:
            counters.slides += 1
        return local_row + self.index.lce(local_row, local_row + self.k + d)


def park_partial_slide(ws: WaveState, lists: list[deque], entry: SlideEntry,
                       resume_row: int, counters: Counters) -> None:
    """Move a slide that crossed the block boundary onto the rollover list.

    Candidate counters are untouched; after rollover the entry resumes at the
    next block's row 0.
    """
    entry.alive = False
    fresh = SlideEntry(entry.d, entry.h, resume_row, entry.start)
    lists[-1].append(fresh)
    counters.inserts += 1
    ws.loc[(entry.d, entry.h)] = fresh


def stream_distance_lce(x_source, y_source, k: int,
                        keep_frontier: bool = True,
                        counters: Optional[Counters] = None,
                        ) -> tuple[Union[int, ExceedsK], FrontierTable]:
    """One-pass distance/frontier computation with an LCE index per block.

    Accepts bytes, a Source, or an open BufferedSource for either input.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    counters = counters if counters is not None else Counters()
    xs = as_buffered(x_source)
    ys = as_buffered(y_source)

    if k == 0:
        return _distance_k0(xs, ys, counters, keep_frontier)

    lists: list[deque] = [deque() for _ in range(k + 1)]
    base = 0  # absolute row of list L_0

    def place(d: int, h: int, row: int) -> SlideEntry:
        entry = SlideEntry(d, h, row, row)
        local = row - base
        assert 0 <= local <= k, f"placement row {row} outside block at base {base}"
        lists[local].append(entry)
        return entry

    ws = WaveState(k, place, counters, keep_frontier=keep_frontier)
    ws.update(0, 0, 0)

    j = 0
    while counters.live_entries > 0:
        if ws.n is not None and base >= ws.n:
            break
        window = BlockWindow(j, k, xs, ys, counters)
        if xs.length is not None:
            ws.n = xs.length
        if ys.length is not None:
            ws.m = ys.length
        if ws.n is not None and base >= ws.n:
            break
        row_count = k if ws.n is None else min(k, ws.n - base)
        for local_i in range(row_count):
            bucket = lists[local_i]
            while bucket:
                entry = bucket.popleft()
                counters.entry_ops += 1
                if not entry.alive:
                    continue
                d, h = entry.d, entry.h
                if not ws.is_definite(d, h):
                    ws.drop_indefinite(entry)
                    continue
                if ws.overshoots(d, h):
                    ws.drop_overshoot(entry)
                    continue
                q_local = window.slide_from(d, local_i, counters)
                if q_local >= k:
                    park_partial_slide(ws, lists, entry, base + k, counters)
                else:
                    ws.finalize(entry, base + q_local)
                    ws.spawn(d, h, base + q_local)
        if ws.n is not None and base + k >= ws.n:
            break
        assert all(not any(e.alive for e in lists[t]) for t in range(k)), \
            "non-parked entries survived a full block"
        lists[0], lists[k] = lists[k], deque()
        base += k
        j += 1
        xs.advance(base)
        ys.advance(max(0, base - k))

    if ws.n is None:
        ws.n = read_to_end(xs)
    if ws.m is None:
        ws.m = read_to_end(ys)
    _final_drain(ws, lists, counters)
    read_to_end(xs)
    read_to_end(ys)
    return ws.result()


def _final_drain(ws: WaveState, lists: list[deque], counters: Counters) -> None:
    """Process row n: every surviving definite slide has reached the end of
    x with no mismatch and is finalized at the clamp."""
    n = ws.n
    for bucket in lists:
        while bucket:
            entry = bucket.popleft()
            counters.entry_ops += 1
            if not entry.alive:
                continue
            d, h = entry.d, entry.h
            if not ws.is_definite(d, h):
                ws.drop_indefinite(entry)
                continue
            if ws.overshoots(d, h):
                ws.drop_overshoot(entry)
                continue
            assert entry.row == n, f"straggler at row {entry.row}, n={n}"
            counters.slides += 1
            ws.finalize(entry, n)
            ws.spawn(d, h, n)


def _distance_k0(xs: BufferedSource, ys: BufferedSource, counters: Counters,
                 keep_frontier: bool) -> tuple[Union[int, ExceedsK], FrontierTable]:
    """Budget zero: a single slide down the main diagonal."""
    i = 0
    while True:
        a = xs.get(i)
        b = ys.get(i)
        counters.comparisons += 1
        if a is None or b is None or a != b:
            break
        i += 1
        xs.advance(i)
        ys.advance(i)
    n = read_to_end(xs)
    m = read_to_end(ys)
    table = FrontierTable(n, m, 0)
    table.set(0, 0, i)
    distance: Union[int, ExceedsK] = 0 if (i == n == m) else EXCEEDS_K
    return distance, table
