"""Row-ordered wave computation over the whole input (the in-memory
reference for the streaming variants).

Slides are evaluated in order of increasing start row.  Row lists hold
pending (d, h) entries; an entry popped from list L_i fires only when its
candidate counter has reached its cap, meaning i is the true maximum start
row for that slide.
"""

from __future__ import annotations

from collections import deque
from typing import Optional, Union

from .core import EXCEEDS_K, Counters, ExceedsK, FrontierTable, SlideEntry, WaveState
from .lce import BlockIndex, naive_slide


def process_entry(ws: WaveState, entry: SlideEntry, i: int, slide) -> Optional[int]:
    """Handle one entry popped from list L_i.

    Returns the slide end row when the entry fired, None when it was dropped
    (stale, not yet definite, or its start row lies past its diagonal's end).
    """
    ws.counters.entry_ops += 1
    if not entry.alive:
        return None
    d, h = entry.d, entry.h
    if not ws.is_definite(d, h):
        ws.drop_indefinite(entry)
        return None
    if ws.overshoots(d, h):
        ws.drop_overshoot(entry)
        return None
    ws.counters.slides += 1
    q = slide(d, i)
    ws.finalize(entry, q)
    ws.spawn(d, h, q)
    return q


def row_wave_distance(x: bytes, y: bytes, k: int,
                      use_index: bool = False,
                      keep_frontier: bool = True,
                      counters: Optional[Counters] = None,
                      ) -> tuple[Union[int, ExceedsK], FrontierTable]:
    """Distance and frontier of x, y given the budget k.

    With use_index a whole-input LCE index answers slides in O(1) (this path
    is not streaming); otherwise slides compare characters directly.  Both
    produce identical frontiers.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    n, m = len(x), len(y)
    counters = counters if counters is not None else Counters()
    if abs(m - n) > k:
        return EXCEEDS_K, FrontierTable(n, m, k)

    rows: dict[int, deque] = {}

    def place(d: int, h: int, row: int) -> SlideEntry:
        entry = SlideEntry(d, h, row, row)
        bucket = rows.get(row)
        if bucket is None:
            bucket = rows[row] = deque()
        bucket.append(entry)
        return entry

    ws = WaveState(k, place, counters, n=n, m=m, keep_frontier=keep_frontier)

    if use_index:
        index = BlockIndex(x, y)

        def slide(d: int, i: int) -> int:
            return min(i + index.lce(i, i + d), n, m - d)
    else:
        def slide(d: int, i: int) -> int:
            return naive_slide(x, y, d, i, counters)

    ws.update(0, 0, 0)
    for i in range(n + 1):
        bucket = rows.get(i)
        if bucket is None:
            continue
        while bucket:
            process_entry(ws, bucket.popleft(), i, slide)
        del rows[i]
        if counters.live_entries == 0:
            break
    return ws.result()
