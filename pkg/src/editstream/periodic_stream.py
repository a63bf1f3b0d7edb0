"""Single-pass distance with no LCE index: slides advance one character per
row, and diagonals that keep matching for more than 4k rows become *mature*.

Two or more simultaneously mature diagonals force the recent window of x to
be periodic; the period is the gcd of their distances to the rightmost
mature diagonal.  While the period holds, only the rightmost diagonal is
compared against y and only one character of x is checked against the
period, so the per-row work stays constant no matter how many diagonals are
sliding in parallel.
"""

from __future__ import annotations

from collections import deque
from typing import Optional, Union

from .core import Counters, ExceedsK, FrontierTable, SlideEntry, WaveState
from .readers import BufferedSource, as_buffered, read_to_end


def gcd0(a: int, b: int, counters: Optional[Counters] = None) -> int:
    """Euclid's gcd with the convention gcd(0, a) = a."""
    steps = 0
    while b:
        a, b = b, a % b
        steps += 1
    if counters is not None:
        counters.gcd_steps += steps
    return a


class MatureSet:
    """Diagonals whose current slide has matched for more than 4k rows.

    Keeps the rightmost member and the gcd of distances from it to the rest.
    With once_per_row set, a full period recomputation is deferred until the
    period is next read, capping that cost at one fold per input row.
    """

    def __init__(self, counters: Counters, once_per_row: bool = False):
        self.entries: dict[int, SlideEntry] = {}
        self.right: Optional[int] = None
        self.period = 0
        self.counters = counters
        self.once_per_row = once_per_row
        self._dirty = False

    def __len__(self) -> int:
        return len(self.entries)

    def new_right_mature(self, d: int) -> None:
        """Install d as the rightmost diagonal and recompute the period."""
        self.right = d
        self.period = 0
        if self.once_per_row:
            self._dirty = True
            return
        self._fold(d)

    def _fold(self, d: int) -> None:
        period = 0
        for other in self.entries:
            if other != d:
                period = gcd0(period, d - other, self.counters)
        self.period = period
        self._dirty = False

    def current_period(self) -> int:
        if self._dirty:
            self._fold(self.right)
        return self.period

    def move_to_matures(self, entry: SlideEntry) -> None:
        """Add a long-sliding entry; maintains rightmost and period."""
        d = entry.d
        assert d not in self.entries, f"diagonal {d} already mature"
        self.entries[d] = entry
        self.counters.maturity_events += 1
        if self.counters.maturity_by_diagonal is not None:
            bag = self.counters.maturity_by_diagonal
            bag[d] = bag.get(d, 0) + 1
        if len(self.entries) == 1:
            self.right = d
            self.period = 0
            self._dirty = False
        elif d > self.right:
            self.new_right_mature(d)
        elif self._dirty:
            pass  # the pending full fold will cover this member
        else:
            self.period = gcd0(self.period, self.right - d, self.counters)

    def pop(self, d: int) -> SlideEntry:
        return self.entries.pop(d)

    def largest(self) -> int:
        return max(self.entries)


class _PeriodicRun:
    def __init__(self, xs: BufferedSource, ys: BufferedSource, k: int,
                 keep_frontier: bool, counters: Counters, debug: bool,
                 gcd_once_per_row: bool):
        self.xs = xs
        self.ys = ys
        self.k = k
        self.debug = debug
        self.counters = counters
        self.cur: deque = deque()
        self.nxt: deque = deque()
        self.matures = MatureSet(counters, once_per_row=gcd_once_per_row)
        self.row = 0
        self.ws = WaveState(k, self._place, counters, keep_frontier=keep_frontier)

    def _place(self, d: int, h: int, row: int) -> SlideEntry:
        entry = SlideEntry(d, h, row, row)
        if row == self.row:
            self.cur.append(entry)
        else:
            assert row == self.row + 1, f"placement at row {row} while on {self.row}"
            self.nxt.append(entry)
        return entry

    # -- mature handling ----------------------------------------------------

    def _migrate(self, d: int) -> None:
        entry = self.matures.pop(d)
        entry.row = self.row
        self.cur.append(entry)

    def handle_matures(self, xi: int) -> None:
        """Row preamble: decide which mature diagonals just stopped sliding.

        xi is the next character of x.  At most two character comparisons
        happen here regardless of how many diagonals are mature.
        """
        m = self.matures
        if not m.entries:
            return
        i = self.row
        counters = self.counters
        right = m.right
        if len(m.entries) == 1:
            b = self.ys.get(i + right)
            counters.comparisons += 1
            if b is None or xi != b:
                self._learn_m_if_eof(b)
                self._migrate(right)
                m.right = None
                m.period = 0
            return
        period = m.current_period()
        counters.comparisons += 1
        if xi == self.xs.get(i - period):
            b = self.ys.get(i + right)
            counters.comparisons += 1
            if b is None or xi != b:
                # the rightmost mature diagonal mismatches, the rest keep going
                self._learn_m_if_eof(b)
                self._migrate(right)
                m.new_right_mature(m.largest())
            return
        # period broken: every non-rightmost mature diagonal mismatches
        for d in sorted(m.entries):
            if d != right:
                self._migrate(d)
        b = self.ys.get(i + right)
        counters.comparisons += 1
        if b is None or xi != b:
            self._learn_m_if_eof(b)
            self._migrate(right)
            m.right = None
        m.period = 0
        m._dirty = False

    def _learn_m_if_eof(self, got: Optional[int]) -> None:
        if got is None and self.ws.m is None:
            self.ws.m = self.ys.length

    # -- per-row list processing ---------------------------------------------

    def drain_row(self, xi: Optional[int], at_end: bool) -> None:
        ws = self.ws
        counters = self.counters
        i = self.row
        cur = self.cur
        while cur:
            entry = cur.popleft()
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
            if self.debug and i - entry.start <= 4 * self.k:
                self._assert_matched_run(entry)
            mismatch = at_end
            if not mismatch:
                b = self.ys.get(i + d)
                if b is None:
                    self._learn_m_if_eof(b)
                    mismatch = True
                else:
                    counters.comparisons += 1
                    mismatch = xi != b
            if mismatch:
                ws.finalize(entry, i)
                ws.spawn(d, h, i)
            elif i - entry.start > 4 * self.k:
                self.matures.move_to_matures(entry)
            else:
                entry.row = i + 1
                self.nxt.append(entry)

    # -- debug invariants -----------------------------------------------------

    def _assert_matched_run(self, entry: SlideEntry) -> None:
        i, d, s = self.row, entry.d, entry.start
        assert self.xs.slice(s, i) == self.ys.slice(s + d, i + d), \
            f"definite entry ({d},{entry.h}) has not matched since row {s}"

    def _assert_periodic_window(self) -> None:
        if len(self.matures) < 2:
            return
        p = self.matures.current_period()
        assert 1 <= p <= 2 * self.k, f"mature period {p} out of range"
        i = self.row
        lo = max(0, i - 4 * self.k)
        window = self.xs.slice(lo, i)
        assert window[p:] == window[:len(window) - p], \
            f"x window at row {i} is not {p}-periodic"

    # -- fast path ------------------------------------------------------------

    def zip_matures(self) -> None:
        """Advance through rows where only mature diagonals are sliding.

        Equivalent to the per-row loop: with both row lists empty the only
        per-row effects are the (at most two) mature character checks, so
        whole chunks can be compared at once.  Stops at the first mismatch /
        period break / end of input, leaving that row to the regular handler.
        """
        m = self.matures
        counters = self.counters
        right = m.right
        multi = len(m.entries) >= 2
        period = m.current_period() if multi else 0
        chunk = max(32, 2 * self.k)
        per_row = 2 if multi else 1
        while True:
            i = self.row
            a = self.xs.slice(i, i + chunk)
            if not a:
                return
            b = self.ys.slice(i + right, i + right + len(a))
            span = min(len(a), len(b))
            c = b""
            if multi:
                c = self.xs.slice(i - period, i - period + span)
                span = min(span, len(c))
            matched = 0
            if span:
                if a[:span] == b[:span] and (not multi or a[:span] == c[:span]):
                    matched = span
                else:
                    while (matched < span and a[matched] == b[matched]
                           and (not multi or a[matched] == c[matched])):
                        matched += 1
            counters.comparisons += per_row * matched
            self.row += matched
            self.xs.advance(self.row - 4 * self.k - 2)
            self.ys.advance(self.row - self.k - 2)
            if matched < span or span == 0:
                return

    # -- main loop --------------------------------------------------------------

    def run(self) -> tuple[Union[int, ExceedsK], FrontierTable]:
        ws = self.ws
        counters = self.counters
        ws.update(0, 0, 0)
        while True:
            if not self.debug and not self.cur and self.matures.entries:
                self.zip_matures()
            i = self.row
            xi = self.xs.get(i)
            if xi is None and ws.n is None:
                ws.n = self.xs.length
            at_end = ws.n is not None and i >= ws.n
            if at_end:
                # x is exhausted: every surviving slide ends here
                for d in sorted(self.matures.entries):
                    self._migrate(d)
                self.matures.right = None
                self.matures.period = 0
            elif self.matures.entries:
                self.handle_matures(xi)
            self.drain_row(xi, at_end)
            if self.debug:
                self._assert_periodic_window()
            if at_end or counters.live_entries == 0:
                break
            self.cur, self.nxt = self.nxt, self.cur
            self.row += 1
            self.xs.advance(self.row - 4 * self.k - 2)
            self.ys.advance(self.row - self.k - 2)
        if ws.n is None:
            ws.n = read_to_end(self.xs)
        if ws.m is None:
            ws.m = read_to_end(self.ys)
        read_to_end(self.xs)
        read_to_end(self.ys)
        return ws.result()


def stream_distance_periodic(x_source, y_source, k: int,
                             keep_frontier: bool = True,
                             counters: Optional[Counters] = None,
                             debug: bool = False,
                             gcd_once_per_row: bool = False,
                             ) -> tuple[Union[int, ExceedsK], FrontierTable]:
    """One-pass distance/frontier without any index structure.

    With debug set, the periodicity and matched-run invariants are checked
    every row (quadratic work, test sizes only).  gcd_once_per_row enables
    the worst-case guard that caps period recomputation at one fold per row.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    counters = counters if counters is not None else Counters()
    if counters.maturity_by_diagonal is None:
        counters.maturity_by_diagonal = {}
    xs = as_buffered(x_source)
    ys = as_buffered(y_source)
    run = _PeriodicRun(xs, ys, k, keep_frontier, counters, debug, gcd_once_per_row)
    return run.run()
