"""Shared vocabulary for the wave algorithms: diagonals, frontier tables,
slide entries, and the candidate-counting Update discipline.

Every distance algorithm in this package drives the same bookkeeping: a
per-(d, h) candidate counter C, a locator D for the single live list
occurrence of (d, h), and a frontier table of finished values.  The three
algorithms differ only in how rows are visited and how slides are evaluated,
so that machinery lives here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional


class ExceedsK:
    """Singleton result for "the true distance is larger than the budget k"."""

    _instance: Optional["ExceedsK"] = None

    def __new__(cls) -> "ExceedsK":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "EXCEEDS_K"

    def __bool__(self) -> bool:
        return False


EXCEEDS_K = ExceedsK()


def cap_c(d: int, h: int) -> int:
    """Maximum number of candidate start rows for the slide of (d, h).

    3 for interior diagonals, 2 on the next-to-extreme diagonals, 1 on the
    extremes and at level h <= 1.
    """
    if abs(d) > h:
        raise ValueError(f"diagonal {d} outside level {h}")
    if abs(d) <= h - 2:
        return 3
    if abs(d) == h - 1 and abs(d) >= 1:
        return 2
    return 1


@dataclass(slots=True)
class SlideEntry:
    """A pending slide for diagonal d at cost level h.

    ``row`` is the list the entry currently sits on; ``start`` is the row it
    was (re)inserted at, which for a definite entry is where its slide began.
    Entries are removed lazily: relocation flips ``alive`` instead of
    unlinking.
    """

    d: int
    h: int
    row: int
    start: int
    alive: bool = True


@dataclass
class Counters:
    """Instrumentation shared by all algorithms; cheap enough to always run."""

    comparisons: int = 0
    updates: int = 0
    inserts: int = 0
    slides: int = 0
    entry_ops: int = 0
    block_builds: int = 0
    maturity_events: int = 0
    gcd_steps: int = 0
    live_entries: int = 0
    peak_live_entries: int = 0
    update_log: Optional[list] = None
    maturity_by_diagonal: Optional[dict] = None

    def live_delta(self, delta: int) -> None:
        self.live_entries += delta
        if self.live_entries > self.peak_live_entries:
            self.peak_live_entries = self.live_entries

    def total_ops(self) -> int:
        return (self.comparisons + self.updates + self.inserts
                + self.slides + self.entry_ops + self.gcd_steps)


class FrontierTable:
    """The values F^h(d) for |d| <= h <= k: the furthest row on diagonal d
    reachable at edit cost exactly h.  Cells may be unset."""

    __slots__ = ("cells", "n", "m", "k")

    def __init__(self, n: int, m: int, k: int):
        self.cells: dict[tuple[int, int], int] = {}
        self.n = n
        self.m = m
        self.k = k

    @property
    def terminal_diagonal(self) -> int:
        return self.m - self.n

    def get(self, d: int, h: int) -> Optional[int]:
        return self.cells.get((d, h))

    def set(self, d: int, h: int, value: int) -> None:
        if not (abs(d) <= h <= self.k):
            raise ValueError(f"cell ({d},{h}) outside band k={self.k}")
        if not (0 <= value <= self.n and 0 <= value + d <= self.m):
            raise ValueError(f"value {value} off the matrix for diagonal {d}")
        self.cells[(d, h)] = value

    def items(self):
        return self.cells.items()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FrontierTable) and self.cells == other.cells

    def __repr__(self) -> str:
        return f"FrontierTable(n={self.n}, m={self.m}, k={self.k}, {len(self.cells)} cells)"


class WaveState:
    """Candidate bookkeeping driving a wave computation.

    The physical row lists belong to the algorithm; it supplies ``place``,
    which appends a fresh SlideEntry to the list for an absolute row and
    returns it.  WaveState owns C, the max-candidate tracking, the locator,
    definiteness checks, and frontier recording.

    Rows are absolute (matrix rows of x).  ``n``/``m`` may be unknown while
    streaming; they must be filled in as end-of-input is discovered, which
    always happens before any boundary decision needs them.
    """

    def __init__(self, k: int, place: Callable[[int, int, int], SlideEntry],
                 counters: Counters, n: Optional[int] = None,
                 m: Optional[int] = None, keep_frontier: bool = True):
        self.k = k
        self.place = place
        self.counters = counters
        self.n = n
        self.m = m
        self.keep_frontier = keep_frontier
        self.C: dict[tuple[int, int], int] = {}
        self.max_cand: dict[tuple[int, int], int] = {}
        self.loc: dict[tuple[int, int], SlideEntry] = {}
        self.frontier_cells: dict[tuple[int, int], int] = {}
        # diagonals whose slide reached row n, by cheapest level; the answer
        # is full_rows[m - n] once both lengths are known
        self.full_rows: dict[int, int] = {}

    # -- Update procedure ---------------------------------------------------

    def update(self, d: int, i: int, h: int) -> None:
        """Record candidate start row i for the slide of (d, h).

        Always counts the candidate.  The entry is (re)placed on a list only
        when i is a new maximum and lies on an existing row; candidates past
        the last row are remembered in max_cand so the eventual fire can be
        rejected.
        """
        c = self.counters
        c.updates += 1
        if c.update_log is not None:
            c.update_log.append((d, i, h))
        key = (d, h)
        self.C[key] = self.C.get(key, 0) + 1
        prev = self.max_cand.get(key, -1)
        if i > prev:
            self.max_cand[key] = i
        if self.n is not None and i > self.n:
            return
        old = self.loc.get(key)
        if old is not None and old.alive:
            if old.row >= i:
                return
            old.alive = False
            c.live_delta(-1)
        entry = self.place(d, h, i)
        c.inserts += 1
        c.live_delta(+1)
        self.loc[key] = entry

    # -- fire discipline ----------------------------------------------------

    def is_definite(self, d: int, h: int) -> bool:
        return self.C.get((d, h), 0) == cap_c(d, h)

    def lim(self, d: int) -> float:
        """Last row that exists on diagonal d (infinite while unknown)."""
        n = self.n if self.n is not None else math.inf
        m = self.m if self.m is not None else math.inf
        return min(n, m - d)

    def drop_indefinite(self, entry: SlideEntry) -> None:
        """Discard a popped entry whose counter has not reached its cap.

        The locator must be cleared so a later equal-row candidate re-inserts
        the pair; more candidates are (possibly) still coming.
        """
        entry.alive = False
        self.counters.live_delta(-1)
        if self.loc.get((entry.d, entry.h)) is entry:
            del self.loc[(entry.d, entry.h)]

    def overshoots(self, d: int, h: int) -> bool:
        """True when the max candidate row lies past the end of diagonal d.

        Such a cell has no defined frontier value (or one that no surviving
        edit path needs); it is dropped without recording or spawning.
        """
        return self.max_cand[(d, h)] > self.lim(d)

    def drop_overshoot(self, entry: SlideEntry) -> None:
        entry.alive = False
        self.counters.live_delta(-1)
        key = (entry.d, entry.h)
        if self.loc.get(key) is entry:
            del self.loc[key]
        self.C.pop(key, None)
        self.max_cand.pop(key, None)

    def finalize(self, entry: SlideEntry, q: int) -> None:
        """Record F^h(d) = q for a definite entry whose slide just ended."""
        d, h = entry.d, entry.h
        entry.alive = False
        self.counters.live_delta(-1)
        key = (d, h)
        if self.loc.get(key) is entry:
            del self.loc[key]
        self.C.pop(key, None)
        self.max_cand.pop(key, None)
        if self.keep_frontier:
            self.frontier_cells[key] = q
        if self.n is not None and q == self.n:
            if d not in self.full_rows or h < self.full_rows[d]:
                self.full_rows[d] = h

    def spawn(self, d: int, h: int, q: int) -> None:
        """Feed the three successors of a finished slide F^h(d) = q."""
        if h >= self.k:
            return
        self.update(d, q + 1, h + 1)
        if d < self.k:
            self.update(d + 1, q, h + 1)
        if d > -self.k:
            self.update(d - 1, q + 1, h + 1)

    @property
    def answer(self) -> Optional[int]:
        if self.n is None or self.m is None:
            return None
        return self.full_rows.get(self.m - self.n)

    def result(self) -> tuple[object, FrontierTable]:
        n = self.n if self.n is not None else 0
        m = self.m if self.m is not None else 0
        table = FrontierTable(n, m, self.k)
        answer = self.answer
        if self.keep_frontier:
            table.cells = self.frontier_cells
        elif answer is not None:
            table.cells = {(m - n, answer): n}
        distance = answer if answer is not None else EXCEEDS_K
        return distance, table
