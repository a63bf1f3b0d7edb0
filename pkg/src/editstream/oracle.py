"""Trusted brute-force implementations: full dynamic programming, a banded
variant, and a frontier extractor.

Everything here favors being obviously correct over being clever; these are
the reference points the wave algorithms are property-tested against.  The
full DP uses a vectorized row recurrence so the oracle stays usable at
n = 10^5 during acceptance sweeps.
"""

from __future__ import annotations

from typing import Optional, Union

import numpy as np

from .core import EXCEEDS_K, ExceedsK, FrontierTable
from .alignment import DeleteFromX, EditScript, InsertIntoX, MatchRun, Substitute

_INF = 1 << 60


def _as_array(s: bytes) -> np.ndarray:
    return np.frombuffer(bytes(s), dtype=np.uint8).astype(np.int64)


def wf_distance(x: bytes, y: bytes) -> int:
    """Exact edit distance via the classic row-by-row DP recurrence.

    Keeps two rows only.  The in-row dependency (insertions chain left to
    right) is resolved with a running minimum of t[j] - j, so each row is a
    handful of vector operations.
    """
    n, m = len(x), len(y)
    if n == 0:
        return m
    if m == 0:
        return n
    if n < m:
        # iterate over the shorter string's rows
        x, y, n, m = y, x, m, n
    ya = _as_array(y)
    idx = np.arange(m + 1, dtype=np.int64)
    prev = idx.copy()
    cur = np.empty(m + 1, dtype=np.int64)
    for i in range(1, n + 1):
        xi = x[i - 1]
        t = cur
        t[0] = i
        np.minimum(prev[1:] + 1, prev[:-1] + (ya != xi), out=t[1:])
        # cur[j] = min over l <= j of t[l] + (j - l)
        np.subtract(t, idx, out=t)
        np.minimum.accumulate(t, out=t)
        np.add(t, idx, out=t)
        prev, cur = t, prev
    return int(prev[m])


def cost_matrix(x: bytes, y: bytes) -> np.ndarray:
    """Full (n+1) x (m+1) edit-distance table; boundary row/column hold the
    prefix lengths.  For small inputs only."""
    n, m = len(x), len(y)
    d = np.zeros((n + 1, m + 1), dtype=np.int64)
    d[0, :] = np.arange(m + 1)
    d[:, 0] = np.arange(n + 1)
    if m:
        ya = _as_array(y)
        idx = np.arange(m + 1, dtype=np.int64)
        for i in range(1, n + 1):
            xi = x[i - 1]
            t = np.empty(m + 1, dtype=np.int64)
            t[0] = i
            np.minimum(d[i - 1, 1:] + 1, d[i - 1, :-1] + (ya != xi), out=t[1:])
            np.subtract(t, idx, out=t)
            np.minimum.accumulate(t, out=t)
            np.add(t, idx, out=t)
            d[i] = t
    return d


def wf_alignment(x: bytes, y: bytes) -> EditScript:
    """Optimal edit script from a full DP table backtrace.

    Tie-breaking prefers the diagonal step, then deletion, then insertion;
    any choice is optimal, a fixed one keeps outputs reproducible.
    """
    d = cost_matrix(x, y)
    i, j = len(x), len(y)
    ops = []
    match_run = 0
    while i > 0 or j > 0:
        if i > 0 and j > 0 and x[i - 1] == y[j - 1] and d[i, j] == d[i - 1, j - 1]:
            match_run += 1
            i -= 1
            j -= 1
            continue
        if match_run:
            ops.append(MatchRun(match_run))
            match_run = 0
        if i > 0 and j > 0 and d[i, j] == d[i - 1, j - 1] + 1:
            ops.append(Substitute(y[j - 1]))
            i -= 1
            j -= 1
        elif i > 0 and d[i, j] == d[i - 1, j] + 1:
            ops.append(DeleteFromX())
            i -= 1
        else:
            ops.append(InsertIntoX(y[j - 1]))
            j -= 1
    if match_run:
        ops.append(MatchRun(match_run))
    ops.reverse()
    return EditScript(ops)


def banded_distance(x: bytes, y: bytes, k: int) -> Union[int, ExceedsK]:
    """Edit distance restricted to diagonals -k..k; EXCEEDS_K past the band.

    O(nk) time, two band rows of memory.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    n, m = len(x), len(y)
    if abs(m - n) > k:
        return EXCEEDS_K
    width = 2 * k + 1
    # band[o] holds D[i][i + o - k]
    prev = [_INF] * width
    for o in range(width):
        j = o - k
        if 0 <= j <= m:
            prev[o] = j
    for i in range(1, n + 1):
        cur = [_INF] * width
        xi = x[i - 1]
        for o in range(width):
            j = i + o - k
            if j < 0 or j > m:
                continue
            if j == 0:
                cur[o] = i
                continue
            # prev[o] = D[i-1][j-1], prev[o+1] = D[i-1][j], cur[o-1] = D[i][j-1]
            best = prev[o] + (0 if xi == y[j - 1] else 1)
            if o + 1 < width and prev[o + 1] + 1 < best:
                best = prev[o + 1] + 1
            if o > 0 and cur[o - 1] + 1 < best:
                best = cur[o - 1] + 1
            cur[o] = best
        prev = cur
    result = prev[m - n + k]
    return result if result <= k else EXCEEDS_K


def brute_frontier(x: bytes, y: bytes, k: int) -> FrontierTable:
    """Frontier oracle: F^h(d) = max{i : D[i][i+d] = h} read straight off the
    full DP table, for all |d| <= h <= k.

    For cells inside the band and h <= k the full table and the banded table
    agree, so the full one is used for clarity.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    n, m = len(x), len(y)
    d_table = cost_matrix(x, y)
    table = FrontierTable(n, m, k)
    for d in range(-k, k + 1):
        lo = max(0, -d)
        hi = min(n, m - d)
        if lo > hi:
            continue
        for i in range(lo, hi + 1):
            h = int(d_table[i, i + d])
            if abs(d) <= h <= k:
                prev = table.get(d, h)
                if prev is None or i > prev:
                    table.set(d, h, i)
    return table
