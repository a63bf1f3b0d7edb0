"""Seeded synthetic workloads: pairs with a known number of planted edits."""

from __future__ import annotations

import random
from typing import Optional

PRESETS = ("random", "periodic", "boundary")


def gen_pair(n: int, k: int, alphabet_size: int, seed: int,
             preset: str = "random") -> tuple[bytes, bytes, list]:
    """Deterministic pair with exactly k non-overlapping unit edits planted.

    x is drawn from the first alphabet_size byte values; y applies the edits.
    The true distance is at most k by construction (and usually exactly k).
    Presets:
      random    uniform x, edit positions spread uniformly
      periodic  x = w repeated (|w| <= 6), edits clustered together
      boundary  first two edits pinned to positions 0 and n-1
    """
    if k > n:
        raise ValueError(f"cannot plant {k} non-overlapping edits in {n} symbols")
    if preset not in PRESETS:
        raise ValueError(f"unknown preset {preset!r}")
    if alphabet_size < 1 or alphabet_size > 256:
        raise ValueError("alphabet size must be in 1..256")
    rng = random.Random(f"{seed}|{n}|{k}|{alphabet_size}|{preset}")

    if preset == "periodic":
        w = bytes(rng.randrange(alphabet_size) for _ in range(rng.randint(1, 6)))
        x = (w * (n // len(w) + 1))[:n]
    else:
        x = bytes(rng.randrange(alphabet_size) for _ in range(n))

    positions = _edit_positions(rng, n, k, preset)
    edits = []
    y = bytearray()
    prev = 0
    for pos in positions:
        y += x[prev:pos]
        kind = rng.choice(("sub", "ins", "del")) if alphabet_size > 1 else \
            rng.choice(("ins", "del"))
        if kind == "sub":
            old = x[pos]
            new = rng.randrange(alphabet_size - 1)
            if new >= old:
                new += 1
            y.append(new)
            edits.append(("sub", pos, new))
            prev = pos + 1
        elif kind == "ins":
            new = rng.randrange(alphabet_size)
            y.append(new)
            edits.append(("ins", pos, new))
            prev = pos
        else:
            edits.append(("del", pos, None))
            prev = pos + 1
    y += x[prev:]
    return x, bytes(y), edits


def _edit_positions(rng: random.Random, n: int, k: int, preset: str) -> list[int]:
    """k distinct positions, spaced two apart when room allows so the planted
    edits cannot merge into cheaper ones."""
    if k == 0:
        return []
    gap = 2 if n >= 2 * k + 1 else 1
    pinned: list[int] = []
    if preset == "boundary":
        pinned = [0] if k == 1 or n < 1 + gap else [0, n - 1]
    remaining = k - len(pinned)
    if preset == "periodic":
        span = min(n, max(gap * k + 1, n // 8))
        lo = rng.randint(0, n - span)
        pool = range(lo, lo + span)
    else:
        pool = range(n)
    chosen = set(pinned)
    misses = 0
    while remaining > 0:
        pos = rng.choice(pool)
        if pos not in chosen and all(abs(pos - q) >= gap for q in chosen):
            chosen.add(pos)
            remaining -= 1
            misses = 0
            continue
        misses += 1
        if misses > 64:
            # dense tail: sweep for any admissible slot
            free = [p for p in pool
                    if p not in chosen and all(abs(p - q) >= gap for q in chosen)]
            if not free:
                if gap == 1:
                    raise ValueError("could not place distinct edit positions")
                gap = 1
                misses = 0
                continue
            take = rng.sample(free, min(remaining, len(free)))
            chosen.update(take)
            remaining -= len(take)
            misses = 0
    return sorted(chosen)
