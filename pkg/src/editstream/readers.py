"""One-way byte sources with instrumentation.

The streaming algorithms never touch their input directly; they go through a
BufferedSource, which pulls bytes strictly left-to-right from the underlying
stream (each input byte is requested at most once per pass) and retains a
window for the bounded lookback the algorithms need.  Asking for a byte that
has already been pruned is a contract violation and raises.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Callable, Optional, Union


@dataclass
class ReaderStats:
    """Per-stream accounting across all passes."""

    bytes_read: int = 0
    peak_lookback: int = 0
    passes: int = 0


class LookbackViolation(RuntimeError):
    """A byte below the retained window was requested."""


class BufferedSource:
    """Sequential pull with bounded random access behind the read head.

    ``get``/``slice`` positions are absolute 0-based offsets into the stream.
    ``advance(keep_from)`` releases everything below keep_from.  ``length``
    is None until end-of-input has been observed.
    """

    def __init__(self, raw: Union[bytes, bytearray, io.RawIOBase, io.BufferedIOBase],
                 stats: Optional[ReaderStats] = None, chunk: int = 4096):
        if isinstance(raw, (bytes, bytearray)):
            raw = io.BytesIO(bytes(raw))
        self._raw = raw
        self._chunk = chunk
        self._buf = bytearray()
        self._base = 0              # absolute position of _buf[0]
        self._pulled = 0            # absolute position after the last pulled byte
        self._requested = 0         # high-water of positions the algorithm asked for
        self._eof = False
        self.length: Optional[int] = None
        self.stats = stats if stats is not None else ReaderStats()
        self.stats.passes += 1

    def _pull_to(self, pos: int) -> None:
        """Ensure bytes up to absolute position pos (exclusive) are buffered."""
        while not self._eof and self._pulled < pos:
            want = max(pos - self._pulled, self._chunk)
            data = self._raw.read(want)
            if not data:
                self._eof = True
                self.length = self._pulled
                break
            self._buf += data
            self._pulled += len(data)
            self.stats.bytes_read += len(data)

    def _note_access(self, pos: int, end: int) -> None:
        # lookback: how far behind the furthest byte requested so far this
        # access reaches back (a fresh forward read is not a re-read)
        lookback = self._requested - pos
        if lookback > self.stats.peak_lookback:
            self.stats.peak_lookback = lookback
        if end > self._requested:
            self._requested = end

    def get(self, pos: int) -> Optional[int]:
        """Byte at pos, or None at/after end of input."""
        if pos < self._base:
            raise LookbackViolation(f"position {pos} below window base {self._base}")
        self._pull_to(pos + 1)
        self._note_access(pos, pos + 1)
        if pos >= self._pulled:
            return None
        return self._buf[pos - self._base]

    def slice(self, lo: int, hi: int) -> bytes:
        """Bytes in [lo, hi), clamped at end of input."""
        if lo < self._base:
            raise LookbackViolation(f"position {lo} below window base {self._base}")
        if hi <= lo:
            return b""
        self._pull_to(hi)
        self._note_access(lo, min(hi, self._pulled) if self._eof else hi)
        hi = min(hi, self._pulled)
        if hi <= lo:
            return b""
        return bytes(self._buf[lo - self._base:hi - self._base])

    def advance(self, keep_from: int) -> None:
        """Allow discarding everything before keep_from."""
        drop = keep_from - self._base
        if drop > 4 * self._chunk:
            del self._buf[:drop]
            self._base = keep_from


def read_to_end(src: BufferedSource) -> int:
    """Consume the rest of a stream (still one pass) and return its length."""
    pos = src._pulled
    while src.length is None:
        got = src.slice(pos, pos + 65536)
        src.advance(pos)
        pos += max(len(got), 1)
    return src.length


@dataclass
class Source:
    """Re-openable byte source; each open() starts a fresh single pass and
    accumulates into the same ReaderStats."""

    opener: Callable[[], Union[bytes, io.BufferedIOBase]]
    stats: ReaderStats = field(default_factory=ReaderStats)
    reopenable: bool = True

    def open(self, chunk: int = 4096) -> BufferedSource:
        return BufferedSource(self.opener(), stats=self.stats, chunk=chunk)


def source_from_bytes(data: bytes) -> Source:
    return Source(opener=lambda: bytes(data))


def source_from_path(path: str) -> Source:
    return Source(opener=lambda: open(path, "rb"))


def source_from_stdin(stream) -> Source:
    """Standard input can be consumed once; reopening raises."""
    used = []

    def opener():
        if used:
            raise RuntimeError("standard input supports a single pass")
        used.append(True)
        return stream

    return Source(opener=opener, reopenable=False)


def as_buffered(obj, chunk: int = 4096) -> BufferedSource:
    """Accept bytes, a Source, or an already-open BufferedSource."""
    if isinstance(obj, BufferedSource):
        return obj
    if isinstance(obj, Source):
        return obj.open(chunk=chunk)
    if isinstance(obj, (bytes, bytearray)):
        return BufferedSource(bytes(obj), chunk=chunk)
    return BufferedSource(obj, chunk=chunk)
