"""Edit scripts: reconstruction from a frontier table, replay, and the
CIGAR text form.

A script is a sequence of runs in x-order: MatchRun(length), Substitute,
InsertIntoX, DeleteFromX.  Substitute and InsertIntoX carry the byte they
write so a script can be replayed standalone; the CIGAR rendering drops the
payloads (counts and op letters only).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from .core import FrontierTable


class IncompleteFrontier(ValueError):
    """The frontier table lacks a cell the backtrace needs."""


@dataclass(frozen=True, slots=True)
class MatchRun:
    length: int


@dataclass(frozen=True, slots=True)
class Substitute:
    byte: Optional[int] = None


@dataclass(frozen=True, slots=True)
class InsertIntoX:
    byte: Optional[int] = None


@dataclass(frozen=True, slots=True)
class DeleteFromX:
    pass


Op = Union[MatchRun, Substitute, InsertIntoX, DeleteFromX]

_CIGAR_RUN = re.compile(r"(\d+)([=XID])")


@dataclass
class EditScript:
    ops: list

    def cost(self) -> int:
        return sum(1 for op in self.ops if not isinstance(op, MatchRun))

    def to_cigar(self) -> str:
        runs: list[tuple[int, str]] = []

        def push(count: int, ch: str) -> None:
            if count == 0:
                return
            if runs and runs[-1][1] == ch:
                runs[-1] = (runs[-1][0] + count, ch)
            else:
                runs.append((count, ch))

        for op in self.ops:
            if isinstance(op, MatchRun):
                push(op.length, "=")
            elif isinstance(op, Substitute):
                push(1, "X")
            elif isinstance(op, InsertIntoX):
                push(1, "I")
            else:
                push(1, "D")
        return "".join(f"{c}{ch}" for c, ch in runs)

    @classmethod
    def from_cigar(cls, text: str) -> "EditScript":
        """Parse a CIGAR string into a payload-less script."""
        pos = 0
        ops: list[Op] = []
        for match in _CIGAR_RUN.finditer(text):
            if match.start() != pos:
                raise ValueError(f"bad CIGAR at offset {pos}: {text!r}")
            pos = match.end()
            count, ch = int(match.group(1)), match.group(2)
            if count < 1:
                raise ValueError("CIGAR runs must have positive counts")
            if ch == "=":
                ops.append(MatchRun(count))
            else:
                cons = {"X": Substitute, "I": InsertIntoX, "D": DeleteFromX}[ch]
                ops.extend(cons() for _ in range(count))
        if pos != len(text):
            raise ValueError(f"bad CIGAR at offset {pos}: {text!r}")
        return cls(ops)


def apply_script(x: bytes, script: EditScript) -> bytes:
    """Replay a script against x, producing the aligned partner string.

    Rejects scripts that overrun x or carry no payload bytes where one is
    required.
    """
    out = bytearray()
    i = 0
    for op in script.ops:
        if isinstance(op, MatchRun):
            if i + op.length > len(x):
                raise ValueError("match run overruns x")
            out += x[i:i + op.length]
            i += op.length
        elif isinstance(op, Substitute):
            if i >= len(x):
                raise ValueError("substitution overruns x")
            if op.byte is None:
                raise ValueError("substitution without a payload byte")
            out.append(op.byte)
            i += 1
        elif isinstance(op, InsertIntoX):
            if op.byte is None:
                raise ValueError("insertion without a payload byte")
            out.append(op.byte)
        else:
            if i >= len(x):
                raise ValueError("deletion overruns x")
            i += 1
    if i != len(x):
        raise ValueError(f"script consumed {i} of {len(x)} bytes of x")
    return bytes(out)


def reconstruct_alignment(frontier: FrontierTable, e: int, d_star: int,
                          x: bytes, y: bytes) -> EditScript:
    """Walk the frontier back from (d_star, e) to (0, 0), emitting one unit
    edit plus one match run per level.

    At each cell the predecessor attaining the maximum candidate start row is
    chosen; ties break same-diagonal first, then the right neighbor, then the
    left.  The strings are only consulted for edit payload bytes.
    """
    if frontier.get(d_star, e) != frontier.n:
        raise IncompleteFrontier(
            f"terminal cell ({d_star},{e}) does not reach row {frontier.n}")
    rev: list[Op] = []
    d, h = d_star, e
    row = frontier.n
    while h > 0:
        best: Optional[tuple[int, int]] = None  # (start row, case)
        if abs(d) <= h - 1:
            v = frontier.get(d, h - 1)
            if v is not None and (best is None or v + 1 > best[0]):
                best = (v + 1, 0)
        if abs(d + 1) <= h - 1:
            v = frontier.get(d + 1, h - 1)
            if v is not None and (best is None or v + 1 > best[0]):
                best = (v + 1, 1)
        if abs(d - 1) <= h - 1:
            v = frontier.get(d - 1, h - 1)
            if v is not None and (best is None or v > best[0]):
                best = (v, 2)
        if best is None:
            raise IncompleteFrontier(f"no predecessor recorded for ({d},{h})")
        start, case = best
        if start > row:
            raise IncompleteFrontier(
                f"cell ({d},{h}) starts at {start} past its value {row}")
        if row - start:
            rev.append(MatchRun(row - start))
        if case == 0:
            rev.append(Substitute(y[start + d - 1]))
            row = start - 1
        elif case == 1:
            rev.append(DeleteFromX())
            d += 1
            row = start - 1
        else:
            rev.append(InsertIntoX(y[start + d - 1]))
            d -= 1
            row = start
        h -= 1
    if d != 0:
        raise IncompleteFrontier(f"backtrace ended on diagonal {d}, not 0")
    if row:
        rev.append(MatchRun(row))
    rev.reverse()
    return EditScript(rev)
