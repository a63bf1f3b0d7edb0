"""Bounded-distance edit distance over byte streams.

Exact distance (and optimal alignments) of two long, similar strings whose
distance is at most k, in a single left-to-right pass with O(k) working
memory, plus brute-force oracles and an instrumented benchmark harness.
"""

from .core import EXCEEDS_K, Counters, ExceedsK, FrontierTable, SlideEntry, WaveState, cap_c
from .alignment import (
    DeleteFromX,
    EditScript,
    IncompleteFrontier,
    InsertIntoX,
    MatchRun,
    Substitute,
    apply_script,
    reconstruct_alignment,
)
from .generate import gen_pair
from .lce import BlockIndex, build_block_index, indexed_slide, naive_slide
from .oracle import banded_distance, brute_frontier, cost_matrix, wf_alignment, wf_distance
from .periodic_stream import MatureSet, gcd0, stream_distance_periodic
from .readers import BufferedSource, ReaderStats, Source, source_from_bytes, source_from_path
from .streaming_lce import BlockWindow, stream_distance_lce
from .wavefront import row_wave_distance
from .cli import RunReport, auto_k, dispatch_combined, run_cli

__version__ = "0.1.0"

__all__ = [
    "EXCEEDS_K",
    "Counters",
    "ExceedsK",
    "FrontierTable",
    "SlideEntry",
    "WaveState",
    "cap_c",
    "DeleteFromX",
    "EditScript",
    "IncompleteFrontier",
    "InsertIntoX",
    "MatchRun",
    "Substitute",
    "apply_script",
    "reconstruct_alignment",
    "gen_pair",
    "BlockIndex",
    "build_block_index",
    "indexed_slide",
    "naive_slide",
    "banded_distance",
    "brute_frontier",
    "cost_matrix",
    "wf_alignment",
    "wf_distance",
    "MatureSet",
    "gcd0",
    "stream_distance_periodic",
    "BufferedSource",
    "ReaderStats",
    "Source",
    "source_from_bytes",
    "source_from_path",
    "BlockWindow",
    "stream_distance_lce",
    "row_wave_distance",
    "RunReport",
    "auto_k",
    "dispatch_combined",
    "run_cli",
]
