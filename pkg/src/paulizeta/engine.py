"""Streaming drivers: count anticommuting pairs, certify commutation, find a witness.

Each string is queried against the table holding all earlier strings and
then inserted, so every unordered pair is seen exactly once, when its later
member is queried. Runs are single-threaded; independent batches may use
separate tables in parallel.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .counters import OpCounters
from .errors import InternalInconsistency
from .pauli import SparsePauliString, anticommutes
from .table import DEFAULT_WEIGHT_CAP, make_table

__all__ = [
    "BatchReport",
    "anti_degree_profile",
    "certify",
    "count_all_anticommuting_pairs",
]


@dataclass(frozen=True)
class BatchReport:
    """Outcome of one streaming run.

    ``complete`` is False when :func:`certify` stopped at its first
    violation; ``total_anti_pairs`` then covers only the strings processed
    up to and including the witness's second index.
    """

    m: int
    total_anti_pairs: int
    witness: Optional[Tuple[int, int]]
    counters: OpCounters
    elapsed: float
    complete: bool = True
    backend: str = ""

    @property
    def all_commute(self) -> bool:
        return self.complete and self.total_anti_pairs == 0


def _stream(strings, weight_cap, backend, stop_at_first=False):
    table = make_table(weight_cap, backend)
    profile = []
    witness = None
    start = time.perf_counter()
    for i, p in enumerate(strings):
        c, _ = table.anti_count(p)
        profile.append(c)
        if c and stop_at_first:
            witness = _scan_predecessors(strings, i)
            break
        table.insert(p)
    elapsed = time.perf_counter() - start
    return profile, witness, table, elapsed


def _scan_predecessors(strings, i):
    p = strings[i]
    for j in range(i):
        if anticommutes(strings[j], p):
            return (j, i)
    raise InternalInconsistency(
        f"table reported anticommuting predecessors of string {i} but none exist"
    )


def count_all_anticommuting_pairs(
    strings: Sequence[SparsePauliString],
    weight_cap: int = DEFAULT_WEIGHT_CAP,
    backend: Optional[str] = None,
) -> BatchReport:
    """Exact number of unordered anticommuting pairs in ``strings``."""
    strings = list(strings)
    profile, _, table, elapsed = _stream(strings, weight_cap, backend)
    return BatchReport(
        m=len(strings),
        total_anti_pairs=sum(profile),
        witness=None,
        counters=table.stats,
        elapsed=elapsed,
        backend=table.backend,
    )


def certify(
    strings: Sequence[SparsePauliString],
    weight_cap: int = DEFAULT_WEIGHT_CAP,
    backend: Optional[str] = None,
) -> BatchReport:
    """Decide whether all strings commute pairwise.

    Stops at the first string that anticommutes with an earlier one and
    reports ``(j, i)`` with the smallest such ``j``. With no violation the
    witness is ``None`` and ``total_anti_pairs`` is 0.
    """
    strings = list(strings)
    profile, witness, table, elapsed = _stream(strings, weight_cap, backend, stop_at_first=True)
    return BatchReport(
        m=len(strings),
        total_anti_pairs=sum(profile),
        witness=witness,
        counters=table.stats,
        elapsed=elapsed,
        complete=witness is None,
        backend=table.backend,
    )


def anti_degree_profile(strings, weight_cap=DEFAULT_WEIGHT_CAP, backend=None) -> list:
    """Per-string anticommuting counts against all earlier strings."""
    return _stream(list(strings), weight_cap, backend)[0]
