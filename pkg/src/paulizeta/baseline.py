"""Quadratic all-pairs baseline used as the correctness oracle and as the benchmark comparator.

Every unordered pair is tested by merging the two sorted supports and
taking the parity of the conflict set. Nothing here touches the pattern
table. :func:`symplectic_pairwise_count` walks the same pairs through the
binary symplectic form instead, giving a second route to the same number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooLarge
from .pauli import anticommutes, symplectic_anticommutes, to_symplectic
from .table import BACKEND

try:
    from . import _pairwise
except ImportError:  # pragma: no cover - depends on the build
    _pairwise = None

__all__ = [
    "PairwiseStats",
    "list_edges",
    "pairwise_count",
    "pairwise_scan",
    "pairwise_witness",
    "symplectic_pairwise_count",
]

DEFAULT_MAX_EDGES_M = 2000


@dataclass(frozen=True)
class PairwiseStats:
    count: int
    pair_tests: int


def _use_ext(backend):
    backend = backend or BACKEND
    if backend == "ext":
        if _pairwise is None:
            raise ValueError("compiled backend is not available")
        return True
    if backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return False


def pairwise_scan(strings, backend=None) -> PairwiseStats:
    """Count anticommuting pairs and the number of pair tests performed."""
    strings = list(strings)
    if _use_ext(backend):
        count, tests = _pairwise.scan_count([s.key for s in strings])
        return PairwiseStats(count, tests)
    count = tests = 0
    for i, p in enumerate(strings):
        for q in strings[i + 1:]:
            count += anticommutes(p, q)
            tests += 1
    return PairwiseStats(count, tests)


def pairwise_count(strings, backend=None) -> int:
    return pairwise_scan(strings, backend).count


def pairwise_witness(strings, backend=None):
    """First anticommuting ``(i, j)`` in lexicographic order, or ``None``."""
    strings = list(strings)
    if _use_ext(backend):
        return _pairwise.scan_witness([s.key for s in strings])
    for i, p in enumerate(strings):
        for j in range(i + 1, len(strings)):
            if anticommutes(p, strings[j]):
                return (i, j)
    return None


def list_edges(strings, max_m=DEFAULT_MAX_EDGES_M, backend=None):
    """Every anticommuting pair in lexicographic order. Debugging aid for small inputs.

    Raises:
        TooLarge: more than ``max_m`` strings were given.
    """
    strings = list(strings)
    if len(strings) > max_m:
        raise TooLarge(f"{len(strings)} strings exceeds edge-listing limit {max_m}")
    if _use_ext(backend):
        return _pairwise.scan_edges([s.key for s in strings])
    return [
        (i, j)
        for i in range(len(strings))
        for j in range(i + 1, len(strings))
        if anticommutes(strings[i], strings[j])
    ]


def symplectic_pairwise_count(strings) -> int:
    enc = [to_symplectic(s) for s in strings]
    return sum(
        symplectic_anticommutes(enc[i], enc[j])
        for i in range(len(enc))
        for j in range(i + 1, len(enc))
    )
