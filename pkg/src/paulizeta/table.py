"""The locality-zeta pattern table.

For a multiset ``G`` of inserted strings the table stores, for every labeled
pattern ``(A, a)`` occurring inside some member, how many members contain it.
A query string ``P`` is answered by summing, over each subset ``A`` of its
support, the counts of the patterns that disagree with ``P`` everywhere on
``A`` (``F(A)``) and weighting by ``(-2)**|A|``. Since
``sum_{A <= C} (-2)**|A| == (-1)**|C|``, the total collapses to
``sum_Q (-1)**|conf(P, Q)|`` and the anticommuting count is
``(|G| - Z) / 2``.

Two interchangeable backends implement the table: a compiled C++ hash map
(``ext``) and a dict-based fallback (``python``). ``PatternCountTable`` is
bound at import to ``ext`` when it is built, unless the environment variable
``PAULIZETA_BACKEND`` is set to ``python``.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field

from ._pytable import PyPatternCountTable
from .counters import OpCounters
from .pauli import PauliLetter, SparsePauliString, pack_entries, unpack_entries

try:
    from ._zeta import ExtPatternCountTable
except ImportError:  # pragma: no cover - depends on the build
    ExtPatternCountTable = None

__all__ = [
    "BACKEND",
    "DEFAULT_WEIGHT_CAP",
    "ExtPatternCountTable",
    "LabeledPattern",
    "OpCounters",
    "PatternCountTable",
    "PyPatternCountTable",
    "anti_count_against_previous",
    "available_backends",
    "conflicting_assignments",
    "insert",
    "make_table",
    "zeta_identity_check",
]

DEFAULT_WEIGHT_CAP = 20

_LETTER_ORDER = (PauliLetter.X, PauliLetter.Y, PauliLetter.Z)


def available_backends():
    return ["ext", "python"] if ExtPatternCountTable is not None else ["python"]


def _select_backend():
    wanted = os.environ.get("PAULIZETA_BACKEND", "auto").lower()
    if wanted == "python":
        return "python"
    if wanted == "ext" and ExtPatternCountTable is None:
        raise ImportError("PAULIZETA_BACKEND=ext but the compiled kernel is not built")
    return "ext" if ExtPatternCountTable is not None else "python"


BACKEND = _select_backend()
PatternCountTable = ExtPatternCountTable if BACKEND == "ext" else PyPatternCountTable


def make_table(weight_cap=DEFAULT_WEIGHT_CAP, backend=None):
    """Create an empty table on ``backend`` (``"ext"``, ``"python"`` or the import default)."""
    backend = backend or BACKEND
    if backend == "ext":
        if ExtPatternCountTable is None:
            raise ValueError("compiled backend is not available")
        return ExtPatternCountTable(weight_cap)
    if backend == "python":
        return PyPatternCountTable(weight_cap)
    raise ValueError(f"unknown backend {backend!r}")


@dataclass(frozen=True, slots=True)
class LabeledPattern:
    """A set of qubits with a non-identity letter on each; the table's key type."""

    pairs: tuple = ()
    key: bytes = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        # Same canonical rules as a sparse string; reuse its validation.
        s = SparsePauliString(self.pairs)
        object.__setattr__(self, "pairs", s.entries)
        object.__setattr__(self, "key", s.key)

    @classmethod
    def from_key(cls, key: bytes) -> "LabeledPattern":
        return cls(unpack_entries(key))

    @property
    def qubits(self) -> tuple:
        return tuple(j for j, _ in self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __str__(self):
        return "{" + ", ".join(f"({j},{c.name})" for j, c in self.pairs) + "}"


def restrict(q: SparsePauliString, qubits) -> LabeledPattern:
    """The pattern ``(A, Q|_A)`` for ``A = qubits`` inside the support of ``q``."""
    wanted = set(qubits)
    return LabeledPattern(tuple((j, c) for j, c in q.entries if j in wanted))


def conflicting_assignments(p: SparsePauliString, qubits):
    """Yield every pattern on ``qubits`` disagreeing with ``p`` at each position.

    ``qubits`` must lie in the support of ``p``. Exactly ``2**len(qubits)``
    patterns are produced, in lexicographic order of letter names with the
    lowest qubit varying slowest.
    """
    letters = dict(p.entries)
    qubits = sorted(set(qubits))
    missing = [j for j in qubits if j not in letters]
    if missing:
        raise ValueError(f"qubits {missing} are outside the support")
    choices = [[c for c in _LETTER_ORDER if c != letters[j]] for j in qubits]
    for combo in itertools.product(*choices):
        yield LabeledPattern(tuple(zip(qubits, combo)))


def insert(table, q: SparsePauliString):
    """Insert ``q`` into ``table``; returns the table for chaining."""
    table.insert(q)
    return table


def anti_count_against_previous(table, p: SparsePauliString):
    """``(count, zeta)``: how many inserted strings anticommute with ``p``, and ``Z``."""
    return table.anti_count(p)


def pattern_count(table, pattern) -> int:
    """Stored count ``D(A, a)`` for a :class:`LabeledPattern` (0 when absent)."""
    key = pattern.key if isinstance(pattern, LabeledPattern) else pack_entries(pattern)
    return table.get_key(key)


def table_contents(table) -> dict:
    """All stored counts keyed by :class:`LabeledPattern`."""
    return {LabeledPattern.from_key(k): v for k, v in table.raw_items().items()}


def zeta_identity_check(set_size: int) -> int:
    """``sum_t C(r, t) (-2)**t`` by direct summation (expected ``(-1)**r``)."""
    if not 0 <= set_size <= 20:
        raise ValueError("set_size must be in 0..20")
    return sum(math.comb(set_size, t) * (-2) ** t for t in range(set_size + 1))
