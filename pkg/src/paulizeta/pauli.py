"""Phase-free Pauli letters, sparse Pauli strings and commutation tests.

Letters carry the two-bit symplectic code ``x | z << 1`` (X=1, Z=2, Y=3,
I=0), so comparing two letters on a shared qubit is an integer compare.

Two strings anticommute exactly when the number of qubits on which both act
non-trivially with different letters is odd. :func:`anticommutes` applies
that rule by merging sorted supports; :func:`symplectic_anticommutes`
evaluates the GF(2) form ``x.z' + z.x'`` on the bit-vector encoding. The two
paths share only the letter encoding and are tested against each other.
"""

from __future__ import annotations

import enum
import struct
from dataclasses import dataclass, field
from typing import Iterable, Tuple

from .errors import DuplicateIndex, IndexOutOfRange, NegativeIndex, NotCanonical

__all__ = [
    "MAX_INDEX",
    "PauliLetter",
    "SparsePauliString",
    "SymplecticPair",
    "anticommutes",
    "conflict_set",
    "normalize",
    "symplectic_anticommutes",
    "to_symplectic",
]

# Indices are packed as unsigned 32-bit values in pattern keys.
MAX_INDEX = 2**32 - 1
ENTRY_BYTES = 5

_ENTRY = struct.Struct("<IB")


class PauliLetter(enum.IntEnum):
    I = 0
    X = 1
    Z = 2
    Y = 3

    @property
    def x(self) -> int:
        return self & 1

    @property
    def z(self) -> int:
        return self >> 1

    @classmethod
    def parse(cls, char: str) -> "PauliLetter":
        return cls[char]

    def __str__(self) -> str:
        return self.name


Entry = Tuple[int, PauliLetter]


def _letter(c) -> PauliLetter:
    return PauliLetter[c] if isinstance(c, str) else PauliLetter(c)


def pack_entries(entries: Iterable[Entry]) -> bytes:
    """Pack ``(index, letter)`` pairs into the 5-byte-per-entry key layout."""
    return b"".join(_ENTRY.pack(j, c) for j, c in entries)


def unpack_entries(key: bytes) -> tuple:
    if len(key) % ENTRY_BYTES:
        raise ValueError(f"key length {len(key)} is not a multiple of {ENTRY_BYTES}")
    return tuple((j, PauliLetter(c)) for j, c in _ENTRY.iter_unpack(key))


@dataclass(frozen=True, slots=True)
class SparsePauliString:
    """A phase-free Pauli string stored as its non-identity positions.

    ``entries`` must already be canonical: strictly ascending qubit indices
    and no identity letters. Use :func:`normalize` for arbitrary input.
    The packed ``key`` is derived once and is what the table kernels read.
    """

    entries: tuple
    key: bytes = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        entries = tuple((int(j), _letter(c)) for j, c in self.entries)
        prev = -1
        for j, c in entries:
            if j < 0:
                raise NegativeIndex(j)
            if j <= prev:
                raise NotCanonical(f"indices not strictly ascending at qubit {j}")
            if c == PauliLetter.I:
                raise NotCanonical(f"identity letter stored at qubit {j}")
            if j > MAX_INDEX:
                raise IndexOutOfRange(f"qubit index {j} exceeds {MAX_INDEX}")
            prev = j
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "key", pack_entries(entries))

    @classmethod
    def from_key(cls, key: bytes) -> "SparsePauliString":
        return cls(unpack_entries(key))

    @classmethod
    def from_label(cls, label: str) -> "SparsePauliString":
        """Build from a dense label such as ``"XIZ"`` (character p is qubit p)."""
        return cls(tuple((p, PauliLetter[ch]) for p, ch in enumerate(label) if ch != "I"))

    @property
    def weight(self) -> int:
        return len(self.entries)

    @property
    def support(self) -> frozenset:
        return frozenset(j for j, _ in self.entries)

    @property
    def indices(self) -> tuple:
        return tuple(j for j, _ in self.entries)

    def letter(self, index: int) -> PauliLetter:
        for j, c in self.entries:
            if j == index:
                return c
        return PauliLetter.I

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return " ".join(f"{c.name}{j}" for j, c in self.entries)


def normalize(raw_entries: Iterable) -> SparsePauliString:
    """Canonicalize arbitrary ``(index, letter)`` pairs.

    Identity entries are dropped, repeated entries with the same letter are
    merged, and the result is sorted by qubit index. Letters may be given as
    :class:`PauliLetter`, their integer codes, or ``"I"/"X"/"Y"/"Z"``.

    Raises:
        NegativeIndex: an index is below zero.
        DuplicateIndex: one qubit carries two different non-identity letters.
    """
    seen = {}
    for j, c in raw_entries:
        j = int(j)
        if j < 0:
            raise NegativeIndex(j)
        letter = _letter(c)
        if letter == PauliLetter.I:
            continue
        prev = seen.get(j)
        if prev is not None and prev != letter:
            raise DuplicateIndex(j, prev.name, letter.name)
        seen[j] = letter
    return SparsePauliString(tuple(sorted(seen.items())))


def conflict_set(p: SparsePauliString, q: SparsePauliString) -> set:
    """Qubits where both strings act non-trivially with different letters."""
    out = set()
    a, b = p.entries, q.entries
    i = j = 0
    while i < len(a) and j < len(b):
        ja, ca = a[i]
        jb, cb = b[j]
        if ja < jb:
            i += 1
        elif jb < ja:
            j += 1
        else:
            if ca != cb:
                out.add(ja)
            i += 1
            j += 1
    return out


def anticommutes(p: SparsePauliString, q: SparsePauliString) -> bool:
    return len(conflict_set(p, q)) % 2 == 1


@dataclass(frozen=True, slots=True)
class SymplecticPair:
    """Binary symplectic encoding held as sparse index sets.

    ``x`` holds the qubits whose letter is X or Y, ``z`` those whose letter
    is Z or Y.
    """

    x: frozenset
    z: frozenset


def to_symplectic(p: SparsePauliString) -> SymplecticPair:
    return SymplecticPair(
        x=frozenset(j for j, c in p.entries if c.x),
        z=frozenset(j for j, c in p.entries if c.z),
    )


def symplectic_anticommutes(a: SymplecticPair, b: SymplecticPair) -> bool:
    return (len(a.x & b.z) + len(a.z & b.x)) % 2 == 1
