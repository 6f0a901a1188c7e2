"""Pure-Python pattern count table; used when the compiled kernel is absent."""

from .counters import OpCounters
from .errors import CountOverflow, InternalInconsistency, ParityViolation, WeightCapExceeded
from .pauli import ENTRY_BYTES, PauliLetter

# Precondition keeping every signed intermediate inside 64 bits.
MAX_INSERTED = 2**62
# Matches the compiled table's limit.
HARD_WEIGHT_LIMIT = 40

_CONFLICTS = {
    int(c): tuple(int(o) for o in (PauliLetter.X, PauliLetter.Z, PauliLetter.Y) if o != c)
    for c in (PauliLetter.X, PauliLetter.Z, PauliLetter.Y)
}


def _chunks(key):
    return [key[t:t + ENTRY_BYTES] for t in range(0, len(key), ENTRY_BYTES)]


def _subset_keys(key):
    """Keys (A, Q|_A) for every A, listed in binary-counter mask order."""
    keys = [b""]
    for chunk in _chunks(key):
        keys += [k + chunk for k in keys]
    return keys


def _conflict_keys_by_mask(key):
    """For each mask A (binary-counter order), the keys of all conflicting assignments on A."""
    groups = [[b""]]
    for chunk in _chunks(key):
        head = chunk[:ENTRY_BYTES - 1]
        alts = [head + bytes((c,)) for c in _CONFLICTS[chunk[-1]]]
        groups += [[k + a for k in g for a in alts] for g in groups]
    return groups


class PyPatternCountTable:
    """Counts of every labeled sub-pattern of the inserted multiset.

    Keys are packed byte strings (see :func:`paulizeta.pauli.pack_entries`);
    a missing key reads as zero.

    Not safe for concurrent use: inserts and the lookup counter mutate
    shared state, so a table must be owned by one thread while streaming.
    """

    backend = "python"

    def __init__(self, weight_cap=20):
        if weight_cap < 0:
            raise ValueError("weight_cap must be non-negative")
        if weight_cap > HARD_WEIGHT_LIMIT:
            raise ValueError(f"weight_cap above {HARD_WEIGHT_LIMIT} is not supported")
        self.weight_cap = weight_cap
        self._counts = {}
        self._inserted = 0
        self._updates = 0
        self._lookups = 0

    @property
    def inserted(self):
        return self._inserted

    @property
    def stats(self):
        return OpCounters(self._updates, self._lookups)

    def __len__(self):
        return len(self._counts)

    def _check_weight(self, p):
        w = len(p.key) // ENTRY_BYTES
        if w > self.weight_cap:
            raise WeightCapExceeded(w, self.weight_cap)
        return w

    def insert(self, q):
        w = self._check_weight(q)
        if self._inserted >= MAX_INSERTED:
            raise CountOverflow(f"table already holds {MAX_INSERTED} strings")
        counts = self._counts
        for k in _subset_keys(q.key):
            counts[k] = counts.get(k, 0) + 1
        self._inserted += 1
        self._updates += 1 << w

    def subset_conflict_counts(self, p):
        """``F(A)`` for every ``A`` within the support of ``p``, indexed by bitmask."""
        self._check_weight(p)
        get = self._counts.get
        out = []
        for group in _conflict_keys_by_mask(p.key):
            out.append(sum(get(k, 0) for k in group))
            self._lookups += len(group)
        return out

    def anti_count(self, p):
        """Return ``(count, zeta)`` for ``p`` against the inserted strings."""
        zeta = 0
        for mask, f in enumerate(self.subset_conflict_counts(p)):
            zeta += (-2) ** mask.bit_count() * f
        diff = self._inserted - zeta
        if diff & 1:
            raise ParityViolation(
                f"inserted={self._inserted} and zeta={zeta} differ by an odd amount"
            )
        if not 0 <= diff <= 2 * self._inserted:
            raise InternalInconsistency(f"zeta={zeta} outside [-inserted, inserted]")
        return diff // 2, zeta

    def get_key(self, key):
        """Stored count for a packed pattern key; no counter traffic."""
        return self._counts.get(bytes(key), 0)

    def raw_items(self):
        return dict(self._counts)

    def _corrupt(self, key, delta):
        """Test hook: shift one stored count to exercise the consistency checks."""
        key = bytes(key)
        if key not in self._counts:
            raise KeyError(key)
        self._counts[key] += delta
