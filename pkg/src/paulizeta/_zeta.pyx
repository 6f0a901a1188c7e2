# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled pattern count table. Mirrors :class:`PyPatternCountTable`.

Open addressing with linear probing (load <= 3/4); each slot keeps the full
64-bit key hash plus a reference into a byte arena holding the packed key,
so lookups compare hashes first and bytes second. Subsets and conflicting
assignments are enumerated depth-first over the support, extending the key
buffer and its running hash by one entry per level.
"""

from libc.stdint cimport uint8_t, uint32_t, uint64_t, int64_t
from libc.string cimport memcmp, memcpy
from libcpp.vector cimport vector

from .counters import OpCounters
from .errors import CountOverflow, InternalInconsistency, ParityViolation, WeightCapExceeded

cdef enum:
    ENTRY_BYTES = 5
    # Enumeration depth and scratch buffers are sized for this.
    HARD_WEIGHT_LIMIT = 40
    MAX_KEY = ENTRY_BYTES * HARD_WEIGHT_LIMIT
    # Query leaves are probed in batches after prefetching their slots.
    BATCH = 64


cdef extern from *:
    void __builtin_prefetch(const void*) nogil

cdef uint64_t MAX_INSERTED = (<uint64_t>1) << 62
cdef uint64_t MIX = 0x9E3779B97F4A7C15ULL

# Conflicting letters per code, ascending: X=1 -> (Z, Y), Z=2 -> (X, Y), Y=3 -> (X, Z).
cdef uint8_t ALT0[4]
cdef uint8_t ALT1[4]
ALT0[:] = [0, 2, 1, 1]
ALT1[:] = [0, 3, 3, 2]


cdef struct Slot:
    uint64_t hash      # 0 marks an empty slot
    uint64_t count
    uint64_t ref       # arena offset << 8 | key length in bytes


cdef inline uint64_t step(uint64_t h, uint32_t index, uint8_t code) noexcept nogil:
    h = (h ^ (<uint64_t>index | (<uint64_t>code << 32))) * MIX
    return h ^ (h >> 29)


cdef inline uint64_t finish(uint64_t h, int depth) noexcept nogil:
    h ^= <uint64_t>depth * 0xD6E8FEB86659FD93ULL
    h = (h ^ (h >> 30)) * 0xBF58476D1CE4E5B9ULL
    h = (h ^ (h >> 27)) * 0x94D049BB133111EBULL
    h ^= h >> 31
    return h if h else 1


cdef inline uint64_t hash_key(const uint8_t* key, Py_ssize_t length) noexcept nogil:
    cdef uint64_t h = 0
    cdef Py_ssize_t t
    cdef uint32_t index
    for t in range(length // ENTRY_BYTES):
        memcpy(&index, key + t * ENTRY_BYTES, 4)
        h = step(h, index, key[t * ENTRY_BYTES + 4])
    return finish(h, <int>(length // ENTRY_BYTES))


cdef struct Walk:
    # Inputs for one enumeration.
    uint32_t idx[HARD_WEIGHT_LIMIT]
    uint8_t code[HARD_WEIGHT_LIMIT]
    int w
    # Scratch key being built.
    uint8_t buf[ENTRY_BYTES * HARD_WEIGHT_LIMIT]
    # Outputs of a query walk.
    uint64_t zeta
    uint64_t* per_mask
    # Pending query leaves.
    int pending
    uint8_t pkey[BATCH][MAX_KEY]
    uint64_t phash[BATCH]
    int pdepth[BATCH]
    uint64_t pmask[BATCH]


cdef class ExtPatternCountTable:
    """Counts of every labeled sub-pattern of the inserted multiset.

    Same contract and key layout as the pure-Python table. Enumeration runs
    without the GIL and counters are bumped after it is reacquired, so a
    table that receives no further inserts can serve queries from several
    threads. Inserts must be serialized and must not overlap any query.
    """

    cdef vector[Slot] _slots
    cdef vector[uint8_t] _arena
    cdef uint64_t _size
    cdef uint64_t _inserted
    cdef uint64_t _updates
    cdef uint64_t _lookups
    cdef public int weight_cap

    backend = "ext"

    def __init__(self, int weight_cap=20):
        if weight_cap < 0:
            raise ValueError("weight_cap must be non-negative")
        if weight_cap > HARD_WEIGHT_LIMIT:
            raise ValueError(f"weight_cap above {HARD_WEIGHT_LIMIT} is not supported")
        self.weight_cap = weight_cap
        cdef Slot empty
        empty.hash = 0
        empty.count = 0
        empty.ref = 0
        self._slots.assign(1024, empty)

    @property
    def inserted(self):
        return self._inserted

    @property
    def stats(self):
        return OpCounters(self._updates, self._lookups)

    def __len__(self):
        return self._size

    # -- hash table primitives ------------------------------------------------

    cdef inline Py_ssize_t _probe(self, uint64_t h, const uint8_t* key, uint64_t length) noexcept nogil:
        """Slot holding ``key``, or the empty slot where it would go."""
        cdef uint64_t mask = self._slots.size() - 1
        cdef uint64_t i = h & mask
        cdef Slot* s
        while True:
            s = &self._slots[i]
            if s.hash == 0:
                return i
            if s.hash == h and (s.ref & 0xFF) == length and (
                length == 0 or memcmp(&self._arena[s.ref >> 8], key, length) == 0
            ):
                return i
            i = (i + 1) & mask

    cdef void _grow(self) noexcept nogil:
        cdef vector[Slot] old
        old.swap(self._slots)
        cdef Slot empty
        empty.hash = 0
        empty.count = 0
        empty.ref = 0
        self._slots.assign(old.size() * 2, empty)
        cdef uint64_t mask = self._slots.size() - 1, i
        cdef size_t j
        for j in range(old.size()):
            if old[j].hash:
                i = old[j].hash & mask
                while self._slots[i].hash:
                    i = (i + 1) & mask
                self._slots[i] = old[j]

    cdef inline void _increment(self, uint64_t h, const uint8_t* key, uint64_t length) noexcept nogil:
        if 4 * (self._size + 1) > 3 * self._slots.size():
            self._grow()
        cdef Py_ssize_t i = self._probe(h, key, length)
        cdef Slot* s = &self._slots[i]
        cdef size_t k
        if s.hash == 0:
            s.hash = h
            s.ref = (<uint64_t>self._arena.size() << 8) | length
            self._arena.insert(self._arena.end(), key, key + length)
            self._size += 1
        s.count += 1

    cdef inline uint64_t _get(self, uint64_t h, const uint8_t* key, uint64_t length) noexcept nogil:
        return self._slots[self._probe(h, key, length)].count

    # -- enumeration ----------------------------------------------------------

    cdef void _insert_walk(self, Walk* wk, int t, int depth, uint64_t h) noexcept nogil:
        if t == wk.w:
            self._increment(finish(h, depth), wk.buf, depth * ENTRY_BYTES)
            return
        self._insert_walk(wk, t + 1, depth, h)
        cdef uint8_t* e = wk.buf + depth * ENTRY_BYTES
        memcpy(e, &wk.idx[t], 4)
        e[4] = wk.code[t]
        self._insert_walk(wk, t + 1, depth + 1, step(h, wk.idx[t], wk.code[t]))

    cdef void _flush(self, Walk* wk) noexcept nogil:
        cdef int b, depth
        cdef uint64_t f
        for b in range(wk.pending):
            depth = wk.pdepth[b]
            f = self._get(wk.phash[b], wk.pkey[b], depth * ENTRY_BYTES)
            if f:
                # Wraps mod 2**64; the final zeta lies in [-inserted, inserted], so it is exact.
                if depth & 1:
                    wk.zeta -= f << depth
                else:
                    wk.zeta += f << depth
                if wk.per_mask != NULL:
                    wk.per_mask[wk.pmask[b]] += f
        wk.pending = 0

    cdef void _query_walk(self, Walk* wk, int t, int depth, uint64_t mask, uint64_t h) noexcept nogil:
        cdef uint8_t c, alt
        cdef uint8_t* e
        cdef int b
        cdef uint64_t hh
        if t == wk.w:
            b = wk.pending
            hh = finish(h, depth)
            __builtin_prefetch(&self._slots[hh & (self._slots.size() - 1)])
            memcpy(wk.pkey[b], wk.buf, depth * ENTRY_BYTES)
            wk.phash[b] = hh
            wk.pdepth[b] = depth
            wk.pmask[b] = mask
            wk.pending = b + 1
            if wk.pending == BATCH:
                self._flush(wk)
            return
        self._query_walk(wk, t + 1, depth, mask, h)
        e = wk.buf + depth * ENTRY_BYTES
        memcpy(e, &wk.idx[t], 4)
        for c in range(2):
            alt = ALT1[wk.code[t]] if c else ALT0[wk.code[t]]
            e[4] = alt
            self._query_walk(wk, t + 1, depth + 1, mask | ((<uint64_t>1) << t),
                             step(h, wk.idx[t], alt))

    cdef void _query(self, Walk* wk) noexcept nogil:
        self._query_walk(wk, 0, 0, 0, 0)
        self._flush(wk)

    cdef int _load(self, Walk* wk, bytes key) except -1:
        cdef Py_ssize_t w = len(key) // ENTRY_BYTES
        if w > self.weight_cap:
            raise WeightCapExceeded(w, self.weight_cap)
        cdef const uint8_t* src = <const uint8_t*><const char*>key
        cdef Py_ssize_t t
        for t in range(w):
            memcpy(&wk.idx[t], src + ENTRY_BYTES * t, 4)
            wk.code[t] = src[ENTRY_BYTES * t + 4]
        wk.w = <int>w
        wk.zeta = 0
        wk.per_mask = NULL
        wk.pending = 0
        return 0

    # -- public API -----------------------------------------------------------

    def insert(self, q):
        cdef Walk wk
        self._load(&wk, q.key)
        if self._inserted >= MAX_INSERTED:
            raise CountOverflow(f"table already holds {MAX_INSERTED} strings")
        with nogil:
            self._insert_walk(&wk, 0, 0, 0)
        self._inserted += 1
        self._updates += (<uint64_t>1) << wk.w

    def subset_conflict_counts(self, p):
        """``F(A)`` for every ``A`` within the support of ``p``, indexed by bitmask."""
        cdef Walk wk
        self._load(&wk, p.key)
        cdef vector[uint64_t] per_mask
        per_mask.assign((<size_t>1) << wk.w, 0)
        wk.per_mask = per_mask.data()
        with nogil:
            self._query(&wk)
        self._lookups += self._pow3(wk.w)
        return [per_mask[i] for i in range(per_mask.size())]

    cdef uint64_t _pow3(self, int w):
        cdef uint64_t r = 1
        cdef int i
        for i in range(w):
            r *= 3
        return r

    def anti_count(self, p):
        """Return ``(count, zeta)`` for ``p`` against the inserted strings."""
        cdef Walk wk
        self._load(&wk, p.key)
        with nogil:
            self._query(&wk)
        self._lookups += self._pow3(wk.w)
        cdef int64_t z = <int64_t>wk.zeta
        cdef int64_t diff = <int64_t>self._inserted - z
        if diff & 1:
            raise ParityViolation(
                f"inserted={self._inserted} and zeta={z} differ by an odd amount"
            )
        if diff < 0 or <uint64_t>diff > 2 * self._inserted:
            raise InternalInconsistency(f"zeta={z} outside [-inserted, inserted]")
        return diff // 2, z

    def get_key(self, key):
        """Stored count for a packed pattern key; no counter traffic."""
        cdef bytes k = bytes(key)
        cdef const uint8_t* p = <const uint8_t*><const char*>k
        return self._get(hash_key(p, len(k)), p, len(k))

    def raw_items(self):
        out = {}
        cdef size_t i, offset, length
        cdef Slot s
        for i in range(self._slots.size()):
            s = self._slots[i]
            if s.hash:
                length = s.ref & 0xFF
                offset = s.ref >> 8
                out[(<char*>&self._arena[0])[offset:offset + length] if length else b""] = s.count
        return out

    def _corrupt(self, key, int64_t delta):
        """Test hook: shift one stored count to exercise the consistency checks."""
        cdef bytes k = bytes(key)
        cdef const uint8_t* p = <const uint8_t*><const char*>k
        cdef Py_ssize_t i = self._probe(hash_key(p, len(k)), p, len(k))
        if self._slots[i].hash == 0:
            raise KeyError(key)
        self._slots[i].count = <uint64_t>(<int64_t>self._slots[i].count + delta)
