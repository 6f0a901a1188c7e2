import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paulizeta.errors import InternalInconsistency, ParityViolation, WeightCapExceeded
from paulizeta.pauli import PauliLetter, SparsePauliString
from paulizeta.table import (
    LabeledPattern,
    anti_count_against_previous,
    conflicting_assignments,
    insert,
    make_table,
    pattern_count,
    restrict,
    table_contents,
    zeta_identity_check,
)

from conftest import S, random_string, sparse_strings
from oracles import brute_anticommute, brute_pattern_counts

X, Y, Z = PauliLetter.X, PauliLetter.Y, PauliLetter.Z


def filled(backend, strings, cap=20):
    t = make_table(cap, backend)
    for s in strings:
        t.insert(s)
    return t


def as_brute(table):
    return {
        tuple((j, c.name) for j, c in pat.pairs): v for pat, v in table_contents(table).items()
    }


class TestInsert:
    def test_empty_string(self, backend):
        t = filled(backend, [S("")])
        assert table_contents(t) == {LabeledPattern(()): 1}
        assert t.inserted == 1
        assert t.stats.dict_updates == 1

    def test_weight_two_touches_four_keys(self, backend):
        t = filled(backend, [S("XY")])
        assert set(table_contents(t)) == {
            LabeledPattern(()),
            LabeledPattern(((0, X),)),
            LabeledPattern(((1, Y),)),
            LabeledPattern(((0, X), (1, Y))),
        }
        assert t.stats.dict_updates == 4

    def test_two_strings_against_enumeration(self, backend):
        strings = [S("XY"), S("YZ")]
        t = filled(backend, strings)
        assert as_brute(t) == brute_pattern_counts(strings)
        assert pattern_count(t, LabeledPattern(((1, Y),))) == 1
        assert pattern_count(t, LabeledPattern(((0, Y),))) == 1
        assert pattern_count(t, LabeledPattern(())) == 2
        assert pattern_count(t, LabeledPattern(((0, Z),))) == 0

    def test_insert_helper_chains(self, backend):
        t = make_table(backend=backend)
        assert insert(t, S("X")) is t

    def test_random_multiset_against_enumeration(self, backend, rng):
        strings = [random_string(rng, 10, 5) for _ in range(60)]
        strings += strings[:10]
        assert as_brute(filled(backend, strings)) == brute_pattern_counts(strings)

    def test_weight_cap(self, backend):
        t = make_table(2, backend)
        with pytest.raises(WeightCapExceeded) as info:
            t.insert(S("XYZ"))
        assert info.value.weight == 3
        with pytest.raises(WeightCapExceeded):
            t.anti_count(S("XYZ"))
        assert t.inserted == 0 and t.stats.dict_updates == 0

    def test_cap_bounds(self, backend):
        with pytest.raises(ValueError):
            make_table(-1, backend)
        with pytest.raises(ValueError):
            make_table(41, backend)


class TestConflictingAssignments:
    def test_yi_on_first_qubit(self):
        got = list(conflicting_assignments(S("YI"), [0]))
        assert got == [LabeledPattern(((0, X),)), LabeledPattern(((0, Z),))]

    def test_empty_subset(self):
        assert list(conflicting_assignments(S("XYZ"), [])) == [LabeledPattern(())]

    def test_xy_full_support(self):
        got = [tuple(c.name for _, c in pat.pairs) for pat in conflicting_assignments(S("XY"), [0, 1])]
        expected = [
            (a, b)
            for a in "XYZ" if a != "X"
            for b in "XYZ" if b != "Y"
        ]
        assert got == expected == [("Y", "X"), ("Y", "Z"), ("Z", "X"), ("Z", "Z")]

    def test_outside_support(self):
        with pytest.raises(ValueError):
            list(conflicting_assignments(S("XI"), [1]))

    @given(sparse_strings(max_weight=6), st.data())
    def test_size_and_conflict(self, p, data):
        qubits = data.draw(st.sets(st.sampled_from(sorted(p.support)))) if p.weight else set()
        pats = list(conflicting_assignments(p, qubits))
        assert len(pats) == 2 ** len(qubits) == len(set(pats))
        for pat in pats:
            assert pat.qubits == tuple(sorted(qubits))
            assert all(c != p.letter(j) for j, c in pat.pairs)


def test_restrict():
    assert restrict(S("XYZ"), {0, 2}) == LabeledPattern(((0, X), (2, Z)))


class TestQuery:
    def test_worked_example(self, backend):
        t = filled(backend, [S("XY"), S("YZ")])
        assert t.subset_conflict_counts(S("YI")) == [2, 1]
        assert anti_count_against_previous(t, S("YI")) == (1, 0)

    def test_empty_table(self, backend, rng):
        t = make_table(backend=backend)
        for _ in range(20):
            assert t.anti_count(random_string(rng, 12, 6)) == (0, 0)

    def test_string_commutes_with_itself(self, backend):
        t = filled(backend, [S("XY")])
        assert t.anti_count(S("XY"))[0] == 0

    def test_weight_zero_query(self, backend):
        t = filled(backend, [S("XY"), S("Z"), S("")])
        assert t.anti_count(S("")) == (0, 3)

    def test_f_is_count_of_conflicting_supersets(self, backend, rng):
        strings = [random_string(rng, 8, 5) for _ in range(80)]
        t = filled(backend, strings)
        for _ in range(30):
            p = random_string(rng, 8, 5)
            f = t.subset_conflict_counts(p)
            qubits = p.indices
            for mask in range(1 << p.weight):
                a = {qubits[b] for b in range(p.weight) if mask >> b & 1}
                expect = sum(
                    1 for q in strings
                    if all(q.letter(j) != PauliLetter.I and q.letter(j) != p.letter(j) for j in a)
                )
                assert f[mask] == expect


def oracle_count(strings, p):
    return sum(brute_anticommute(p, q) for q in strings)


@pytest.mark.parametrize("size", [0, 1, 2, 7, 50, 300, 2000])
def test_oracle_equivalence_sizes(backend, size):
    rng = random.Random(size)
    n = rng.choice([4, 9, 30, 128])
    strings = [random_string(rng, n, rng.randint(0, 8)) for _ in range(size)]
    t = filled(backend, strings)
    for _ in range(25):
        p = random_string(rng, n, 8)
        count, zeta = t.anti_count(p)
        assert count == oracle_count(strings, p)
        assert abs(zeta) <= t.inserted and (zeta - t.inserted) % 2 == 0


@settings(max_examples=60, deadline=None)
@given(st.lists(sparse_strings(max_index=12, max_weight=8), max_size=40), sparse_strings(max_index=12))
def test_oracle_equivalence_property(strings, p):
    for backend in ("python",) + (("ext",) if make_table.__globals__["ExtPatternCountTable"] else ()):
        t = filled(backend, strings)
        assert t.anti_count(p)[0] == oracle_count(strings, p)


def test_counter_accounting(backend, rng):
    t = make_table(backend=backend)
    updates = lookups = 0
    for _ in range(200):
        p = random_string(rng, 20, 8)
        before = t.stats
        t.anti_count(p)
        assert (t.stats - before).dict_lookups == 3 ** p.weight
        lookups += 3 ** p.weight
        t.insert(p)
        updates += 2 ** p.weight
        assert t.stats.dict_updates == updates and t.stats.dict_lookups == lookups
        assert pattern_count(t, LabeledPattern(())) == t.inserted


def test_stored_counts_bounded(backend, rng):
    strings = [random_string(rng, 6, 4) for _ in range(100)]
    t = filled(backend, strings)
    contents = table_contents(t)
    assert all(0 < v <= t.inserted for v in contents.values())
    by_subset = {}
    for pat, v in contents.items():
        by_subset[pat.qubits] = by_subset.get(pat.qubits, 0) + v
    assert all(v <= t.inserted for v in by_subset.values())


def test_insertion_order_irrelevant(backend, rng):
    strings = [random_string(rng, 10, 5) for _ in range(100)]
    shuffled = strings[:]
    rng.shuffle(shuffled)
    assert filled(backend, strings).raw_items() == filled(backend, shuffled).raw_items()


def test_backends_build_identical_tables(rng):
    from paulizeta.table import available_backends

    if len(available_backends()) < 2:
        pytest.skip("compiled backend not built")
    strings = [random_string(rng, 16, 6) for _ in range(300)]
    ext, py = filled("ext", strings), filled("python", strings)
    assert ext.raw_items() == py.raw_items()
    assert len(ext) == len(py)
    for _ in range(50):
        p = random_string(rng, 16, 6)
        assert ext.subset_conflict_counts(p) == py.subset_conflict_counts(p)
        assert ext.anti_count(p) == py.anti_count(p)
    assert ext.stats == py.stats


def test_ext_table_survives_growth():
    from paulizeta.table import available_backends

    if "ext" not in available_backends():
        pytest.skip("compiled backend not built")
    rng = random.Random(5)
    strings = [random_string(rng, 3000, 6) for _ in range(3000)]
    t = filled("ext", strings)
    assert len(t) > 1024 * 10
    assert t.raw_items() == filled("python", strings).raw_items()


class TestCorruption:
    def test_odd_shift_trips_parity(self, backend):
        t = filled(backend, [S("XY"), S("YZ")])
        # Only the empty pattern enters zeta with an odd weight.
        t._corrupt(LabeledPattern(()).key, 1)
        with pytest.raises(ParityViolation):
            t.anti_count(S("YI"))

    def test_out_of_range_trips_consistency(self, backend):
        t = filled(backend, [S("XY"), S("YZ")])
        # Shifting F({0}) by 2 moves zeta by 4: even, but outside [-N, N].
        t._corrupt(LabeledPattern(((0, X),)).key, 2)
        with pytest.raises(InternalInconsistency):
            t.anti_count(S("YI"))


@pytest.mark.parametrize("r,expected", [(0, 1), (1, -1), (2, 1)])
def test_zeta_identity_examples(r, expected):
    assert zeta_identity_check(r) == expected


def test_zeta_identity_range():
    with pytest.raises(ValueError):
        zeta_identity_check(21)


def test_labeled_pattern_roundtrip():
    pat = LabeledPattern(((3, "Z"), (7, "X")))
    assert LabeledPattern.from_key(pat.key) == pat
    assert str(pat) == "{(3,Z), (7,X)}"
    assert len(pat) == 2
