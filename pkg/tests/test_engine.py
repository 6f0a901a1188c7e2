import random

import pytest

from paulizeta.baseline import pairwise_count
from paulizeta.engine import anti_degree_profile, certify, count_all_anticommuting_pairs
from paulizeta.errors import InternalInconsistency, WeightCapExceeded
from paulizeta.pauli import anticommutes
from paulizeta.workload import InstanceSpec, generate

from conftest import S, random_string
from oracles import brute_anticommute, brute_count

WORKED = [S("XY"), S("YZ"), S("YI")]


class TestCount:
    def test_worked_example(self, backend):
        report = count_all_anticommuting_pairs(WORKED, backend=backend)
        assert report.total_anti_pairs == 1
        assert report.m == 3 and report.witness is None and report.complete

    @pytest.mark.parametrize("strings", [[], [S("XZ")]])
    def test_no_pairs(self, backend, strings):
        assert count_all_anticommuting_pairs(strings, backend=backend).total_anti_pairs == 0

    def test_hundred_random_against_baseline(self, backend):
        strings = generate(InstanceSpec(100, 16, 4, "uniform", 7))
        got = count_all_anticommuting_pairs(strings, backend=backend).total_anti_pairs
        assert got == brute_count(strings) == pairwise_count(strings, backend)

    def test_counters_reported(self, backend):
        strings = generate(InstanceSpec(50, 20, 3, "fixed", 1))
        report = count_all_anticommuting_pairs(strings, backend=backend)
        assert report.counters.dict_updates == 50 * 2**3
        assert report.counters.dict_lookups == 50 * 3**3
        assert report.elapsed >= 0 and report.backend == backend

    def test_weight_cap_propagates(self, backend):
        with pytest.raises(WeightCapExceeded):
            count_all_anticommuting_pairs([S("XX"), S("XYZ")], weight_cap=2, backend=backend)

    def test_pairs_bounded(self, backend):
        strings = [S("X"), S("Y"), S("Z")] * 5
        report = count_all_anticommuting_pairs(strings, backend=backend)
        m = len(strings)
        assert report.total_anti_pairs == brute_count(strings) <= m * (m - 1) // 2


class TestCertify:
    def test_worked_example(self, backend):
        report = certify(WORKED, backend=backend)
        assert report.witness == (0, 2)
        assert report.total_anti_pairs > 0 and not report.complete

    def test_identical_strings(self, backend):
        report = certify([S("XX")] * 3, backend=backend)
        assert report.witness is None and report.total_anti_pairs == 0 and report.all_commute

    def test_single_qubit_x_z(self, backend):
        assert certify([S("X"), S("Z")], backend=backend).witness == (0, 1)

    def test_smallest_predecessor(self, backend):
        strings = [S("ZI"), S("XI"), S("IX"), S("YI")]
        # string 1 is the first with an anticommuting predecessor (0).
        assert certify(strings, backend=backend).witness == (0, 1)
        assert certify(strings[1:], backend=backend).witness == (0, 2)

    def test_early_exit(self, backend):
        strings = [S("X"), S("Z")] + [S("Y")] * 10
        report = certify(strings, backend=backend)
        # Only the first string was inserted; two queries ran.
        assert report.counters.dict_updates == 2
        assert report.counters.dict_lookups == 6

    def test_scan_inconsistency_detected(self, backend, monkeypatch):
        import paulizeta.engine as engine

        monkeypatch.setattr(engine, "anticommutes", lambda p, q: False)
        with pytest.raises(InternalInconsistency):
            certify([S("X"), S("Z")], backend=backend)

    def test_random_against_oracle(self, backend):
        rng = random.Random(3)
        for _ in range(200):
            n = rng.randint(1, 6)
            strings = [random_string(rng, n, 3) for _ in range(rng.randint(0, 12))]
            report = certify(strings, backend=backend)
            if report.witness is None:
                assert brute_count(strings) == 0
            else:
                i, j = report.witness
                assert i < j and brute_anticommute(strings[i], strings[j])
                assert (i, j) == _first_by_second_index(strings)


def _first_by_second_index(strings):
    for j in range(len(strings)):
        for i in range(j):
            if anticommutes(strings[i], strings[j]):
                return (i, j)
    return None


class TestProfile:
    def test_worked_example(self, backend):
        assert anti_degree_profile(WORKED, backend=backend) == [0, 0, 1]

    def test_equal_strings(self, backend):
        assert anti_degree_profile([S("X"), S("X")], backend=backend) == [0, 0]

    def test_prefix_counts(self, backend):
        strings = generate(InstanceSpec(120, 10, 5, "uniform", 11))
        profile = anti_degree_profile(strings, backend=backend)
        for i, c in enumerate(profile):
            assert c == sum(brute_anticommute(strings[i], q) for q in strings[:i])
        assert sum(profile) == count_all_anticommuting_pairs(strings, backend=backend).total_anti_pairs


def test_edge_cases_weight_zero_and_duplicates(backend):
    strings = [S(""), S("XZ"), S(""), S("XZ"), S("ZX"), S("III"), S("YY")]
    assert count_all_anticommuting_pairs(strings, backend=backend).total_anti_pairs == brute_count(strings)
    assert certify([S(""), S("")], backend=backend).witness is None


def test_determinism(backend):
    strings = generate(InstanceSpec(300, 30, 5, "uniform", 99))
    a = certify(strings, backend=backend)
    b = certify(strings, backend=backend)
    assert (a.m, a.total_anti_pairs, a.witness, a.counters) == (b.m, b.total_anti_pairs, b.witness, b.counters)
