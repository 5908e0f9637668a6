import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convexcodes.code import parse_words
from convexcodes.errors import BadParameter, NoEpsilon, UnboundedInterval
from convexcodes.intervals import (
    EMPTY,
    NEG_INF,
    POS_INF,
    CellDecomposition,
    IntervalSet,
    Line,
    OpenifyReport,
    Realization1D,
    cell_supports,
    conjecture1_batch,
    conjecture1_check,
    endpoint_epsilon,
    interval,
    openify,
    random_realization_1d,
    realized_code_1d,
)

from oracles import as_tuples, dense_sample_code

STRESS = ("(0,1]", "(0,1]", "[1,2)", "(1,2)")


def oracle_code(r):
    return dense_sample_code(r.n, as_tuples(r), r.stimulus is Line.WHOLE_LINE)


class TestIntervalSet:
    def test_parse_and_str(self):
        assert str(interval("(1, 2]")) == "(1, 2]"
        assert str(interval("(-inf,1]")) == "(-inf, 1]"
        assert interval("empty") is EMPTY
        assert interval("[1/2,3/2)").lo == F(1, 2)

    @pytest.mark.parametrize("text", ["[2,1]", "(1,1]", "[-inf,0]", "(0,inf]", "(inf,0)", "[0;1]"])
    def test_rejects(self, text):
        with pytest.raises(BadParameter):
            interval(text)

    def test_rejects_finite_floats(self):
        with pytest.raises(BadParameter):
            IntervalSet.make(0.5, 1)

    def test_membership(self):
        iv = interval("(0,1]")
        assert F(1) in iv and F(1, 2) in iv and F(0) not in iv
        assert F(-10**9) in interval("(-inf,0)")

    def test_json_round_trip(self):
        for text in ("[0,1]", "(1,2]", "(-inf,1]", "[3,inf)", "(-inf,inf)", "empty", "[2,2]"):
            iv = interval(text)
            assert IntervalSet.from_json(json.loads(json.dumps(iv.to_json()))) == iv


class TestCells:
    def test_count_and_representatives(self):
        cd = CellDecomposition((F(0), F(1), F(2)))
        assert len(cd.cells) == 7
        assert cd.representatives == [F(-1), 0, F(1, 2), 1, F(3, 2), 2, 3]

    def test_no_points(self):
        assert len(CellDecomposition(()).cells) == 1

    def test_rejects_unsorted(self):
        with pytest.raises(BadParameter):
            CellDecomposition((F(1), F(0)))


class TestRealizedCode:
    def test_touching_closed(self):
        r = Realization1D.of("[0,1]", "[1,2]")
        assert realized_code_1d(r) == parse_words(2, ["", "1", "2", "12"])

    def test_half_open_pair(self):
        r = Realization1D.of("[0,1]", "(1,2]")
        assert realized_code_1d(r) == parse_words(2, ["", "1", "2"])

    def test_stress(self):
        r = Realization1D.of(*STRESS)
        assert realized_code_1d(r) == parse_words(4, ["", "12", "123", "34"])

    def test_union_only_drops_empty(self):
        r = Realization1D.of("[0,1]", "(1,2]", stimulus=Line.UNION_ONLY)
        assert realized_code_1d(r) == parse_words(2, ["1", "2"])

    def test_point_interval(self):
        r = Realization1D.of("[0,2]", "[1,1]")
        assert realized_code_1d(r) == parse_words(2, ["", "1", "12"])

    def test_rays_cover_the_line(self):
        r = Realization1D.of("(-inf,1]", "[1,inf)")
        assert realized_code_1d(r) == parse_words(2, ["1", "12", "2"])

    def test_all_empty(self):
        r = Realization1D(3, (EMPTY, EMPTY, EMPTY), Line.WHOLE_LINE)
        assert realized_code_1d(r).codewords == (frozenset(),)

    def test_empty_neuron_never_fires(self):
        r = Realization1D.of("[0,1]", "empty", "(0,2)")
        assert all(2 not in w for w in realized_code_1d(r))

    @pytest.mark.parametrize("seed", range(200))
    def test_sweep_matches_dense_sampling(self, seed):
        r = random_realization_1d(1 + seed % 4, seed)
        assert set(realized_code_1d(r).codewords) == oracle_code(r)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(1, 4), st.integers(0, 2**32), st.fractions(-5, 5, max_denominator=7))
    def test_translation_invariant(self, n, seed, c):
        r = random_realization_1d(n, seed)
        assert realized_code_1d(r.translate(c)) == realized_code_1d(r)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(1, 4), st.integers(0, 2**32))
    def test_supports_constant_on_cells(self, n, seed):
        # Every point of a cell, not just its representative, has the same support.
        r = random_realization_1d(n, seed)
        cd = CellDecomposition(tuple(r.endpoints()))
        for cell, s in zip(cd.cells, cell_supports(r)):
            if cell.is_point:
                continue
            lo = cell.lo if cell.lo != NEG_INF else cell.rep - 10
            hi = cell.hi if cell.hi != POS_INF else cell.rep + 10
            for frac in (F(1, 9), F(1, 2), F(8, 9)):
                assert r.support(lo + (hi - lo) * frac) == s

    def test_json_round_trip(self):
        for seed in range(50):
            r = random_realization_1d(3, seed)
            assert Realization1D.from_json(json.loads(json.dumps(r.to_json()))) == r


class TestOpenify:
    def test_closed_pair(self):
        eps, r = openify(Realization1D.of("[0,1]", "[1,2]"))
        assert eps == 1
        assert r.intervals == (interval("(-1/3,4/3)"), interval("(2/3,7/3)"))

    def test_half_open_pair(self):
        eps, r = openify(Realization1D.of("[0,1]", "(1,2]"))
        assert eps == 1
        assert r.intervals == (interval("(-1/3,4/3)"), interval("(4/3,7/3)"))

    def test_stress(self):
        eps, r = openify(Realization1D.of(*STRESS))
        assert eps == 1
        assert r.intervals == (
            interval("(1/3,4/3)"),
            interval("(1/3,4/3)"),
            interval("(2/3,5/3)"),
            interval("(4/3,5/3)"),
        )

    def test_epsilon_is_smallest_gap(self):
        assert endpoint_epsilon(Realization1D.of("[0,3]", "(1/2,3]")) == F(1, 2)

    def test_unbounded_rejected(self):
        with pytest.raises(UnboundedInterval):
            openify(Realization1D.of("[0,1]", "(-inf,2)"))

    def test_epsilon_fallback(self):
        r = Realization1D.of("[1,1]", "[1,1]")
        eps, opened = openify(r)
        assert eps == 1
        assert opened.intervals == (interval("(2/3,4/3)"),) * 2
        with pytest.raises(NoEpsilon):
            openify(r, strict=True)

    def test_empty_stays_empty(self):
        _, r = openify(Realization1D.of("[0,1]", "empty"))
        assert r.intervals[1] is EMPTY

    @settings(max_examples=300, deadline=None)
    @given(st.integers(1, 5), st.integers(0, 2**32))
    def test_result_is_open_and_nonempty(self, n, seed):
        r = random_realization_1d(n, seed, unbounded=False)
        eps, opened = openify(r)
        assert eps > 0
        for before, after in zip(r.intervals, opened.intervals):
            if before.empty:
                assert after.empty
                continue
            assert not after.lo_closed and not after.hi_closed
            assert after.lo < after.hi
            # Closed ends move outward, open ends inward, by exactly eps/3.
            assert abs(after.lo - before.lo) == eps / 3 == abs(after.hi - before.hi)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(1, 4), st.integers(0, 2**32), st.fractions(-5, 5, max_denominator=7))
    def test_translation_commutes(self, n, seed, c):
        r = random_realization_1d(n, seed, unbounded=False)
        eps, opened = openify(r)
        eps2, opened2 = openify(r.translate(c))
        assert eps == eps2
        assert opened.translate(c) == opened2


class TestConjectureHarness:
    @pytest.mark.parametrize("specs", [("[0,1]", "[1,2]"), ("[0,1]", "(1,2]")])
    def test_worked_instances_equal(self, specs):
        rep = conjecture1_check(Realization1D.of(*specs))
        assert rep.equal and rep.before == rep.after

    def test_stress_instance_unequal(self):
        rep = conjecture1_check(Realization1D.of(*STRESS))
        assert not rep.equal
        assert rep.before == parse_words(4, ["", "12", "123", "34"])
        assert rep.after == parse_words(4, ["", "12", "123", "3", "34"])
        assert set(rep.before.codewords) == oracle_code(rep.realization_before)
        assert set(rep.after.codewords) == oracle_code(rep.realization_after)

    def test_notes(self):
        rep = conjecture1_check(Realization1D.of("[1,1]", "empty", stimulus=Line.UNION_ONLY))
        assert rep.epsilon_fallback
        assert len(rep.notes) == 4

    def test_report_json_round_trip(self):
        for rep in conjecture1_batch(30, 3, 5):
            data = json.loads(json.dumps(rep.to_json()))
            back = OpenifyReport.from_json(data)
            assert back.to_json() == data

    def test_batch_deterministic(self):
        a = [r.to_json() for r in conjecture1_batch(40, 3, 11)]
        b = [r.to_json() for r in conjecture1_batch(40, 3, 11)]
        assert a == b
        assert a != [r.to_json() for r in conjecture1_batch(40, 3, 12)]

    def test_batch_reverified(self):
        for rep in conjecture1_batch(100, 3, 1):
            assert set(rep.before.codewords) == oracle_code(rep.realization_before)
            assert set(rep.after.codewords) == oracle_code(rep.realization_after)
            assert rep.equal == (rep.before == rep.after)

    def test_generator_rejects_bad_n(self):
        with pytest.raises(BadParameter):
            random_realization_1d(0, 1)
