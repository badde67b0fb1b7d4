# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import json
import math

import pytest

from indelentropy import common
from indelentropy.embed import insertionBall
from indelentropy.entropy import ChannelSpec, ballWeightSum, inputEntropy1DelClosed
from indelentropy.extremal import (
    ExtremumKind,
    ExtremalMethod,
    balancedLengths,
    skewedLengths,
    stepFunction,
    max1DelFixedRuns,
    min1DelFixedRuns,
    globalExtrema1Del,
    globalExtremaValues1Del,
    extrema1InsFixedRuns,
    globalExtrema1Ins,
    min2Del,
    min2DelStated,
    exhaustiveExtremizers,
    appendixWeight,
    appendixWeightArgmax,
    appendixIncrementDirect,
    inductionWeight,
    inductionArgmax,
)
from indelentropy.seqcore import Word, enumerateWords


Del = common.ChannelDirection.Deletion
Ins = common.ChannelDirection.Insertion


def w(text: str, q: int = 2) -> Word:
    return Word.fromStr(text, q)

def constants(m: int, q: int = 2) -> frozenset[Word]:
    return frozenset(Word.constant(s, m, q) for s in range(q))


def assertSameExtremum(found, expected):
    assert found.value == pytest.approx(expected.value, abs=1e-9)
    assert found.witnessSet == expected.witnessSet


class TestShapes:
    def test_lengths(self):
        assert balancedLengths(7, 3) == [3, 2, 2]
        assert skewedLengths(7, 3) == [5, 1, 1]

    def test_step_function_is_increasing(self):
        values = [stepFunction(r) for r in range(1, 50)]
        assert all(a < b for a, b in zip(values, values[1:]))
        assert stepFunction(1) == pytest.approx(2.0)

    def test_step_function_is_increasing_up_to_a_million(self):
        sampled = range(1, 10**6 + 1, 997)
        values = [stepFunction(r) for r in sampled]
        assert all(a < b for a, b in zip(values, values[1:]))
        assert all(stepFunction(r) < stepFunction(r + 1) for r in sampled)
        assert stepFunction(10**6 - 1) < stepFunction(10**6)


class TestSingleDeletion:
    def test_fixed_run_example(self):
        maximum = max1DelFixedRuns(2, 5, 2)
        assert maximum.value == pytest.approx(math.log2(12) - (8 + 3 * math.log2(3)) / 12)
        assert [x.toStr() for x in maximum.witnesses] == ["00011", "00111", "11000", "11100"]
        assert maximum.kind == ExtremumKind.Maximum

        minimum = min1DelFixedRuns(2, 5, 2)
        assert [x.toStr() for x in minimum.witnesses] == ["00001", "01111", "10000", "11110"]
        assert minimum.value == pytest.approx(inputEntropy1DelClosed(w("00001")).bits)

    def test_single_run(self):
        minimum = min1DelFixedRuns(3, 4, 1)
        maximum = max1DelFixedRuns(3, 4, 1)
        assert minimum.value == pytest.approx(maximum.value)
        assert minimum.witnessSet == constants(4, 3)

    def test_invalid_run_count(self):
        with pytest.raises(common.DomainError):
            max1DelFixedRuns(2, 3, 4)
        with pytest.raises(common.DomainError):
            min1DelFixedRuns(2, 3, 0)

    def test_fixed_runs_match_exhaustive_search(self):
        for q in (2, 3):
            for m in range(1, 8 if q == 2 else 6):
                for R in range(1, m + 1):
                    found = exhaustiveExtremizers(ChannelSpec.fromOutput(Del, 1, q, m), R)
                    assertSameExtremum(found[0], min1DelFixedRuns(q, m, R))
                    assertSameExtremum(found[1], max1DelFixedRuns(q, m, R))

    def test_global_extrema(self):
        minValue, maxValue = globalExtremaValues1Del(2, 4)
        assert minValue == pytest.approx(2.0)
        assert maxValue == pytest.approx(3 - 6 / 8)

        for q in (2, 3):
            for n in range(2, 8 if q == 2 else 6):
                found = exhaustiveExtremizers(ChannelSpec(Del, 1, q, n))
                closedMin, closedMax = globalExtrema1Del(q, n)
                assertSameExtremum(found[0], closedMin)
                assertSameExtremum(found[1], closedMax)

    def test_global_extrema_need_two_symbols(self):
        with pytest.raises(common.DomainError):
            globalExtremaValues1Del(2, 1)

    def test_minimum_grows_with_the_run_count(self):
        for q in (2, 3):
            for m in range(1, 12):
                minima = [min1DelFixedRuns(q, m, R).value for R in range(1, m + 1)]
                assert all(a <= b + 1e-12 for a, b in zip(minima, minima[1:])), (q, m)


class TestSingleInsertion:
    def test_fixed_run_example(self):
        minimum, maximum = extrema1InsFixedRuns(2, 4, 2)
        assert minimum.value == pytest.approx(2 - 3 * math.log2(3) / 4)
        assert maximum.value == pytest.approx(1.0)
        assert [x.toStr() for x in maximum.witnesses] == ["0011", "1100"]

    def test_fixed_runs_match_exhaustive_search(self):
        for q in (2, 3):
            for m in range(2, 8 if q == 2 else 6):
                for R in range(1, m + 1):
                    found = exhaustiveExtremizers(ChannelSpec.fromOutput(Ins, 1, q, m), R)
                    closedMin, closedMax = extrema1InsFixedRuns(q, m, R)
                    assertSameExtremum(found[0], closedMin)
                    assertSameExtremum(found[1], closedMax)

    def test_global_extrema(self):
        for q in (2, 3):
            for n in range(1, 7 if q == 2 else 5):
                found = exhaustiveExtremizers(ChannelSpec(Ins, 1, q, n))
                closedMin, closedMax = globalExtrema1Ins(q, n)
                assert closedMin.value == 0.0
                assert closedMax.value == pytest.approx(math.log2(n + 1))
                assertSameExtremum(found[0], closedMin)
                assertSameExtremum(found[1], closedMax)


class TestDoubleDeletion:
    def test_values(self):
        assert min2Del(1).value == pytest.approx(2.68872, abs=1e-5)
        assert min2Del(2).value == pytest.approx(3.14624, abs=1e-5)
        assert min2Del(4).value == pytest.approx(3.76921, abs=1e-5)

    def test_stated_value(self):
        assert min2DelStated(1) is None
        assert min2Del(1).statedValue is None
        assert min2Del(4).statedValue == pytest.approx(2 + 0.75 * math.log2(6) - 0.5 * math.log2(5))
        assert min2Del(4).statedValue != pytest.approx(min2Del(4).value)

    def test_needs_a_symbol(self):
        with pytest.raises(common.DomainError):
            min2Del(0)

    def test_matches_exhaustive_search(self):
        for m in range(1, 8):
            found, _ = exhaustiveExtremizers(ChannelSpec.fromOutput(Del, 2, 2, m))
            assertSameExtremum(found, min2Del(m))
            assert found.witnessSet == constants(m)

    def test_entropy_minimizers_are_weight_sum_maximizers(self):
        for k in (1, 2):
            for m in range(1, 8):
                minimum, _ = exhaustiveExtremizers(ChannelSpec.fromOutput(Del, k, 2, m))
                sums = {y: ballWeightSum(insertionBall(y, k)) for y in enumerateWords(2, m)}
                best = max(sums.values())
                assert frozenset(y for y, value in sums.items() if value >= best - 1e-9) == minimum.witnessSet, (k, m)


class TestExhaustiveSearch:
    def test_result_metadata(self):
        minimum, maximum = exhaustiveExtremizers(ChannelSpec.fromOutput(Del, 1, 2, 4))
        assert minimum.method == ExtremalMethod.Exhaustive
        assert minimum.runs is None
        assert minimum.m == 4
        assert maximum.witnessSet == frozenset((w("0101"), w("1010")))

    def test_enumeration_cap(self):
        common.GlobalConfig.MAX_ENUMERATION_SPACE = 64
        with pytest.raises(common.CapExceededError, match="--max-space"):
            exhaustiveExtremizers(ChannelSpec.fromOutput(Del, 1, 2, 7))

    def test_bad_run_count(self):
        with pytest.raises(common.DomainError):
            exhaustiveExtremizers(ChannelSpec.fromOutput(Del, 1, 2, 3), 5)

    def test_process_pool_gives_the_same_result(self):
        spec = ChannelSpec.fromOutput(Ins, 1, 3, 5)
        single = exhaustiveExtremizers(spec, 3)
        common.GlobalConfig.THREADS = 2
        pooled = exhaustiveExtremizers(spec, 3)
        for a, b in zip(single, pooled):
            assert a.value == b.value
            assert a.witnesses == b.witnesses

    def test_record(self):
        result = min2Del(4)
        record = json.loads(result.toJson(witnessLimit=1))
        assert record["kind"] == "min"
        assert record["channel"] == "2-Del"
        assert record["runs"] == "all"
        assert record["witness_count"] == 2
        assert record["witnesses"] == ["0000"]
        assert "stated_value" in record
        assert "note" in record

    def test_witnesses_are_sorted_and_unique(self):
        result = max1DelFixedRuns(2, 4, 2)
        assert list(result.witnesses) == sorted(set(result.witnesses))


class TestAppendix:
    def test_single_symbol_values(self):
        assert appendixWeight(w("0")) == pytest.approx(15.509775, abs=1e-6)
        assert appendixIncrementDirect(w("0")) == pytest.approx(16.2646625, abs=1e-6)

    def test_two_symbol_induction_weights(self):
        assert inductionWeight(w("00")) == pytest.approx(29.775, abs=1e-3)
        assert inductionWeight(w("01")) == pytest.approx(26.265, abs=1e-3)
        assert inductionArgmax(2).witnessSet == constants(2)

    def test_closed_form_increment_is_maximized_by_constant_words(self):
        for m in range(1, 8):
            assert appendixWeightArgmax(m).witnessSet == constants(m)

    def test_closed_form_increment_record_names_the_discrepancy(self):
        record = appendixWeightArgmax(3).toRecord()
        assert "appendixIncrementDirect" in record["note"]
        assert appendixWeight(w("0")) != pytest.approx(appendixIncrementDirect(w("0")))

    def test_induction_argmax_is_the_constant_words(self):
        for m in range(2, 6):
            assert inductionArgmax(m).witnessSet == constants(m)

    def test_binary_only(self):
        with pytest.raises(common.DomainError):
            appendixWeight(w("012", 3))
