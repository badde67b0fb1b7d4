# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import collections
from fractions import Fraction
import json
import math

import pytest
from hypothesis import given, strategies as st

from indelentropy import common
from indelentropy.embed import insertionBall, deletionBall
from indelentropy.entropy import (
    ChannelSpec,
    EntropyMethod,
    EntropyQuantity,
    outProb,
    inProb,
    inputEntropy,
    inputEntropy1DelClosed,
    inputEntropy1InsClosed,
    inputEntropyBits,
    outputEntropy,
    dualityCheck,
)
from indelentropy.seqcore import Word, runProfile, enumerateWords


Del = common.ChannelDirection.Deletion
Ins = common.ChannelDirection.Insertion


def w(text: str, q: int = 2) -> Word:
    return Word.fromStr(text, q)


nonEmptyBinaryWords = st.lists(st.integers(min_value=0, max_value=1), min_size=1, max_size=10).map(lambda s: Word(tuple(s), 2))


class TestChannelDirection:
    def test_parse(self):
        assert common.ChannelDirection.fromStr("del") == Del
        assert common.ChannelDirection.fromStr("insertion") == Ins
        with pytest.raises(common.DomainError):
            common.ChannelDirection.fromStr("sub")

    def test_dual(self):
        assert Del.dual() == Ins
        assert Ins.dual() == Del


class TestChannelSpec:
    def test_lengths(self):
        spec = ChannelSpec(Del, 2, 2, 5)
        assert spec.outputLength == 3
        assert spec.name == "2-Del"
        assert spec.dual() == ChannelSpec(Ins, 2, 2, 3)
        assert ChannelSpec.fromOutput(Del, 1, 2, 3) == ChannelSpec(Del, 1, 2, 4)
        assert ChannelSpec.fromOutput(Ins, 1, 2, 3) == ChannelSpec(Ins, 1, 2, 2)

    def test_invalid(self):
        with pytest.raises(common.DomainError):
            ChannelSpec(Del, 3, 2, 2)
        with pytest.raises(common.DomainError):
            ChannelSpec(Ins, -1, 2, 2)
        with pytest.raises(common.DomainError):
            ChannelSpec(Ins, 1, 1, 2)
        with pytest.raises(common.DomainError):
            ChannelSpec.fromOutput(Ins, 2, 2, 1)


class TestProbability:
    def test_deletion_examples(self):
        spec = ChannelSpec(Del, 1, 2, 4)
        assert outProb(spec, w("0110"), w("010")) == Fraction(1, 2)
        assert inProb(spec, w("0110"), w("010")) == Fraction(1, 4)
        assert outProb(spec, w("0110"), w("000")) == 0

    def test_insertion_examples(self):
        spec = ChannelSpec(Ins, 1, 2, 2)
        assert outProb(spec, w("00"), w("000")) == Fraction(1, 2)
        assert inProb(spec, w("00"), w("000")) == Fraction(1, 1)

    def test_length_mismatch(self):
        with pytest.raises(common.DomainError, match="length mismatch"):
            outProb(ChannelSpec(Del, 1, 2, 4), w("011"), w("01"))

    def test_distributions_sum_to_one(self):
        for direction in (Del, Ins):
            for q in (2, 3):
                for n in range(1, 5):
                    for k in (1, 2):
                        if direction == Del and k > n:
                            continue
                        spec = ChannelSpec(direction, k, q, n)
                        for x in enumerateWords(q, n):
                            ball = deletionBall(x, k) if direction == Del else insertionBall(x, k)
                            assert sum(outProb(spec, x, y) for y in ball) == 1
                        for y in enumerateWords(q, spec.outputLength):
                            ball = insertionBall(y, k) if direction == Del else deletionBall(y, k)
                            assert sum(inProb(spec, x, y) for x in ball) == 1


class TestInputEntropy:
    def test_single_deletion_closed_form_example(self):
        report = inputEntropy1DelClosed(w("001"))
        assert report.bits == pytest.approx(2.15564, abs=1e-5)
        assert report.method == EntropyMethod.ClosedForm
        assert report.ballSize is None

    def test_single_insertion_closed_form_example(self):
        assert inputEntropy1InsClosed(w("0011")).bits == pytest.approx(1.0)
        assert inputEntropy1InsClosed(w("0101")).bits == pytest.approx(2.0)

    def test_constant_word_has_no_insertion_entropy(self):
        assert inputEntropy1InsClosed(w("0000")).bits == 0.0
        assert inputEntropy(ChannelSpec(Ins, 1, 2, 3), w("0000")).bits == 0.0

    def test_two_deletions_of_a_single_symbol(self):
        report = inputEntropy(ChannelSpec(Del, 2, 2, 3), w("0"))
        assert report.ballSize == 7
        assert report.weightSum == pytest.approx(3 * math.log2(3) + 6)
        assert report.bits == pytest.approx(2.68872, abs=1e-5)

    def test_zero_errors(self):
        report = inputEntropy(ChannelSpec(Del, 0, 2, 3), w("010"))
        assert report.bits == 0.0
        assert report.ballSize == 1

    def test_spec_must_match_word(self):
        with pytest.raises(common.DomainError, match="length mismatch"):
            inputEntropy(ChannelSpec(Del, 1, 2, 5), w("01"))

    def test_closed_forms_agree_with_enumeration(self):
        for q in (2, 3):
            for m in range(1, 7 if q == 2 else 5):
                for y in enumerateWords(q, m):
                    enumerated = inputEntropy(ChannelSpec.fromOutput(Del, 1, q, m), y).bits
                    assert inputEntropy1DelClosed(y).bits == pytest.approx(enumerated, abs=1e-9)
                    enumerated = inputEntropy(ChannelSpec.fromOutput(Ins, 1, q, m), y).bits
                    assert inputEntropy1InsClosed(y).bits == pytest.approx(enumerated, abs=1e-9)

    def test_closed_form_depends_on_the_run_multiset(self):
        assert inputEntropy1DelClosed(w("0010")).bits == pytest.approx(inputEntropy1DelClosed(w("0100")).bits)
        assert inputEntropy1DelClosed(w("0010")).bits == pytest.approx(inputEntropy1DelClosed(w("1101")).bits)

    @pytest.mark.parametrize("closedForm", [inputEntropy1DelClosed, inputEntropy1InsClosed])
    def test_closed_form_is_permutation_invariant(self, closedForm):
        for m in range(1, 9):
            byMultiset: dict[tuple[int, ...], list[float]] = collections.defaultdict(list)
            for y in enumerateWords(2, m):
                byMultiset[runProfile(y).multiset()].append(closedForm(y).bits)
            for multiset, values in byMultiset.items():
                assert max(values) - min(values) <= 1e-9, (m, multiset)

    def test_entropy_bits_dispatch(self):
        assert inputEntropyBits(Del, 1, w("001")) == inputEntropy1DelClosed(w("001")).bits
        assert inputEntropyBits(Del, 2, w("0")) == pytest.approx(2.68872, abs=1e-5)

    @given(nonEmptyBinaryWords)
    def test_entropy_is_bounded_by_the_ball(self, y):
        for direction in (Del, Ins):
            report = inputEntropy(ChannelSpec.fromOutput(direction, 1, 2, len(y)), y)
            assert 0.0 <= report.bits <= math.log2(report.ballSize) + 1e-9

    @given(nonEmptyBinaryWords)
    def test_complement_symmetry(self, y):
        for k in (1, 2):
            for direction in (Del, Ins):
                if direction == Ins and k > len(y):
                    continue
                spec = ChannelSpec.fromOutput(direction, k, 2, len(y))
                if len(y) > 7 and k == 2:
                    continue
                assert inputEntropy(spec, y).bits == pytest.approx(inputEntropy(spec, y.complement()).bits, abs=1e-12)

    def test_report_record(self):
        record = inputEntropy1DelClosed(w("001")).toRecord()
        assert list(record.keys()) == ["quantity", "channel", "q", "word", "bits", "method", "ball_size", "weight_sum"]
        assert record["channel"] == "1-Del"
        assert record["method"] == "closed_form"
        assert record["quantity"] == "input"
        assert json.loads(inputEntropy1DelClosed(w("001")).toJson())["word"] == "001"

    def test_method_and_quantity_parsing(self):
        assert EntropyMethod.fromStr("enum") == EntropyMethod.Enumerated
        assert EntropyMethod.fromStr("closed_form") == EntropyMethod.ClosedForm
        assert EntropyQuantity.fromStr("output") == EntropyQuantity.Output
        with pytest.raises(common.DomainError):
            EntropyMethod.fromStr("guess")


class TestOutputEntropy:
    def test_single_deletion_example(self):
        report = outputEntropy(ChannelSpec(Del, 1, 2, 4), w("0110"))
        assert report.bits == pytest.approx(1.5)
        assert report.quantity == EntropyQuantity.Output

    def test_constant_word_through_deletion(self):
        assert outputEntropy(ChannelSpec(Del, 2, 2, 4), w("0000")).bits == 0.0

    def test_duality(self):
        for q in (2, 3):
            for m in range(1, 6 if q == 2 else 4):
                for y in enumerateWords(q, m):
                    for k in (1, 2):
                        a, b = dualityCheck(y, k, Del)
                        assert a == pytest.approx(b, abs=1e-12)
                        if k <= m:
                            a, b = dualityCheck(y, k, Ins)
                            assert a == pytest.approx(b, abs=1e-12)
