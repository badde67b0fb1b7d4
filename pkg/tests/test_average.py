# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

from fractions import Fraction
import json
import math

import pytest

from indelentropy import common
from indelentropy.average import (
    FIGURE_CSV_HEADER,
    runCount,
    runCountLiteral,
    runCensus,
    avg1Del,
    avg1Ins,
    avgLowerBounds,
    statedLowerBounds,
    figureTable,
    writeFigureCsv,
)


class TestRunCount:
    def test_examples(self):
        assert runCount(3, 3, 2) == 2
        assert runCount(3, 1, 2) == 10
        assert runCount(3, 2, 2) == 4
        assert runCount(4, 4, 3) == 3

    def test_literal_expression_at_full_length(self):
        assert runCountLiteral(3, 3, 2) == Fraction(3, 2)
        assert runCountLiteral(3, 1, 2) == runCount(3, 1, 2)

    def test_census(self):
        for q in (2, 3):
            for m in range(1, 8 if q == 2 else 6):
                census = runCensus(m, q)
                for r in range(1, m + 1):
                    assert census[r] == runCount(m, r, q)
                assert sum(r * count for r, count in census.items()) == m * q ** m

    def test_out_of_range(self):
        with pytest.raises(common.DomainError):
            runCount(3, 4, 2)
        with pytest.raises(common.DomainError):
            runCount(3, 0, 2)


class TestAverages:
    def test_single_deletion_examples(self):
        report = avg1Del(2, 2)
        assert report.avgClosed == pytest.approx(1.5)
        assert report.avgLiteral == pytest.approx(1.625)
        assert report.avgDirect == pytest.approx(1.5)
        assert avg1Del(3, 2).avgClosed == pytest.approx(1.85539, abs=1e-5)

    def test_single_insertion_examples(self):
        assert avg1Ins(1, 2).avgClosed == pytest.approx(0.5)
        assert avg1Ins(2, 2).avgClosed == pytest.approx(0.85539, abs=1e-5)

    def test_closed_average_matches_direct_mean(self):
        for q in (2, 3):
            for n in range(2, 9 if q == 2 else 7):
                for report in (avg1Del(n, q), avg1Ins(n, q)):
                    assert report.avgDirect is not None
                    assert report.avgClosed == pytest.approx(report.avgDirect, abs=1e-9)
                    assert report.minimum - 1e-12 <= report.avgClosed <= report.maximum + 1e-12

    def test_direct_mean_is_skipped_over_the_cap(self):
        common.GlobalConfig.MAX_ENUMERATION_SPACE = 4
        report = avg1Del(5, 2)
        assert report.avgDirect is None
        assert avg1Del(5, 2, direct=False).avgDirect is None

    def test_invalid_lengths(self):
        with pytest.raises(common.DomainError):
            avg1Del(1, 2)
        with pytest.raises(common.DomainError):
            avg1Ins(0, 2)
        with pytest.raises(common.DomainError):
            avg1Del(3, 1)

    def test_long_words(self):
        report = avg1Del(100, 2, direct=False)
        assert report.lowerBound < report.avgClosed
        assert report.minimum < report.avgClosed < report.maximum
        report = avg1Ins(100, 2, direct=False)
        assert report.lowerBound < report.avgClosed < report.maximum

    def test_record(self):
        record = json.loads(avg1Del(3, 2).toJson())
        assert record["channel"] == "1-Del"
        assert record["avg_closed"] == pytest.approx(1.85539, abs=1e-5)
        assert set(record) == {"channel", "n", "q", "avg_closed", "avg_direct", "avg_literal", "lower_bound", "lower_bound_stated", "min", "max"}


class TestLowerBounds:
    def test_binary_deletion_values(self):
        expected = {2: 1.5, 3: 1.752, 4: 1.9375, 5: 2.097, 6: 2.241}
        for n, value in expected.items():
            assert avgLowerBounds(n, 2)[0] == pytest.approx(value, abs=1e-3)

    def test_increasing_in_n(self):
        values = [avgLowerBounds(n, 2)[0] for n in range(2, 60)]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_below_the_average(self):
        for q in (2, 3, 4):
            for n in range(2, 40):
                delBound, insBound = avgLowerBounds(n, q)
                assert delBound <= avg1Del(n, q, direct=False).avgClosed + 1e-12
                assert insBound <= avg1Ins(n, q, direct=False).avgClosed + 1e-12

    def test_published_deletion_bound_overshoots_at_two_symbols(self):
        stated, _ = statedLowerBounds(2, 2)
        assert stated == pytest.approx(1.625)
        assert stated > avg1Del(2, 2).avgClosed
        assert avg1Del(2, 2).lowerBoundStated == pytest.approx(stated)

    def test_lengths_need_two_symbols(self):
        with pytest.raises(common.DomainError):
            avgLowerBounds(1, 2)


class TestFigure:
    def test_rows(self):
        rows = figureTable(2, 6)
        assert [row.n for row in rows] == [2, 3, 4, 5, 6]
        assert rows[0].minimum == pytest.approx(1.5)
        assert rows[0].maximum == pytest.approx(1.5)
        assert rows[1].avg == pytest.approx(1.85539, abs=1e-5)
        for row in rows:
            assert row.avgLowerBound <= row.avg + 1e-12
            assert row.minimum <= row.avg <= row.maximum

    def test_default_range_does_not_enumerate(self):
        common.GlobalConfig.MAX_ENUMERATION_SPACE = 1
        rows = figureTable(2, 100)
        assert len(rows) == 99
        assert rows[-1].maximum == pytest.approx(math.log2(200) - 2 * 99 / 200)

    def test_invalid_range(self):
        with pytest.raises(common.DomainError):
            figureTable(1, 4)
        with pytest.raises(common.DomainError):
            figureTable(5, 4)

    def test_csv(self, tmp_path):
        path = tmp_path / "figure.csv"
        writeFigureCsv(figureTable(2, 4), path)
        lines = path.read_text().splitlines()
        assert lines[0] == ",".join(FIGURE_CSV_HEADER)
        assert len(lines) == 4
        assert lines[1].startswith("2,1.5,1.5,1.5,1.5")
