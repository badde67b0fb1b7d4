#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses
import math
from pathlib import Path
from typing import Any, Callable

from .. import common
from ..common.Utils import xlog2x
from ..seqcore import enumerateWords
from ..entropy import inputEntropy1DelClosed, inputEntropy1InsClosed
from ..extremal import globalExtremaValues1Del, globalExtremaValues1Ins

from .RunCount import runCount, runCountLiteral


FIGURE_CSV_HEADER = ("n", "min", "max", "avg", "avg_lower_bound")


@dataclasses.dataclass(frozen=True)
class AverageReport:
    n: int
    """Length of the transmitted words"""

    q: int
    direction: common.ChannelDirection

    avgClosed: float
    """Average input entropy from the run counts"""

    lowerBound: float
    """Lower bound on the average, valid for every `n` and `q`"""

    lowerBoundStated: float
    """The published closed form of the lower bound"""

    avgLiteral: float
    """Average computed with the uncorrected run count at `r = m`"""

    minimum: float
    maximum: float

    avgDirect: float|None = None
    """Mean of the per-word input entropies, when the word space is under the enumeration cap"""

    def toRecord(self) -> dict[str, Any]:
        return {
            "channel": f"1-{self.direction.shortName()}",
            "n": self.n,
            "q": self.q,
            "avg_closed": self.avgClosed,
            "avg_direct": self.avgDirect,
            "avg_literal": self.avgLiteral,
            "lower_bound": self.lowerBound,
            "lower_bound_stated": self.lowerBoundStated,
            "min": self.minimum,
            "max": self.maximum,
        }

    def toJson(self) -> str:
        return common.Utils.recordToJson(self.toRecord())


def _checkAlphabet(q: int) -> None:
    if q < 2:
        raise common.DomainError(f"alphabet size must be at least 2, got q={q}")


def _directMean(q: int, m: int, entropyOf: Callable[..., Any]) -> float|None:
    if q ** m > common.GlobalConfig.MAX_ENUMERATION_SPACE:
        common.Utils.eprintVerbose(f"Skipping the direct average over q={q}, m={m}: {q ** m} words exceed MAX_ENUMERATION_SPACE")
        return None

    total = 0.0
    for word in enumerateWords(q, m):
        total += entropyOf(word).bits
    return total / q ** m


def statedLowerBounds(n: int, q: int) -> tuple[float, float]:
    """The lower bounds on both averages as published, for comparison with `avgLowerBounds`"""
    _checkAlphabet(q)
    if n < 1:
        raise common.DomainError(f"the averages need n >= 1, got n={n}")

    delInner = 2 * n / (q - 1) - (n * n - n) / q ** (n + 1) + (2 * q * q - 2 * q ** (n + 2)) / ((q - 1) ** 2 * q ** (n + 1))
    delBound = math.log2(n * q) - delInner / n

    insInner = n * n / q ** (n + 2) - n * (2 * q ** (n + 2) - q + 1) / ((q - 1) * q ** (n + 2)) + 2 * (q ** n - 1) / ((q - 1) ** 2 * q ** n)
    insBound = math.log2(n * q) + insInner / (n + 1)
    return delBound, insBound


def _delLowerBound(n: int, q: int) -> float:
    # (r+1) log(r+1) <= (r+1) r
    m = n - 1
    denominator = n * q ** n
    return math.log2(n * q) - sum(runCount(m, r, q) * (r + 1) * r for r in range(1, m + 1)) / denominator

def _insLowerBound(n: int, q: int) -> float:
    # r log r <= r (r-1)
    m = n + 1
    denominator = m * q ** m
    return math.log2(m) - sum(runCount(m, r, q) * r * (r - 1) for r in range(1, m + 1)) / denominator


def avgLowerBounds(n: int, q: int) -> tuple[float, float]:
    """Lower bounds on the single-deletion and single-insertion averages.

    Obtained by replacing `log(r+1)` with `r` in the deletion sum and `log r`
    with `r - 1` in the insertion sum, which only grows the subtracted terms.
    """
    _checkAlphabet(q)
    if n < 2:
        raise common.DomainError(f"the averages need n >= 2, got n={n}")
    return _delLowerBound(n, q), _insLowerBound(n, q)


def avg1Del(n: int, q: int, direct: bool = True) -> AverageReport:
    """Average single-deletion input entropy over the received words of length `n - 1`"""
    _checkAlphabet(q)
    if n < 2:
        raise common.DomainError(f"the single-deletion average needs n >= 2, got n={n}")
    m = n - 1
    denominator = n * q ** n

    avgClosed = math.log2(n * q) - sum(runCount(m, r, q) / denominator * xlog2x(r + 1) for r in range(1, m + 1))
    avgLiteral = math.log2(n * q) - sum(float(runCountLiteral(m, r, q) / denominator) * xlog2x(r + 1) for r in range(1, m + 1))

    minimum, maximum = globalExtremaValues1Del(q, n)
    avgDirect = _directMean(q, m, inputEntropy1DelClosed) if direct else None

    return AverageReport(n, q, common.ChannelDirection.Deletion, avgClosed, _delLowerBound(n, q), statedLowerBounds(n, q)[0], avgLiteral, minimum, maximum, avgDirect)


def avg1Ins(n: int, q: int, direct: bool = True) -> AverageReport:
    """Average single-insertion input entropy over the received words of length `n + 1`"""
    _checkAlphabet(q)
    if n < 1:
        raise common.DomainError(f"the single-insertion average needs n >= 1, got n={n}")
    m = n + 1
    denominator = m * q ** m

    avgClosed = math.log2(m) - sum(runCount(m, r, q) / denominator * xlog2x(r) for r in range(1, m + 1))
    avgLiteral = math.log2(m) - sum(float(runCountLiteral(m, r, q) / denominator) * xlog2x(r) for r in range(1, m + 1))

    minimum, maximum = globalExtremaValues1Ins(q, n)
    avgDirect = _directMean(q, m, inputEntropy1InsClosed) if direct else None

    return AverageReport(n, q, common.ChannelDirection.Insertion, avgClosed, _insLowerBound(n, q), statedLowerBounds(n, q)[1], avgLiteral, minimum, maximum, avgDirect)


@dataclasses.dataclass(frozen=True)
class FigureRow:
    n: int
    minimum: float
    maximum: float
    avg: float
    avgLowerBound: float

    def toCsvRow(self) -> list[str]:
        return [str(self.n), f"{self.minimum:.12g}", f"{self.maximum:.12g}", f"{self.avg:.12g}", f"{self.avgLowerBound:.12g}"]


def figureTable(nMin: int, nMax: int, q: int = 2) -> list[FigureRow]:
    """Minimum, maximum, average and average lower bound of the single-deletion input entropy for every `n` in `[nMin, nMax]`"""
    if nMin < 2:
        raise common.DomainError(f"the figure starts at n >= 2, got n_min={nMin}")
    if nMax < nMin:
        raise common.DomainError(f"empty range: n_min={nMin} is larger than n_max={nMax}")

    rows: list[FigureRow] = []
    for n in range(nMin, nMax + 1):
        report = avg1Del(n, q, direct=False)
        rows.append(FigureRow(n, report.minimum, report.maximum, report.avgClosed, report.lowerBound))
    return rows


def writeFigureCsv(rows: list[FigureRow], path: Path) -> None:
    common.Utils.writeCsv(path, FIGURE_CSV_HEADER, (row.toCsvRow() for row in rows))
