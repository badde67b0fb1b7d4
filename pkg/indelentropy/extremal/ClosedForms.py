#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import math

from .. import common
from ..common.Utils import xlog2x
from ..seqcore import Word, enumerateWordsWithProfileMultiset, enumerateWordsWithRuns

from .ExtremalResult import ExtremalResult, ExtremumKind


Deletion = common.ChannelDirection.Deletion
Insertion = common.ChannelDirection.Insertion


def _checkRuns(q: int, m: int, R: int) -> None:
    if q < 2:
        raise common.DomainError(f"alphabet size must be at least 2, got q={q}")
    if R < 1:
        raise common.DomainError(f"a word needs at least one run, got R={R}")
    if R > m:
        raise common.DomainError(f"cannot build {R} runs in a word of length {m}")


def balancedLengths(m: int, R: int) -> list[int]:
    longCount = m % R
    return [m // R + 1] * longCount + [m // R] * (R - longCount)

def skewedLengths(m: int, R: int) -> list[int]:
    return [m - R + 1] + [1] * (R - 1)


def stepFunction(r: int) -> float:
    """`(r+1) log(r+1) - r log r`, strictly increasing for `r >= 1`"""
    return xlog2x(r + 1) - xlog2x(r)


def max1DelFixedRuns(q: int, m: int, R: int) -> ExtremalResult:
    """Largest single-deletion input entropy among the words of length `m` with `R` runs.

    Attained exactly by the balanced words, whose run lengths are all
    `⌈m/R⌉` or `⌊m/R⌋`.
    """
    _checkRuns(q, m, R)
    n = m + 1
    longCount = m % R
    weights = longCount * xlog2x(m // R + 2) + (R - longCount) * xlog2x(m // R + 1)
    value = math.log2(n * q) - weights / (n * q)
    witnesses = enumerateWordsWithProfileMultiset(q, balancedLengths(m, R))
    return ExtremalResult(value, tuple(witnesses), ExtremumKind.Maximum, Deletion, 1, q, m, R)


def min1DelFixedRuns(q: int, m: int, R: int) -> ExtremalResult:
    """Smallest single-deletion input entropy among the words of length `m` with `R` runs.

    Attained exactly by the skewed words: `R - 1` runs of length one and a
    single run of length `m - R + 1`.
    """
    _checkRuns(q, m, R)
    n = m + 1
    value = math.log2(n * q) - (xlog2x(m - R + 2) + 2 * (R - 1)) / (n * q)
    witnesses = enumerateWordsWithProfileMultiset(q, skewedLengths(m, R))
    return ExtremalResult(value, tuple(witnesses), ExtremumKind.Minimum, Deletion, 1, q, m, R)


def globalExtremaValues1Del(q: int, n: int) -> tuple[float, float]:
    """`(log(nq) - log(n)/q, log(nq) - 2m/(nq))` with `m = n - 1`"""
    if n < 2:
        raise common.DomainError(f"the single-deletion channel needs n >= 2, got n={n}")
    if q < 2:
        raise common.DomainError(f"alphabet size must be at least 2, got q={q}")
    m = n - 1
    return math.log2(n * q) - math.log2(n) / q, math.log2(n * q) - 2 * m / (n * q)

def globalExtrema1Del(q: int, n: int) -> tuple[ExtremalResult, ExtremalResult]:
    """Minimum and maximum single-deletion input entropy over every received word of length `n - 1`.

    The minimum `log(nq) - log(n)/q` is attained by the constant words and
    the maximum `log(nq) - 2m/(nq)` by the words with `m` runs.
    """
    minValue, maxValue = globalExtremaValues1Del(q, n)
    m = n - 1

    minWitnesses = tuple(Word.constant(s, m, q) for s in range(q))
    maxWitnesses = tuple(enumerateWordsWithRuns(q, m, m))

    return (
        ExtremalResult(minValue, minWitnesses, ExtremumKind.Minimum, Deletion, 1, q, m),
        ExtremalResult(maxValue, maxWitnesses, ExtremumKind.Maximum, Deletion, 1, q, m),
    )


def extrema1InsFixedRuns(q: int, m: int, R: int) -> tuple[ExtremalResult, ExtremalResult]:
    """Minimum and maximum single-insertion input entropy among the words of length `m` with `R` runs.

    The minimum is attained exactly by the skewed words and the maximum
    exactly by the balanced words.
    """
    _checkRuns(q, m, R)
    longCount = m % R

    minValue = math.log2(m) - xlog2x(m - R + 1) / m
    maxValue = math.log2(m) - (longCount * xlog2x(m // R + 1) + (R - longCount) * xlog2x(m // R)) / m

    minimum = ExtremalResult(max(0.0, minValue), tuple(enumerateWordsWithProfileMultiset(q, skewedLengths(m, R))), ExtremumKind.Minimum, Insertion, 1, q, m, R)
    maximum = ExtremalResult(max(0.0, maxValue), tuple(enumerateWordsWithProfileMultiset(q, balancedLengths(m, R))), ExtremumKind.Maximum, Insertion, 1, q, m, R)
    return minimum, maximum


def globalExtremaValues1Ins(q: int, n: int) -> tuple[float, float]:
    """`(0, log m)` with `m = n + 1`"""
    if n < 1:
        raise common.DomainError(f"the single-insertion channel needs n >= 1, got n={n}")
    if q < 2:
        raise common.DomainError(f"alphabet size must be at least 2, got q={q}")
    return 0.0, math.log2(n + 1)

def globalExtrema1Ins(q: int, n: int) -> tuple[ExtremalResult, ExtremalResult]:
    """Minimum and maximum single-insertion input entropy over every received word of length `m = n + 1`.

    The minimum is 0, attained by the constant words. The maximum is `log m`,
    attained by the words with `m` runs.
    """
    minValue, maxValue = globalExtremaValues1Ins(q, n)
    m = n + 1

    return (
        ExtremalResult(minValue, tuple(Word.constant(s, m, q) for s in range(q)), ExtremumKind.Minimum, Insertion, 1, q, m),
        ExtremalResult(maxValue, tuple(enumerateWordsWithRuns(q, m, m)), ExtremumKind.Maximum, Insertion, 1, q, m),
    )


def min2DelStated(m: int) -> float|None:
    """The double-deletion minimum written with `C(m, 2)`, as it is usually quoted. None when `m < 2`"""
    if m < 2:
        return None
    return 2 + 0.75 * math.log2(math.comb(m, 2)) - 0.5 * math.log2(m + 1)


def min2Del(m: int) -> ExtremalResult:
    """Smallest double-deletion input entropy over the binary words of length `m`.

    Attained only by the constant words. The value is
    `2 + (3/4) log C(m+2, 2) - (1/2) log(m+1)`, which agrees with full ball
    enumeration. The `C(m, 2)` reading is carried along as `statedValue`.
    """
    if m < 1:
        raise common.DomainError(f"the double-deletion minimum needs m >= 1, got m={m}")

    value = 2 + 0.75 * math.log2(math.comb(m + 2, 2)) - 0.5 * math.log2(m + 1)
    stated = min2DelStated(m)
    note = "value uses C(m+2,2), which matches enumeration; stated_value uses C(m,2)"
    if stated is None:
        note = "value uses C(m+2,2), which matches enumeration; the C(m,2) reading is undefined for m < 2"

    return ExtremalResult(value, (Word.constant(0, m, 2), Word.constant(1, m, 2)), ExtremumKind.Minimum, Deletion, 2, 2, m, statedValue=stated, note=note)
