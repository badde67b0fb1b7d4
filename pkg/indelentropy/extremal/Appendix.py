#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import math
from typing import Callable

from .. import common
from ..common.Utils import xlog2x
from ..seqcore import Word, RunLengthProfile, enumerateWords
from ..embed import insertionBall
from ..entropy import weightSum

from .ExtremalResult import ExtremalResult, ExtremumKind, ExtremalMethod


APPENDIX_WEIGHT_NOTE = "argmax of the closed-form first-run increment; its values differ from the enumerated increment (appendixIncrementDirect), so only the argmax set is compared"


def appendixWeight(y: Word) -> float:
    """Closed-form increment of the double-deletion weight sum when the first run of `y` grows by one.

    Sum of a binomial block on `r_1`, a block on the prefix sum up to `f_1`,
    a block scaled by `m - R + 1`, and a cross-run block over runs `2..R`.
    """
    if y.q != 2:
        raise common.DomainError(f"lemma stated for binary words, got q={y.q}")
    profile = RunLengthProfile.fromWord(y)
    bounds = profile.runIndexBounds()
    m = len(y)
    R = profile.runCount
    r1 = profile.r(1)

    prefixSum = sum(profile.r(i) for i in range(1, bounds.f(1) + 1))

    value = xlog2x(math.comb(r1 + 3, 2)) - xlog2x(math.comb(r1 + 2, 2))
    value += xlog2x(1 + prefixSum) - xlog2x(prefixSum)
    value += (m - R + 1) * (xlog2x(r1 + 2) - xlog2x(r1 + 1))
    for i in range(2, R + 1):
        ri = profile.r(i)
        value += xlog2x((r1 + 2) * (ri + 1)) - xlog2x((r1 + 1) * (ri + 1))
    return value


def _prefixedBallWeightSum(y: Word, prefix: tuple[int, ...], center: Word) -> float:
    ball = insertionBall(center, 2)
    return weightSum(y, (Word(prefix + x.symbols, 2) for x in ball.words()))


def appendixIncrementDirect(z: Word) -> float:
    """`W_{z_1 z_1 ∘ I_2(z[2:])}(z_1 ∘ z) - W_{z_1 ∘ I_2(z[2:])}(z)`, by ball enumeration"""
    if z.q != 2:
        raise common.DomainError(f"lemma stated for binary words, got q={z.q}")
    if len(z) == 0:
        raise common.DomainError("empty word has no runs")

    z1 = z[0]
    tail = z[1:]
    grown = _prefixedBallWeightSum(z.prepend(z1), (z1, z1), tail)
    base = _prefixedBallWeightSum(z, (z1,), tail)
    return grown - base


def inductionWeight(y: Word) -> float:
    """`W_{y_1 ∘ I_2(y[2:])}(y)`"""
    if y.q != 2:
        raise common.DomainError(f"lemma stated for binary words, got q={y.q}")
    if len(y) == 0:
        raise common.DomainError("empty word has no runs")
    return _prefixedBallWeightSum(y, (y[0],), y[1:])


def _argmax(m: int, evaluate: Callable[[Word], float], note: str) -> ExtremalResult:
    if m < 1:
        raise common.DomainError(f"the scanned words need at least one symbol, got m={m}")
    tolerance = common.GlobalConfig.ATTAINMENT_TOLERANCE

    scored = [(evaluate(y), y) for y in enumerateWords(2, m)]
    best = max(value for value, _ in scored)
    witnesses = tuple(y for value, y in scored if value >= best - tolerance)
    return ExtremalResult(best, witnesses, ExtremumKind.Maximum, common.ChannelDirection.Deletion, 2, 2, m, method=ExtremalMethod.Exhaustive, note=note)


def appendixWeightArgmax(m: int) -> ExtremalResult:
    """Every binary word of length `m` maximizing `appendixWeight`

    The closed-form values are not the enumerated increments (15.509775
    against 16.2646625 for the word `0`), only the argmax set is meaningful.
    """
    return _argmax(m, appendixWeight, APPENDIX_WEIGHT_NOTE)

def inductionArgmax(m: int) -> ExtremalResult:
    """The set `g_m` of binary words of length `m` maximizing `inductionWeight`"""
    return _argmax(m, inductionWeight, "argmax of the double-deletion weight sum restricted to supersequences sharing the first symbol")
