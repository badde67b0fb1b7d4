#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

from fractions import Fraction
import math
from typing import Iterable

from .. import common
from ..seqcore import Word, RunLengthProfile
from ..embed import WeightedBall, countEmbeddings, insertionBall, deletionBall

from .ChannelSpec import ChannelSpec
from .EntropyReport import EntropyReport, EntropyMethod, EntropyQuantity
from .Probability import fractionLog2


def _clampBits(bits: float) -> float:
    # rounding can leave values like -4e-16 on zero-entropy words
    if bits < 0.0 and bits > -1e-12:
        return 0.0
    return bits

def _checkSpecMatchesOutput(spec: ChannelSpec, y: Word) -> None:
    if y.q != spec.q:
        raise common.DomainError(f"alphabet mismatch: channel has q={spec.q}, word has q={y.q}")
    if len(y) != spec.outputLength:
        raise common.DomainError(f"length mismatch: the {spec.name} channel outputs words of length {spec.outputLength}, got {len(y)}")

def _checkSpecMatchesInput(spec: ChannelSpec, x: Word) -> None:
    if x.q != spec.q:
        raise common.DomainError(f"alphabet mismatch: channel has q={spec.q}, word has q={x.q}")
    if len(x) != spec.n:
        raise common.DomainError(f"length mismatch: the {spec.name} channel transmits words of length {spec.n}, got {len(x)}")


def ballWeightSum(ball: WeightedBall) -> float:
    """`W_S` over a materialized ball, summed in lexicographic member order"""
    return common.Utils.sumXlog2x(ball.weights())

def weightSum(y: Word, subset: Iterable[Word]) -> float:
    """`W_S(y) = Σ_{x ∈ S} ω_y(x) log ω_y(x)`, summed in lexicographic order of `S`"""
    return common.Utils.sumXlog2x(countEmbeddings(x.symbols, y.symbols) for x in sorted(set(subset)))


def inputEntropy(spec: ChannelSpec, y: Word) -> EntropyReport:
    """Input entropy of the received word `y`, by enumerating the ball of possible transmitted words"""
    _checkSpecMatchesOutput(spec, y)

    if spec.direction == common.ChannelDirection.Deletion:
        ball = insertionBall(y, spec.k)
        normalizer = math.comb(spec.n, spec.k) * spec.q ** spec.k
    else:
        ball = deletionBall(y, spec.k)
        normalizer = math.comb(spec.n + spec.k, spec.k)

    if spec.k == 0:
        bits = 0.0
        weights = 0.0
    else:
        weights = ballWeightSum(ball)
        bits = _clampBits(math.log2(normalizer) - weights / normalizer)

    return EntropyReport(bits, EntropyMethod.Enumerated, spec.direction, spec.k, spec.q, y, EntropyQuantity.Input, ballSize=len(ball), weightSum=weights)


def singleDeletionWeightSum(profile: RunLengthProfile) -> float:
    return common.Utils.sumXlog2x(r + 1 for r in profile.lengths)

def singleInsertionWeightSum(profile: RunLengthProfile) -> float:
    return common.Utils.sumXlog2x(profile.lengths)


def inputEntropy1DelClosed(y: Word) -> EntropyReport:
    """Input entropy of `y` through the single-deletion channel, from its run lengths only.

    `log(nq) - Σ (r_i + 1) log(r_i + 1) / (nq)` with `n = |y| + 1`. Depends only
    on the multiset of run lengths.
    """
    profile = RunLengthProfile.fromWord(y)
    normalizer = (len(y) + 1) * y.q
    weights = singleDeletionWeightSum(profile)
    bits = _clampBits(math.log2(normalizer) - weights / normalizer)
    return EntropyReport(bits, EntropyMethod.ClosedForm, common.ChannelDirection.Deletion, 1, y.q, y, EntropyQuantity.Input, weightSum=weights)

def inputEntropy1InsClosed(y: Word) -> EntropyReport:
    """Input entropy of `y` through the single-insertion channel: `log m - Σ r_i log r_i / m` with `m = |y|`"""
    profile = RunLengthProfile.fromWord(y)
    normalizer = len(y)
    weights = singleInsertionWeightSum(profile)
    bits = _clampBits(math.log2(normalizer) - weights / normalizer)
    return EntropyReport(bits, EntropyMethod.ClosedForm, common.ChannelDirection.Insertion, 1, y.q, y, EntropyQuantity.Input, weightSum=weights)


def inputEntropyBits(direction: common.ChannelDirection, k: int, y: Word) -> float:
    """Input entropy in bits, through the closed form when one exists"""
    if k == 1:
        if direction == common.ChannelDirection.Deletion:
            return inputEntropy1DelClosed(y).bits
        return inputEntropy1InsClosed(y).bits
    return inputEntropy(ChannelSpec.fromOutput(direction, k, y.q, len(y)), y).bits


def outputEntropy(spec: ChannelSpec, x: Word) -> EntropyReport:
    """Entropy of the channel output distribution for the transmitted word `x`.

    Computed as `-Σ p log p` over exact rational probabilities, independently
    of the normalizer formula used by `inputEntropy`.
    """
    _checkSpecMatchesInput(spec, x)

    if spec.direction == common.ChannelDirection.Deletion:
        ball = deletionBall(x, spec.k)
        denominator = math.comb(spec.n, spec.k)
    else:
        ball = insertionBall(x, spec.k)
        denominator = math.comb(spec.n + spec.k, spec.k) * spec.q ** spec.k

    bits = 0.0
    for _, weight in ball.items():
        p = Fraction(weight, denominator)
        bits -= float(p) * fractionLog2(p)
    bits = _clampBits(bits)

    return EntropyReport(bits, EntropyMethod.Enumerated, spec.direction, spec.k, spec.q, x, EntropyQuantity.Output, ballSize=len(ball), weightSum=ballWeightSum(ball))


def dualityCheck(y: Word, k: int, direction: common.ChannelDirection = common.ChannelDirection.Deletion) -> tuple[float, float]:
    """Input entropy of `y` through the `k`-`direction` channel next to the output entropy of `y` through the dual channel.

    Both values come from independent computations and agree under uniform
    transmission.
    """
    spec = ChannelSpec.fromOutput(direction, k, y.q, len(y))
    a = inputEntropy(spec, y).bits
    b = outputEntropy(ChannelSpec(direction.dual(), k, y.q, len(y)), y).bits
    return a, b
