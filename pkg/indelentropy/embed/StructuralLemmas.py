#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses

from .. import common
from ..seqcore import Word, RunLengthProfile

from .EmbeddingNumber import countEmbeddings


def _checkBinary(y: Word) -> None:
    if y.q != 2:
        raise common.DomainError(f"lemma stated for binary words, got q={y.q}")


def twoRunInsertionEmbedding(y: Word, i: int) -> tuple[Word, int]:
    """Inserts two runs of length one right after run `i` of `y`.

    The returned `x` has run-length profile `(r_1..r_i, 1, 1, r_{i+1}..r_R)`.
    `i = 0` prepends the new runs and `i = R` appends them. The weight is the
    closed form `1 + Σ_{j=b_i}^{f_i} r_j`, not a DP result.
    """
    _checkBinary(y)
    profile = RunLengthProfile.fromWord(y)
    R = profile.runCount
    if i < 0 or i > R:
        raise common.DomainError(f"run index must lie in [0, {R}], got {i}")

    if i == 0:
        s = y[0]
        x = Word((s, 1 - s) + y.symbols, 2)
    else:
        end = sum(profile.lengths[:i])
        s = y[end-1]
        x = Word(y.symbols[:end] + (1 - s, s) + y.symbols[end:], 2)

    bounds = profile.runIndexBounds()
    weight = 1 + sum(profile.r(j) for j in range(bounds.b(i), bounds.f(i) + 1))
    return x, weight


@dataclasses.dataclass(frozen=True)
class SpecialSupersequences:
    """The three 2-supersequences of `y` that start with a run of length one or two ahead of `y`.

    Each field is a `(word, closed-form weight)` pair.
    """

    beta: tuple[Word, int]
    """Profile `(1, 1, r_1, ..., r_R)`"""

    gamma: tuple[Word, int]
    """Profile `(2, r_1, ..., r_R)`"""

    delta: tuple[Word, int]
    """Profile `(1, r_1 + 1, r_2, ..., r_R)`"""

    def asDict(self) -> dict[str, tuple[Word, int]]:
        return {"beta": self.beta, "gamma": self.gamma, "delta": self.delta}


def specialSupersequences(y: Word) -> SpecialSupersequences:
    _checkBinary(y)
    profile = RunLengthProfile.fromWord(y)
    bounds = profile.runIndexBounds()

    s = y[0]
    other = 1 - s

    betaWord = Word((s, other) + y.symbols, 2)
    betaWeight = 1 + sum(profile.r(j) for j in range(1, bounds.f(0) + 1))

    gammaWord = Word((other, other) + y.symbols, 2)

    deltaWord = Word((other, s) + y.symbols, 2)
    deltaWeight = profile.r(1) + 1

    return SpecialSupersequences((betaWord, betaWeight), (gammaWord, 1), (deltaWord, deltaWeight))


def prependCaseWeight(x: Word, y: Word, alpha: int) -> int|None:
    """`ω_{α∘y}(α∘x)` for a 2-supersequence `x` of `y`, through the case split on `α`, `y_1` and `x_1`.

    Returns None for `α = y_1 = x_1`, which the case split does not cover.
    """
    _checkBinary(y)
    if x.q != y.q:
        raise common.DomainError(f"alphabet mismatch: x has q={x.q} but y has q={y.q}")
    if len(x) != len(y) + 2:
        raise common.DomainError(f"x must be two symbols longer than y, got |x|={len(x)} and |y|={len(y)}")
    if len(y) == 0:
        raise common.DomainError("empty word has no runs")
    if alpha not in (0, 1):
        raise common.DomainError(f"symbol {alpha} out of range for q=2")

    y1 = y[0]
    x1 = x[0]
    if alpha == y1 and y1 == x1:
        return None

    special = specialSupersequences(y)
    weight = countEmbeddings(x.symbols, y.symbols)

    if alpha != y1 and y1 == x1:
        return weight + (1 if x == special.beta[0] else 0)
    if alpha != y1:
        return 2 * weight + (1 if x == special.gamma[0] else 0)
    return weight + (1 if x == special.delta[0] else 0)
