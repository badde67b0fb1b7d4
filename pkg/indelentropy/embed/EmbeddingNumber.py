#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

from typing import Sequence

from .. import common
from ..seqcore import Word


def countEmbeddings(x: Sequence[int], y: Sequence[int]) -> int:
    """Number of strictly increasing index sets of `x` that spell `y`.

    Standard subsequence-count DP: `counts[j]` is the number of embeddings of
    `y[:j]` into the prefix of `x` scanned so far. Exact integers.
    """
    m = len(y)
    if m > len(x):
        return 0

    counts = [0] * (m + 1)
    counts[0] = 1
    for symbol in x:
        for j in range(m, 0, -1):
            if y[j-1] == symbol:
                counts[j] += counts[j-1]
    return counts[m]


def embeddingNumber(x: Word, y: Word) -> int:
    """`ω_y(x)`, the number of distinct occurrences of `y` as a subsequence of `x`"""
    if x.q != y.q:
        raise common.DomainError(f"alphabet mismatch: x has q={x.q} but y has q={y.q}")
    if len(y) > len(x):
        raise common.DomainError(f"cannot embed a word of length {len(y)} into a word of length {len(x)}")
    return countEmbeddings(x.symbols, y.symbols)


def prependRecursionCheck(x: Word, y: Word, alpha: int) -> tuple[int, int]:
    """Both sides of the prepend recursion for the embedding number.

    `lhs` is `ω_{α∘y}(α∘x)` computed directly. `rhs` is
    `ω_y(x) + Σ_{i=1}^{k} ω_y(x[i+1:]) · 1[α = x_i]` with `k = |x| - |y|`.
    """
    if x.q != y.q:
        raise common.DomainError(f"alphabet mismatch: x has q={x.q} but y has q={y.q}")
    k = len(x) - len(y)
    if k < 0:
        raise common.DomainError(f"cannot embed a word of length {len(y)} into a word of length {len(x)}")

    lhs = embeddingNumber(x.prepend(alpha), y.prepend(alpha))

    rhs = countEmbeddings(x.symbols, y.symbols)
    for i in range(1, k + 1):
        if x[i-1] == alpha:
            rhs += countEmbeddings(x.symbols[i:], y.symbols)
    return lhs, rhs


def firstSymbolRecursion(x: Word, y: Word) -> tuple[int, int]:
    """Both sides of the first-symbol recursion for the embedding number.

    Splits on whether `x_1` is used by the embedding:
    `ω_y(x) = ω_y(x[2:]) + 1[x_1 = y_1] · ω_{y[2:]}(x[2:])`.
    Returns the direct value and the recursion value.
    """
    if x.q != y.q:
        raise common.DomainError(f"alphabet mismatch: x has q={x.q} but y has q={y.q}")
    if len(y) > len(x):
        raise common.DomainError(f"cannot embed a word of length {len(y)} into a word of length {len(x)}")

    direct = countEmbeddings(x.symbols, y.symbols)
    if len(y) == 0:
        return direct, 1
    if len(x) == 0:
        return direct, 0

    recursion = countEmbeddings(x.symbols[1:], y.symbols)
    if x[0] == y[0]:
        recursion += countEmbeddings(x.symbols[1:], y.symbols[1:])
    return direct, recursion
