#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

from fractions import Fraction
import itertools

from .. import common
from ..seqcore import enumerateWords


def _checkRange(m: int, r: int, q: int) -> None:
    if q < 2:
        raise common.DomainError(f"alphabet size must be at least 2, got q={q}")
    if r < 1:
        raise common.DomainError(f"run length must be positive, got r={r}")
    if r > m:
        raise common.DomainError(f"no run of length {r} fits in a word of length {m}")


def runCount(m: int, r: int, q: int) -> int:
    """Total number of runs of length `r` over all the words of `Σ_q^m`.

    `(q-1) q^(m-r-1) ((q-1)(m-r+1) + 2)` for `r < m`. The only runs of length
    `m` are the `q` constant words.
    """
    _checkRange(m, r, q)
    if r == m:
        return q
    return (q - 1) * q ** (m - r - 1) * ((q - 1) * (m - r + 1) + 2)


def runCountLiteral(m: int, r: int, q: int) -> Fraction:
    """The `r < m` expression of `runCount` evaluated at every `r`, including `r = m` where it is not an integer"""
    _checkRange(m, r, q)
    return (q - 1) * Fraction(q) ** (m - r - 1) * ((q - 1) * (m - r + 1) + 2)


def runCensus(m: int, q: int) -> dict[int, int]:
    """Counts the runs of every length over all the words of `Σ_q^m`, by enumeration"""
    census: dict[int, int] = {r: 0 for r in range(1, m + 1)}
    for word in enumerateWords(q, m):
        for _, group in itertools.groupby(word.symbols):
            census[len(list(group))] += 1
    return census
