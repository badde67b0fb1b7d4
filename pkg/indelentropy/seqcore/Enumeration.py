#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import itertools
import math
from typing import Generator, Sequence

from .. import common

from .Word import Word


def countWordsWithRuns(q: int, m: int, R: int) -> int:
    if R < 1 or R > m:
        return 0
    return math.comb(m - 1, R - 1) * q * (q - 1) ** (R - 1)


def enumerateWords(q: int, m: int) -> Generator[Word, None, None]:
    """Yields every word of `Σ_q^m` once, in lexicographic order"""
    if q < 2:
        raise common.DomainError(f"alphabet size must be at least 2, got q={q}")
    if m < 0:
        raise common.DomainError(f"word length must be nonnegative, got m={m}")
    common.checkEnumerationSpace(f"all words with q={q}, m={m}", q ** m)

    for symbols in itertools.product(range(q), repeat=m):
        yield Word(symbols, q)


def enumerateWordsWithRuns(q: int, m: int, R: int) -> Generator[Word, None, None]:
    """Yields the words of length `m` with exactly `R` runs, in lexicographic order.

    Yields nothing when `R` is not in `[1, m]`.
    """
    if q < 2:
        raise common.DomainError(f"alphabet size must be at least 2, got q={q}")
    if R < 1 or R > m:
        return
    common.checkEnumerationSpace(f"words with q={q}, m={m}, R={R}", countWordsWithRuns(q, m, R))

    symbols = [0] * m

    def extend(position: int, runs: int) -> Generator[Word, None, None]:
        if position == m:
            if runs == R:
                yield Word(tuple(symbols), q)
            return

        remaining = m - position
        for s in range(q):
            newRuns = runs + (1 if position == 0 or s != symbols[position-1] else 0)
            # every remaining position can open at most one run
            if newRuns > R or newRuns + (remaining - 1) < R:
                continue
            symbols[position] = s
            yield from extend(position + 1, newRuns)

    yield from extend(0, 0)


def _distinctArrangements(lengths: Sequence[int]) -> Generator[tuple[int, ...], None, None]:
    counts: dict[int, int] = {}
    for r in lengths:
        counts[r] = counts.get(r, 0) + 1
    keys = sorted(counts)
    total = len(lengths)
    current: list[int] = []

    def extend() -> Generator[tuple[int, ...], None, None]:
        if len(current) == total:
            yield tuple(current)
            return
        for r in keys:
            if counts[r] == 0:
                continue
            counts[r] -= 1
            current.append(r)
            yield from extend()
            current.pop()
            counts[r] += 1

    yield from extend()


def enumerateWordsWithProfileMultiset(q: int, lengths: Sequence[int]) -> list[Word]:
    """Every word whose run lengths are an arrangement of `lengths`, sorted"""
    R = len(lengths)
    if R == 0:
        return []
    m = sum(lengths)
    common.checkEnumerationSpace(f"words with run multiset {tuple(sorted(lengths))}", countWordsWithRuns(q, m, R))

    labelings: list[tuple[int, ...]] = []
    for first in range(q):
        for rest in itertools.product(range(q - 1), repeat=R - 1):
            labels = [first]
            for step in rest:
                # skip the previous symbol
                labels.append(step if step < labels[-1] else step + 1)
            labelings.append(tuple(labels))

    words: set[Word] = set()
    for arrangement in _distinctArrangements(lengths):
        for labels in labelings:
            symbols: list[int] = []
            for r, s in zip(arrangement, labels):
                symbols.extend([s] * r)
            words.add(Word(tuple(symbols), q))
    return sorted(words)
