#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

from typing import Sequence

from .. import common

from .Word import Word


def _checkShape(q: int, m: int, R: int, firstSymbol: int) -> None:
    if R < 1:
        raise common.DomainError(f"a word needs at least one run, got R={R}")
    if R > m:
        raise common.DomainError(f"cannot build {R} runs in a word of length {m}")
    if firstSymbol < 0 or firstSymbol >= q:
        raise common.DomainError(f"symbol {firstSymbol} out of range for q={q}")


def wordFromProfile(lengths: Sequence[int], q: int = 2, firstSymbol: int = 0) -> Word:
    """Builds the canonical word whose runs have the given lengths.

    Run `i` (0-based) carries symbol `(firstSymbol + i) mod q`, which keeps
    consecutive runs distinct for every `q >= 2`.
    """
    if firstSymbol < 0 or firstSymbol >= q:
        raise common.DomainError(f"symbol {firstSymbol} out of range for q={q}")

    symbols: list[int] = []
    for i, r in enumerate(lengths):
        if r < 1:
            raise common.DomainError(f"run lengths must be positive, got {tuple(lengths)}")
        symbols.extend([(firstSymbol + i) % q] * r)
    return Word(tuple(symbols), q)


def skewedWord(q: int, m: int, R: int, firstSymbol: int = 0, longRunPosition: int = 1) -> Word:
    _checkShape(q, m, R, firstSymbol)
    if longRunPosition < 1 or longRunPosition > R:
        raise common.DomainError(f"long run position must lie in [1, {R}], got {longRunPosition}")

    lengths = [1] * R
    lengths[longRunPosition-1] = m - R + 1
    return wordFromProfile(lengths, q, firstSymbol)


def balancedWord(q: int, m: int, R: int, firstSymbol: int = 0) -> Word:
    _checkShape(q, m, R, firstSymbol)

    longCount = m % R
    lengths = [m // R + 1] * longCount + [m // R] * (R - longCount)
    return wordFromProfile(lengths, q, firstSymbol)
