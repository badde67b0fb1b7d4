#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses
import itertools
import multiprocessing
from typing import Any, Iterable

from .. import common
from ..seqcore import Word, RunLengthProfile, countWordsWithRuns, enumerateWords, enumerateWordsWithRuns
from ..entropy import ChannelSpec, inputEntropyBits

from .ExtremalResult import ExtremalResult, ExtremumKind, ExtremalMethod


@dataclasses.dataclass
class _PartialScan:
    """Extremum candidates of one slice of the word space"""

    scanned: int = 0
    minValue: float = float("inf")
    maxValue: float = float("-inf")
    minCandidates: list[tuple[float, Word]] = dataclasses.field(default_factory=list)
    maxCandidates: list[tuple[float, Word]] = dataclasses.field(default_factory=list)

    def add(self, value: float, word: Word, tolerance: float) -> None:
        self.scanned += 1

        if value < self.minValue - tolerance:
            self.minCandidates = [(value, word)]
        elif value <= self.minValue + tolerance:
            self.minCandidates.append((value, word))
        self.minValue = min(self.minValue, value)

        if value > self.maxValue + tolerance:
            self.maxCandidates = [(value, word)]
        elif value >= self.maxValue - tolerance:
            self.maxCandidates.append((value, word))
        self.maxValue = max(self.maxValue, value)

    def merge(self, other: _PartialScan) -> None:
        self.scanned += other.scanned
        self.minCandidates.extend(other.minCandidates)
        self.maxCandidates.extend(other.maxCandidates)
        self.minValue = min(self.minValue, other.minValue)
        self.maxValue = max(self.maxValue, other.maxValue)

    def minimum(self, tolerance: float) -> tuple[float, list[Word]]:
        return self.minValue, sorted(w for v, w in self.minCandidates if v <= self.minValue + tolerance)

    def maximum(self, tolerance: float) -> tuple[float, list[Word]]:
        return self.maxValue, sorted(w for v, w in self.maxCandidates if v >= self.maxValue - tolerance)


def _scan(words: Iterable[Word], direction: common.ChannelDirection, k: int, tolerance: float) -> _PartialScan:
    partial = _PartialScan()
    for word in words:
        partial.add(inputEntropyBits(direction, k, word), word, tolerance)
    return partial


def _wordsWithPrefix(q: int, m: int, runs: int|None, prefix: tuple[int, ...]) -> Iterable[Word]:
    for rest in itertools.product(range(q), repeat=m - len(prefix)):
        word = Word(prefix + rest, q)
        if runs is not None and RunLengthProfile.fromWord(word).runCount != runs:
            continue
        yield word


def _applyConfig(snapshot: dict[str, Any]) -> None:
    for name, value in snapshot.items():
        setattr(common.GlobalConfig, name, value)

def _scanPrefix(direction: common.ChannelDirection, k: int, q: int, m: int, runs: int|None, prefix: tuple[int, ...], tolerance: float) -> _PartialScan:
    return _scan(_wordsWithPrefix(q, m, runs, prefix), direction, k, tolerance)


def _prefixLength(q: int, m: int, threads: int) -> int:
    length = 0
    while length < m and q ** length < 4 * threads:
        length += 1
    return length


def exhaustiveExtremizers(spec: ChannelSpec, runs: int|None = None) -> tuple[ExtremalResult, ExtremalResult]:
    """Scans every received word of the channel and returns the minimum and maximum input entropy with their full attainer sets.

    The scan covers `Σ_q^m` with `m` the output length of `spec`, or only the
    words with `runs` runs when given. The work is split by word prefix
    across `GlobalConfig.THREADS` processes; the result does not depend on the
    split.
    """
    direction = spec.direction
    k = spec.k
    q = spec.q
    m = spec.outputLength
    tolerance = common.GlobalConfig.ATTAINMENT_TOLERANCE

    if m < 1:
        raise common.DomainError(f"the scanned words need at least one symbol, got m={m}")
    if runs is not None and (runs < 1 or runs > m):
        raise common.DomainError(f"cannot build {runs} runs in a word of length {m}")

    if runs is None:
        common.checkEnumerationSpace(f"all words with q={q}, m={m}", q ** m)
    else:
        common.checkEnumerationSpace(f"words with q={q}, m={m}, R={runs}", countWordsWithRuns(q, m, runs))

    threads = max(1, common.GlobalConfig.THREADS)
    common.Utils.eprintVerbose(f"Scanning {spec.name} input entropies over q={q}, m={m}, runs={runs if runs is not None else 'all'} using {threads} process(es)")

    if threads == 1:
        words = enumerateWords(q, m) if runs is None else enumerateWordsWithRuns(q, m, runs)
        result = _scan(words, direction, k, tolerance)
    else:
        if runs is not None:
            # the prefix workers filter the full space
            common.checkEnumerationSpace(f"all words with q={q}, m={m}", q ** m)
        prefixes = list(itertools.product(range(q), repeat=_prefixLength(q, m, threads)))
        snapshot = dataclasses.asdict(common.GlobalConfig)
        with multiprocessing.Pool(processes=threads, initializer=_applyConfig, initargs=(snapshot,)) as pool:
            partials = pool.starmap(_scanPrefix, [(direction, k, q, m, runs, prefix, tolerance) for prefix in prefixes])

        result = _PartialScan()
        for partial in partials:
            result.merge(partial)

    common.Utils.eprintVerbose(f"Scanned {result.scanned} words")

    minValue, minWitnesses = result.minimum(tolerance)
    maxValue, maxWitnesses = result.maximum(tolerance)
    return (
        ExtremalResult(minValue, tuple(minWitnesses), ExtremumKind.Minimum, direction, k, q, m, runs, ExtremalMethod.Exhaustive),
        ExtremalResult(maxValue, tuple(maxWitnesses), ExtremumKind.Maximum, direction, k, q, m, runs, ExtremalMethod.Exhaustive),
    )
