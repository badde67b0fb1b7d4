#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses
import math
import random
from typing import Callable

from .. import common
from ..seqcore import Word, RunLengthProfile, enumerateWords
from ..embed import (
    embeddingNumber,
    insertionBall,
    deletionBall,
    insertionBallSize,
    prependRecursionCheck,
    firstSymbolRecursion,
    twoRunInsertionEmbedding,
    specialSupersequences,
    prependCaseWeight,
)
from ..entropy import ChannelSpec, dualityCheck
from ..extremal import (
    ExtremalResult,
    exhaustiveExtremizers,
    max1DelFixedRuns,
    min1DelFixedRuns,
    globalExtrema1Del,
    extrema1InsFixedRuns,
    globalExtrema1Ins,
    min2Del,
    appendixWeightArgmax,
    inductionArgmax,
)
from ..average import runCount, runCensus, avg1Del, avg1Ins


DUALITY_TOLERANCE = 1e-12
RANDOM_LEMMA_CASES = 1000

Deletion = common.ChannelDirection.Deletion
Insertion = common.ChannelDirection.Insertion


@dataclasses.dataclass(frozen=True)
class SuiteResult:
    name: str
    cases: int
    counterexample: str|None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def summary(self) -> str:
        if self.counterexample is None:
            return f"PASS ({self.cases} cases)"
        return f"FAIL after {self.cases} cases: {self.counterexample}"


class _Counterexample(Exception):
    pass


class _SuiteRun:
    def __init__(self, name: str) -> None:
        self.name: str = name
        self.cases: int = 0
        self.counterexample: str|None = None

    def check(self, ok: bool, describe: Callable[[], str]) -> None:
        self.cases += 1
        if not ok:
            self.counterexample = describe()
            raise _Counterexample(self.counterexample)

    def result(self) -> SuiteResult:
        return SuiteResult(self.name, self.cases, self.counterexample)


def _close(a: float, b: float, tolerance: float) -> bool:
    return abs(a - b) <= tolerance

def _words(ws: frozenset[Word]) -> str:
    return "{" + ",".join(w.toStr() for w in sorted(ws)) + "}"


def _normalizationSuite(run: _SuiteRun, maxM: int, q: int, seed: int) -> None:
    for alphabet in (2, 3):
        for m in range(1, maxM + 1):
            common.Utils.eprintVerbose(f"normalization: q={alphabet}, m={m}")
            for y in enumerateWords(alphabet, m):
                for k in (1, 2):
                    ball = insertionBall(y, k)
                    expected = math.comb(m + k, k) * alphabet ** k
                    run.check(ball.totalWeight() == expected, lambda: f"I_{k}({y}) q={alphabet} weights sum to {ball.totalWeight()}, expected {expected}")
                    run.check(len(ball) == insertionBallSize(m, k, alphabet), lambda: f"I_{k}({y}) q={alphabet} has {len(ball)} words, expected {insertionBallSize(m, k, alphabet)}")

                    if k <= m:
                        dball = deletionBall(y, k)
                        run.check(dball.totalWeight() == math.comb(m, k), lambda: f"D_{k}({y}) q={alphabet} weights sum to {dball.totalWeight()}, expected {math.comb(m, k)}")


def _dualitySuite(run: _SuiteRun, maxM: int, q: int, seed: int) -> None:
    checks = ((1, Deletion), (1, Insertion), (2, Deletion))
    for m in range(1, maxM + 1):
        common.Utils.eprintVerbose(f"duality: q={q}, m={m}")
        for y in enumerateWords(q, m):
            for k, direction in checks:
                a, b = dualityCheck(y, k, direction)
                run.check(_close(a, b, DUALITY_TOLERANCE), lambda: f"y={y} q={q}: input entropy through {k}-{direction.shortName()} is {a!r} but output entropy through {k}-{direction.dual().shortName()} is {b!r}")


def _checkExtremal(run: _SuiteRun, found: ExtremalResult, expected: ExtremalResult) -> None:
    tolerance = common.GlobalConfig.AGREEMENT_TOLERANCE
    scope = f"{expected.kind.toStr()} {expected.k}-{expected.direction.shortName()} q={expected.q} m={expected.m} R={expected.runs if expected.runs is not None else 'all'}"
    run.check(_close(found.value, expected.value, tolerance), lambda: f"{scope}: exhaustive value {found.value!r}, closed form {expected.value!r}")
    run.check(found.witnessSet == expected.witnessSet, lambda: f"{scope}: exhaustive witnesses {_words(found.witnessSet)}, closed form {_words(expected.witnessSet)}")


def _extremalSuite(run: _SuiteRun, maxM: int, q: int, seed: int) -> None:
    for alphabet in (2, 3):
        for m in range(1, maxM + 1):
            common.Utils.eprintVerbose(f"extremal: q={alphabet}, m={m}")
            for R in range(1, m + 1):
                delMin, delMax = exhaustiveExtremizers(ChannelSpec.fromOutput(Deletion, 1, alphabet, m), R)
                _checkExtremal(run, delMin, min1DelFixedRuns(alphabet, m, R))
                _checkExtremal(run, delMax, max1DelFixedRuns(alphabet, m, R))

                if m >= 2:
                    insMin, insMax = exhaustiveExtremizers(ChannelSpec.fromOutput(Insertion, 1, alphabet, m), R)
                    closedMin, closedMax = extrema1InsFixedRuns(alphabet, m, R)
                    _checkExtremal(run, insMin, closedMin)
                    _checkExtremal(run, insMax, closedMax)

            delMin, delMax = exhaustiveExtremizers(ChannelSpec.fromOutput(Deletion, 1, alphabet, m))
            closedMin, closedMax = globalExtrema1Del(alphabet, m + 1)
            _checkExtremal(run, delMin, closedMin)
            _checkExtremal(run, delMax, closedMax)

            if m >= 2:
                insMin, insMax = exhaustiveExtremizers(ChannelSpec.fromOutput(Insertion, 1, alphabet, m))
                closedMin, closedMax = globalExtrema1Ins(alphabet, m - 1)
                _checkExtremal(run, insMin, closedMin)
                _checkExtremal(run, insMax, closedMax)

    for m in range(1, maxM + 1):
        common.Utils.eprintVerbose(f"extremal: 2-Del, m={m}")
        found, _ = exhaustiveExtremizers(ChannelSpec.fromOutput(Deletion, 2, 2, m))
        _checkExtremal(run, found, min2Del(m))


def _averageSuite(run: _SuiteRun, maxM: int, q: int, seed: int) -> None:
    tolerance = common.GlobalConfig.AGREEMENT_TOLERANCE

    for alphabet in (2, 3):
        for m in range(1, maxM + 1):
            census = runCensus(m, alphabet)
            for r in range(1, m + 1):
                run.check(census[r] == runCount(m, r, alphabet), lambda: f"q={alphabet} m={m} r={r}: census counts {census[r]} runs, run_count gives {runCount(m, r, alphabet)}")
            total = sum(r * runCount(m, r, alphabet) for r in range(1, m + 1))
            run.check(total == m * alphabet ** m, lambda: f"q={alphabet} m={m}: run lengths add up to {total}, expected {m * alphabet ** m}")

        for n in range(2, maxM + 2):
            common.Utils.eprintVerbose(f"average: q={alphabet}, n={n}")
            reports = [avg1Del(n, alphabet)]
            if n + 1 <= maxM:
                reports.append(avg1Ins(n, alphabet))

            for report in reports:
                label = f"1-{report.direction.shortName()} q={alphabet} n={n}"
                direct = report.avgDirect
                if direct is None:
                    continue
                run.check(_close(report.avgClosed, direct, tolerance), lambda: f"{label}: closed average {report.avgClosed!r}, direct average {direct!r}")
                run.check(report.lowerBound <= direct + tolerance, lambda: f"{label}: lower bound {report.lowerBound!r} above the average {direct!r}")
                run.check(report.minimum - tolerance <= direct <= report.maximum + tolerance, lambda: f"{label}: average {direct!r} outside [{report.minimum!r}, {report.maximum!r}]")


def _appendixSuite(run: _SuiteRun, maxM: int, q: int, seed: int) -> None:
    for m in range(1, maxM + 1):
        common.Utils.eprintVerbose(f"appendix: m={m}")
        expected = frozenset((Word.constant(0, m, 2), Word.constant(1, m, 2)))

        found = appendixWeightArgmax(m)
        run.check(found.witnessSet == expected, lambda: f"m={m}: closed-form increment maximized by {_words(found.witnessSet)}")

        if m >= 2:
            induction = inductionArgmax(m)
            run.check(induction.witnessSet == expected, lambda: f"m={m}: g_{m} is {_words(induction.witnessSet)}")


def _lemmasSuite(run: _SuiteRun, maxM: int, q: int, seed: int) -> None:
    rng = random.Random(seed)

    for _ in range(RANDOM_LEMMA_CASES):
        alphabet = rng.choice((2, 3))
        n = rng.randint(0, 12)
        k = rng.randint(0, min(3, n))
        x = Word(tuple(rng.randrange(alphabet) for _ in range(n)), alphabet)
        y = Word(tuple(rng.randrange(alphabet) for _ in range(n - k)), alphabet)
        alpha = rng.randrange(alphabet)

        lhs, rhs = prependRecursionCheck(x, y, alpha)
        run.check(lhs == rhs, lambda: f"prepend recursion x={x} y={y} alpha={alpha}: {lhs} != {rhs}")

        direct, recursion = firstSymbolRecursion(x, y)
        run.check(direct == recursion, lambda: f"first-symbol recursion x={x} y={y}: {direct} != {recursion}")

    for m in range(1, maxM + 1):
        common.Utils.eprintVerbose(f"lemmas: m={m}")
        for y in enumerateWords(2, m):
            R = RunLengthProfile.fromWord(y).runCount
            for i in range(R + 1):
                x, weight = twoRunInsertionEmbedding(y, i)
                actual = embeddingNumber(x, y)
                run.check(weight == actual, lambda: f"two-run insertion y={y} i={i} x={x}: closed form {weight}, DP {actual}")

            special = specialSupersequences(y)
            for label, (sx, sWeight) in special.asDict().items():
                sActual = embeddingNumber(sx, y)
                run.check(sWeight == sActual, lambda: f"x_{label} of y={y} is {sx}: closed form {sWeight}, DP {sActual}")

            if m <= 6:
                for x in insertionBall(y, 2).words():
                    for alpha in (0, 1):
                        caseWeight = prependCaseWeight(x, y, alpha)
                        if caseWeight is None:
                            continue
                        cActual = embeddingNumber(x.prepend(alpha), y.prepend(alpha))
                        run.check(caseWeight == cActual, lambda: f"case split x={x} y={y} alpha={alpha}: {caseWeight} != {cActual}")


gSuites: dict[str, Callable[[_SuiteRun, int, int, int], None]] = {
    "normalization": _normalizationSuite,
    "duality": _dualitySuite,
    "extremal": _extremalSuite,
    "average": _averageSuite,
    "appendix": _appendixSuite,
    "lemmas": _lemmasSuite,
}

SUITE_NAMES: tuple[str, ...] = tuple(gSuites.keys())


def runSuite(name: str, maxM: int, q: int = 2, seed: int = 0) -> SuiteResult:
    """Runs one verification suite over the words of length up to `maxM`, stopping at the first counterexample.

    `q` is the alphabet of the duality suite. `seed` drives the randomized
    cases of the lemmas suite.
    """
    suite = gSuites.get(name)
    if suite is None:
        raise common.DomainError(f"unknown suite '{name}', expected one of {', '.join(SUITE_NAMES)}")
    if maxM < 1:
        raise common.DomainError(f"max word length must be at least 1, got {maxM}")

    run = _SuiteRun(name)
    try:
        suite(run, maxM, q, seed)
    except _Counterexample:
        pass
    return run.result()
