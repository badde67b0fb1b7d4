#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses
import itertools

from .. import common

from .Word import Word


@dataclasses.dataclass(frozen=True)
class RunIndexBounds:
    """Nearest long runs around each run boundary.

    `forward[i]` (for `0 <= i < R`) is the smallest 1-based run index in
    `[i+1, R]` whose run is longer than one symbol, or `R` if there is none.
    `forward[R]` is `R`.

    `backward[i]` (for `1 <= i <= R`) is the largest index in `[1, i]` whose
    run is longer than one symbol, or `1` if there is none. `backward[0]` is
    `1`.
    """

    forward: tuple[int, ...]
    backward: tuple[int, ...]

    def f(self, i: int) -> int:
        return self.forward[i]

    def b(self, i: int) -> int:
        return self.backward[i]


@dataclasses.dataclass(frozen=True)
class RunLengthProfile:
    lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.lengths) == 0:
            raise common.DomainError("a run-length profile needs at least one run")
        for r in self.lengths:
            if r < 1:
                raise common.DomainError(f"run lengths must be positive, got {self.lengths}")

    @staticmethod
    def fromWord(w: Word) -> RunLengthProfile:
        if len(w) == 0:
            raise common.DomainError("empty word has no runs")
        return RunLengthProfile(tuple(len(list(group)) for _, group in itertools.groupby(w.symbols)))

    @property
    def runCount(self) -> int:
        return len(self.lengths)

    @property
    def totalLength(self) -> int:
        return sum(self.lengths)

    def __len__(self) -> int:
        return len(self.lengths)

    def __getitem__(self, index: int) -> int:
        return self.lengths[index]

    def r(self, i: int) -> int:
        """1-based run length accessor"""
        return self.lengths[i-1]

    def multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.lengths))

    def isBalanced(self) -> bool:
        return max(self.lengths) - min(self.lengths) <= 1

    def isSkewed(self) -> bool:
        return sum(1 for r in self.lengths if r > 1) <= 1

    def runIndexBounds(self) -> RunIndexBounds:
        R = self.runCount

        forward = [R] * (R + 1)
        nextLong = R
        for i in range(R - 1, -1, -1):
            # run i+1 (1-based) is the first candidate for f_i
            if self.lengths[i] > 1:
                nextLong = i + 1
            forward[i] = nextLong
        forward[R] = R

        backward = [1] * (R + 1)
        lastLong = 1
        for i in range(1, R + 1):
            if self.lengths[i-1] > 1:
                lastLong = i
            backward[i] = lastLong

        return RunIndexBounds(tuple(forward), tuple(backward))

    def __str__(self) -> str:
        return "(" + ",".join(str(r) for r in self.lengths) + ")"


def runProfile(w: Word) -> RunLengthProfile:
    return RunLengthProfile.fromWord(w)

def runIndexBounds(profile: RunLengthProfile) -> RunIndexBounds:
    return profile.runIndexBounds()
