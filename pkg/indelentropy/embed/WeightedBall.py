#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import math
from typing import Iterable, Iterator

from .. import common
from ..seqcore import Word

from .EmbeddingNumber import countEmbeddings


class WeightedBall:
    """An insertion or deletion ball around `center`, each member carrying its embedding number.

    For an insertion ball the members are the `k`-supersequences `x` of the
    center and the weight is `ω_center(x)`. For a deletion ball the members are
    the `k`-subsequences `y` and the weight is `ω_y(center)`.
    """

    def __init__(self, center: Word, k: int, direction: common.ChannelDirection, entries: dict[Word, int]) -> None:
        self.center: Word = center
        self.k: int = k
        self.direction: common.ChannelDirection = direction
        self._entries: dict[Word, int] = dict(sorted(entries.items()))

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, word: Word) -> bool:
        return word in self._entries

    def __iter__(self) -> Iterator[Word]:
        return iter(self._entries)

    def weightOf(self, word: Word) -> int:
        return self._entries.get(word, 0)

    def items(self) -> list[tuple[Word, int]]:
        """Entries in lexicographic order of the member words"""
        return list(self._entries.items())

    def words(self) -> list[Word]:
        return list(self._entries.keys())

    def weights(self) -> list[int]:
        return list(self._entries.values())

    def totalWeight(self) -> int:
        return sum(self._entries.values())

    def expectedTotalWeight(self) -> int:
        if self.direction == common.ChannelDirection.Insertion:
            return insertionBallTotalWeight(len(self.center), self.k, self.center.q)
        return deletionBallTotalWeight(len(self.center), self.k)

    def toText(self) -> str:
        return "".join(f"{word.toStr()}\t{weight}\n" for word, weight in self._entries.items())

    def __repr__(self) -> str:
        return f"WeightedBall(center={self.center}, k={self.k}, direction={self.direction.toStr()}, size={len(self)})"


def insertionBallSize(m: int, k: int, q: int) -> int:
    """Number of distinct words obtained by inserting exactly `k` symbols into a word of length `m`"""
    n = m + k
    return sum(math.comb(n, i) * (q - 1) ** i for i in range(k + 1))

def insertionBallTotalWeight(m: int, k: int, q: int) -> int:
    return math.comb(m + k, k) * q ** k

def deletionBallTotalWeight(n: int, k: int) -> int:
    return math.comb(n, k)


def _weighted(center: Word, members: Iterable[Word], direction: common.ChannelDirection) -> dict[Word, int]:
    entries: dict[Word, int] = {}
    for member in members:
        if direction == common.ChannelDirection.Insertion:
            entries[member] = countEmbeddings(member.symbols, center.symbols)
        else:
            entries[member] = countEmbeddings(center.symbols, member.symbols)
    return entries


def insertionBall(y: Word, k: int) -> WeightedBall:
    if k < 0:
        raise common.DomainError(f"error count must be nonnegative, got k={k}")
    common.checkBallSize(f"the {k}-insertion ball of a length {len(y)} word", insertionBallSize(len(y), k, y.q))

    level: set[tuple[int, ...]] = {y.symbols}
    for _ in range(k):
        nextLevel: set[tuple[int, ...]] = set()
        for symbols in level:
            for position in range(len(symbols) + 1):
                for s in range(y.q):
                    nextLevel.add(symbols[:position] + (s,) + symbols[position:])
        level = nextLevel

    members = (Word(symbols, y.q) for symbols in level)
    return WeightedBall(y, k, common.ChannelDirection.Insertion, _weighted(y, members, common.ChannelDirection.Insertion))


def deletionBall(x: Word, k: int) -> WeightedBall:
    if k < 0:
        raise common.DomainError(f"error count must be nonnegative, got k={k}")
    if k > len(x):
        raise common.DomainError(f"cannot delete {k} symbols from a word of length {len(x)}")

    level: set[tuple[int, ...]] = {x.symbols}
    for _ in range(k):
        nextLevel: set[tuple[int, ...]] = set()
        for symbols in level:
            for position in range(len(symbols)):
                nextLevel.add(symbols[:position] + symbols[position+1:])
        common.checkBallSize(f"the {k}-deletion ball of a length {len(x)} word", len(nextLevel))
        level = nextLevel

    members = (Word(symbols, x.q) for symbols in level)
    return WeightedBall(x, k, common.ChannelDirection.Deletion, _weighted(x, members, common.ChannelDirection.Deletion))
