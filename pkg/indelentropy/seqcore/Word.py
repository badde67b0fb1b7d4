#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses
from typing import Iterator, overload

from .. import common


@dataclasses.dataclass(frozen=True, order=True)
class Word:
    """A finite sequence over the alphabet `{0, ..., q-1}`.

    Words are immutable and hashable, so they can be used as ball entries
    and as dictionary keys. Ordering is lexicographic on the symbols, which
    matches the ordering of the digit-string form.
    """

    symbols: tuple[int, ...]
    q: int = 2

    def __post_init__(self) -> None:
        if self.q < 2:
            raise common.DomainError(f"alphabet size must be at least 2, got q={self.q}")
        for s in self.symbols:
            if s < 0 or s >= self.q:
                raise common.DomainError(f"symbol {s} out of range for q={self.q}")


    @staticmethod
    def fromStr(text: str, q: int = 2) -> Word:
        if q > 10:
            raise common.DomainError(f"the textual form only supports q <= 10, got q={q}")
        symbols: list[int] = []
        for char in text:
            if not char.isdigit():
                raise common.DomainError(f"invalid symbol '{char}' in word '{text}'")
            symbols.append(int(char))
        return Word(tuple(symbols), q)

    @staticmethod
    def constant(symbol: int, length: int, q: int = 2) -> Word:
        return Word((symbol,) * length, q)

    @staticmethod
    def empty(q: int = 2) -> Word:
        return Word((), q)


    def toStr(self) -> str:
        return "".join(str(s) for s in self.symbols)

    def __str__(self) -> str:
        return self.toStr()

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    @overload
    def __getitem__(self, index: int) -> int: ...
    @overload
    def __getitem__(self, index: slice) -> Word: ...

    def __getitem__(self, index: int|slice) -> int|Word:
        if isinstance(index, slice):
            return Word(self.symbols[index], self.q)
        return self.symbols[index]


    def prepend(self, symbol: int) -> Word:
        return Word((symbol,) + self.symbols, self.q)

    def relabel(self, mapping: dict[int, int]) -> Word:
        return Word(tuple(mapping.get(s, s) for s in self.symbols), self.q)

    def complement(self) -> Word:
        if self.q != 2:
            raise common.DomainError(f"complement is only defined for binary words, got q={self.q}")
        return self.relabel({0: 1, 1: 0})
