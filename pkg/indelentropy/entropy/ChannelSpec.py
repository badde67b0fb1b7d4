#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses

from .. import common


@dataclasses.dataclass(frozen=True)
class ChannelSpec:
    """A channel that deletes or inserts exactly `k` symbols of a length `n` word over `Σ_q`"""

    direction: common.ChannelDirection
    k: int
    q: int
    n: int
    """Length of the transmitted word"""

    def __post_init__(self) -> None:
        if self.k < 0:
            raise common.DomainError(f"error count must be nonnegative, got k={self.k}")
        if self.q < 2:
            raise common.DomainError(f"alphabet size must be at least 2, got q={self.q}")
        if self.n < 0:
            raise common.DomainError(f"input length must be nonnegative, got n={self.n}")
        if self.direction == common.ChannelDirection.Deletion and self.k > self.n:
            raise common.DomainError(f"cannot delete {self.k} symbols from a word of length {self.n}")

    @property
    def outputLength(self) -> int:
        if self.direction == common.ChannelDirection.Deletion:
            return self.n - self.k
        return self.n + self.k

    @property
    def name(self) -> str:
        return f"{self.k}-{self.direction.shortName()}"

    def dual(self) -> ChannelSpec:
        """The opposite channel, transmitting the words this channel receives"""
        return ChannelSpec(self.direction.dual(), self.k, self.q, self.outputLength)

    @staticmethod
    def fromOutput(direction: common.ChannelDirection, k: int, q: int, outputLength: int) -> ChannelSpec:
        if direction == common.ChannelDirection.Deletion:
            return ChannelSpec(direction, k, q, outputLength + k)
        if outputLength < k:
            raise common.DomainError(f"a {k}-insertion channel cannot output a word of length {outputLength}")
        return ChannelSpec(direction, k, q, outputLength - k)
