#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import enum

from .Errors import DomainError


class ChannelDirection(enum.Enum):
    Deletion  = "del"
    Insertion = "ins"

    @staticmethod
    def fromStr(x: str) -> ChannelDirection:
        direction = gNameToDirection.get(x.lower())
        if direction is None:
            raise DomainError(f"unknown channel direction '{x}'")
        return direction

    def toStr(self) -> str:
        return self.value

    def shortName(self) -> str:
        if self == ChannelDirection.Deletion:
            return "Del"
        return "Ins"

    def dual(self) -> ChannelDirection:
        if self == ChannelDirection.Deletion:
            return ChannelDirection.Insertion
        return ChannelDirection.Deletion


gNameToDirection: dict[str, ChannelDirection] = {
    "del": ChannelDirection.Deletion,
    "deletion": ChannelDirection.Deletion,
    "ins": ChannelDirection.Insertion,
    "insertion": ChannelDirection.Insertion,
}
