#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses
import enum
from typing import Any

from .. import common
from ..seqcore import Word


class EntropyMethod(enum.Enum):
    ClosedForm = "closed_form"
    Enumerated = "enumerated"

    @staticmethod
    def fromStr(x: str) -> EntropyMethod:
        if x in {"closed", "closed_form"}:
            return EntropyMethod.ClosedForm
        if x in {"enum", "enumerated"}:
            return EntropyMethod.Enumerated
        raise common.DomainError(f"unknown entropy method '{x}'")

    def toStr(self) -> str:
        return self.value


class EntropyQuantity(enum.Enum):
    Input = "input"
    Output = "output"

    @staticmethod
    def fromStr(x: str) -> EntropyQuantity:
        for quantity in EntropyQuantity:
            if quantity.value == x:
                return quantity
        raise common.DomainError(f"unknown entropy quantity '{x}'")


@dataclasses.dataclass(frozen=True)
class EntropyReport:
    bits: float
    method: EntropyMethod
    direction: common.ChannelDirection
    k: int
    q: int
    word: Word
    quantity: EntropyQuantity = EntropyQuantity.Input
    ballSize: int|None = None
    """Amount of distinct words in the enumerated ball. Only set for enumerated reports"""
    weightSum: float|None = None
    """`Σ ω log ω` over the ball behind the value"""

    def toRecord(self) -> dict[str, Any]:
        return {
            "quantity": self.quantity.value,
            "channel": f"{self.k}-{self.direction.shortName()}",
            "q": self.q,
            "word": self.word.toStr(),
            "bits": self.bits,
            "method": self.method.toStr(),
            "ball_size": self.ballSize,
            "weight_sum": self.weightSum,
        }

    def toJson(self) -> str:
        return common.Utils.recordToJson(self.toRecord())
