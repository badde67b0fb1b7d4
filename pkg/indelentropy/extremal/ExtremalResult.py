#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses
import enum
from typing import Any

from .. import common
from ..seqcore import Word


class ExtremumKind(enum.Enum):
    Minimum = "min"
    Maximum = "max"

    def toStr(self) -> str:
        return self.value


class ExtremalMethod(enum.Enum):
    ClosedForm = "closed_form"
    Exhaustive = "exhaustive"

    def toStr(self) -> str:
        return self.value


@dataclasses.dataclass(frozen=True)
class ExtremalResult:
    value: float
    """Extremal input entropy, in bits"""

    witnesses: tuple[Word, ...]
    """Every word attaining `value`, in lexicographic order"""

    kind: ExtremumKind
    direction: common.ChannelDirection
    k: int
    q: int
    m: int
    """Length of the received words in scope"""

    runs: int|None = None
    """Run count the scope is restricted to, None for all run counts"""

    method: ExtremalMethod = ExtremalMethod.ClosedForm

    statedValue: float|None = None
    note: str|None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "witnesses", tuple(sorted(set(self.witnesses))))

    @property
    def witnessSet(self) -> frozenset[Word]:
        return frozenset(self.witnesses)

    def toRecord(self, witnessLimit: int|None = None) -> dict[str, Any]:
        if witnessLimit is None:
            witnessLimit = common.GlobalConfig.WITNESS_LIST_LIMIT

        record: dict[str, Any] = {
            "kind": self.kind.toStr(),
            "channel": f"{self.k}-{self.direction.shortName()}",
            "q": self.q,
            "m": self.m,
            "runs": self.runs if self.runs is not None else "all",
            "method": self.method.toStr(),
            "value": self.value,
            "witness_count": len(self.witnesses),
            "witnesses": [w.toStr() for w in self.witnesses[:witnessLimit]],
        }
        if self.statedValue is not None:
            record["stated_value"] = self.statedValue
        if self.note is not None:
            record["note"] = self.note
        return record

    def toJson(self, witnessLimit: int|None = None) -> str:
        return common.Utils.recordToJson(self.toRecord(witnessLimit))
