#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

from .GlobalConfig import GlobalConfig


class DomainError(RuntimeError):
    """A computation was asked for a value outside of its domain.

    Front-ends report these with exit code 1."""


class CapExceededError(DomainError):
    def __init__(self, what: str, requested: int, capField: str, capFlag: str, cap: int) -> None:
        self.requested: int = requested
        self.capField: str = capField
        self.cap: int = cap
        super().__init__(f"enumeration too large: {what} needs {requested} words but {capField} is {cap} (raise it with {capFlag})")


def checkEnumerationSpace(what: str, requested: int) -> None:
    if requested > GlobalConfig.MAX_ENUMERATION_SPACE:
        raise CapExceededError(what, requested, "MAX_ENUMERATION_SPACE", "--max-space", GlobalConfig.MAX_ENUMERATION_SPACE)

def checkBallSize(what: str, requested: int) -> None:
    if requested > GlobalConfig.MAX_BALL_SIZE:
        raise CapExceededError(what, requested, "MAX_BALL_SIZE", "--max-ball", GlobalConfig.MAX_BALL_SIZE)
