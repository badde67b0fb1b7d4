#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations


from .BallDumpInternals import getToolDescription as getToolDescription
from .BallDumpInternals import addOptionsToParser as addOptionsToParser
from .BallDumpInternals import getArgsParser as getArgsParser
from .BallDumpInternals import applyArgs as applyArgs
from .BallDumpInternals import processArguments as processArguments
from .BallDumpInternals import addSubparser as addSubparser
from .BallDumpInternals import ballDumpMain as ballDumpMain
