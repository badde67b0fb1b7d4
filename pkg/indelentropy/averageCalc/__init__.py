#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations


from .AverageCalcInternals import getToolDescription as getToolDescription
from .AverageCalcInternals import addOptionsToParser as addOptionsToParser
from .AverageCalcInternals import getArgsParser as getArgsParser
from .AverageCalcInternals import applyArgs as applyArgs
from .AverageCalcInternals import processArguments as processArguments
from .AverageCalcInternals import addSubparser as addSubparser
from .AverageCalcInternals import averageCalcMain as averageCalcMain
