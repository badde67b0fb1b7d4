#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations


from .EntropyCalcInternals import getToolDescription as getToolDescription
from .EntropyCalcInternals import addOptionsToParser as addOptionsToParser
from .EntropyCalcInternals import getArgsParser as getArgsParser
from .EntropyCalcInternals import applyArgs as applyArgs
from .EntropyCalcInternals import computeReport as computeReport
from .EntropyCalcInternals import processArguments as processArguments
from .EntropyCalcInternals import addSubparser as addSubparser
from .EntropyCalcInternals import entropyCalcMain as entropyCalcMain
