#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations


from .FigureCsvInternals import getToolDescription as getToolDescription
from .FigureCsvInternals import addOptionsToParser as addOptionsToParser
from .FigureCsvInternals import getArgsParser as getArgsParser
from .FigureCsvInternals import applyArgs as applyArgs
from .FigureCsvInternals import processArguments as processArguments
from .FigureCsvInternals import addSubparser as addSubparser
from .FigureCsvInternals import figureCsvMain as figureCsvMain
