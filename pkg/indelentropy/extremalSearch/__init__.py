#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations


from .ExtremalSearchInternals import getToolDescription as getToolDescription
from .ExtremalSearchInternals import addOptionsToParser as addOptionsToParser
from .ExtremalSearchInternals import getArgsParser as getArgsParser
from .ExtremalSearchInternals import applyArgs as applyArgs
from .ExtremalSearchInternals import closedFormExtrema as closedFormExtrema
from .ExtremalSearchInternals import processArguments as processArguments
from .ExtremalSearchInternals import addSubparser as addSubparser
from .ExtremalSearchInternals import extremalSearchMain as extremalSearchMain
