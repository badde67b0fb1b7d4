#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations


from .VerifySuiteInternals import getToolDescription as getToolDescription
from .VerifySuiteInternals import addOptionsToParser as addOptionsToParser
from .VerifySuiteInternals import getArgsParser as getArgsParser
from .VerifySuiteInternals import applyArgs as applyArgs
from .VerifySuiteInternals import processArguments as processArguments
from .VerifySuiteInternals import addSubparser as addSubparser
from .VerifySuiteInternals import verifySuiteMain as verifySuiteMain
