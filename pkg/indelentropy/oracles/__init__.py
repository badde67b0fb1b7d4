# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from .Suites import SuiteResult as SuiteResult
from .Suites import SUITE_NAMES as SUITE_NAMES
from .Suites import runSuite as runSuite
