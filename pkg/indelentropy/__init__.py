#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

__version_info__: tuple[int, int, int] = (0, 3, 0)
__version__ = ".".join(map(str, __version_info__))
__author__ = "indelentropy contributors"

from . import common as common
from . import seqcore as seqcore
from . import embed as embed
from . import entropy as entropy
from . import extremal as extremal
from . import average as average
from . import oracles as oracles

# Front-end scripts
from . import frontendCommon as frontendCommon
from . import entropyCalc as entropyCalc
from . import ballDump as ballDump
from . import extremalSearch as extremalSearch
from . import averageCalc as averageCalc
from . import figureCsv as figureCsv
from . import verifySuite as verifySuite
