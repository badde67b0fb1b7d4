# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from .RunCount import runCount as runCount
from .RunCount import runCountLiteral as runCountLiteral
from .RunCount import runCensus as runCensus
from .Averages import AverageReport as AverageReport
from .Averages import FigureRow as FigureRow
from .Averages import FIGURE_CSV_HEADER as FIGURE_CSV_HEADER
from .Averages import avg1Del as avg1Del
from .Averages import avg1Ins as avg1Ins
from .Averages import avgLowerBounds as avgLowerBounds
from .Averages import statedLowerBounds as statedLowerBounds
from .Averages import figureTable as figureTable
from .Averages import writeFigureCsv as writeFigureCsv
