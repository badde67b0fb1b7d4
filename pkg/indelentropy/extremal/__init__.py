# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from .ExtremalResult import ExtremalResult as ExtremalResult
from .ExtremalResult import ExtremumKind as ExtremumKind
from .ExtremalResult import ExtremalMethod as ExtremalMethod
from .ClosedForms import balancedLengths as balancedLengths
from .ClosedForms import skewedLengths as skewedLengths
from .ClosedForms import stepFunction as stepFunction
from .ClosedForms import max1DelFixedRuns as max1DelFixedRuns
from .ClosedForms import min1DelFixedRuns as min1DelFixedRuns
from .ClosedForms import globalExtremaValues1Del as globalExtremaValues1Del
from .ClosedForms import globalExtrema1Del as globalExtrema1Del
from .ClosedForms import extrema1InsFixedRuns as extrema1InsFixedRuns
from .ClosedForms import globalExtremaValues1Ins as globalExtremaValues1Ins
from .ClosedForms import globalExtrema1Ins as globalExtrema1Ins
from .ClosedForms import min2Del as min2Del
from .ClosedForms import min2DelStated as min2DelStated
from .ExhaustiveSearch import exhaustiveExtremizers as exhaustiveExtremizers
from .Appendix import appendixWeight as appendixWeight
from .Appendix import appendixWeightArgmax as appendixWeightArgmax
from .Appendix import appendixIncrementDirect as appendixIncrementDirect
from .Appendix import inductionWeight as inductionWeight
from .Appendix import inductionArgmax as inductionArgmax
