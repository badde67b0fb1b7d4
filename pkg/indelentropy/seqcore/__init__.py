# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from .Word import Word as Word
from .RunLengthProfile import RunLengthProfile as RunLengthProfile
from .RunLengthProfile import RunIndexBounds as RunIndexBounds
from .RunLengthProfile import runProfile as runProfile
from .RunLengthProfile import runIndexBounds as runIndexBounds
from .Constructors import wordFromProfile as wordFromProfile
from .Constructors import skewedWord as skewedWord
from .Constructors import balancedWord as balancedWord
from .Enumeration import countWordsWithRuns as countWordsWithRuns
from .Enumeration import enumerateWords as enumerateWords
from .Enumeration import enumerateWordsWithRuns as enumerateWordsWithRuns
from .Enumeration import enumerateWordsWithProfileMultiset as enumerateWordsWithProfileMultiset
