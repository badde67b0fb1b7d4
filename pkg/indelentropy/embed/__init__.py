# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from .EmbeddingNumber import countEmbeddings as countEmbeddings
from .EmbeddingNumber import embeddingNumber as embeddingNumber
from .EmbeddingNumber import prependRecursionCheck as prependRecursionCheck
from .EmbeddingNumber import firstSymbolRecursion as firstSymbolRecursion
from .WeightedBall import WeightedBall as WeightedBall
from .WeightedBall import insertionBall as insertionBall
from .WeightedBall import deletionBall as deletionBall
from .WeightedBall import insertionBallSize as insertionBallSize
from .WeightedBall import insertionBallTotalWeight as insertionBallTotalWeight
from .WeightedBall import deletionBallTotalWeight as deletionBallTotalWeight
from .StructuralLemmas import SpecialSupersequences as SpecialSupersequences
from .StructuralLemmas import twoRunInsertionEmbedding as twoRunInsertionEmbedding
from .StructuralLemmas import specialSupersequences as specialSupersequences
from .StructuralLemmas import prependCaseWeight as prependCaseWeight
