# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from .ChannelSpec import ChannelSpec as ChannelSpec
from .EntropyReport import EntropyReport as EntropyReport
from .EntropyReport import EntropyMethod as EntropyMethod
from .EntropyReport import EntropyQuantity as EntropyQuantity
from .Probability import outProb as outProb
from .Probability import inProb as inProb
from .ChannelEntropy import ballWeightSum as ballWeightSum
from .ChannelEntropy import weightSum as weightSum
from .ChannelEntropy import inputEntropy as inputEntropy
from .ChannelEntropy import inputEntropy1DelClosed as inputEntropy1DelClosed
from .ChannelEntropy import inputEntropy1InsClosed as inputEntropy1InsClosed
from .ChannelEntropy import inputEntropyBits as inputEntropyBits
from .ChannelEntropy import outputEntropy as outputEntropy
from .ChannelEntropy import dualityCheck as dualityCheck
