# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from . import Utils as Utils

from .GlobalConfig import GlobalConfig as GlobalConfig
from .GlobalConfig import GlobalConfigType as GlobalConfigType
from .Errors import DomainError as DomainError
from .Errors import CapExceededError as CapExceededError
from .Errors import checkEnumerationSpace as checkEnumerationSpace
from .Errors import checkBallSize as checkBallSize
from .ChannelDirection import ChannelDirection as ChannelDirection
