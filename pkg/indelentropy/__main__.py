#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import indelentropy


if __name__ == "__main__":
    exit(indelentropy.frontendCommon.FrontendUtilities.cliMain())
