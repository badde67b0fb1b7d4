#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

from . import figureCsvMain


if __name__ == "__main__":
    exit(figureCsvMain())
