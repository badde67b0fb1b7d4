#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import argparse
import dataclasses
import os


@dataclasses.dataclass
class GlobalConfigType:
    MAX_ENUMERATION_SPACE: int = 1 << 24
    """Maximum amount of words an exhaustive enumeration is allowed to visit"""

    MAX_BALL_SIZE: int = 1 << 20
    """Maximum amount of distinct words a materialized insertion or deletion ball may hold"""

    THREADS: int = 1
    """Worker processes used by exhaustive scans. The result does not depend on this value"""

    WITNESS_LIST_LIMIT: int = 64
    """Maximum amount of witnesses printed in an extremal record. The total count is always printed"""

    ATTAINMENT_TOLERANCE: float = 1e-12
    """Words whose entropy lies within this distance of the extremum are considered attainers"""

    AGREEMENT_TOLERANCE: float = 1e-9
    """Absolute tolerance used when comparing closed forms against enumeration"""

    QUIET: bool = False
    VERBOSE: bool = False


    def addParametersToArgParse(self, parser: argparse.ArgumentParser) -> None:
        capsConfig = parser.add_argument_group("Enumeration limits")

        capsConfig.add_argument("--max-space", help=f"Maximum amount of words an exhaustive enumeration may visit. Defaults to {self.MAX_ENUMERATION_SPACE}", type=int, metavar="WORDS")
        capsConfig.add_argument("--max-ball", help=f"Maximum amount of distinct words a materialized ball may hold. Defaults to {self.MAX_BALL_SIZE}", type=int, metavar="WORDS")
        capsConfig.add_argument("--threads", help=f"Worker processes used by exhaustive scans. Output does not depend on this value. Defaults to {self.THREADS}", type=int, metavar="T")
        capsConfig.add_argument("--witness-limit", help=f"Maximum amount of witnesses printed per extremal record. Defaults to {self.WITNESS_LIST_LIMIT}", type=int, metavar="N")


        verbosityConfig = parser.add_argument_group("Verbosity options")

        verbosityConfig.add_argument("-v", "--verbose", help="Enable verbose mode", action=argparse.BooleanOptionalAction)
        verbosityConfig.add_argument("-q", "--quiet", help="Silence most of the output", action=argparse.BooleanOptionalAction)


    def processEnvironmentVariables(self) -> None:
        # Allows changing the global configuration by setting a INDELENTROPY_SETTINGNAME environment variable
        # For example: INDELENTROPY_MAX_ENUMERATION_SPACE=0x2000000

        for field in dataclasses.fields(self):
            environmentValue = os.getenv(f"INDELENTROPY_{field.name}")
            if environmentValue is None:
                continue

            currentValue = getattr(self, field.name)
            if isinstance(currentValue, bool):
                newValue: bool|int|float = environmentValue.upper() not in {"FALSE", "0", "NO", "OFF", ""}
            elif isinstance(currentValue, int):
                newValue = int(environmentValue, 0)
            else:
                newValue = float(environmentValue)

            setattr(self, field.name, newValue)

    def parseArgs(self, args: argparse.Namespace) -> None:
        if getattr(args, "max_space", None) is not None:
            self.MAX_ENUMERATION_SPACE = args.max_space
        if getattr(args, "max_ball", None) is not None:
            self.MAX_BALL_SIZE = args.max_ball
        if getattr(args, "threads", None) is not None:
            self.THREADS = max(1, args.threads)
        if getattr(args, "witness_limit", None) is not None:
            self.WITNESS_LIST_LIMIT = args.witness_limit

        if getattr(args, "verbose", None) is not None:
            self.VERBOSE = args.verbose
        if getattr(args, "quiet", None) is not None:
            self.QUIET = args.quiet

GlobalConfig = GlobalConfigType()

GlobalConfig.processEnvironmentVariables()
