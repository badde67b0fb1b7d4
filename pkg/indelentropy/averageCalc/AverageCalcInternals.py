#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import argparse
from typing import Sequence

from .. import common
from .. import average
from .. import frontendCommon as fec

from .. import __version__

PROGNAME = "indelAverage"


def getToolDescription() -> str:
    return "Computes the average single-deletion or single-insertion input entropy over all received words"

def addOptionsToParser(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument("-V", "--version", action="version", version=f"%(prog)s {__version__}")

    parser.add_argument("--dir", help="Channel direction. Defaults to 'del'", choices=["del", "ins"], default="del")
    fec.FrontendUtilities.addAlphabetOption(parser)
    parser.add_argument("--n", help="Length of the transmitted words", type=int, required=True)
    parser.add_argument("--direct", help="Also average the per-word entropies over every received word", action="store_true")

    common.GlobalConfig.addParametersToArgParse(parser)

    return parser

def getArgsParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=getToolDescription(), prog=PROGNAME)
    return addOptionsToParser(parser)


def applyArgs(args: argparse.Namespace) -> None:
    common.GlobalConfig.parseArgs(args)


@fec.FrontendUtilities.handleDomainErrors
def processArguments(args: argparse.Namespace) -> int:
    applyArgs(args)

    direction = fec.FrontendUtilities.getDirectionFromArgs(args)
    if direction == common.ChannelDirection.Deletion:
        report = average.avg1Del(args.n, args.q, direct=args.direct)
    else:
        report = average.avg1Ins(args.n, args.q, direct=args.direct)

    print(report.toJson())
    return 0

def addSubparser(subparser: argparse._SubParsersAction[argparse.ArgumentParser]) -> None:
    parser = subparser.add_parser("average", help=getToolDescription())

    addOptionsToParser(parser)

    parser.set_defaults(func=processArguments)


def averageCalcMain(argv: Sequence[str]|None = None) -> int:
    args = getArgsParser().parse_args(argv)

    return processArguments(args)
