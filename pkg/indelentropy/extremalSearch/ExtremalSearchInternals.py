#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import argparse
from typing import Sequence

from .. import common
from .. import entropy
from .. import extremal
from .. import frontendCommon as fec

from .. import __version__

PROGNAME = "indelExtremal"


def getToolDescription() -> str:
    return "Finds the received words with the smallest and largest input entropy, from closed forms or by exhaustive search"

def addOptionsToParser(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument("-V", "--version", action="version", version=f"%(prog)s {__version__}")

    fec.FrontendUtilities.addChannelOptions(parser)
    parser.add_argument("--m", help="Length of the received words", type=int, required=True)
    parser.add_argument("--runs", help="Only consider received words with this many runs", type=int)
    parser.add_argument("--exhaustive", help="Scan every word instead of using the closed forms", action="store_true")

    common.GlobalConfig.addParametersToArgParse(parser)

    return parser

def getArgsParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=getToolDescription(), prog=PROGNAME)
    return addOptionsToParser(parser)


def applyArgs(args: argparse.Namespace) -> None:
    common.GlobalConfig.parseArgs(args)


def closedFormExtrema(direction: common.ChannelDirection, k: int, q: int, m: int, runs: int|None) -> list[extremal.ExtremalResult]:
    if k == 1 and direction == common.ChannelDirection.Deletion:
        if runs is not None:
            return [extremal.min1DelFixedRuns(q, m, runs), extremal.max1DelFixedRuns(q, m, runs)]
        return list(extremal.globalExtrema1Del(q, m + 1))

    if k == 1 and direction == common.ChannelDirection.Insertion:
        if runs is not None:
            return list(extremal.extrema1InsFixedRuns(q, m, runs))
        return list(extremal.globalExtrema1Ins(q, m - 1))

    if k == 2 and direction == common.ChannelDirection.Deletion and runs is None:
        if q != 2:
            raise common.DomainError(f"the double-deletion minimum is only known for binary words, got q={q}")
        return [extremal.min2Del(m)]

    raise common.DomainError(f"no closed form for the {k}-{direction.shortName()} channel" + (f" restricted to {runs} runs" if runs is not None else "") + ", use --exhaustive")


@fec.FrontendUtilities.handleDomainErrors
def processArguments(args: argparse.Namespace) -> int:
    applyArgs(args)

    direction = fec.FrontendUtilities.getDirectionFromArgs(args)

    if args.exhaustive:
        spec = entropy.ChannelSpec.fromOutput(direction, args.k, args.q, args.m)
        results = list(extremal.exhaustiveExtremizers(spec, args.runs))
    else:
        results = closedFormExtrema(direction, args.k, args.q, args.m, args.runs)

    for result in results:
        print(result.toJson())
    return 0

def addSubparser(subparser: argparse._SubParsersAction[argparse.ArgumentParser]) -> None:
    parser = subparser.add_parser("extremal", help=getToolDescription())

    addOptionsToParser(parser)

    parser.set_defaults(func=processArguments)


def extremalSearchMain(argv: Sequence[str]|None = None) -> int:
    args = getArgsParser().parse_args(argv)

    return processArguments(args)
