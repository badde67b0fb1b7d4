#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import argparse
from typing import Sequence

from .. import common
from .. import embed
from .. import frontendCommon as fec

from .. import __version__

PROGNAME = "indelBall"


def getToolDescription() -> str:
    return "Prints the deletion or insertion ball of a word together with the embedding number of every member"

def addOptionsToParser(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument("-V", "--version", action="version", version=f"%(prog)s {__version__}")

    fec.FrontendUtilities.addChannelOptions(parser)
    parser.add_argument("--word", help="Center of the ball, as a string of digits", required=True)

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
    word = fec.FrontendUtilities.getWordFromArgs(args)

    if direction == common.ChannelDirection.Deletion:
        ball = embed.deletionBall(word, args.k)
    else:
        ball = embed.insertionBall(word, args.k)

    common.Utils.eprintVerbose(f"{len(ball)} words, total weight {ball.totalWeight()}")
    print(ball.toText(), end="")
    return 0

def addSubparser(subparser: argparse._SubParsersAction[argparse.ArgumentParser]) -> None:
    parser = subparser.add_parser("ball", help=getToolDescription())

    addOptionsToParser(parser)

    parser.set_defaults(func=processArguments)


def ballDumpMain(argv: Sequence[str]|None = None) -> int:
    args = getArgsParser().parse_args(argv)

    return processArguments(args)
