#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import argparse
from typing import Sequence

from .. import common
from .. import entropy
from .. import frontendCommon as fec
from ..seqcore import Word

from .. import __version__

PROGNAME = "indelEntropy"


def getToolDescription() -> str:
    return "Computes the input or output entropy of a single word through a deletion or insertion channel"

def addOptionsToParser(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument("-V", "--version", action="version", version=f"%(prog)s {__version__}")

    fec.FrontendUtilities.addChannelOptions(parser)
    parser.add_argument("--word", help="The word, as a string of digits", required=True)
    parser.add_argument("--method", help="'closed' uses the single error closed forms, 'enum' enumerates the ball. Defaults to 'closed' for k=1 and 'enum' otherwise", choices=["closed", "enum"])
    parser.add_argument("--quantity", help="Input entropy of the received word or output entropy of the transmitted word. Defaults to 'input'", choices=["input", "output"], default="input")

    common.GlobalConfig.addParametersToArgParse(parser)

    return parser

def getArgsParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=getToolDescription(), prog=PROGNAME)
    return addOptionsToParser(parser)


def applyArgs(args: argparse.Namespace) -> None:
    common.GlobalConfig.parseArgs(args)


def computeReport(direction: common.ChannelDirection, k: int, word: Word, method: entropy.EntropyMethod, quantity: entropy.EntropyQuantity) -> entropy.EntropyReport:
    if quantity == entropy.EntropyQuantity.Output:
        if method == entropy.EntropyMethod.ClosedForm:
            raise common.DomainError("output entropies are only computed by enumeration, use --method enum")
        return entropy.outputEntropy(entropy.ChannelSpec(direction, k, word.q, len(word)), word)

    if method == entropy.EntropyMethod.ClosedForm:
        if k != 1:
            raise common.DomainError(f"closed forms exist only for k=1, got k={k}; use --method enum")
        if direction == common.ChannelDirection.Deletion:
            return entropy.inputEntropy1DelClosed(word)
        return entropy.inputEntropy1InsClosed(word)

    return entropy.inputEntropy(entropy.ChannelSpec.fromOutput(direction, k, word.q, len(word)), word)


@fec.FrontendUtilities.handleDomainErrors
def processArguments(args: argparse.Namespace) -> int:
    applyArgs(args)

    direction = fec.FrontendUtilities.getDirectionFromArgs(args)
    word = fec.FrontendUtilities.getWordFromArgs(args)

    if args.method is None:
        method = entropy.EntropyMethod.ClosedForm if args.k == 1 and args.quantity == "input" else entropy.EntropyMethod.Enumerated
    else:
        method = entropy.EntropyMethod.fromStr(args.method)
    quantity = entropy.EntropyQuantity.fromStr(args.quantity)

    report = computeReport(direction, args.k, word, method, quantity)
    print(report.toJson())
    return 0

def addSubparser(subparser: argparse._SubParsersAction[argparse.ArgumentParser]) -> None:
    parser = subparser.add_parser("entropy", help=getToolDescription())

    addOptionsToParser(parser)

    parser.set_defaults(func=processArguments)


def entropyCalcMain(argv: Sequence[str]|None = None) -> int:
    args = getArgsParser().parse_args(argv)

    return processArguments(args)
