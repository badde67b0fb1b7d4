#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import argparse
import functools
from typing import Callable, Sequence

import indelentropy

from .. import common

from .. import __version__


ProcessArgumentsType = Callable[[argparse.Namespace], int]


def handleDomainErrors(func: ProcessArgumentsType) -> ProcessArgumentsType:
    """Reports a `DomainError` on stderr and turns it into exit code 1"""

    @functools.wraps(func)
    def wrapper(args: argparse.Namespace) -> int:
        try:
            return func(args)
        except common.DomainError as e:
            common.Utils.eprint(f"error: {e}")
            return 1

    return wrapper


def addChannelOptions(parser: argparse.ArgumentParser, kRequired: bool = True) -> None:
    parser.add_argument("--dir", help="Channel direction", choices=["del", "ins"], required=True)
    parser.add_argument("--k", help="Amount of deleted or inserted symbols" + ("" if kRequired else ". Defaults to 1"), type=int, required=kRequired, default=None if kRequired else 1)
    addAlphabetOption(parser)

def addAlphabetOption(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--q", help="Alphabet size. Defaults to 2", type=int, default=2)


def getDirectionFromArgs(args: argparse.Namespace) -> common.ChannelDirection:
    return common.ChannelDirection.fromStr(args.dir)

def getWordFromArgs(args: argparse.Namespace) -> indelentropy.seqcore.Word:
    return indelentropy.seqcore.Word.fromStr(args.word, args.q)


def cliMain(argv: Sequence[str]|None = None) -> int:
    parser = argparse.ArgumentParser(description="Interface to call any of the indelentropy's CLI utilities", prog="indelentropy")

    parser.add_argument("-V", "--version", action="version", version=f"%(prog)s {__version__}")

    subparsers = parser.add_subparsers(description="action", help="The CLI utility to run", required=True)

    indelentropy.entropyCalc.addSubparser(subparsers)
    indelentropy.ballDump.addSubparser(subparsers)
    indelentropy.extremalSearch.addSubparser(subparsers)
    indelentropy.averageCalc.addSubparser(subparsers)
    indelentropy.figureCsv.addSubparser(subparsers)
    indelentropy.verifySuite.addSubparser(subparsers)

    args = parser.parse_args(argv)
    return int(args.func(args))
