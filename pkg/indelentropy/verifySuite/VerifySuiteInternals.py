#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import argparse
from typing import Sequence

from .. import common
from .. import oracles
from .. import frontendCommon as fec

from .. import __version__

PROGNAME = "indelVerify"


def getToolDescription() -> str:
    return "Checks closed forms and structural identities against brute-force enumeration"

def addOptionsToParser(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument("-V", "--version", action="version", version=f"%(prog)s {__version__}")

    parser.add_argument("--suite", help="The suite to run, or 'all' to run each of them", choices=[*oracles.SUITE_NAMES, "all"], required=True)
    parser.add_argument("--max-m", help="Longest word length the suite covers. Defaults to 8", type=int, default=8)
    parser.add_argument("--q", help="Alphabet size of the duality suite. Defaults to 2", type=int, default=2)
    parser.add_argument("--seed", help="Seed of the randomized lemma cases. Defaults to 0", type=int, default=0)

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

    if args.suite == "all":
        names = list(oracles.SUITE_NAMES)
    else:
        names = [args.suite]

    allPassed = True
    for name in names:
        result = oracles.runSuite(name, args.max_m, q=args.q, seed=args.seed)
        allPassed = allPassed and result.passed
        if len(names) == 1:
            print(result.summary())
        else:
            print(f"{name}: {result.summary()}")

    return 0 if allPassed else 1

def addSubparser(subparser: argparse._SubParsersAction[argparse.ArgumentParser]) -> None:
    parser = subparser.add_parser("verify", help=getToolDescription())

    addOptionsToParser(parser)

    parser.set_defaults(func=processArguments)


def verifySuiteMain(argv: Sequence[str]|None = None) -> int:
    args = getArgsParser().parse_args(argv)

    return processArguments(args)
