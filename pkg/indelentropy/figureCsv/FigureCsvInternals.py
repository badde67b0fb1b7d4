#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import argparse
from pathlib import Path
import sys
from typing import Sequence

from .. import common
from .. import average
from .. import frontendCommon as fec

from .. import __version__

PROGNAME = "indelFigure"


def getToolDescription() -> str:
    return "Writes the minimum, maximum, average and average lower bound of the single-deletion input entropy as a CSV table"

def addOptionsToParser(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument("-V", "--version", action="version", version=f"%(prog)s {__version__}")

    fec.FrontendUtilities.addAlphabetOption(parser)
    parser.add_argument("--n-min", help="First transmitted length. Defaults to 2", type=int, default=2)
    parser.add_argument("--n-max", help="Last transmitted length. Defaults to 100", type=int, default=100)
    parser.add_argument("--out", help="Path of the CSV file. Use '-' to print to stdout", type=Path, required=True)

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

    rows = average.figureTable(args.n_min, args.n_max, args.q)

    outputPath: Path = args.out
    if str(outputPath) == "-":
        common.Utils.writeCsvRows(sys.stdout, average.FIGURE_CSV_HEADER, (row.toCsvRow() for row in rows))
    else:
        try:
            average.writeFigureCsv(rows, outputPath)
        except OSError as e:
            common.Utils.eprint(f"error: cannot write '{outputPath}': {e.strerror}")
            return 1
        common.Utils.epprintQuietless(f"Wrote {len(rows)} rows to '{outputPath}'")
    return 0

def addSubparser(subparser: argparse._SubParsersAction[argparse.ArgumentParser]) -> None:
    parser = subparser.add_parser("figure", help=getToolDescription())

    addOptionsToParser(parser)

    parser.set_defaults(func=processArguments)


def figureCsvMain(argv: Sequence[str]|None = None) -> int:
    args = getArgsParser().parse_args(argv)

    return processArguments(args)
