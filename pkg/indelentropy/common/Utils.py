#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import csv
import json
import math
from pathlib import Path
import sys
from typing import Any, Iterable, Sequence, TextIO

from .GlobalConfig import GlobalConfig


def eprint(*args: Any, **kwargs: Any) -> None:
    print(*args, file=sys.stderr, **kwargs)

def printQuietless(*args: Any, **kwargs: Any) -> None:
    if not GlobalConfig.QUIET:
        print(*args, **kwargs)

def epprintQuietless(*args: Any, **kwargs: Any) -> None:
    if not GlobalConfig.QUIET:
        print(*args, file=sys.stderr, **kwargs)


def printVerbose(*args: Any, **kwargs: Any) -> None:
    if not GlobalConfig.QUIET and GlobalConfig.VERBOSE:
        print(*args, **kwargs)

def eprintVerbose(*args: Any, **kwargs: Any) -> None:
    if not GlobalConfig.QUIET and GlobalConfig.VERBOSE:
        print(*args, file=sys.stderr, **kwargs)


def xlog2x(value: int|float) -> float:
    """`value * log2(value)`, taking `0 log 0 = 1 log 1 = 0`"""
    if value <= 1:
        return 0.0
    return value * math.log2(value)

def sumXlog2x(values: Iterable[int]) -> float:
    # Sequential on purpose, the caller controls the order
    total = 0.0
    for value in values:
        total += xlog2x(value)
    return total


def recordToJson(record: dict[str, Any]) -> str:
    return json.dumps(record, sort_keys=False)

def writeCsvRows(stream: TextIO, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)

def writeCsv(filepath: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    with filepath.open("w", newline="") as f:
        writeCsvRows(f, header, rows)

def readCsv(filepath: Path) -> list[list[str]]:
    with filepath.open(newline="") as f:
        return [row for row in csv.reader(f)]
