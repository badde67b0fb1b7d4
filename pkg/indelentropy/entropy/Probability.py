#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

from fractions import Fraction
import math

from .. import common
from ..seqcore import Word
from ..embed import countEmbeddings

from .ChannelSpec import ChannelSpec


def _checkPair(spec: ChannelSpec, x: Word, y: Word) -> None:
    if x.q != spec.q or y.q != spec.q:
        raise common.DomainError(f"alphabet mismatch: channel has q={spec.q}, x has q={x.q}, y has q={y.q}")
    if len(x) != spec.n:
        raise common.DomainError(f"length mismatch: the {spec.name} channel transmits words of length {spec.n}, got {len(x)}")
    if len(y) != spec.outputLength:
        raise common.DomainError(f"length mismatch: the {spec.name} channel outputs words of length {spec.outputLength}, got {len(y)}")


def outProb(spec: ChannelSpec, x: Word, y: Word) -> Fraction:
    """Probability of receiving `y` when `x` is transmitted"""
    _checkPair(spec, x, y)

    if spec.direction == common.ChannelDirection.Deletion:
        return Fraction(countEmbeddings(x.symbols, y.symbols), math.comb(spec.n, spec.k))
    return Fraction(countEmbeddings(y.symbols, x.symbols), math.comb(spec.n + spec.k, spec.k) * spec.q ** spec.k)


def inProb(spec: ChannelSpec, x: Word, y: Word) -> Fraction:
    """Probability that `x` was transmitted given that `y` was received, under uniform transmission"""
    _checkPair(spec, x, y)

    if spec.direction == common.ChannelDirection.Deletion:
        return Fraction(countEmbeddings(x.symbols, y.symbols), math.comb(spec.n, spec.k) * spec.q ** spec.k)
    return Fraction(countEmbeddings(y.symbols, x.symbols), math.comb(spec.n + spec.k, spec.k))


def fractionLog2(p: Fraction) -> float:
    return math.log2(p.numerator) - math.log2(p.denominator)
