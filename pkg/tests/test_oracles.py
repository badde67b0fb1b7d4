# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import pytest

from indelentropy import common
from indelentropy import oracles
from indelentropy.oracles import Suites


def test_suite_names():
    assert oracles.SUITE_NAMES == ("normalization", "duality", "extremal", "average", "appendix", "lemmas")


@pytest.mark.parametrize("name, maxM", [
    ("normalization", 4),
    ("duality", 5),
    ("extremal", 4),
    ("average", 6),
    ("appendix", 5),
    ("lemmas", 5),
])
def test_suites_pass(name, maxM):
    result = oracles.runSuite(name, maxM)
    assert result.passed, result.summary()
    assert result.cases > 0
    assert result.summary() == f"PASS ({result.cases} cases)"


def test_normalization_case_count():
    assert oracles.runSuite("normalization", 3).cases == 313


def test_duality_case_count():
    result = oracles.runSuite("duality", 8)
    assert result.summary() == "PASS (1530 cases)"


def test_ternary_duality():
    assert oracles.runSuite("duality", 4, q=3).passed


def test_lemmas_with_other_seed():
    assert oracles.runSuite("lemmas", 3, seed=12345).passed


def test_counterexample_stops_the_suite(monkeypatch):
    monkeypatch.setattr(Suites, "dualityCheck", lambda y, k, direction: (0.0, 1.0))
    result = oracles.runSuite("duality", 3)
    assert not result.passed
    assert result.cases == 1
    assert result.summary().startswith("FAIL after 1 cases: y=0 q=2")


def test_unknown_suite():
    with pytest.raises(common.DomainError, match="unknown suite 'fuzz'"):
        oracles.runSuite("fuzz", 3)


def test_max_length_must_be_positive():
    with pytest.raises(common.DomainError):
        oracles.runSuite("duality", 0)
