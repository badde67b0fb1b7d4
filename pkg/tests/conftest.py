# SPDX-FileCopyrightText: © 2024 indelentropy contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses

import pytest

from indelentropy import common


@pytest.fixture(autouse=True)
def restoreGlobalConfig():
    snapshot = dataclasses.replace(common.GlobalConfig)
    yield
    for field in dataclasses.fields(snapshot):
        setattr(common.GlobalConfig, field.name, getattr(snapshot, field.name))
