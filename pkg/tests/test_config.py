from __future__ import annotations

import logging

import pytest

from config import CONFIG_BY_PROFILE, BaseConfig, get_config
from transference_lab import create_lab
from transference_lab.logging import JSONLogFormatter


def test_default_profile_when_none_given():
    assert get_config(None) is CONFIG_BY_PROFILE["default"]
    assert get_config(" Testing ") is CONFIG_BY_PROFILE["testing"]


def test_unknown_profile_raises_key_error():
    with pytest.raises(KeyError):
        get_config("production")


def test_invalid_limits_are_rejected(monkeypatch):
    class Broken(BaseConfig):
        UNDECIDED_TOLERANCE = 1.5

    monkeypatch.setitem(CONFIG_BY_PROFILE, "broken", Broken)

    with pytest.raises(ValueError, match="UNDECIDED_TOLERANCE"):
        get_config("broken")


def test_unsupported_log_level_is_rejected(monkeypatch):
    class Chatty(BaseConfig):
        LOG_LEVEL = "CHATTY"

    monkeypatch.setitem(CONFIG_BY_PROFILE, "chatty", Chatty)

    with pytest.raises(ValueError, match="LOG_LEVEL"):
        get_config("chatty")


def test_testing_profile_shrinks_budgets(lab):
    assert lab.profile == "testing"
    assert lab.budget == 200_000
    assert lab["MONTECARLO_TRIALS"] == 2_000
    assert lab.seed == 20090422
    assert lab.jobs == 1
    assert lab.get("MISSING", "fallback") == "fallback"


def test_overrides_apply_and_none_is_ignored():
    lab = create_lab("default", SOLVER_NODE_BUDGET=50, LOG_LEVEL=None, JOBS=3)

    assert lab.budget == 50
    assert lab.jobs == 3
    assert lab["LOG_LEVEL"] == "WARNING"


def test_unknown_override_raises_key_error():
    with pytest.raises(KeyError, match="NOT_A_SETTING"):
        create_lab("default", NOT_A_SETTING=1)


def test_settings_are_read_only(lab):
    with pytest.raises(TypeError):
        lab.settings["JOBS"] = 4


def test_debug_profile_configures_json_logging():
    create_lab("debug")

    handler = logging.getLogger().handlers[0]
    assert isinstance(handler.formatter, JSONLogFormatter)
    assert logging.getLogger().level == logging.DEBUG
