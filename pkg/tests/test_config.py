"""Tests for configuration, validation helpers and logging setup."""

import logging

import pytest

from models import Command, RunConfig
from utils import Config, get_logger
from utils.validators import RunConfigValidator, parse_point, parse_resolution
from utils.logger_config import ProcessingLogger, set_level


def test_defaults():
    config = Config.reload()
    assert config is Config()
    assert config.default_depth == 8
    assert config.default_samples == 8
    assert config.cell_budget == 2 ** 22
    assert config.max_depth == 14
    assert config.max_resolution == 4096


def test_reload_reads_the_environment(env):
    config = env(depth=5, threads=3, ronkin_tol="1e-6", log_level="debug")
    assert config.default_depth == 5
    assert config.threads == 3
    assert config.ronkin_tolerance == 1e-6
    assert config.log_level == "DEBUG"
    assert Config().default_depth == 5


def test_parse_resolution():
    assert parse_resolution("800") == (800, 800)
    assert parse_resolution("640x480") == (640, 480)
    assert parse_resolution(" 3 X 2 ") == (3, 2)
    with pytest.raises(ValueError):
        parse_resolution("wide")


def test_parse_point():
    assert parse_point("-1,2.5") == (-1.0, 2.5)
    with pytest.raises(ValueError):
        parse_point("1,a")
    with pytest.raises(ValueError):
        parse_point("1,2,3,4")


def test_validator_limits():
    validator = RunConfigValidator()
    ok = RunConfig(command=Command.DRAW, poly_text="z1+z2+1")
    assert validator.validate(ok).is_valid
    assert not validator.validate(RunConfig(command=Command.DRAW, poly_text="z1", depth=15)).is_valid
    assert not validator.validate(
        RunConfig(command=Command.DRAW, poly_text="z1", resolution=(4097, 10))
    ).is_valid
    assert not validator.validate(RunConfig(command=Command.DRAW, poly_text="z1", threads=0)).is_valid
    assert not validator.validate(RunConfig(command=Command.DRAW, poly_text="z1", domain="x:1")).is_valid
    assert validator.validate(RunConfig(command=Command.DRAW, poly_text="z1", domain="auto")).is_valid


def test_validator_sources():
    validator = RunConfigValidator()
    none = validator.validate(RunConfig(command=Command.INFO))
    assert not none.is_valid
    assert none.details == {"sources": 0}
    both = RunConfig(command=Command.INFO, poly_text="z1", fixture="p2")
    assert not validator.validate(both).is_valid
    assert validator.validate(RunConfig(command=Command.SCAN)).is_valid
    assert not validator.validate(RunConfig(command=Command.MEMBER, poly_text="z1")).is_valid


def test_processing_logger_times_a_phase(caplog):
    logger = get_logger("amoeba.test")
    with caplog.at_level(logging.INFO, logger="amoeba"):
        with ProcessingLogger("phase", logger) as phase:
            pass
    assert phase.elapsed >= 0.0
    assert "Completed: phase" in caplog.text


def test_set_level():
    set_level("warning")
    assert get_logger("amoeba").level == logging.WARNING
    set_level("info")
    assert get_logger("amoeba").level == logging.INFO
