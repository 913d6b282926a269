"""
Tests for settings loaded from WEIERSTRASS_* variables.
"""

import pytest

from src.weierstrass_landen.core.types import Tolerances
from src.weierstrass_landen.exceptions import ConfigurationError
from src.weierstrass_landen.utils.config import (
    Environment,
    Settings,
    get_config_manager,
    get_settings,
    resolve_tolerances,
)


class TestSettings:
    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("WEIERSTRASS_ENVIRONMENT", raising=False)
        settings = Settings(_env_file=None)
        assert settings.environment == Environment.PRODUCTION
        assert settings.is_production
        assert settings.log_level == "WARNING"
        assert settings.output_digits == 17
        assert settings.tolerances() == Tolerances()

    def test_environment_defaults(self):
        settings = Settings(_env_file=None, environment="testing")
        assert settings.is_testing
        assert settings.debug is True
        assert settings.oracle_cutoff == 100

    def test_explicit_values_win(self):
        settings = Settings(_env_file=None, environment="development", log_level="error", output_digits=8)
        assert settings.log_level == "ERROR"
        assert settings.output_digits == 8

    def test_environment_variables(self, monkeypatch):
        monkeypatch.setenv("WEIERSTRASS_EPS_STOP", "1e-10")
        monkeypatch.setenv("WEIERSTRASS_MAX_ITER", "12")
        tol = Settings(_env_file=None).tolerances()
        assert tol.eps_stop == 1e-10
        assert tol.max_iter == 12

    @pytest.mark.parametrize("field, value", [
        ("eps_stop", 0.0),
        ("max_iter", 0),
        ("output_digits", 40),
        ("log_level", "LOUD"),
    ])
    def test_field_validation(self, field, value):
        with pytest.raises(ValueError):
            Settings(_env_file=None, **{field: value})

    def test_cross_field_validation(self):
        with pytest.raises(ConfigurationError):
            Settings(_env_file=None, eps_pole=2.0)
        with pytest.raises(ConfigurationError):
            Settings(_env_file=None, oracle_cutoff=4)


class TestConfigManager:
    def test_singleton(self):
        assert get_config_manager() is get_config_manager()
        assert get_settings() is get_config_manager().settings

    def test_reload_reports_bad_environment(self, monkeypatch):
        monkeypatch.setenv("WEIERSTRASS_MAX_ITER", "-1")
        with pytest.raises(ConfigurationError):
            get_config_manager().reload_settings()
        monkeypatch.delenv("WEIERSTRASS_MAX_ITER")
        get_config_manager().reload_settings()

    def test_resolve_tolerances(self):
        explicit = Tolerances(eps_stop=1e-6)
        assert resolve_tolerances(explicit) is explicit
        assert resolve_tolerances() == get_settings().tolerances()
