"""
Configuration management for the Weierstrass/Landen library.
"""

from typing import Optional, TYPE_CHECKING
from dataclasses import dataclass
from enum import Enum
from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field, field_validator, ValidationError

from ..exceptions import ConfigurationError

if TYPE_CHECKING:
    from ..core.types import Tolerances

load_dotenv()

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Environment(str, Enum):
    """Deployment environment."""
    DEVELOPMENT = "development"
    PRODUCTION = "production"
    TESTING = "testing"


@dataclass
class EnvironmentConfig:
    """Environment-specific defaults."""
    name: str
    debug: bool
    log_level: str
    output_digits: int
    oracle_cutoff: int


ENVIRONMENT_CONFIGS = {
    Environment.DEVELOPMENT: EnvironmentConfig(
        name="development",
        debug=True,
        log_level="DEBUG",
        output_digits=17,
        oracle_cutoff=200
    ),
    Environment.PRODUCTION: EnvironmentConfig(
        name="production",
        debug=False,
        log_level="WARNING",
        output_digits=17,
        oracle_cutoff=200
    ),
    Environment.TESTING: EnvironmentConfig(
        name="testing",
        debug=True,
        log_level="DEBUG",
        output_digits=17,
        oracle_cutoff=100
    )
}


class Settings(BaseSettings):
    """Library settings, read from WEIERSTRASS_* variables and .env."""

    model_config = SettingsConfigDict(
        env_prefix="WEIERSTRASS_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore"
    )

    # Environment
    environment: Environment = Field(default=Environment.PRODUCTION)

    # Landen iteration
    eps_stop: float = Field(default=2.0 ** -52)
    max_iter: int = Field(default=64)

    # Rank classification and poles
    eps_degenerate: float = Field(default=2.0 ** -40)
    eps_pole: float = Field(default=2.0 ** -48)

    # Application
    debug: Optional[bool] = Field(default=None)
    log_level: Optional[str] = Field(default=None)

    # Output and oracle
    output_digits: Optional[int] = Field(default=None)
    oracle_cutoff: Optional[int] = Field(default=None)

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self._apply_environment_defaults()
        self._validate_configuration()

    def _apply_environment_defaults(self):
        """Fill unset values from the environment table."""
        env_config = ENVIRONMENT_CONFIGS.get(self.environment)
        if env_config:
            if self.debug is None:
                self.debug = env_config.debug
            if self.log_level is None:
                self.log_level = env_config.log_level
            if self.output_digits is None:
                self.output_digits = env_config.output_digits
            if self.oracle_cutoff is None:
                self.oracle_cutoff = env_config.oracle_cutoff

    def _validate_configuration(self):
        """Cross-field checks."""
        errors = []

        if self.eps_stop >= 1:
            errors.append("eps_stop must be below 1")

        if self.eps_degenerate >= 1:
            errors.append("eps_degenerate must be below 1")

        if self.eps_pole >= 1:
            errors.append("eps_pole must be below 1")

        if self.oracle_cutoff is not None and self.oracle_cutoff < 8:
            errors.append("oracle_cutoff must be at least 8")

        if errors:
            raise ConfigurationError(
                "Configuration error: " + ", ".join(errors),
                context={"errors": errors}
            )

    @field_validator("eps_stop", "eps_degenerate", "eps_pole")
    @classmethod
    def validate_positive(cls, v):
        if not v > 0:
            raise ValueError("tolerances must be strictly positive")
        return v

    @field_validator("max_iter")
    @classmethod
    def validate_max_iter(cls, v):
        if v < 1:
            raise ValueError("max_iter must be at least 1")
        return v

    @field_validator("output_digits")
    @classmethod
    def validate_output_digits(cls, v):
        if v is not None and not 1 <= v <= 17:
            raise ValueError("output_digits must be between 1 and 17")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v):
        if v is None:
            return v
        v = v.upper()
        if v not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}")
        return v

    @property
    def is_production(self) -> bool:
        return self.environment == Environment.PRODUCTION

    @property
    def is_development(self) -> bool:
        return self.environment == Environment.DEVELOPMENT

    @property
    def is_testing(self) -> bool:
        return self.environment == Environment.TESTING

    def tolerances(self) -> "Tolerances":
        """The numerical thresholds as an immutable value."""
        from ..core.types import Tolerances

        return Tolerances(
            eps_stop=self.eps_stop,
            max_iter=self.max_iter,
            eps_degenerate=self.eps_degenerate,
            eps_pole=self.eps_pole
        )


class ConfigManager:
    """Settings singleton."""
    _instance = None
    _settings = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            try:
                cls._settings = Settings()
            except ValidationError as e:
                raise ConfigurationError(
                    f"Settings validation failed: {str(e)}",
                    context={"validation_errors": e.errors()}
                )
        return cls._instance

    @property
    def settings(self) -> Settings:
        return self._settings

    def reload_settings(self):
        """Re-read the environment."""
        try:
            type(self)._settings = Settings()
        except ValidationError as e:
            raise ConfigurationError(
                f"Settings reload failed: {str(e)}",
                context={"validation_errors": e.errors()}
            )


_config_manager = ConfigManager()


def get_settings() -> Settings:
    return _config_manager.settings


def get_config_manager() -> ConfigManager:
    return _config_manager


def resolve_tolerances(tol: Optional["Tolerances"] = None) -> "Tolerances":
    """Explicit tolerances win; otherwise the configured ones."""
    return tol if tol is not None else get_settings().tolerances()
