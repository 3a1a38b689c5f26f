import json
import tomllib
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from ..exceptions import ConfigurationError


PROPERTIES = ("wlp", "slp")
OUTPUT_FORMATS = ("jsonl", "csv")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class CensusPreset(BaseModel):
    """A named census range"""

    n_values: List[int] = Field(
        default=[1],
        description="Numbers of extra variables n; tuples have n + 1 entries"
    )

    dmax: int = Field(
        default=4,
        description="Largest generator degree in the sweep"
    )

    pmax: int = Field(
        default=7,
        description="Largest characteristic in the sweep"
    )

    property: str = Field(
        default="wlp",
        description="Property to decide ('wlp' or 'slp')"
    )

    description: str = Field(
        default="",
        description="One-line summary shown by `lefschetz presets`"
    )

    @field_validator("n_values")
    @classmethod
    def _positive_n(cls, value: List[int]) -> List[int]:
        if any(n < 1 for n in value):
            raise ValueError(f"n values must be at least 1, got {value}")
        return value

    @field_validator("dmax", "pmax")
    @classmethod
    def _nonnegative_bound(cls, value: int) -> int:
        if value < 0:
            raise ValueError(f"range bound {value} is negative")
        return value

    @field_validator("property")
    @classmethod
    def _known_property(cls, value: str) -> str:
        value = value.lower()
        if value not in PROPERTIES:
            raise ValueError(f"unknown property {value!r}; expected one of {PROPERTIES}")
        return value


class LefschetzConfig(BaseModel):
    """Configuration for decisions and censuses"""

    # Parallelism
    jobs: Optional[int] = Field(
        default=None,
        description="Worker processes for censuses; None defers to LEFSCHETZ_JOBS or the core count"
    )

    # Logging configuration
    log_level: str = Field(
        default="WARNING",
        description="Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)"
    )

    # Decision behavior
    oracle_fallback: bool = Field(
        default=True,
        description="Fall back to the rank oracle when no closed form decides"
    )

    bruteforce_guard: int = Field(
        default=2000,
        description="Largest matrix size for brute-force determinants"
    )

    # Census output
    output_format: str = Field(
        default="jsonl",
        description="Census output format ('jsonl' or 'csv')"
    )

    with_zero_char: bool = Field(
        default=False,
        description="Add characteristic 0 rows to censuses"
    )

    presets: Dict[str, CensusPreset] = Field(
        default_factory=dict,
        description="Census presets; these shadow the built-in ones"
    )

    @model_validator(mode="after")
    def _check_choices(self) -> "LefschetzConfig":
        if self.log_level.upper() not in LOG_LEVELS:
            raise ValueError(f"unknown log level {self.log_level!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.jobs is not None and self.jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {self.jobs}")
        return self

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'LefschetzConfig':
        """Create configuration from dictionary"""
        try:
            return cls(**data)
        except ValidationError as e:
            raise ConfigurationError(f"invalid configuration: {e}")

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to dictionary"""
        return self.model_dump()

    @classmethod
    def from_file(cls, config_path: str) -> 'LefschetzConfig':
        """Load configuration from a .json or .toml file; a missing file gives defaults"""
        config_file = Path(config_path)
        if not config_file.exists():
            return cls()

        if config_file.suffix == '.json':
            with open(config_file, 'r') as f:
                data = json.load(f)
        elif config_file.suffix == '.toml':
            with open(config_file, 'rb') as f:
                data = tomllib.load(f)
        else:
            raise ConfigurationError(f"Unsupported config file format: {config_file.suffix}")

        return cls.from_dict(data)

    def to_file(self, config_path: str):
        """Save configuration as JSON"""
        config_file = Path(config_path)
        if config_file.suffix != '.json':
            raise ConfigurationError(f"Unsupported config file format: {config_file.suffix}")
        config_file.parent.mkdir(parents=True, exist_ok=True)
        with open(config_file, 'w') as f:
            json.dump(self.to_dict(), f, indent=2)
