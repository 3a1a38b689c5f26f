"""
Built-in census presets and job-count resolution
"""

import logging
import os
from typing import Dict, Optional

import psutil

from ..exceptions import ConfigurationError
from .models import CensusPreset, LefschetzConfig


logger = logging.getLogger(__name__)

JOBS_ENV = "LEFSCHETZ_JOBS"

CENSUS_PRESETS = {
    "smoke": {
        "description": "Tiny WLP sweep for checking an installation",
        "config": {
            "n_values": [1, 2],
            "dmax": 3,
            "pmax": 5,
            "property": "wlp"
        }
    },

    "two-variables": {
        "description": "SLP of K[x,y]/(x^a, y^b) through the syzygy-gap family",
        "config": {
            "n_values": [1],
            "dmax": 8,
            "pmax": 13,
            "property": "slp"
        }
    },

    "three-variables": {
        "description": "WLP of monomial complete intersections in three variables",
        "config": {
            "n_values": [2],
            "dmax": 6,
            "pmax": 13,
            "property": "wlp"
        }
    },

    "char-two": {
        "description": "SLP in characteristic 2 for up to four variables",
        "config": {
            "n_values": [1, 2, 3],
            "dmax": 6,
            "pmax": 2,
            "property": "slp"
        }
    },

    "uniform": {
        "description": "SLP around the equal-degree thresholds (d <= 4)",
        "config": {
            "n_values": [1, 2, 3],
            "dmax": 4,
            "pmax": 13,
            "property": "slp"
        }
    },

    "conjecture-gap": {
        "description": "WLP in three variables up to the primes t/2 + 1",
        "config": {
            "n_values": [2],
            "dmax": 5,
            "pmax": 7,
            "property": "wlp"
        }
    }
}


def get_preset(name: str) -> Optional[CensusPreset]:
    """Get a built-in census preset by name"""
    if name not in CENSUS_PRESETS:
        return None

    preset = CENSUS_PRESETS[name]
    return CensusPreset(description=preset["description"], **preset["config"])


def list_presets(config: Optional[LefschetzConfig] = None) -> Dict[str, CensusPreset]:
    """Built-in presets overlaid with the ones from `config`"""
    presets = {name: get_preset(name) for name in CENSUS_PRESETS}
    if config is not None:
        presets.update(config.presets)
    return presets


def resolve_preset(name: str, config: Optional[LefschetzConfig] = None) -> CensusPreset:
    """Config presets shadow built-ins; unknown names are a configuration error"""
    presets = list_presets(config)
    if name not in presets:
        raise ConfigurationError(f"unknown preset {name!r}; available: {', '.join(sorted(presets))}")
    return presets[name]


def resolve_jobs(explicit: Optional[int] = None, config: Optional[LefschetzConfig] = None) -> int:
    """Explicit value, then $LEFSCHETZ_JOBS, then config, then physical cores"""
    if explicit is not None:
        jobs = explicit
    elif os.environ.get(JOBS_ENV):
        raw = os.environ[JOBS_ENV]
        try:
            jobs = int(raw)
        except ValueError:
            raise ConfigurationError(f"{JOBS_ENV}={raw!r} is not an integer")
    elif config is not None and config.jobs is not None:
        jobs = config.jobs
    else:
        jobs = psutil.cpu_count(logical=False) or 1
    if jobs < 1:
        raise ConfigurationError(f"job count must be at least 1, got {jobs}")
    logger.debug(f"using {jobs} worker(s)")
    return jobs
