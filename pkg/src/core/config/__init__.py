"""
Core configuration management module
"""

from .models import CensusPreset, LefschetzConfig
from .profiles import (
    CENSUS_PRESETS,
    get_preset,
    list_presets,
    resolve_jobs,
    resolve_preset
)

__all__ = [
    'CensusPreset',
    'LefschetzConfig',
    'CENSUS_PRESETS',
    'get_preset',
    'list_presets',
    'resolve_jobs',
    'resolve_preset'
]
