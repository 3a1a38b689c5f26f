"""
Census sweeps, their output files and cross-validation against the oracle
"""

from .records import CensusRecord
from .runner import METHODS, CensusTask, census_tasks, decide, run_census, run_task
from .verify import MODES, VerifyReport, run_verification
from .writer import CensusWriter, read_header, read_records

__all__ = [
    'CensusRecord',
    'METHODS',
    'CensusTask',
    'census_tasks',
    'decide',
    'run_census',
    'run_task',
    'MODES',
    'VerifyReport',
    'run_verification',
    'CensusWriter',
    'read_header',
    'read_records',
]
