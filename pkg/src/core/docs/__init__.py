"""
Concordance between results and the operations and tests that realize them
"""

from .registry import REGISTRY, REQUIRED_RESULTS, ConcordanceEntry, implements
from .concordance import generate_concordance, missing_results, orphaned_tests

__all__ = [
    'REGISTRY',
    'REQUIRED_RESULTS',
    'ConcordanceEntry',
    'implements',
    'generate_concordance',
    'missing_results',
    'orphaned_tests',
]
