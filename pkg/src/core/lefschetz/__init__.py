"""
Decision routes for the weak and strong Lefschetz properties
"""

from .oracle import (
    GradedMatrix,
    RankStep,
    has_slp_oracle,
    has_wlp_oracle,
    has_wlp_via_mgd,
    mgd_nonkoszul,
    mult_map_matrix,
    rank,
    rank_profile,
)
from .detformula import (
    DeterminantReport,
    bad_primes,
    large_top_case,
    large_top_multinomial,
    nilp_determinant_bruteforce,
    proctor_determinant,
    wlp_via_determinant,
)
from .syzgap import (
    HanWitness,
    exceptional_failing_range,
    han_delta_positive,
    slp_dd_criterion,
    slp_two_var,
    wlp_three_gen_via_syzgap,
)
from .syzygies import ExplicitSyzygy, build_low_degree_syzygy, standard_syzygy
from .classify import (
    MethodTrace,
    char_two_slp,
    classify_slp,
    classify_wlp,
    even_socle_lift,
    slp_via_wlp_family,
    small_second_degree_slp,
    two_variable_wlp,
    uniform_degree_slp,
)
from .conjectures import ConjectureReport, check_conjectures

__all__ = [
    'GradedMatrix',
    'RankStep',
    'has_slp_oracle',
    'has_wlp_oracle',
    'has_wlp_via_mgd',
    'mgd_nonkoszul',
    'mult_map_matrix',
    'rank',
    'rank_profile',
    'DeterminantReport',
    'bad_primes',
    'large_top_case',
    'large_top_multinomial',
    'nilp_determinant_bruteforce',
    'proctor_determinant',
    'wlp_via_determinant',
    'HanWitness',
    'exceptional_failing_range',
    'han_delta_positive',
    'slp_dd_criterion',
    'slp_two_var',
    'wlp_three_gen_via_syzgap',
    'ExplicitSyzygy',
    'build_low_degree_syzygy',
    'standard_syzygy',
    'MethodTrace',
    'char_two_slp',
    'classify_slp',
    'classify_wlp',
    'even_socle_lift',
    'slp_via_wlp_family',
    'small_second_degree_slp',
    'two_variable_wlp',
    'uniform_degree_slp',
    'ConjectureReport',
    'check_conjectures',
]
