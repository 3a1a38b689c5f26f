"""
Exact algebra layer: degree tuples and verdicts, combinatorics, sparse polynomials
"""

from .domain import (
    Characteristic,
    DegreeTuple,
    HilbertFunction,
    Status,
    Verdict,
    Witness,
    WitnessKind,
    enumerate_degree_tuples,
    hilbert_function,
    normalize,
    socle_degree,
)
from .combinat import (
    PrimeFactorization,
    WeakComposition,
    bit_positions,
    carries_base_p,
    composition_count_delta,
    is_multinomial_odd,
    multinomial_factorization,
    one_or_other_even,
    rising_factorial_factorization,
    weak_compositions,
)
from .poly import SparsePolynomial, is_nonkoszul_witness, make_f, make_g, verify_syzygy

__all__ = [
    'Characteristic',
    'DegreeTuple',
    'HilbertFunction',
    'Status',
    'Verdict',
    'Witness',
    'WitnessKind',
    'enumerate_degree_tuples',
    'hilbert_function',
    'normalize',
    'socle_degree',
    'PrimeFactorization',
    'WeakComposition',
    'bit_positions',
    'carries_base_p',
    'composition_count_delta',
    'is_multinomial_odd',
    'multinomial_factorization',
    'one_or_other_even',
    'rising_factorial_factorization',
    'weak_compositions',
    'SparsePolynomial',
    'is_nonkoszul_witness',
    'make_f',
    'make_g',
    'verify_syzygy',
]
