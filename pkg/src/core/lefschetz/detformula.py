"""
Closed-form determinant of the peak multiplication matrix M_d as a prime
factorization, and the integer determinant it is checked against.

For odd socle degree t and d_0 <= ceil(t/2), R/I_d has WLP in characteristic
p exactly when p does not divide det M_d.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Optional, Sequence, Union

from ..algebra.combinat import (
    PrimeFactorization,
    composition_count,
    composition_count_delta,
    factorial_exponents,
    multinomial_factorization,
    rising_factorial_factorization,
    weak_compositions,
)
from ..algebra.domain import (
    METHOD_DETERMINANT,
    Characteristic,
    DegreeTuple,
    Verdict,
    Witness,
    as_degree_tuple,
    theorem_method,
)
from ..docs.registry import implements
from ..exceptions import DimensionGuardError, PreconditionError
from .oracle import bareiss_determinant, determinant_matrix


logger = logging.getLogger(__name__)

DEFAULT_BRUTEFORCE_GUARD = 2000
LARGE_TOP_THEOREM = "large-top-multinomial"


@dataclass(frozen=True)
class DeterminantReport:
    """|det M_d| with the data it was assembled from"""

    degrees: DegreeTuple
    magnitude: PrimeFactorization
    square_size: int
    signed: Optional[int] = None

    @property
    def bad_primes(self) -> FrozenSet[int]:
        return self.magnitude.primes

    def to_dict(self) -> Dict[str, Any]:
        report: Dict[str, Any] = {
            "degrees": list(self.degrees.degrees),
            "socle": self.degrees.socle,
            "magnitude": self.magnitude.to_dict(),
            "bad_primes": sorted(self.bad_primes),
            "square_size": self.square_size,
        }
        if self.signed is not None:
            report["bruteforce"] = self.signed
        return report


def _check_determinant_shape(d: DegreeTuple) -> int:
    t = d.socle
    if t % 2 == 0:
        raise PreconditionError("socle degree odd", f"socle degree {t} of {d} is even")
    s = t // 2
    if d.top > s + 1:
        raise PreconditionError("d_0 <= ceil(t/2)", f"top degree {d.top} of {d} exceeds ceil(t/2) = {s + 1}")
    return s


@implements(
    "Proctor determinant formula",
    "|det M_d| as a quotient of factorial products times rising factorials, for odd t and d_0 <= ceil(t/2)",
    (
        "tests/core/test_detformula.py::TestProctorDeterminant::test_known_determinants",
        "tests/integration/test_cross_validation.py::TestDeterminantVsOracle::test_bad_primes_match_oracle",
    ),
)
def proctor_determinant(d: Union[DegreeTuple, Sequence[int]]) -> DeterminantReport:
    """|det M_d| = prod_a a! / prod_b b! * prod_i rf(i + 1, d_0)^{delta_{s+1-d_0-i}}"""
    d = as_degree_tuple(d)
    s = _check_determinant_shape(d)
    n = d.n
    bounds = [e - 1 for e in d.rest]
    start = s + 1 - d.top

    exponents: Counter = Counter()
    for a in weak_compositions(n, bounds, start):
        for part in a:
            exponents.update(factorial_exponents(part))
    for b in weak_compositions(n, bounds, s + 1):
        for part in b:
            exponents.subtract(factorial_exponents(part))
    for i in range(start + 1):
        delta = composition_count_delta(n, bounds, start - i)
        if not delta:
            continue
        for prime, exponent in rising_factorial_factorization(i + 1, d.top).items:
            exponents[prime] += delta * exponent

    # from_exponents refuses negative leftovers
    magnitude = PrimeFactorization.from_exponents(exponents)
    report = DeterminantReport(d, magnitude, composition_count(n, bounds, s + 1))
    logger.debug(f"|det M_{d}| = {magnitude} on a {report.square_size}x{report.square_size} matrix")
    return report


def bad_primes(d: Union[DegreeTuple, Sequence[int]]) -> FrozenSet[int]:
    """Primes in which R/I_d fails WLP (odd socle, balanced top degree)"""
    return proctor_determinant(d).bad_primes


@implements(
    "Determinant criterion for WLP",
    "for odd t and d_0 <= ceil(t/2), WLP holds in characteristic p iff p does not divide det M_d",
    ("tests/core/test_detformula.py::TestWlpViaDeterminant::test_certificate_prime",),
)
def wlp_via_determinant(d: Union[DegreeTuple, Sequence[int]], char: Union[Characteristic, int]) -> Verdict:
    d = as_degree_tuple(d)
    p = Characteristic.of(char).value
    report = proctor_determinant(d)
    if p and report.magnitude.divisible_by(p):
        return Verdict.failing(METHOD_DETERMINANT, Witness.certificate_prime(p, report.magnitude.exponent(p)))
    return Verdict.holding(METHOD_DETERMINANT)


def nilp_determinant_bruteforce(
    d: Union[DegreeTuple, Sequence[int]], guard: int = DEFAULT_BRUTEFORCE_GUARD
) -> int:
    """Signed integer determinant of M_d by fraction-free elimination"""
    d = as_degree_tuple(d)
    s = _check_determinant_shape(d)
    size = composition_count(d.n, [e - 1 for e in d.rest], s + 1)
    if size > guard:
        raise DimensionGuardError(f"M_{d} is {size}x{size}, above the guard {guard}")
    matrix = determinant_matrix(d)
    return bareiss_determinant(matrix.entries)


def _check_large_top(d: DegreeTuple) -> None:
    if d.n < 2:
        raise PreconditionError("n >= 2", f"{d} has fewer than three generators")
    if any(e < 2 for e in d.rest):
        raise PreconditionError("d_i >= 2", f"{d} has a unit degree")
    if d.top != sum(d.rest) - d.n:
        raise PreconditionError(
            "d_0 = d_1 + ... + d_n - n", f"top degree {d.top} of {d} is not {sum(d.rest) - d.n}"
        )


def large_top_multinomial(d: Union[DegreeTuple, Sequence[int]]) -> PrimeFactorization:
    """binom(d_0; d_1 - 1, ..., d_n - 1), the single entry of M_d"""
    d = as_degree_tuple(d)
    _check_large_top(d)
    return multinomial_factorization([e - 1 for e in d.rest])


@implements(
    "Large top degree multinomial",
    "if d_0 = d_1 + ... + d_n - n, WLP holds iff p does not divide binom(d_0; d_1 - 1, ..., d_n - 1)",
    ("tests/core/test_detformula.py::TestLargeTop::test_single_entry_multinomial",),
)
def large_top_case(d: Union[DegreeTuple, Sequence[int]], char: Union[Characteristic, int]) -> Verdict:
    """WLP iff p does not divide binom(d_0; d_1 - 1, ..., d_n - 1)"""
    factorization = large_top_multinomial(d)
    p = Characteristic.of(char).value
    method = theorem_method(LARGE_TOP_THEOREM)
    if p and factorization.divisible_by(p):
        return Verdict.failing(
            method,
            Witness.certificate_prime(p, factorization.exponent(p), theorem=LARGE_TOP_THEOREM),
        )
    return Verdict.holding(method, Witness.citation(LARGE_TOP_THEOREM))
