"""
Bounded weak compositions, bit positions, Kummer carries, and prime
factorizations of multinomials and rising factorials.

Factorials are never multiplied out here: every quotient of factorials is
assembled as exponents from Legendre's formula.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Set, Tuple

from sympy import factorint, isprime, sieve

from ..docs.registry import implements
from ..exceptions import FormulaError, InvalidCharacteristicError, PreconditionError


logger = logging.getLogger(__name__)


class WeakComposition(tuple):
    """Ordered tuple of nonnegative parts.

    Behaves as a plain tuple so it can key monomial dictionaries directly.
    """

    __slots__ = ()

    @property
    def parts(self) -> Tuple[int, ...]:
        return tuple(self)

    @property
    def total(self) -> int:
        return sum(self)

    def fits_under(self, other: Sequence[int]) -> bool:
        """Componentwise self <= other"""
        return all(a <= b for a, b in zip(self, other))

    def difference(self, other: Sequence[int]) -> "WeakComposition":
        return WeakComposition(a - b for a, b in zip(self, other))


@lru_cache(maxsize=8192)
def _compositions(bounds: Tuple[int, ...], k: int) -> Tuple[Tuple[int, ...], ...]:
    if not bounds:
        return ((),) if k == 0 else ()
    head, tail = bounds[0], bounds[1:]
    room = sum(max(b, 0) for b in tail)
    found = []
    for first in range(min(head, k), max(0, k - room) - 1, -1):
        for rest in _compositions(tail, k - first):
            found.append((first,) + rest)
    return tuple(found)


def weak_compositions(n: int, bounds: Sequence[int], k: int) -> List[WeakComposition]:
    """Compositions of k into n parts bounded componentwise, lexicographically descending"""
    if n < 1:
        raise PreconditionError("n >= 1", f"need at least one part, got n={n}")
    if len(bounds) != n:
        raise PreconditionError("len(bounds) == n", f"{len(bounds)} bounds for {n} parts")
    if k < 0:
        return []
    return [WeakComposition(c) for c in _compositions(tuple(bounds), k)]


@lru_cache(maxsize=8192)
def _composition_count(bounds: Tuple[int, ...], k: int) -> int:
    if k < 0:
        return 0
    if not bounds:
        return 1 if k == 0 else 0
    return sum(_composition_count(bounds[1:], k - j) for j in range(min(bounds[0], k) + 1))


def composition_count(n: int, bounds: Sequence[int], k: int) -> int:
    """#C(n, bounds, k); zero for negative k"""
    if len(bounds) != n:
        raise PreconditionError("len(bounds) == n", f"{len(bounds)} bounds for {n} parts")
    return _composition_count(tuple(bounds), k)


def composition_count_delta(n: int, bounds: Sequence[int], i: int) -> int:
    """delta_i = #C(n, bounds, i) - #C(n, bounds, i - 1)"""
    if i < 0:
        raise PreconditionError("i >= 0", f"delta index {i} is negative")
    return composition_count(n, bounds, i) - composition_count(n, bounds, i - 1)


def bit_positions(n: int) -> Set[int]:
    """Indices of the ones in the binary expansion of n"""
    if n < 1:
        raise PreconditionError("n >= 1", f"bit positions are defined for positive integers, got {n}")
    return {i for i in range(n.bit_length()) if (n >> i) & 1}


def _require_prime(p: int) -> None:
    if not isprime(p):
        raise InvalidCharacteristicError(f"{p} is not a prime")


@implements(
    "Kummer carry count",
    "v_p(binom(a + b, a)) is the number of carries when adding a and b in base p",
    ("tests/core/test_combinat.py::TestKummer::test_carries_equal_valuation",),
)
def carries_base_p(a: int, b: int, p: int) -> int:
    """Number of carries when adding a and b in base p"""
    _require_prime(p)
    if a < 0 or b < 0:
        raise PreconditionError("a, b >= 0", f"cannot add {a} and {b} digitwise")
    carries = carry = 0
    while a or b or carry:
        carry = 1 if a % p + b % p + carry >= p else 0
        carries += carry
        a //= p
        b //= p
    return carries


def legendre_valuation(n: int, p: int) -> int:
    """v_p(n!) = sum_j floor(n / p^j)"""
    total = 0
    power = p
    while power <= n:
        total += n // power
        power *= p
    return total


@lru_cache(maxsize=None)
def _factorial_exponents(n: int) -> Tuple[Tuple[int, int], ...]:
    return tuple((p, legendre_valuation(n, p)) for p in sieve.primerange(2, n + 1))


def factorial_exponents(n: int) -> Counter:
    """Exponents of n! as a Counter prime -> exponent"""
    if n < 0:
        raise PreconditionError("n >= 0", f"factorial of {n}")
    return Counter(dict(_factorial_exponents(n)))


def primes_up_to(bound: int) -> List[int]:
    return list(sieve.primerange(2, bound + 1))


@dataclass(frozen=True)
class PrimeFactorization:
    """A positive integer as prime -> positive exponent; the empty map is 1"""

    items: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_exponents(cls, exponents: Mapping[int, int]) -> "PrimeFactorization":
        cleaned = {}
        for prime, exponent in exponents.items():
            if exponent < 0:
                raise FormulaError(f"negative exponent {exponent} for prime {prime}")
            if exponent == 0:
                continue
            if not isprime(prime):
                raise FormulaError(f"factor {prime} is not prime")
            cleaned[int(prime)] = int(exponent)
        return cls(tuple(sorted(cleaned.items())))

    @classmethod
    def from_int(cls, value: int) -> "PrimeFactorization":
        """Factor the magnitude of a nonzero integer directly"""
        if value == 0:
            raise FormulaError("zero has no prime factorization")
        return cls.from_exponents(factorint(abs(value)))

    @property
    def factors(self) -> Dict[int, int]:
        return dict(self.items)

    @property
    def primes(self) -> FrozenSet[int]:
        return frozenset(p for p, _ in self.items)

    def exponent(self, prime: int) -> int:
        return self.factors.get(prime, 0)

    def divisible_by(self, prime: int) -> bool:
        return self.exponent(prime) > 0

    def value(self) -> int:
        return math.prod(p ** e for p, e in self.items)

    def __mul__(self, other: "PrimeFactorization") -> "PrimeFactorization":
        merged = Counter(self.factors)
        merged.update(other.factors)
        return PrimeFactorization.from_exponents(merged)

    def __pow__(self, power: int) -> "PrimeFactorization":
        if power < 0:
            raise FormulaError("negative powers leave the integers")
        return PrimeFactorization.from_exponents({p: e * power for p, e in self.items})

    def to_dict(self) -> Dict[str, int]:
        return {str(p): e for p, e in self.items}

    def __str__(self) -> str:
        if not self.items:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.items)


def multinomial_factorization(parts: Sequence[int]) -> PrimeFactorization:
    """Factorization of (sum parts)! / prod(parts_i!)"""
    parts = list(parts)
    if any(part < 0 for part in parts):
        raise PreconditionError("parts >= 0", f"negative part in {parts}")
    total = sum(parts)
    exponents = {}
    for p in sieve.primerange(2, total + 1):
        exponent = legendre_valuation(total, p) - sum(legendre_valuation(part, p) for part in parts)
        if exponent:
            exponents[p] = exponent
    return PrimeFactorization.from_exponents(exponents)


def multinomial(parts: Sequence[int]) -> int:
    """Exact multinomial coefficient as an integer"""
    result = 1
    running = 0
    for part in parts:
        running += part
        result *= math.comb(running, part)
    return result


def rising_factorial_factorization(x: int, m: int) -> PrimeFactorization:
    """Factorization of x (x+1) ... (x+m-1) = (x+m-1)! / (x-1)!"""
    if x < 1:
        raise PreconditionError("x >= 1", f"rising factorial base {x} is not positive")
    if m < 0:
        raise PreconditionError("m >= 0", f"rising factorial length {m} is negative")
    exponents = factorial_exponents(x + m - 1)
    exponents.subtract(factorial_exponents(x - 1))
    return PrimeFactorization.from_exponents(exponents)


@implements(
    "Odd multinomial bit criterion",
    "a multinomial coefficient is odd iff the binary supports of its parts are disjoint",
    ("tests/core/test_combinat.py::TestMultinomialParity::test_odd_iff_disjoint_bits",),
)
def is_multinomial_odd(parts: Sequence[int]) -> bool:
    """True iff the binary supports of the parts are pairwise disjoint"""
    seen = 0
    for part in parts:
        if part < 0:
            raise PreconditionError("parts >= 0", f"negative part {part}")
        if seen & part:
            return False
        seen |= part
    return True


def _check_dominant_top(a: Sequence[int]) -> None:
    if len(a) < 3:
        raise PreconditionError("n >= 2", f"need at least three entries, got {list(a)}")
    if any(x < y for x, y in zip(a, a[1:])) or a[-1] < 1:
        raise PreconditionError("a_0 >= ... >= a_n >= 1", f"entries {list(a)} are not a positive nonincreasing list")
    if a[0] < sum(a[1:]):
        raise PreconditionError("a_0 >= a_1 + ... + a_n", f"top entry of {list(a)} does not dominate the rest")


def which_multinomial_even(a: Sequence[int]) -> Tuple[bool, bool]:
    """Evenness of binom(sum a; a) and binom(a_0 + 1; a_0 + 1 - sum rest, a_1, ..., a_n)"""
    a = list(a)
    _check_dominant_top(a)
    rest = sum(a[1:])
    first = not is_multinomial_odd(a)
    second = not is_multinomial_odd([a[0] + 1 - rest] + a[1:])
    return first, second


@implements(
    "Paired even multinomials",
    "for a_0 >= a_1 + ... + a_n one of the two paired multinomials is even",
    ("tests/core/test_combinat.py::TestMultinomialParity::test_one_or_other_even",),
)
def one_or_other_even(a: Sequence[int]) -> bool:
    """At least one of the paired multinomials of a dominant-top list is even"""
    first, second = which_multinomial_even(a)
    logger.debug(f"paired multinomials for {list(a)}: first even={first}, second even={second}")
    return first or second


def is_odd_endpoint_pair(a: int, b: int) -> bool:
    """a = 2^m * l and b = 2^m + 1 for some m >= 0 and odd l >= 3"""
    if b < 2:
        return False
    power = b - 1
    if power & (power - 1):
        return False
    if a % power:
        return False
    cofactor = a // power
    return cofactor % 2 == 1 and cofactor >= 3


def prime_power_in(p: int, low: int, high: int) -> Optional[int]:
    """Least p^m (m >= 1) with low <= p^m <= high, or None"""
    power = p
    while power < low:
        power *= p
    return power if power <= high else None
