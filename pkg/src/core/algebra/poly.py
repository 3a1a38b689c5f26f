"""
Sparse multivariate polynomials over F_p or the rationals.

Terms live in a dict from fixed-length exponent tuples to nonzero
coefficients. Over F_p coefficients are ints in [0, p); over the rationals
they are Fractions in lowest terms.
"""

import logging
import math
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..exceptions import FieldMismatchError, PreconditionError


logger = logging.getLogger(__name__)

Coefficient = Union[int, Fraction]
Exponents = Tuple[int, ...]

DEFAULT_NAMES = ("x", "y", "z", "w")


class SparsePolynomial:
    """Polynomial in `nvars` variables; `field` is the characteristic (0 for Q)"""

    __slots__ = ("nvars", "field", "terms")

    def __init__(self, nvars: int, field: int = 0, terms: Optional[Mapping[Sequence[int], Coefficient]] = None):
        if nvars < 1:
            raise PreconditionError("nvars >= 1", f"polynomial ring needs a variable, got {nvars}")
        self.nvars = nvars
        self.field = field
        collected: Dict[Exponents, Coefficient] = defaultdict(int)
        for exps, coeff in (terms or {}).items():
            key = tuple(exps)
            if len(key) != nvars:
                raise PreconditionError(
                    "exponent length == nvars", f"exponent vector {key} in a ring with {nvars} variables"
                )
            collected[key] += coeff
        self.terms: Dict[Exponents, Coefficient] = {}
        for key, coeff in collected.items():
            reduced = self._reduce(coeff)
            if reduced:
                self.terms[key] = reduced

    def _reduce(self, coeff: Coefficient) -> Coefficient:
        if self.field:
            if isinstance(coeff, Fraction):
                return coeff.numerator * pow(coeff.denominator, -1, self.field) % self.field
            return int(coeff) % self.field
        return Fraction(coeff)

    # constructors

    @classmethod
    def zero(cls, nvars: int, field: int = 0) -> "SparsePolynomial":
        return cls(nvars, field)

    @classmethod
    def constant(cls, value: Coefficient, nvars: int, field: int = 0) -> "SparsePolynomial":
        return cls(nvars, field, {(0,) * nvars: value})

    @classmethod
    def monomial(cls, exps: Sequence[int], field: int = 0, coeff: Coefficient = 1) -> "SparsePolynomial":
        return cls(len(exps), field, {tuple(exps): coeff})

    @classmethod
    def variable(cls, index: int, nvars: int, field: int = 0) -> "SparsePolynomial":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, field, {tuple(exps): 1})

    @classmethod
    def linear_form(cls, nvars: int, field: int = 0, indices: Optional[Iterable[int]] = None) -> "SparsePolynomial":
        """Sum of the chosen variables (all of them by default)"""
        chosen = range(nvars) if indices is None else indices
        terms = {}
        for i in chosen:
            exps = [0] * nvars
            exps[i] = 1
            terms[tuple(exps)] = 1
        return cls(nvars, field, terms)

    # structure

    def _check_compatible(self, other: "SparsePolynomial") -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"characteristic {self.field} vs {other.field}")
        if self.nvars != other.nvars:
            raise FieldMismatchError(f"{self.nvars} variables vs {other.nvars}")

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Maximal total degree; -1 for the zero polynomial"""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exps: Sequence[int]) -> Coefficient:
        return self.terms.get(tuple(exps), 0)

    def sorted_terms(self) -> List[Tuple[Exponents, Coefficient]]:
        """Terms in graded-lexicographic descending order"""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)

    # arithmetic

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check_compatible(other)
        merged = dict(self.terms)
        for exps, coeff in other.terms.items():
            merged[exps] = merged.get(exps, 0) + coeff
        return SparsePolynomial(self.nvars, self.field, merged)

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial(self.nvars, self.field, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-other)

    def scale(self, factor: Coefficient) -> "SparsePolynomial":
        return SparsePolynomial(self.nvars, self.field, {e: c * factor for e, c in self.terms.items()})

    def __mul__(self, other: Union["SparsePolynomial", Coefficient]) -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            return self.scale(other)
        self._check_compatible(other)
        product: Dict[Exponents, Coefficient] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                product[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return SparsePolynomial(self.nvars, self.field, product)

    def __rmul__(self, other: Coefficient) -> "SparsePolynomial":
        return self.scale(other)

    def frobenius(self, times: int = 1) -> "SparsePolynomial":
        """f^(p^times) over F_p, computed termwise"""
        if not self.field:
            raise FieldMismatchError("Frobenius needs a positive characteristic")
        q = self.field ** times
        return SparsePolynomial(self.nvars, self.field, {tuple(a * q for a in e): c for e, c in self.terms.items()})

    def power(self, exponent: int, use_frobenius: bool = True) -> "SparsePolynomial":
        if exponent < 0:
            raise PreconditionError("exponent >= 0", f"negative power {exponent}")
        base = self
        if use_frobenius and self.field:
            times = 0
            while exponent and exponent % self.field == 0:
                exponent //= self.field
                times += 1
            if times:
                base = self.frobenius(times)
        result = SparsePolynomial.constant(1, self.nvars, self.field)
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __pow__(self, exponent: int) -> "SparsePolynomial":
        return self.power(exponent)

    def reduce_modulo_powers(self, bounds: Sequence[Optional[int]]) -> "SparsePolynomial":
        """Drop every term divisible by some x_i^{bounds[i]}; None leaves x_i free"""
        kept = {
            e: c
            for e, c in self.terms.items()
            if not any(b is not None and a >= b for a, b in zip(e, bounds))
        }
        return SparsePolynomial(self.nvars, self.field, kept)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.field == other.field and self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    # rendering

    def to_string(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = DEFAULT_NAMES if self.nvars <= len(DEFAULT_NAMES) else [f"x{i}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms():
            factors = [name if a == 1 else f"{name}^{a}" for name, a in zip(names, exps) if a]
            mono = "*".join(factors)
            if not mono:
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append(mono)
            elif coeff == -1:
                pieces.append(f"-{mono}")
            else:
                pieces.append(f"{coeff}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.to_string()!r}, field={self.field})"


def make_f(k: int, field: int = 0, nvars: int = 3, y: int = 1, z: int = 2) -> SparsePolynomial:
    """f_k = sum_{i<k} y^i (-z)^{k-i-1}, so (y + z) f_k = y^k - (-z)^k"""
    if k < 1:
        raise PreconditionError("k >= 1", f"f_k needs k >= 1, got {k}")
    terms = {}
    for i in range(k):
        exps = [0] * nvars
        exps[y] = i
        exps[z] = k - i - 1
        terms[tuple(exps)] = (-1) ** (k - i - 1)
    return SparsePolynomial(nvars, field, terms)


def make_g(k: int, field: int = 0, nvars: int = 3, x: int = 0, y: int = 1, z: int = 2) -> SparsePolynomial:
    """g_k = -sum_{i<k} binom(k, i) x^i (y+z)^{k-i-1}, so (y + z) g_k = x^k - (x+y+z)^k"""
    if k < 1:
        raise PreconditionError("k >= 1", f"g_k needs k >= 1, got {k}")
    xv = SparsePolynomial.variable(x, nvars, field)
    yz = SparsePolynomial.linear_form(nvars, field, (y, z))
    total = SparsePolynomial.zero(nvars, field)
    for i in range(k):
        total = total + (xv ** i) * (yz ** (k - i - 1)) * math.comb(k, i)
    return -total


def verify_syzygy(generators: Sequence[SparsePolynomial], coefficients: Sequence[SparsePolynomial]) -> bool:
    """True iff sum_i coefficients[i] * generators[i] vanishes"""
    if len(generators) != len(coefficients):
        raise PreconditionError(
            "equal lengths", f"{len(generators)} generators against {len(coefficients)} coefficients"
        )
    if not generators:
        return True
    reference = generators[0]
    total = SparsePolynomial.zero(reference.nvars, reference.field)
    for generator, coeff in zip(generators, coefficients):
        reference._check_compatible(generator)
        reference._check_compatible(coeff)
        total = total + coeff * generator
    return total.is_zero()


def is_nonkoszul_witness(coefficients: Sequence[SparsePolynomial], variable_degrees: Sequence[Optional[int]]) -> bool:
    """First coefficient survives reduction modulo (x_i^{variable_degrees[i]}).

    Every Koszul relation has a combination of the pure powers in its first
    entry, so a surviving first coefficient rules the syzygy out of Kos.
    """
    head = coefficients[0]
    return not head.reduce_modulo_powers(variable_degrees).is_zero()


def syzygy_degree(generators: Sequence[SparsePolynomial], coefficients: Sequence[SparsePolynomial]) -> int:
    """Degree of a homogeneous syzygy as an element of the twisted free module"""
    return max(
        (c.degree + g.degree for g, c in zip(generators, coefficients) if not c.is_zero()),
        default=-1,
    )
