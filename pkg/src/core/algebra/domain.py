"""
Domain types shared by every decision route: degree tuples, characteristics,
Hilbert functions and the verdict/witness model.
"""

import logging
import operator
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import isprime

from ..exceptions import InvalidCharacteristicError, InvalidDegreesError


logger = logging.getLogger(__name__)

METHOD_ORACLE = "oracle"
METHOD_DETERMINANT = "determinant"
METHOD_SYZYGY_GAP = "syzygy-gap"
METHOD_UNDECIDED = "undecided"


def theorem_method(theorem_id: str) -> str:
    """Method tag for a verdict decided by a closed-form result"""
    return f"theorem:{theorem_id}"


@dataclass(frozen=True)
class DegreeTuple:
    """Exponents d_0 >= d_1 >= ... >= d_n of the generators x_i^{d_i}.

    Equality and hashing only look at the sorted degrees; the original input
    order and the sorting permutation ride along for reporting.
    """

    degrees: Tuple[int, ...]
    original: Tuple[int, ...] = field(default=(), compare=False)
    permutation: Tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.degrees) < 2:
            raise InvalidDegreesError(f"need at least two degrees, got {list(self.degrees)}")
        if any(d < 1 for d in self.degrees):
            raise InvalidDegreesError(f"degrees must be positive, got {list(self.degrees)}")
        if any(a < b for a, b in zip(self.degrees, self.degrees[1:])):
            raise InvalidDegreesError(
                f"degrees must be sorted nonincreasing, got {list(self.degrees)}; use normalize()"
            )
        if not self.original:
            object.__setattr__(self, "original", self.degrees)
            object.__setattr__(self, "permutation", tuple(range(len(self.degrees))))

    @property
    def n(self) -> int:
        return len(self.degrees) - 1

    @property
    def top(self) -> int:
        return self.degrees[0]

    @property
    def rest(self) -> Tuple[int, ...]:
        return self.degrees[1:]

    @property
    def socle(self) -> int:
        return socle_degree(self)

    def has_units(self) -> bool:
        return self.degrees[-1] == 1

    def is_uniform(self) -> bool:
        return self.degrees[0] == self.degrees[-1]

    def extend(self, *extra: int) -> "DegreeTuple":
        """Tuple of the algebra with extra variables x^{e} adjoined"""
        return normalize(list(self.degrees) + list(extra))

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __getitem__(self, index):
        return self.degrees[index]

    def __str__(self) -> str:
        return "(" + ",".join(str(d) for d in self.degrees) + ")"


def normalize(raw: Sequence[int]) -> DegreeTuple:
    """Sort raw generator degrees nonincreasing, remembering the permutation"""
    values = []
    for entry in raw:
        try:
            value = operator.index(entry)
        except TypeError:
            raise InvalidDegreesError(f"degree {entry!r} is not an integer")
        if value < 1:
            raise InvalidDegreesError(f"degree {value} is not positive")
        values.append(value)
    if len(values) < 2:
        raise InvalidDegreesError(f"need at least two degrees, got {values}")

    order = sorted(range(len(values)), key=lambda i: (-values[i], i))
    return DegreeTuple(
        degrees=tuple(values[i] for i in order),
        original=tuple(values),
        permutation=tuple(order),
    )


def as_degree_tuple(value: Union[DegreeTuple, Sequence[int]]) -> DegreeTuple:
    """Pass DegreeTuples through, normalize anything else"""
    if isinstance(value, DegreeTuple):
        return value
    return normalize(value)


def enumerate_degree_tuples(length: int, dmax: int, dmin: int = 2) -> List[DegreeTuple]:
    """All nonincreasing tuples with entries in [dmin, dmax], lexicographically ascending"""
    if length < 2:
        raise InvalidDegreesError(f"need at least two degrees, got length {length}")
    if dmax < dmin:
        return []
    raw = sorted(tuple(sorted(c, reverse=True)) for c in combinations_with_replacement(range(dmin, dmax + 1), length))
    return [DegreeTuple(degrees) for degrees in raw]


def socle_degree(d: DegreeTuple) -> int:
    """t = d_0 + ... + d_n - (n + 1)"""
    return sum(d.degrees) - len(d.degrees)


@dataclass(frozen=True)
class Characteristic:
    """Characteristic of the coefficient field: 0 or a prime"""

    value: int = 0

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(self.value, int):
            raise InvalidCharacteristicError(f"characteristic {self.value!r} is not an integer")
        if self.value != 0 and not isprime(self.value):
            raise InvalidCharacteristicError(f"characteristic {self.value} is neither 0 nor a prime")

    @classmethod
    def of(cls, value: Union["Characteristic", int]) -> "Characteristic":
        if isinstance(value, Characteristic):
            return value
        try:
            return cls(operator.index(value))
        except TypeError:
            raise InvalidCharacteristicError(f"characteristic {value!r} is not an integer")

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class HilbertFunction:
    """Dimensions h_0, ..., h_t of the graded pieces of R/I_d"""

    values: Tuple[int, ...]

    @property
    def socle(self) -> int:
        return len(self.values) - 1

    @property
    def total(self) -> int:
        return sum(self.values)

    def is_symmetric(self) -> bool:
        return self.values == self.values[::-1]

    def __getitem__(self, degree: int) -> int:
        if 0 <= degree < len(self.values):
            return self.values[degree]
        return 0

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


@lru_cache(maxsize=None)
def _hilbert_values(degrees: Tuple[int, ...]) -> Tuple[int, ...]:
    # coefficients of prod_i (1 + x + ... + x^{d_i - 1})
    values = [1]
    for d in degrees:
        product = [0] * (len(values) + d - 1)
        for i, v in enumerate(values):
            for j in range(d):
                product[i + j] += v
        values = product
    return tuple(values)


def hilbert_function(d: DegreeTuple) -> HilbertFunction:
    """Hilbert function of R/I_d, independent of the characteristic"""
    return HilbertFunction(_hilbert_values(d.degrees))


class Status(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


class WitnessKind(str, Enum):
    DEGREE = "degree"
    PRIME = "prime"
    SYZYGY = "syzygy"
    THEOREM = "theorem"


class Witness(BaseModel):
    """Machine-checkable evidence attached to a verdict"""

    model_config = ConfigDict(frozen=True)

    kind: WitnessKind = Field(description="What sort of evidence this is")
    degree: Optional[int] = Field(default=None, description="Source degree of the failing map, or syzygy degree")
    power: Optional[int] = Field(default=None, description="Power of the linear form in the failing map")
    prime: Optional[int] = Field(default=None, description="Certificate prime")
    exponent: Optional[int] = Field(default=None, description="Exponent of the certificate prime")
    theorem: Optional[str] = Field(default=None, description="Identifier of the deciding result")
    member: Optional[Tuple[int, ...]] = Field(default=None, description="Failing extended tuple of a family reduction")
    scale: Optional[int] = Field(default=None, description="Exponent s of the scaling p^s")
    point: Optional[Tuple[int, ...]] = Field(default=None, description="Odd lattice point near the scaled triple")
    syzygy: Optional[Tuple[str, ...]] = Field(default=None, description="Explicit syzygy coefficients")
    detail: Optional[str] = Field(default=None, description="Free-form note")

    @classmethod
    def failing_degree(cls, degree: int, power: int = 1, **extra: Any) -> "Witness":
        return cls(kind=WitnessKind.DEGREE, degree=degree, power=power, **extra)

    @classmethod
    def certificate_prime(cls, prime: int, exponent: int, **extra: Any) -> "Witness":
        return cls(kind=WitnessKind.PRIME, prime=prime, exponent=exponent, **extra)

    @classmethod
    def citation(cls, theorem: str, **extra: Any) -> "Witness":
        return cls(kind=WitnessKind.THEOREM, theorem=theorem, **extra)

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", exclude_none=True)


class Verdict(BaseModel):
    """Outcome of a decision route"""

    model_config = ConfigDict(frozen=True)

    status: Status
    method: str = Field(description="oracle | determinant | syzygy-gap | theorem:<id>")
    witness: Optional[Witness] = None

    @model_validator(mode="after")
    def _failure_carries_witness(self) -> "Verdict":
        if self.status is Status.FAILS and self.witness is None:
            raise ValueError("a failing verdict must carry a witness")
        return self

    @classmethod
    def holding(cls, method: str, witness: Optional[Witness] = None) -> "Verdict":
        return cls(status=Status.HOLDS, method=method, witness=witness)

    @classmethod
    def failing(cls, method: str, witness: Witness) -> "Verdict":
        return cls(status=Status.FAILS, method=method, witness=witness)

    @classmethod
    def undecided(cls, method: str) -> "Verdict":
        return cls(status=Status.UNKNOWN, method=method)

    @classmethod
    def from_bool(cls, holds: bool, method: str, witness: Witness) -> "Verdict":
        """Holding or failing verdict; the witness is kept either way"""
        return cls(status=Status.HOLDS if holds else Status.FAILS, method=method, witness=witness)

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def fails(self) -> bool:
        return self.status is Status.FAILS

    @property
    def decisive(self) -> bool:
        return self.status is not Status.UNKNOWN
