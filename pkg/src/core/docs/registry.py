"""
Annotation registry tying each mathematical result to the operation that
implements it and the tests that check it.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple, TypeVar


F = TypeVar("F", bound=Callable)

IMPLEMENTED = "implemented"
MONITORED = "monitored, not assumed"


@dataclass(frozen=True)
class ConcordanceEntry:
    result: str
    statement: str
    operation: str
    tests: Tuple[str, ...]
    status: str = IMPLEMENTED
    location: str = ""


REGISTRY: Dict[str, ConcordanceEntry] = {}


def source_location(module: str) -> str:
    """Repository path of a module, whether imported as core.* or src.core.*"""
    parts = module.split(".")
    if parts[0] == "src":
        parts = parts[1:]
    return "/".join(["src"] + parts) + ".py"

# Results the concordance must cover, in rendering order
REQUIRED_RESULTS = (
    "Proctor determinant formula",
    "Determinant criterion for WLP",
    "Large top degree multinomial",
    "Kummer carry count",
    "Odd multinomial bit criterion",
    "Paired even multinomials",
    "WLP for a large top degree",
    "Frobenius window",
    "Prime power window",
    "Half socle bound",
    "SLP failure windows",
    "SLP above the socle degree",
    "Even socle lift",
    "SLP via the WLP family",
    "Han syzygy-gap criterion",
    "Two-variable SLP",
    "Equal-degree two-variable SLP",
    "Exceptional characteristic two pairs",
    "Small second degree SLP",
    "Characteristic two SLP",
    "Equal-degree SLP thresholds",
    "Equal-degree WLP in many variables",
    "Near-uniform WLP failure",
    "WLP of (d, d, d, d-3)",
    "Standard non-Koszul syzygy",
    "Low-degree syzygies of (d, d, d, d-3)",
    "Syzygy criterion for WLP",
    "Even socle WLP conjecture",
    "Small top SLP conjecture",
)


def implements(
    result: str,
    statement: str,
    tests: Tuple[str, ...],
    status: str = IMPLEMENTED,
    operation: Optional[str] = None,
    location: Optional[str] = None,
) -> Callable[[F], F]:
    """Register `result` against the decorated function; the function is returned unchanged.

    `location` defaults to the source file of the decorated function.
    """

    def register(func: F) -> F:
        name = operation or f"{func.__module__.rsplit('.', 1)[-1]}.{func.__qualname__}"
        if result in REGISTRY and REGISTRY[result].operation != name:
            raise ValueError(f"result {result!r} is already implemented by {REGISTRY[result].operation}")
        REGISTRY[result] = ConcordanceEntry(
            result, statement, name, tuple(tests), status, location or source_location(func.__module__)
        )
        return func

    return register
