"""
Sweeps comparing the rank oracle with two open statements:

* for even socle degree t and p = t/2 + 1 prime, R/I_d has WLP;
* for d_0 <= ceil(t/2), R/I_d has SLP exactly when p = 0 or p > t.

Disagreements are reported, never raised.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional

from sympy import isprime

from ..algebra.combinat import primes_up_to
from ..algebra.domain import DegreeTuple, Status, enumerate_degree_tuples
from ..docs.registry import MONITORED, implements
from .oracle import has_slp_oracle, has_wlp_oracle


logger = logging.getLogger(__name__)

WLP_GAP = "wlp-even-socle-gap"
SLP_SMALL_TOP = "slp-small-top"


@dataclass(frozen=True)
class ConjectureObservation:
    conjecture: str
    degrees: DegreeTuple
    char: int
    expected: Status
    observed: Status

    @property
    def consistent(self) -> bool:
        return self.expected is self.observed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "conjecture": self.conjecture,
            "degrees": list(self.degrees.degrees),
            "char": self.char,
            "expected": self.expected.value,
            "observed": self.observed.value,
            "consistent": self.consistent,
        }


@dataclass
class ConjectureReport:
    observations: List[ConjectureObservation] = field(default_factory=list)
    skipped: int = 0

    @property
    def counterexamples(self) -> List[ConjectureObservation]:
        return [obs for obs in self.observations if not obs.consistent]

    def checked(self, conjecture: str) -> int:
        return sum(1 for obs in self.observations if obs.conjecture == conjecture)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "checked": len(self.observations),
            "skipped": self.skipped,
            "counterexamples": [obs.to_dict() for obs in self.counterexamples],
        }


def _observe(report: ConjectureReport, conjecture: str, d: DegreeTuple, p: int, expected: Status, observed: Status):
    obs = ConjectureObservation(conjecture, d, p, expected, observed)
    report.observations.append(obs)
    if not obs.consistent:
        logger.warning(f"{conjecture}: {d} in char {p} expected {expected.value}, oracle says {observed.value}")


@implements(
    "Even socle WLP conjecture",
    "for even t with p = t/2 + 1 prime, R/I_d is expected to have WLP",
    ("tests/core/test_conjectures.py::TestConjectureSweeps::test_even_socle_gap_three_variables",),
    status=MONITORED,
)
@implements(
    "Small top SLP conjecture",
    "for d_0 <= ceil(t/2), SLP is expected to hold iff p = 0 or p > t",
    ("tests/core/test_conjectures.py::TestConjectureSweeps::test_small_top_slp",),
    status=MONITORED,
)
def check_conjectures(
    n_values: Iterable[int],
    dmax: int,
    pmax: Optional[int] = None,
    wlp_gap: bool = True,
    slp_small_top: bool = True,
) -> ConjectureReport:
    """Check both statements on every nonincreasing tuple with 2 <= d_i <= dmax.

    The SLP statement is checked for primes up to `pmax`, or up to t when
    `pmax` is None; larger primes are covered by the above-socle result.
    """
    report = ConjectureReport()
    for n in n_values:
        for d in enumerate_degree_tuples(n + 1, dmax):
            t = d.socle
            if wlp_gap:
                p = t // 2 + 1
                if t % 2 == 0 and isprime(p):
                    _observe(report, WLP_GAP, d, p, Status.HOLDS, has_wlp_oracle(d, p).status)
            if not slp_small_top:
                continue
            if d.top > (t + 1) // 2:
                report.skipped += 1
                continue
            for p in primes_up_to(t if pmax is None else pmax):
                expected = Status.HOLDS if p > t else Status.FAILS
                _observe(report, SLP_SMALL_TOP, d, p, expected, has_slp_oracle(d, p).status)
    logger.info(
        f"conjecture sweep: {len(report.observations)} checks, "
        f"{len(report.counterexamples)} counterexamples, {report.skipped} skipped"
    )
    return report
