"""
Cross-validation of the fast routes against the rank oracle.

Every disagreement carries the commands that reproduce both sides.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional

from ..algebra.combinat import primes_up_to
from ..algebra.domain import METHOD_DETERMINANT, DegreeTuple, Status, Verdict, Witness, enumerate_degree_tuples
from ..lefschetz.classify import classify_slp, classify_wlp
from ..lefschetz.conjectures import check_conjectures
from ..lefschetz.detformula import proctor_determinant
from ..lefschetz.oracle import has_slp_oracle, has_wlp_oracle, has_wlp_via_mgd
from ..lefschetz.syzgap import slp_two_var, wlp_three_gen_via_syzgap


logger = logging.getLogger(__name__)

MODES = ("det-vs-oracle", "classify-vs-oracle", "mgd-vs-oracle", "syzgap-vs-oracle", "conjectures")


def reproduction_command(prop: str, d: DegreeTuple, char: int, method: str) -> str:
    degrees = ",".join(str(e) for e in d.degrees)
    unit = " --allow-unit" if d.has_units() else ""
    return f"lefschetz {prop} --degrees {degrees} --char {char}{unit} --method {method}"


def verify_command(mode: str, d: DegreeTuple, char: int) -> str:
    """Smallest verify sweep that revisits d in characteristic char"""
    return f"lefschetz verify --mode {mode} --n {d.n} --dmax {d.top} --pmax {max(char, 2)}"


@dataclass(frozen=True)
class Disagreement:
    property: str
    degrees: DegreeTuple
    char: int
    route: str
    route_status: Status
    oracle_status: Status
    commands: List[str]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "property": self.property,
            "degrees": list(self.degrees.degrees),
            "char": self.char,
            "route": self.route,
            "route_status": self.route_status.value,
            "oracle_status": self.oracle_status.value,
            "reproduce": list(self.commands),
        }


@dataclass
class VerifyReport:
    mode: str
    checked: int = 0
    skipped: int = 0
    disagreements: List[Disagreement] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def compare(
        self,
        prop: str,
        d: DegreeTuple,
        char: int,
        route: Verdict,
        oracle: Verdict,
        route_method: str = "auto",
        route_command: Optional[str] = None,
    ):
        """Count one comparison; undecided routes are skipped.

        The route side is reproduced by `route_command` when given, else by a
        single decision with `route_method`.
        """
        if not route.decisive:
            self.skipped += 1
            return
        self.checked += 1
        if route.status is oracle.status:
            return
        disagreement = Disagreement(
            prop,
            d,
            char,
            route.method,
            route.status,
            oracle.status,
            [route_command or reproduction_command(prop, d, char, route_method), reproduction_command(prop, d, char, "oracle")],
        )
        logger.warning(
            f"{self.mode}: {prop.upper()} of {d} in char {char}: {route.method} says "
            f"{route.status.value}, oracle says {oracle.status.value}"
        )
        self.disagreements.append(disagreement)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mode": self.mode,
            "checked": self.checked,
            "skipped": self.skipped,
            "disagreements": [item.to_dict() for item in self.disagreements],
        }


def _tuples(n_values: Iterable[int], dmax: int) -> Iterable[DegreeTuple]:
    for n in sorted(set(n_values)):
        yield from enumerate_degree_tuples(n + 1, dmax)


def verify_det_vs_oracle(n_values: Iterable[int], dmax: int, pmax: Optional[int] = None) -> VerifyReport:
    """p | det M_d iff the oracle finds a WLP failure, for every prime p <= t (or pmax)"""
    report = VerifyReport("det-vs-oracle")
    for d in _tuples(n_values, dmax):
        t = d.socle
        if t % 2 == 0 or d.top > (t + 1) // 2:
            continue
        magnitude = proctor_determinant(d).magnitude
        for p in primes_up_to(t if pmax is None else pmax):
            if magnitude.divisible_by(p):
                route = Verdict.failing(METHOD_DETERMINANT, Witness.certificate_prime(p, magnitude.exponent(p)))
            else:
                route = Verdict.holding(METHOD_DETERMINANT)
            report.compare("wlp", d, p, route, has_wlp_oracle(d, p), "det")
    return report


def verify_classify_vs_oracle(n_values: Iterable[int], dmax: int, pmax: int, with_zero: bool = False) -> VerifyReport:
    """Closed-form cascades (no oracle fallback) against the oracle, for WLP and SLP"""
    report = VerifyReport("classify-vs-oracle")
    chars = ([0] if with_zero else []) + primes_up_to(pmax)
    for d in _tuples(n_values, dmax):
        for p in chars:
            wlp, _ = classify_wlp(d, p, oracle_fallback=False)
            report.compare("wlp", d, p, wlp, has_wlp_oracle(d, p), "theorem")
            slp, _ = classify_slp(d, p, oracle_fallback=False)
            report.compare("slp", d, p, slp, has_slp_oracle(d, p), "theorem")
    return report


def verify_mgd_vs_oracle(n_values: Iterable[int], dmax: int, pmax: int) -> VerifyReport:
    """Least non-Koszul syzygy degree against the rank oracle, characteristic 0 included"""
    report = VerifyReport("mgd-vs-oracle")
    for d in _tuples(n_values, dmax):
        for p in [0] + primes_up_to(pmax):
            report.compare(
                "wlp", d, p, has_wlp_via_mgd(d, p), has_wlp_oracle(d, p),
                route_command=verify_command(report.mode, d, p),
            )
    return report


def verify_syzgap_vs_oracle(n_values: Iterable[int], dmax: int, pmax: int) -> VerifyReport:
    """Syzygy gaps: WLP of stable triples (n = 2) and the two-variable SLP family (n = 1)"""
    report = VerifyReport("syzgap-vs-oracle")
    for d in _tuples(n_values, dmax):
        if d.n == 2 and d.top < d[1] + d[2]:
            for p in primes_up_to(pmax):
                route = wlp_three_gen_via_syzgap(d[2], d[1], d.top, p)
                report.compare("wlp", d, p, route, has_wlp_oracle(d, p), "syzgap")
        elif d.n == 1:
            for p in primes_up_to(pmax):
                report.compare("slp", d, p, slp_two_var(d.top, d[1], p), has_slp_oracle(d, p), "syzgap")
        else:
            report.skipped += 1
    return report


def verify_conjectures(n_values: Iterable[int], dmax: int, pmax: Optional[int] = None) -> VerifyReport:
    """Conjecture sweeps reported as disagreements between the conjectured and observed status"""
    report = VerifyReport("conjectures")
    conjectures = check_conjectures(n_values, dmax, pmax)
    report.checked = len(conjectures.observations)
    report.skipped = conjectures.skipped
    for obs in conjectures.counterexamples:
        prop = "wlp" if obs.conjecture.startswith("wlp") else "slp"
        report.disagreements.append(
            Disagreement(
                prop,
                obs.degrees,
                obs.char,
                obs.conjecture,
                obs.expected,
                obs.observed,
                [reproduction_command(prop, obs.degrees, obs.char, "oracle")],
            )
        )
    return report


VERIFIERS: Dict[str, Callable[..., VerifyReport]] = {
    "det-vs-oracle": verify_det_vs_oracle,
    "classify-vs-oracle": verify_classify_vs_oracle,
    "mgd-vs-oracle": verify_mgd_vs_oracle,
    "syzgap-vs-oracle": verify_syzgap_vs_oracle,
    "conjectures": verify_conjectures,
}


def run_verification(mode: str, n_values: Iterable[int], dmax: int, pmax: Optional[int] = None) -> VerifyReport:
    """Dispatch to one mode; pmax defaults to 7 where a mode needs it"""
    if mode not in VERIFIERS:
        raise ValueError(f"unknown verification mode {mode!r}")
    n_values = list(n_values)
    if mode in ("det-vs-oracle", "conjectures"):
        report = VERIFIERS[mode](n_values, dmax, pmax)
    else:
        report = VERIFIERS[mode](n_values, dmax, 7 if pmax is None else pmax)
    logger.info(f"{mode}: {report.checked} checked, {report.skipped} skipped, {len(report.disagreements)} disagreements")
    return report
