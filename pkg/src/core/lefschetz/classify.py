"""
Method selection for WLP and SLP.

Each property is decided by an ordered cascade of rules: constant-time
closed forms first, then the determinant and syzygy-gap routes, then the
rank oracle. Every rule either declines with a reason or returns a verdict;
the first decisive verdict wins and the trace records how it was reached.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from ..algebra.combinat import prime_power_in, which_multinomial_even
from ..algebra.domain import (
    METHOD_ORACLE,
    METHOD_UNDECIDED,
    Characteristic,
    DegreeTuple,
    Verdict,
    Witness,
    as_degree_tuple,
    theorem_method,
)
from ..docs.registry import implements
from ..exceptions import PreconditionError
from .detformula import LARGE_TOP_THEOREM, large_top_case, wlp_via_determinant
from .oracle import has_slp_oracle, has_wlp_oracle
from .syzgap import CHAR_ZERO_THEOREM, slp_dd_criterion, slp_two_var, wlp_three_gen_via_syzgap
from .syzygies import build_low_degree_syzygy


logger = logging.getLogger(__name__)

DegreesLike = Union[DegreeTuple, Sequence[int]]
CharacteristicLike = Union[Characteristic, int]
WlpDecider = Callable[[DegreeTuple, int], Verdict]

TWO_VARIABLES = "two-variables"
LARGE_TOP_DEGREE = "large-top-degree"
FROBENIUS_WINDOW = "frobenius-window"
PRIME_POWER_WINDOW = "prime-power-window"
HALF_SOCLE_BOUND = "half-socle-bound"
UNIFORM_MANY_VARS = "uniform-many-vars"
NEAR_UNIFORM_DEGREE = "near-uniform-degree"
UNIFORM_MINUS_THREE = "uniform-minus-three"
CONJECTURE_GAP = "conjecture-gap"
EVEN_SOCLE_LIFT = "even-socle-lift"
ABOVE_SOCLE = "above-socle"
CHAR_TWO_TWO_VARS = "char-two-two-vars"
CHAR_TWO_MANY_VARS = "char-two-many-vars"
SMALL_SECOND_DEGREE = "small-second-degree"
THREE_UNIFORM = "three-uniform"
FOUR_UNIFORM = "four-uniform"
UNIFORM_MANY_VARS_SLP = "uniform-many-vars-slp"
WLP_FAMILY = "wlp-family"

# explicit syzygy witnesses are only built below this degree
SYZYGY_WITNESS_LIMIT = 60


@dataclass
class TraceStep:
    rule: str
    applicable: bool
    note: str = ""
    decisive: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {"rule": self.rule, "applicable": self.applicable, "note": self.note, "decisive": self.decisive}


@dataclass
class MethodTrace:
    """Ordered record of the rules consulted for one (property, tuple, characteristic)"""

    property: str
    degrees: Tuple[int, ...]
    characteristic: int
    steps: List[TraceStep] = field(default_factory=list)
    tags: List[str] = field(default_factory=list)
    verdict: Optional[Verdict] = None

    def record(self, rule: str, applicable: bool, note: str = "", decisive: bool = False) -> None:
        self.steps.append(TraceStep(rule, applicable, note, decisive))

    @property
    def method(self) -> Optional[str]:
        return self.verdict.method if self.verdict else None

    @property
    def decisive_rule(self) -> Optional[str]:
        for step in self.steps:
            if step.decisive:
                return step.rule
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "property": self.property,
            "degrees": list(self.degrees),
            "char": self.characteristic,
            "steps": [step.to_dict() for step in self.steps],
            "tags": list(self.tags),
            "method": self.method,
            "status": self.verdict.status.value if self.verdict else None,
        }


class _RouteToOracle(Exception):
    """Raised by a rule that sends the case straight to the oracle"""

    def __init__(self, tag: str, note: str):
        super().__init__(note)
        self.tag = tag
        self.note = note


@dataclass(frozen=True)
class _Case:
    d: DegreeTuple
    p: int

    @property
    def t(self) -> int:
        return self.d.socle

    @property
    def half(self) -> int:
        """ceil(t/2)"""
        return (self.t + 1) // 2


# A rule returns a verdict, or a string saying why it does not apply.
Rule = Callable[[_Case], Union[Verdict, str]]


def _cite(theorem: str, holds: bool, **extra: Any) -> Verdict:
    return Verdict.from_bool(holds, theorem_method(theorem), Witness.citation(theorem, **extra))


def _prepare(d: DegreesLike, char: CharacteristicLike) -> _Case:
    d = as_degree_tuple(d)
    if d.has_units():
        raise PreconditionError("d_i >= 2", f"{d} has a degree equal to 1; drop it first")
    return _Case(d, Characteristic.of(char).value)


def _run(name: str, rules: Sequence[Tuple[str, Rule]], case: _Case, fallback: Optional[Callable[[], Verdict]]):
    trace = MethodTrace(name, case.d.degrees, case.p)
    verdict = None
    routed = False
    for rule_id, rule in rules:
        try:
            outcome = rule(case)
        except _RouteToOracle as route:
            trace.record(rule_id, True, route.note)
            trace.tags.append(route.tag)
            routed = True
            break
        if isinstance(outcome, str):
            trace.record(rule_id, False, outcome)
            continue
        if outcome.decisive:
            trace.record(rule_id, True, outcome.status.value, decisive=True)
            verdict = outcome
            break
        trace.record(rule_id, True, "declined")

    if verdict is None:
        if fallback is not None:
            verdict = fallback()
            trace.record(METHOD_ORACLE, True, verdict.status.value, decisive=True)
        else:
            verdict = Verdict.undecided(METHOD_UNDECIDED)
            trace.record(METHOD_ORACLE, False, "oracle fallback disabled")
    if routed:
        logger.info(f"{name.upper()} of {case.d} in char {case.p} routed to the oracle: {verdict.status.value}")
    trace.verdict = verdict
    logger.debug(f"{name.upper()} of {case.d} in char {case.p}: {verdict.status.value} via {verdict.method}")
    return verdict, trace


# WLP rules


def _wlp_char_zero(case: _Case) -> Union[Verdict, str]:
    if case.p:
        return "positive characteristic"
    return _cite(CHAR_ZERO_THEOREM, True)


def _wlp_two_variables(case: _Case) -> Union[Verdict, str]:
    if case.d.n != 1:
        return "more than two variables"
    return _cite(TWO_VARIABLES, True)


@implements(
    "WLP for a large top degree",
    "if d_0 > ceil(t/2), R/I_d has WLP in every characteristic",
    ("tests/core/test_classify.py::TestClassifyWlp::test_large_top_degree_holds",),
    operation="classify.classify_wlp[large-top-degree]",
)
def _wlp_large_top(case: _Case) -> Union[Verdict, str]:
    if case.d.top <= case.half:
        return f"d_0 = {case.d.top} <= ceil(t/2) = {case.half}"
    return _cite(LARGE_TOP_DEGREE, True)


@implements(
    "Equal-degree WLP in many variables",
    "for n >= 4 and equal degrees d, WLP holds iff p = 0 or p > ceil((n + 1)(d - 1) / 2)",
    ("tests/core/test_classify.py::TestClassifyWlp::test_uniform_many_variables",),
    operation="classify.classify_wlp[uniform-many-vars]",
)
def _wlp_uniform_many_vars(case: _Case) -> Union[Verdict, str]:
    if case.d.n < 4 or not case.d.is_uniform():
        return "not uniform in at least five variables"
    return _cite(UNIFORM_MANY_VARS, case.p > case.half, detail=f"threshold ceil(t/2) = {case.half}")


@implements(
    "Frobenius window",
    "if d_0 <= ceil(t/2) and d_1 <= p <= d_0, WLP fails",
    ("tests/core/test_classify.py::TestClassifyWlp::test_frobenius_window_fails",),
    operation="classify.classify_wlp[frobenius-window]",
)
def _wlp_frobenius_window(case: _Case) -> Union[Verdict, str]:
    if not case.d[1] <= case.p <= case.d.top:
        return f"p outside [d_1, d_0] = [{case.d[1]}, {case.d.top}]"
    return _cite(FROBENIUS_WINDOW, False, degree=case.d.top - 1, power=1, prime=case.p)


@implements(
    "Prime power window",
    "if d_0 <= p^m <= ceil(t/2) for some m >= 1, WLP fails",
    ("tests/core/test_classify.py::TestClassifyWlp::test_prime_power_window_fails",),
    operation="classify.classify_wlp[prime-power-window]",
)
def _wlp_prime_power_window(case: _Case) -> Union[Verdict, str]:
    power = prime_power_in(case.p, case.d.top, case.half)
    if power is None:
        return f"no power of {case.p} in [{case.d.top}, {case.half}]"
    return _cite(PRIME_POWER_WINDOW, False, degree=power - 1, power=1, prime=case.p, detail=f"p^m = {power}")


@implements(
    "Half socle bound",
    "if p > ceil((t + 1) / 2), WLP holds",
    ("tests/core/test_classify.py::TestClassifyWlp::test_half_socle_bound_holds",),
    operation="classify.classify_wlp[half-socle-bound]",
)
def _wlp_half_socle(case: _Case) -> Union[Verdict, str]:
    bound = (case.t + 2) // 2
    if case.p <= bound:
        return f"p <= ceil((t+1)/2) = {bound}"
    return _cite(HALF_SOCLE_BOUND, True)


@implements(
    "Near-uniform WLP failure",
    "(d, ..., d, d - 1) with n >= 4, d >= 3 and d or n odd fails WLP for 2 <= p < d",
    ("tests/core/test_classify.py::TestClassifyWlp::test_near_uniform_fails",),
    operation="classify.classify_wlp[near-uniform-degree]",
)
def _wlp_near_uniform(case: _Case) -> Union[Verdict, str]:
    d = case.d
    top = d.top
    shape = d.degrees == (top,) * d.n + (top - 1,)
    if not (shape and d.n >= 4 and top >= 3):
        return "not of shape (d, ..., d, d-1) with d >= 3 in at least five variables"
    if top % 2 == 0 and d.n % 2 == 0:
        return "d and n both even"
    if not 2 <= case.p < top:
        return f"p not in [2, {top})"
    return _cite(NEAR_UNIFORM_DEGREE, False)


def _uniform_minus_three_witness(top: int, p: int) -> Witness:
    if p < top <= SYZYGY_WITNESS_LIMIT:
        syzygy = build_low_degree_syzygy(top, p)
        if syzygy is not None and syzygy.verify():
            return syzygy.to_witness().model_copy(update={"theorem": UNIFORM_MINUS_THREE})
    power = p if p >= top else prime_power_in(p, top, 2 * top - 3)
    detail = f"prime power {power} in [{top}, {2 * top - 3}]" if power else f"p < d = {top}"
    return Witness.citation(UNIFORM_MINUS_THREE, prime=p, detail=detail)


@implements(
    "WLP of (d, d, d, d-3)",
    "for d >= 6, WLP holds iff p = 0 or p > 2d - 3",
    ("tests/core/test_classify.py::TestClassifyWlp::test_uniform_minus_three",),
    operation="classify.classify_wlp[uniform-minus-three]",
)
def _wlp_uniform_minus_three(case: _Case) -> Union[Verdict, str]:
    d = case.d
    top = d.top
    if d.n != 3 or d.degrees != (top, top, top, top - 3) or top < 6:
        return "not of shape (d, d, d, d-3) with d >= 6"
    method = theorem_method(UNIFORM_MINUS_THREE)
    if case.p > 2 * top - 3:
        return Verdict.holding(method, Witness.citation(UNIFORM_MINUS_THREE))
    return Verdict.failing(method, _uniform_minus_three_witness(top, case.p))


def _wlp_large_top_multinomial(case: _Case) -> Union[Verdict, str]:
    d = case.d
    if d.n < 2 or d.top != sum(d.rest) - d.n:
        return "d_0 != d_1 + ... + d_n - n"
    return large_top_case(d, case.p)


def _wlp_conjecture_gap(case: _Case) -> Union[Verdict, str]:
    if case.t % 2 or case.p != case.t // 2 + 1:
        return "p != t/2 + 1"
    raise _RouteToOracle(CONJECTURE_GAP, f"p = t/2 + 1 = {case.p} is not covered by a closed form")


def _wlp_syzygy_gap(case: _Case) -> Union[Verdict, str]:
    d = case.d
    if d.n != 2:
        return "not three variables"
    if d.top >= d[1] + d[2]:
        return "triangle inequality not strict"
    return wlp_three_gen_via_syzgap(d[2], d[1], d.top, case.p)


def _wlp_determinant(case: _Case) -> Union[Verdict, str]:
    if case.t % 2 == 0:
        return "socle degree even"
    return wlp_via_determinant(case.d, case.p)


def _wlp_even_socle_lift(case: _Case) -> Union[Verdict, str]:
    if case.t % 2:
        return "socle degree odd"
    return even_socle_lift(case.d, case.p)


WLP_RULES: Tuple[Tuple[str, Rule], ...] = (
    (CHAR_ZERO_THEOREM, _wlp_char_zero),
    (TWO_VARIABLES, _wlp_two_variables),
    (LARGE_TOP_DEGREE, _wlp_large_top),
    (UNIFORM_MANY_VARS, _wlp_uniform_many_vars),
    (FROBENIUS_WINDOW, _wlp_frobenius_window),
    (PRIME_POWER_WINDOW, _wlp_prime_power_window),
    (HALF_SOCLE_BOUND, _wlp_half_socle),
    (NEAR_UNIFORM_DEGREE, _wlp_near_uniform),
    (UNIFORM_MINUS_THREE, _wlp_uniform_minus_three),
    (LARGE_TOP_THEOREM, _wlp_large_top_multinomial),
    (CONJECTURE_GAP, _wlp_conjecture_gap),
    ("syzygy-gap", _wlp_syzygy_gap),
    ("determinant", _wlp_determinant),
    (EVEN_SOCLE_LIFT, _wlp_even_socle_lift),
)


def classify_wlp(
    d: DegreesLike, char: CharacteristicLike, oracle_fallback: bool = True
) -> Tuple[Verdict, MethodTrace]:
    """Decide WLP of R/I_d in characteristic `char`, cheapest route first"""
    case = _prepare(d, char)
    fallback = (lambda: has_wlp_oracle(case.d, case.p)) if oracle_fallback else None
    return _run("wlp", WLP_RULES, case, fallback)


def two_variable_wlp(d: DegreesLike) -> Verdict:
    """K[x, y]/(x^a, y^b) has WLP in every characteristic"""
    d = as_degree_tuple(d)
    if d.n != 1:
        raise PreconditionError("n = 1", f"{d} is not a two-variable tuple")
    return _cite(TWO_VARIABLES, True)


@implements(
    "Even socle lift",
    "for even t, WLP of (d, 2) implies WLP of d",
    ("tests/core/test_classify.py::TestEvenSocleLift::test_lift_declines_when_lift_fails",),
)
def even_socle_lift(d: DegreesLike, char: CharacteristicLike, oracle_fallback: bool = False) -> Verdict:
    """WLP of (d, 2) implies WLP of d when t is even; unknown when the lift does not hold"""
    d = as_degree_tuple(d)
    if d.socle % 2:
        raise PreconditionError("socle degree even", f"socle degree {d.socle} of {d} is odd")
    lifted = d.extend(2)
    verdict, _ = classify_wlp(lifted, char, oracle_fallback=oracle_fallback)
    method = theorem_method(EVEN_SOCLE_LIFT)
    if verdict.holds:
        return Verdict.holding(
            method, Witness.citation(EVEN_SOCLE_LIFT, member=lifted.degrees, detail=f"lift holds via {verdict.method}")
        )
    logger.debug(f"lift {lifted} of {d} is {verdict.status.value}; even-socle lift declines")
    return Verdict.undecided(method)


# SLP rules


def _slp_char_zero(case: _Case) -> Union[Verdict, str]:
    if case.p:
        return "positive characteristic"
    return _cite(CHAR_ZERO_THEOREM, True)


@implements(
    "SLP above the socle degree",
    "if p = 0 or p > t, SLP holds",
    ("tests/core/test_classify.py::TestClassifySlp::test_above_socle_holds",),
    operation="classify.classify_slp[above-socle]",
)
def _slp_above_socle(case: _Case) -> Union[Verdict, str]:
    if case.p <= case.t:
        return f"p <= t = {case.t}"
    return _cite(ABOVE_SOCLE, True)


def _slp_char_two(case: _Case) -> Union[Verdict, str]:
    if case.p != 2:
        return "p != 2"
    return char_two_slp(case.d)


@implements(
    "SLP failure windows",
    "SLP fails if max(d_1, 2 d_0 - t) <= p <= d_0 or d_0 <= p^m <= t",
    ("tests/core/test_classify.py::TestClassifySlp::test_window_failures",),
    operation="classify.classify_slp[windows]",
)
def _slp_frobenius_window(case: _Case) -> Union[Verdict, str]:
    low = max(case.d[1], 2 * case.d.top - case.t)
    if not low <= case.p <= case.d.top:
        return f"p outside [{low}, {case.d.top}]"
    return _cite(FROBENIUS_WINDOW, False, prime=case.p)


def _slp_prime_power_window(case: _Case) -> Union[Verdict, str]:
    power = prime_power_in(case.p, case.d.top, case.t)
    if power is None:
        return f"no power of {case.p} in [{case.d.top}, {case.t}]"
    return _cite(PRIME_POWER_WINDOW, False, prime=case.p, detail=f"p^m = {power}")


def _slp_small_second_degree(case: _Case) -> Union[Verdict, str]:
    if case.d.n != 1 or case.d[1] > 3:
        return "not (a, 2) or (a, 3)"
    return small_second_degree_slp(case.d.top, case.d[1], case.p)


def _slp_uniform(case: _Case) -> Union[Verdict, str]:
    if not case.d.is_uniform():
        return "degrees not uniform"
    return uniform_degree_slp(case.d.n, case.d.top, case.p)


def _slp_two_variables(case: _Case) -> Union[Verdict, str]:
    if case.d.n != 1:
        return "more than two variables"
    return slp_two_var(case.d.top, case.d[1], case.p)


def _slp_wlp_family(case: _Case) -> Union[Verdict, str]:
    return slp_via_wlp_family(case.d, case.p, _closed_form_wlp)


SLP_RULES: Tuple[Tuple[str, Rule], ...] = (
    (CHAR_ZERO_THEOREM, _slp_char_zero),
    (ABOVE_SOCLE, _slp_above_socle),
    ("char-two", _slp_char_two),
    (FROBENIUS_WINDOW, _slp_frobenius_window),
    (PRIME_POWER_WINDOW, _slp_prime_power_window),
    (SMALL_SECOND_DEGREE, _slp_small_second_degree),
    ("uniform", _slp_uniform),
    ("two-variable-family", _slp_two_variables),
    (WLP_FAMILY, _slp_wlp_family),
)


def classify_slp(
    d: DegreesLike, char: CharacteristicLike, oracle_fallback: bool = True
) -> Tuple[Verdict, MethodTrace]:
    """Decide SLP of R/I_d in characteristic `char`, cheapest route first"""
    case = _prepare(d, char)
    fallback = (lambda: has_slp_oracle(case.d, case.p)) if oracle_fallback else None
    return _run("slp", SLP_RULES, case, fallback)


def _closed_form_wlp(member: DegreeTuple, p: int) -> Verdict:
    verdict, _ = classify_wlp(member, p, oracle_fallback=False)
    return verdict


def _strip_units(member: DegreeTuple) -> DegreeTuple:
    kept = [e for e in member.degrees if e > 1]
    return member if len(kept) == len(member) else DegreeTuple(tuple(kept))


@implements(
    "SLP via the WLP family",
    "SLP of d holds iff WLP of (d, t - 2k) holds for every k with t - 2k >= 1",
    ("tests/core/test_classify.py::TestSlpFamily::test_family_matches_oracle",),
)
def slp_via_wlp_family(d: DegreesLike, char: CharacteristicLike, wlp_decider: WlpDecider) -> Verdict:
    """SLP of d iff every (d, t - 2k), t - 2k >= 1, has WLP.

    A member with an undecided WLP leaves the SLP undecided unless another
    member fails.
    """
    d = as_degree_tuple(d)
    p = Characteristic.of(char).value
    t = d.socle
    method = theorem_method(WLP_FAMILY)
    undecided = []
    for k in range((t + 1) // 2):
        power = t - 2 * k
        member = d.extend(power)
        verdict = wlp_decider(_strip_units(member), p)
        if verdict.fails:
            return Verdict.failing(
                method,
                Witness.citation(
                    WLP_FAMILY,
                    member=member.degrees,
                    degree=k,
                    power=power,
                    detail=f"member WLP fails via {verdict.method}",
                ),
            )
        if not verdict.holds:
            undecided.append(member.degrees)
    if undecided:
        logger.debug(f"SLP family of {d} in char {p} left undecided by members {undecided}")
        return Verdict.undecided(method)
    return Verdict.holding(method, Witness.citation(WLP_FAMILY))


@implements(
    "Characteristic two SLP",
    "in characteristic 2, SLP holds only for (a, 2) with a odd and (a, 3) with a = 2 mod 4",
    ("tests/core/test_classify.py::TestStandaloneClassifications::test_char_two_matches_oracle",),
)
def char_two_slp(d: DegreesLike) -> Verdict:
    """SLP in characteristic 2, with a constructive witness when it fails"""
    d = as_degree_tuple(d)
    if d.has_units():
        raise PreconditionError("d_i >= 2", f"{d} has a degree equal to 1")
    if d.n == 1:
        a, b = d.top, d[1]
        holds = not ((b == 2 and a % 2 == 0) or (b == 3 and a % 4 != 2) or b >= 4)
        return _cite(CHAR_TWO_TWO_VARS, holds, detail=f"a = {a}, b = {b}")

    t = d.socle
    method = theorem_method(CHAR_TWO_MANY_VARS)
    if d.top <= (t + 1) // 2:
        # [d_0, t] contains [d_0, 2 d_0 - 1], which holds a power of 2
        power = prime_power_in(2, d.top, t)
        return Verdict.failing(
            method, Witness.citation(CHAR_TWO_MANY_VARS, prime=2, detail=f"2^m = {power} in [{d.top}, {t}]")
        )
    first, _ = which_multinomial_even([e - 1 for e in d.degrees])
    k = 0 if first else t - d.top
    power = t - 2 * k
    return Verdict.failing(
        method,
        Witness.citation(
            CHAR_TWO_MANY_VARS,
            member=d.extend(power).degrees,
            degree=k,
            power=power,
            detail="even multinomial on the family member",
        ),
    )


@implements(
    "Small second degree SLP",
    "(a, 2) has SLP iff p does not divide a; (a, 3) by a mod p and a mod 4",
    ("tests/core/test_classify.py::TestStandaloneClassifications::test_small_second_degree",),
)
def small_second_degree_slp(a: int, b: int, p: CharacteristicLike) -> Verdict:
    """SLP of K[x, y]/(x^a, y^b) for b in {2, 3}"""
    a, b = max(a, b), min(a, b)
    if b not in (2, 3):
        raise PreconditionError("b in {2, 3}", f"second degree {b} is not 2 or 3")
    p = Characteristic.of(p).value
    if p == 0:
        return _cite(CHAR_ZERO_THEOREM, True)
    if b == 2:
        holds = a % p != 0
    elif p == 2:
        holds = a % 4 == 2
    else:
        holds = a % p not in (p - 1, 0, 1)
    return _cite(SMALL_SECOND_DEGREE, holds, detail=f"a = {a}, b = {b}")


@implements(
    "Equal-degree SLP thresholds",
    "equal degrees d in n + 1 >= 3 variables have SLP iff p = 0 or p > (n + 1)(d - 1)",
    ("tests/core/test_classify.py::TestStandaloneClassifications::test_uniform_degree_thresholds",),
)
def uniform_degree_slp(n: int, d: int, p: CharacteristicLike) -> Verdict:
    """SLP of K[x_0..x_n]/(x_i^d): thresholds 3(d-1), 4(d-1), (n+1)(d-1); two variables by the (d, d) criterion"""
    if n < 1 or d < 2:
        raise PreconditionError("n >= 1, d >= 2", f"uniform tuple needs n >= 1 and d >= 2, got n={n}, d={d}")
    if n == 1:
        return slp_dd_criterion(d, p)
    p = Characteristic.of(p).value
    if p == 0:
        return _cite(CHAR_ZERO_THEOREM, True)
    theorem = {2: THREE_UNIFORM, 3: FOUR_UNIFORM}.get(n, UNIFORM_MANY_VARS_SLP)
    bound = (n + 1) * (d - 1)
    return _cite(theorem, p > bound, detail=f"threshold {bound}")
