"""
Census tasks and their execution, inline or on a process pool.

Results always come back in task order, which is (tuple lex, characteristic).
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from ..algebra.combinat import primes_up_to
from ..algebra.domain import (
    Characteristic,
    DegreeTuple,
    Verdict,
    enumerate_degree_tuples,
    normalize,
)
from ..exceptions import PreconditionError
from ..lefschetz.classify import MethodTrace, classify_slp, classify_wlp
from ..lefschetz.detformula import wlp_via_determinant
from ..lefschetz.oracle import has_slp_oracle, has_wlp_oracle
from ..lefschetz.syzgap import slp_two_var, wlp_three_gen_via_syzgap
from .records import CensusRecord


logger = logging.getLogger(__name__)

METHODS = ("auto", "oracle", "det", "syzgap", "theorem")
DEFAULT_CHUNKSIZE = 16


def decide(
    d: DegreeTuple, char: int, prop: str, method: str = "auto", oracle_fallback: bool = True
) -> Tuple[Verdict, Optional[MethodTrace]]:
    """Decide `prop` for d with the requested route; only the cascades produce a trace"""
    p = Characteristic.of(char).value
    if prop not in ("wlp", "slp"):
        raise PreconditionError("property in {wlp, slp}", f"unknown property {prop!r}")
    if method not in METHODS:
        raise PreconditionError(f"method in {METHODS}", f"unknown method {method!r}")

    if method == "auto":
        cascade = classify_wlp if prop == "wlp" else classify_slp
        return cascade(d, p, oracle_fallback=oracle_fallback)
    if method == "theorem":
        cascade = classify_wlp if prop == "wlp" else classify_slp
        verdict, trace = cascade(d, p, oracle_fallback=False)
        if not verdict.decisive:
            raise PreconditionError("a closed form applies", f"no closed form decides {prop.upper()} of {d} in char {p}")
        return verdict, trace
    if method == "oracle":
        oracle = has_wlp_oracle if prop == "wlp" else has_slp_oracle
        return oracle(d, p), None
    if method == "det":
        if prop != "wlp":
            raise PreconditionError("property wlp", "the determinant route decides WLP only")
        return wlp_via_determinant(d, p), None

    if prop == "wlp":
        if d.n != 2:
            raise PreconditionError("three variables", f"the syzygy-gap route needs three degrees, got {d}")
        return wlp_three_gen_via_syzgap(d[2], d[1], d[0], p), None
    if d.n != 1:
        raise PreconditionError("two variables", f"the two-variable SLP route needs two degrees, got {d}")
    return slp_two_var(d[0], d[1], p), None


@dataclass(frozen=True)
class CensusTask:
    degrees: Tuple[int, ...]
    char: int
    property: str
    method: str = "auto"
    oracle_fallback: bool = True


def run_task(task: CensusTask) -> CensusRecord:
    d = normalize(task.degrees)
    start = time.perf_counter_ns()
    verdict, _ = decide(d, task.char, task.property, task.method, task.oracle_fallback)
    elapsed = (time.perf_counter_ns() - start) // 1000
    return CensusRecord.from_verdict(d, task.char, task.property, verdict, elapsed)


def census_characteristics(pmax: int, with_zero: bool = False) -> List[int]:
    return ([0] if with_zero else []) + primes_up_to(pmax)


def census_tasks(
    n_values: Iterable[int],
    dmax: int,
    pmax: int,
    prop: str,
    with_zero: bool = False,
    method: str = "auto",
    oracle_fallback: bool = True,
) -> List[CensusTask]:
    """One task per (tuple, characteristic), tuples lexicographic within each n"""
    chars = census_characteristics(pmax, with_zero)
    tasks = []
    for n in sorted(set(n_values)):
        for d in enumerate_degree_tuples(n + 1, dmax):
            for p in chars:
                tasks.append(CensusTask(d.degrees, p, prop, method, oracle_fallback))
    logger.info(f"census of {prop.upper()}: {len(tasks)} tasks for n in {sorted(set(n_values))}, d <= {dmax}, p <= {pmax}")
    return tasks


def run_census(
    tasks: Sequence[CensusTask], jobs: int = 1, chunksize: int = DEFAULT_CHUNKSIZE
) -> Iterator[CensusRecord]:
    """Records in task order; jobs == 1 runs inline"""
    if jobs <= 1 or len(tasks) <= 1:
        for task in tasks:
            yield run_task(task)
        return
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        yield from executor.map(run_task, tasks, chunksize=chunksize)
