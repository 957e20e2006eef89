"""
Frequency experiments: how often random pairs violate the inclusion/exclusion
inequality, and how often they intersect nontrivially.

Every pair has its own seed derived from (master seed, rank, param, index), so
results do not depend on the number of worker processes.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, List, Optional, Sequence, TextIO, Tuple
import csv
import io
import logging

from ..core.errors import ContractViolation, SamplingError
from ..core.event_system import ExperimentEvent, publish_event
from ..core.subgroup import Subgroup
from ..core.abstractions.base import IDistribution
from ..sampling.random_gen import derive_seed, make_rng
from .report import ConjectureReport, analyze_pair

logger = logging.getLogger(__name__)

CSV_HEADER = ("distribution", "rank", "param", "samples",
              "pct_counterexample", "pct_nontrivial_meet", "seed")
SEARCH_TARGETS = ("iehnc", "guzman")


@dataclass(frozen=True)
class ExperimentRow:
    distribution: str
    rank: int
    param: int
    samples: int
    pct_counterexample: float
    pct_nontrivial_meet: float
    seed: int

    def to_dict(self):
        return asdict(self)

    def csv_fields(self) -> Tuple[str, ...]:
        return (self.distribution, str(self.rank), str(self.param), str(self.samples),
                f"{self.pct_counterexample:.4f}", f"{self.pct_nontrivial_meet:.4f}",
                str(self.seed))


def point_seed(seed: int, rank: int, param: int) -> int:
    return derive_seed(derive_seed(seed, rank), param)


def _pair_outcome(task: Tuple[IDistribution, int, int, int]) -> Tuple[bool, bool, bool]:
    """(counted, violates IEHNC, nontrivial meet) for one seeded pair."""
    distribution, rank, param, pair_seed = task
    H, K = distribution.sample_pair(rank, param, make_rng(pair_seed))
    report = analyze_pair(H, K)
    return report.counted, report.counted and not report.holds_iehnc, report.nontrivial_meet


def _percent(part: int, whole: int) -> float:
    return 100.0 * part / whole if whole else 0.0


def run_point(distribution: IDistribution,
              rank: int,
              param: int,
              samples: int,
              seed: int,
              executor: Optional[ProcessPoolExecutor] = None) -> ExperimentRow:
    """One row: ``samples`` independent pairs at a single (rank, param)."""
    base = point_seed(seed, rank, param)
    tasks = [(distribution, rank, param, derive_seed(base, i)) for i in range(samples)]
    try:
        if executor is None:
            outcomes = list(map(_pair_outcome, tasks))
        else:
            outcomes = list(executor.map(_pair_outcome, tasks, chunksize=max(1, samples // 64)))
    except SamplingError as e:
        logger.error("Sampling failed at rank %d, param %d", rank, param)
        raise SamplingError(str(e), e.attempts, parameter=param) from e

    counted = sum(1 for c, _, _ in outcomes if c)
    violations = sum(1 for _, v, _ in outcomes if v)
    nontrivial = sum(1 for _, _, n in outcomes if n)
    row = ExperimentRow(
        distribution=distribution.tag,
        rank=rank,
        param=param,
        samples=samples,
        pct_counterexample=_percent(violations, counted),
        pct_nontrivial_meet=_percent(nontrivial, samples),
        seed=seed,
    )
    logger.info("%s rank=%d param=%d: %d/%d counted pairs violate, %d nontrivial meets",
                row.distribution, rank, param, violations, counted, nontrivial)
    publish_event(ExperimentEvent(row.distribution, rank, param, row))
    return row


def run_experiment(distribution: IDistribution,
                   params: Iterable[int],
                   samples: int,
                   seed: int,
                   ranks: Sequence[int] = (2,),
                   jobs: int = 1) -> List[ExperimentRow]:
    """One row per (rank, param), ordered by rank then param."""
    if samples < 1:
        raise ContractViolation("samples must be at least 1")
    if jobs < 1:
        raise ContractViolation("jobs must be at least 1")
    params = sorted(params)
    logger.info("Experiment %s: ranks %s, params %s, %d samples, seed %d, %d jobs",
                distribution.tag, list(ranks), params, samples, seed, jobs)
    if jobs == 1:
        return [run_point(distribution, r, p, samples, seed)
                for r in sorted(ranks) for p in params]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return [run_point(distribution, r, p, samples, seed, executor)
                for r in sorted(ranks) for p in params]


def write_csv(rows: Iterable[ExperimentRow], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_fields())


def rows_to_csv(rows: Iterable[ExperimentRow]) -> str:
    buffer = io.StringIO()
    write_csv(rows, buffer)
    return buffer.getvalue()


@dataclass(frozen=True)
class SearchResult:
    H: Subgroup
    K: Subgroup
    report: ConjectureReport
    attempt: int
    seed: int  # pair seed: make_rng(seed) redraws the same pair


def _violates(report: ConjectureReport, target: str) -> bool:
    if target == "iehnc":
        return report.counted and not report.holds_iehnc
    return not report.holds_guzman


def search_counterexample(distribution: IDistribution,
                          rank: int,
                          param: int,
                          attempts: int,
                          seed: int,
                          target: str = "iehnc") -> Optional[SearchResult]:
    """Draw pairs until one violates ``target``; None if every attempt passes."""
    if target not in SEARCH_TARGETS:
        raise ContractViolation(f"unknown search target {target!r}; choose from {SEARCH_TARGETS}")
    if attempts < 1:
        raise ContractViolation("attempts must be at least 1")
    base = point_seed(seed, rank, param)
    for attempt in range(1, attempts + 1):
        pair_seed = derive_seed(base, attempt - 1)
        try:
            H, K = distribution.sample_pair(rank, param, make_rng(pair_seed))
        except SamplingError as e:
            raise SamplingError(str(e), e.attempts, parameter=param) from e
        report = analyze_pair(H, K)
        if _violates(report, target):
            logger.info("Found %s counterexample after %d attempts", target, attempt)
            return SearchResult(H, K, report, attempt, pair_seed)
    logger.info("No %s counterexample in %d attempts", target, attempts)
    return None
