"""
Tests for the frequency experiment harness and counterexample search.
"""

import csv
import io

import pytest

from stallings_lab.core.errors import ContractViolation, SamplingError
from stallings_lab.core.event_system import subscribe_to_event
from stallings_lab.core.subgroup import Subgroup
from stallings_lab.lab.experiment import (
    CSV_HEADER,
    ExperimentRow,
    rows_to_csv,
    run_experiment,
    search_counterexample,
)
from stallings_lab.sampling.distributions import (
    BaseDistribution, GraphBasedDistribution, WordBasedDistribution, create_distribution,
    register_distribution
)


class FullGroupDistribution(BaseDistribution):
    """Degenerate distribution: always the whole free group."""

    @property
    def tag(self) -> str:
        return "full"

    def sample(self, rank, param, rng):
        return Subgroup.full(rank)


def test_degenerate_distribution_row():
    rows = run_experiment(FullGroupDistribution(), [2], samples=1, seed=0, ranks=[3])
    assert len(rows) == 1
    row = rows[0]
    assert row.pct_counterexample == 0
    assert row.pct_nontrivial_meet == 100
    assert (row.distribution, row.rank, row.param, row.samples, row.seed) == ("full", 3, 2, 1, 0)


def test_registered_stub_is_available():
    register_distribution("full", FullGroupDistribution)
    assert create_distribution("full").tag == "full"


def test_one_row_per_grid_point_in_order():
    rows = run_experiment(GraphBasedDistribution(), [4, 2, 3], samples=10, seed=1, ranks=[3, 2])
    assert [(r.rank, r.param) for r in rows] == [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)]
    for row in rows:
        assert 0 <= row.pct_counterexample <= 100
        assert 0 <= row.pct_nontrivial_meet <= 100


def test_csv_layout():
    rows = run_experiment(WordBasedDistribution(4), [3, 4], samples=10, seed=5, ranks=[2])
    text = rows_to_csv(rows)
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert lines[0] == "distribution,rank,param,samples,pct_counterexample,pct_nontrivial_meet,seed"
    parsed = list(csv.DictReader(io.StringIO(text)))
    assert len(parsed) == 2
    assert parsed[0]["distribution"] == "word-k4"
    assert parsed[1]["param"] == "4"


def test_same_seed_same_csv():
    make = lambda: rows_to_csv(run_experiment(GraphBasedDistribution(), [3, 5], samples=20, seed=9, ranks=[2, 3]))
    assert make() == make()


def test_jobs_do_not_change_results():
    args = dict(samples=30, seed=3, ranks=[2, 3])
    serial = run_experiment(GraphBasedDistribution(), [3, 4], jobs=1, **args)
    parallel = run_experiment(GraphBasedDistribution(), [3, 4], jobs=3, **args)
    assert rows_to_csv(serial) == rows_to_csv(parallel)


def test_experiment_events():
    seen = []
    subscribe_to_event("experiment", seen.append)
    run_experiment(GraphBasedDistribution(), [2, 3], samples=5, seed=0, ranks=[2])
    assert [e.data["param"] for e in seen] == [2, 3]
    assert seen[0].data["row"]["samples"] == 5


def test_sampling_failure_names_the_parameter():
    with pytest.raises(SamplingError) as excinfo:
        run_experiment(GraphBasedDistribution(max_rejections=1), [20], samples=3, seed=0, ranks=[2])
    assert excinfo.value.parameter == 20
    assert "parameter 20" in str(excinfo.value)


def test_invalid_arguments():
    with pytest.raises(ContractViolation):
        run_experiment(GraphBasedDistribution(), [3], samples=0, seed=0)
    with pytest.raises(ContractViolation):
        search_counterexample(GraphBasedDistribution(), 3, 5, 10, 0, target="hnc")


def test_row_fields():
    row = ExperimentRow("graph", 3, 10, 100, 12.5, 50.0, 7)
    assert row.csv_fields() == ("graph", "3", "10", "100", "12.5000", "50.0000", "7")
    assert row.to_dict()["pct_counterexample"] == 12.5


def test_search_finds_no_counterexample_in_full_group():
    assert search_counterexample(FullGroupDistribution(), 3, 2, attempts=5, seed=0) is None
    assert search_counterexample(FullGroupDistribution(), 3, 2, attempts=5, seed=0, target="guzman") is None


@pytest.mark.slow
@pytest.mark.timeout(600)
def test_search_finds_iehnc_counterexample():
    result = search_counterexample(GraphBasedDistribution(), 3, 10, attempts=10_000, seed=0)
    assert result is not None
    assert result.report.counted and not result.report.holds_iehnc
    assert result.attempt >= 1


@pytest.mark.slow
@pytest.mark.timeout(600)
def test_graph_based_experiment_finds_counterexamples():
    rows = run_experiment(GraphBasedDistribution(), [10], samples=10_000, seed=0, ranks=[3], jobs=4)
    assert rows[0].pct_counterexample > 0


@pytest.mark.slow
def test_graph_based_meets_more_often_than_word_based():
    graph = run_experiment(GraphBasedDistribution(), [6], samples=500, seed=4, ranks=[2])[0]
    word = run_experiment(WordBasedDistribution(2), [6], samples=500, seed=4, ranks=[2])[0]
    assert graph.pct_nontrivial_meet > word.pct_nontrivial_meet
