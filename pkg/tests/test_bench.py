import numpy as np
import pytest

from netdiffsim import (
    GenSpec,
    ModelSpec,
    ValidationError,
    assign_weights_wc,
    build_csr,
    generate,
    run_benchmark,
    run_trials,
)
from netdiffsim.bench import format_table


@pytest.fixture(scope="module")
def spec():
    g = assign_weights_wc(
        build_csr(generate(GenSpec("erdos_renyi", 300, 0.02, seed=4)))[0]
    )
    return ModelSpec("ic", g)


def test_report_fields(spec):
    report = run_benchmark(spec, [0, 1, 2], ["frontier", "naive"], 50, 7, "wc")
    assert report.trials == 50
    assert {e.engine for e in report.engines} == {"frontier", "naive"}
    for e in report.engines:
        assert e.wall_seconds > 0
        assert e.simulations_per_second == pytest.approx(50 / e.wall_seconds)
        assert e.total_edges_examined >= 0
        assert e.activated_sizes.shape == (50,)


def test_single_trial_arithmetic(spec):
    report = run_benchmark(spec, [5], ["frontier"], 1, 3)
    e = report.engines[0]
    assert e.simulations_per_second == pytest.approx(1 / e.wall_seconds)


def test_engines_agree_trial_by_trial(spec):
    report = run_benchmark(spec, [0, 9], ["frontier", "naive"], 80, 11)
    f, n = report.engines
    assert np.array_equal(f.activated_sizes, n.activated_sizes)


def test_determinism_excluding_wall_time(spec):
    a = run_benchmark(spec, [2], ["frontier"], 60, 5).engines[0]
    b = run_benchmark(spec, [2], ["frontier"], 60, 5).engines[0]
    assert np.array_equal(a.activated_sizes, b.activated_sizes)
    assert a.total_edges_examined == b.total_edges_examined


def test_frontier_work_below_naive_per_trial(spec):
    f = run_trials(spec, [4], 21, 100, engine="frontier")
    n = run_trials(spec, [4], 21, 100, engine="naive")
    assert np.all(f.edges_examined <= n.edges_examined)


def test_normalized_runtimes(spec):
    report = run_benchmark(spec, [0], ["frontier", "naive"], 40, 1)
    norm = report.normalized_runtimes()
    assert min(norm.values()) == 1
    assert all(isinstance(v, int) and v >= 1 for v in norm.values())


def test_table_and_payload(spec):
    report = run_benchmark(spec, [0], ["frontier", "naive"], 20, 1)
    table = format_table(report)
    assert "frontier" in table and "naive" in table
    payload = report.to_payload()
    assert payload["trials"] == 20
    assert len(payload["engines"]) == 2


def test_validation(spec):
    with pytest.raises(ValidationError):
        run_benchmark(spec, [0], [], 10, 1)
    with pytest.raises(ValidationError):
        run_benchmark(spec, [0], ["frontier"], 0, 1)
