import json

import pytest

from netdiffsim.cli import main


def run_cli(*args):
    return main([str(a) for a in args])


@pytest.fixture
def er_file(tmp_path):
    path = tmp_path / "er.txt"
    assert run_cli("generate", "--kind", "er", "--nodes", 150, "--p", 0.03,
                   "--gen-seed", 3, "--out", path) == 0
    return path


def test_generate_roundtrip(tmp_path):
    out = tmp_path / "ws.txt"
    assert run_cli("generate", "--kind", "ws", "--nodes", 500, "--k", 6,
                   "--p", 0.05, "--gen-seed", 1, "--out", out) == 0
    lines = [l for l in out.read_text().splitlines()
             if l and not l.startswith("#")]
    assert len(lines) == 500 * 6 // 2


def test_generate_regular_and_simulate(tmp_path, capsys):
    out = tmp_path / "reg.txt"
    assert run_cli("generate", "--kind", "regular", "--nodes", 100, "--k", 4,
                   "--gen-seed", 2, "--out", out) == 0
    capsys.readouterr()
    assert run_cli("simulate", "--input", out, "--weights", "wc",
                   "--model", "ic", "--trials", 50, "--seeds", "0,1",
                   "--seed", 9, "--json") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == "netdiffsim/simulate/1"
    assert doc["sigma_estimate"] >= 2.0


def test_weights_subcommand(tmp_path, er_file):
    out = tmp_path / "weighted.txt"
    assert run_cli("weights", "--input", er_file, "--weights", "tv",
                   "--seed", 4, "--out", out) == 0
    weights = {float(l.split()[2]) for l in out.read_text().splitlines()
               if l and not l.startswith("#")}
    assert weights <= {0.1, 0.01, 0.001}


def test_simulate_path_sigma(tmp_path, capsys):
    path = tmp_path / "path.txt"
    path.write_text("0 1 0.5\n1 2 0.5\n")
    assert run_cli("simulate", "--input", path, "--directed",
                   "--weights", "file", "--trials", 200000, "--seeds", "0",
                   "--seed", 5, "--json") == 0
    doc = json.loads(capsys.readouterr().out)
    assert abs(doc["sigma_estimate"] - 1.75) <= 0.01


def test_simulate_exports(tmp_path, er_file):
    heat = tmp_path / "heat.csv"
    series = tmp_path / "series.csv"
    report = tmp_path / "report.json"
    assert run_cli("simulate", "--input", er_file, "--weights", "wc",
                   "--trials", 1000, "--seeds", "0,5,9", "--seed", 2,
                   "--export-heatmap", heat, "--export-timeseries", series,
                   "--out", report) == 0
    heat_lines = heat.read_text().strip().splitlines()
    assert len(heat_lines) == 150 + 1  # one row per node plus header
    series_lines = series.read_text().strip().splitlines()
    first = series_lines[1].split(",")
    assert first[0] == "0" and float(first[1]) == 3.0  # row 0 mean = |S|
    doc = json.loads(report.read_text())
    assert doc["trials"] == 1000


def test_simulate_plots(tmp_path, er_file):
    prefix = tmp_path / "fig"
    assert run_cli("simulate", "--input", er_file, "--weights", "wc",
                   "--trials", 100, "--seeds", "0", "--seed", 1,
                   "--plot", prefix) == 0
    assert (tmp_path / "fig.heatmap.png").exists()
    assert (tmp_path / "fig.timeseries.png").exists()


def test_influence_greedy_equals_celf_seed_files(tmp_path, er_file):
    files = {}
    for method in ("greedy", "celf"):
        out = tmp_path / f"{method}.seeds"
        assert run_cli("influence", "--input", er_file, "--weights", "wc",
                       "--method", method, "--budget", 3, "--trials", 50,
                       "--seed", 6, "--seeds-out", out) == 0
        files[method] = out.read_text()
    assert files["greedy"] == files["celf"]


def test_influence_compare_and_plot(tmp_path, capsys):
    fig = tmp_path / "cmp.png"
    assert run_cli("influence", "--gen", "regular", "--nodes", 60, "--k", 4,
                   "--gen-seed", 1, "--weights", "wc", "--method", "celf",
                   "--budget", 2, "--trials", 100, "--seed", 0,
                   "--compare", "--plot", fig, "--json") == 0
    doc = json.loads(capsys.readouterr().out)
    assert set(doc["comparison"]) == {"celf", "degree", "random"}
    assert doc["trace"]["evaluations_per_pick"][0] == 60
    assert fig.exists()


def test_benchmark(tmp_path, capsys):
    assert run_cli("benchmark", "--gen", "er", "--nodes", 200, "--p", 0.02,
                   "--gen-seed", 2, "--weights", "tv", "--trials", 100,
                   "--num-seeds", 5, "--seed", 1,
                   "--engines", "frontier,naive", "--json") == 0
    doc = json.loads(capsys.readouterr().out)
    assert {e["engine"] for e in doc["engines"]} == {"frontier", "naive"}
    assert min(doc["normalized_runtimes"].values()) == 1


def test_exit_code_usage():
    with pytest.raises(SystemExit) as exc:
        run_cli("simulate", "--no-such-flag")
    assert exc.value.code == 2


def test_exit_code_validation(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1 0.9\n2 1 0.9\n")  # node 1 incoming sum 1.8 under LT
    assert run_cli("simulate", "--input", bad, "--directed",
                   "--weights", "file", "--model", "lt", "--trials", 5,
                   "--seeds", "0") == 3


def test_exit_code_io(tmp_path):
    assert run_cli("simulate", "--input", tmp_path / "missing.txt",
                   "--trials", 5, "--seeds", "0") == 4


def test_lt_normalize_flag(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1 0.9\n2 1 0.9\n")
    assert run_cli("simulate", "--input", bad, "--directed",
                   "--weights", "file", "--model", "lt", "--trials", 5,
                   "--seeds", "0", "--normalize") == 0


def test_determinism_given_seed(tmp_path, er_file, capsys):
    outs = []
    for _ in range(2):
        assert run_cli("simulate", "--input", er_file, "--weights", "ur",
                       "--trials", 300, "--seeds", "1,2", "--seed", 42,
                       "--json") == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_help_available(capsys):
    for sub in ("generate", "weights", "simulate", "influence", "benchmark"):
        with pytest.raises(SystemExit) as exc:
            run_cli(sub, "--help")
        assert exc.value.code == 0
        assert "--" in capsys.readouterr().out
