"""Golden parity: the wrapper must reproduce the core CLI bit for bit.

Each fixture has two checked-in golden files captured from the CLI (`simulate
--json` and `influence --json`). The test first re-runs the CLI in-process
and demands byte-identical output (catching core drift), then drives the same
inputs through the wrapper and compares sigma/select results exactly.
"""

import contextlib
import io
import json
import pathlib

import netdiffsim_bindings as nb
from netdiffsim.cli import main as cli_main

HERE = pathlib.Path(__file__).parent
FIXTURES = HERE / "fixtures"
GOLDEN = HERE / "golden"

# (fixture file, directed, weight kwargs, matching CLI weight flags)
CASES = [
    ("pipeline7.txt", True, {"weights": "file"}, ["--weights", "file"]),
    ("er30.txt", False, {"weights": "tv", "weight_seed": 7},
     ["--weights", "tv", "--weight-seed", "7"]),
    ("ws40.txt", False, {"weights": "wc"}, ["--weights", "wc"]),
]

SIGMA_SEEDS = ["0", "3"]
SIGMA_TRIALS, SELECT_TRIALS = 2000, 300
GLOBAL_SEED, BUDGET = 11, 3


def run_cli(*args):
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = cli_main([str(a) for a in args])
    assert code == 0
    return out.getvalue()


def parse_fixture(path):
    edges = []
    for line in path.read_text().splitlines():
        parts = line.split()
        if not parts or parts[0].startswith("#"):
            continue
        if len(parts) == 3:
            edges.append((int(parts[0]), int(parts[1]), float(parts[2])))
        else:
            edges.append((int(parts[0]), int(parts[1])))
    return edges


def test_binding_parity():
    failures = []
    for name, directed, wkwargs, wflags in CASES:
        stem = name.split(".")[0]
        fixture = FIXTURES / name
        dflag = ["--directed"] if directed else []

        golden_sigma = (GOLDEN / f"{stem}_sigma.json").read_text()
        fresh = run_cli("simulate", "--input", fixture, *dflag, *wflags,
                        "--seeds", ",".join(SIGMA_SEEDS),
                        "--trials", SIGMA_TRIALS, "--seed", GLOBAL_SEED,
                        "--json")
        assert fresh == golden_sigma, f"{stem}: CLI simulate drifted from golden"

        golden_select = (GOLDEN / f"{stem}_select.json").read_text()
        fresh = run_cli("influence", "--input", fixture, *dflag, *wflags,
                        "--method", "celf", "--budget", BUDGET,
                        "--trials", SELECT_TRIALS, "--seed", GLOBAL_SEED,
                        "--json")
        assert fresh == golden_select, f"{stem}: CLI influence drifted from golden"

        handle = nb.from_edges(parse_fixture(fixture), directed=directed,
                               **wkwargs)
        sig_doc = json.loads(golden_sigma)
        sel_doc = json.loads(golden_select)
        assert handle.node_count == sig_doc["node_count"]
        assert handle.arc_count == sig_doc["arc_count"]

        got = nb.sigma(handle, [int(s) for s in SIGMA_SEEDS],
                       SIGMA_TRIALS, GLOBAL_SEED)
        if got != sig_doc["sigma_estimate"]:
            failures.append((stem, "sigma", got, sig_doc["sigma_estimate"]))

        picked = nb.select(handle, "celf", BUDGET, SELECT_TRIALS, GLOBAL_SEED)
        want = [int(s) for s in sel_doc["seed_set"]]
        if picked != want:
            failures.append((stem, "select", picked, want))

        # the influence report re-estimates sigma on the chosen set
        got = nb.sigma(handle, picked, SELECT_TRIALS, GLOBAL_SEED)
        if got != sel_doc["sigma_estimate"]:
            failures.append((stem, "select-sigma", got,
                             sel_doc["sigma_estimate"]))
        handle.release()
    if failures:
        print("ACCEPTANCE binding-parity: FAIL")
        raise AssertionError(failures)
    print("ACCEPTANCE binding-parity: PASS")
