import json
import math

import pytest

from wre.cli import main
from wre.qstate import make_named_state
from wre.results_io import write_state_file


def test_compute_exact_swap_ghz3(capsys):
    assert main(["compute", "--state", "ghz", "--n", "3",
                 "--method", "exact-swap"]) == 0
    out = capsys.readouterr().out
    assert "7.2000301528" in out


def test_compute_analytic_matches_exact(capsys):
    main(["compute", "--state", "ghz", "--n", "3", "--method", "exact-swap"])
    exact = float(capsys.readouterr().out.rsplit("=", 1)[1].split()[0])
    main(["compute", "--state", "ghz", "--n", "3", "--method", "analytic"])
    analytic = float(capsys.readouterr().out.rsplit("=", 1)[1].split()[0])
    assert abs(exact - analytic) < 1e-10


def test_compute_odd_pbell_exits_2():
    assert main(["compute", "--state", "pbell", "--n", "3",
                 "--method", "analytic"]) == 2


def test_compute_resource_cap_exits_3():
    assert main(["compute", "--state", "ghz", "--n", "14",
                 "--method", "subset-enum"]) == 3


def test_compute_writes_run_record(tmp_path, capsys):
    out = tmp_path / "record.json"
    assert main(["compute", "--state", "w", "--n", "2", "--method", "mc-husimi",
                 "--samples", "20000", "--seed", "5", "--out", str(out)]) == 0
    record = json.loads(out.read_text())
    assert record["method"] == "mc-husimi"
    assert record["seed"] == 5
    assert record["samples_or_shots"] == 20000
    assert math.isfinite(record["value_nats"])


def test_compute_from_state_file(tmp_path, capsys):
    path = tmp_path / "state.json"
    write_state_file(make_named_state("ghz", 2), path)
    assert main(["compute", "--state", f"file:{path}",
                 "--method", "exact-swap"]) == 0
    value = float(capsys.readouterr().out.rsplit("=", 1)[1].split()[0])
    assert abs(value - 4.774366421486801) < 1e-10


def test_compute_missing_state_file_exits_2(tmp_path):
    assert main(["compute", "--state", f"file:{tmp_path}/nope.json",
                 "--method", "exact-swap"]) == 2


def test_compute_haar_deterministic(capsys):
    args = ["compute", "--state", "haar", "--n", "3",
            "--method", "exact-swap", "--seed", "11"]
    main(args)
    first = capsys.readouterr().out
    main(args)
    assert capsys.readouterr().out == first


def test_sweep_csv_output(tmp_path):
    out = tmp_path / "sweep.csv"
    assert main(["sweep", "--states", "ghz,w,pbell,haar-mean",
                 "--n", "2:12", "--out", str(out)]) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "state,n,wre,wre_per_qubit,lower_bound,upper_bound"
    rows = [line.split(",") for line in lines[1:]]
    # pbell only appears at even n
    assert all(int(r[1]) % 2 == 0 for r in rows if r[0] == "pbell")
    for r in rows:
        assert float(r[4]) - 1e-9 <= float(r[2]) <= float(r[5]) + 1e-9


def test_sweep_malformed_range_exits_2(tmp_path):
    assert main(["sweep", "--n", "9:2", "--out", str(tmp_path / "x.csv")]) == 2


def test_sweep_unknown_state_exits_2(tmp_path):
    assert main(["sweep", "--states", "bogus", "--n", "2:4",
                 "--out", str(tmp_path / "x.csv")]) == 2


def test_protocol_command(capsys):
    assert main(["protocol", "--state", "ghz", "--n", "2",
                 "--shots", "50000", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert "mean_o" in out
    assert "0.75" in out


def test_protocol_product_state(capsys):
    assert main(["protocol", "--state", "product", "--n", "3",
                 "--shots", "1000"]) == 0
    out = capsys.readouterr().out
    assert "mean_o = 1" in out


def test_protocol_zero_shots_rejected():
    with pytest.raises(SystemExit) as excinfo:
        main(["protocol", "--state", "ghz", "--n", "2", "--shots", "0"])
    assert excinfo.value.code == 2


def test_missing_n_for_named_state_exits_2():
    assert main(["compute", "--state", "ghz", "--method", "exact-swap"]) == 2
