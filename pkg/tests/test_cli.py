import json

import numpy as np
import pytest

import pspectral as ps
from pspectral.cli import main


@pytest.fixture()
def k33(tmp_path):
    path = tmp_path / "k33.json"
    ps.write_file(ps.single_edge(3), path)
    return str(path)


@pytest.fixture()
def c4(tmp_path):
    path = tmp_path / "c4.json"
    ps.write_file(ps.cycle(2, 4), path)
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_max(capsys, k33):
    code, out, _ = run(capsys, ["compute", "--input", k33, "--p", "2", "--target", "max"])
    assert "lambda = 1.1547005" in out
    assert code == 2  # 1 < p < r: best-effort by definition


def test_compute_converged_exit_zero(capsys, k33):
    code, out, _ = run(capsys, ["compute", "--input", k33, "--p", "3"])
    assert code == 0
    assert "status = converged" in out


def test_compute_min(capsys, c4):
    code, out, _ = run(capsys, ["compute", "--input", c4, "--p", "2", "--target", "min"])
    assert "lambda_min = -2.0000000" in out
    assert code == 0


def test_compute_empty_graph(capsys, tmp_path):
    path = tmp_path / "empty.json"
    ps.write_file(ps.WeightedHypergraph(2, 3, {}), path)
    code, out, _ = run(capsys, ["compute", "--input", str(path), "--p", "2"])
    assert "lambda = 0.0000000" in out
    assert code == 0


def test_compute_vector_has_12_digits(capsys, k33):
    code, out, _ = run(capsys, ["compute", "--input", k33, "--p", "3", "--vector"])
    line = [ln for ln in out.splitlines() if ln.startswith("vector")][0]
    assert "0.693361274351" in line


def test_bad_file_exit_one(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"rank": 3, "vertices": 3, "edges": [{"verts": [0, 0, 1]}]}')
    code, _, err = run(capsys, ["compute", "--input", str(bad), "--p", "2"])
    assert code == 1
    assert "repeated vertex" in err


def test_usage_error_exit_one(capsys):
    code, _, _ = run(capsys, ["compute", "--p", "2"])
    assert code == 1
    code, _, _ = run(capsys, ["frobnicate"])
    assert code == 1


def test_json_determinism_serial_parallel(capsys, k33):
    argv = ["compute", "--input", k33, "--p", "3", "--seed", "7", "--json", "--vector"]
    _, out1, _ = run(capsys, argv)
    _, out2, _ = run(capsys, argv)
    assert out1 == out2
    _, out3, _ = run(capsys, argv + ["--parallel"])
    rep1, rep3 = json.loads(out1), json.loads(out3)
    assert rep1["results"]["value"] == rep3["results"]["value"]
    assert rep1["results"]["vector"] == rep3["results"]["vector"]


def test_bounds_table(capsys, c4):
    code, out, _ = run(capsys, ["bounds", "--input", c4, "--p", "2", "--json"])
    assert code == 0
    rep = json.loads(out)
    rows = {r["name"]: r for r in rep["results"]["bounds"]}
    assert rows["size-lower"]["bound"] == pytest.approx(2.0)
    assert all(r["slack"] is None or not r["applies"] or r["slack"] >= -1e-9
               for r in rows.values())


def test_check_properties(capsys, tmp_path, c4, k33):
    code, out, _ = run(capsys, ["check", "--input", c4, "--property", "connected"])
    assert code == 0 and out.splitlines()[0] == "true"
    code, out, _ = run(capsys, ["check", "--input", c4, "--property", "odd-transversal"])
    assert code == 0 and "witness" in out
    code, out, _ = run(capsys, ["check", "--input", k33, "--property", "k-tight",
                                "--k", "2"])
    assert code == 0
    two = tmp_path / "two.json"
    ps.write_file(ps.from_edge_list(3, 5, [(0, 1, 2), (2, 3, 4)]), two)
    code, out, _ = run(capsys, ["check", "--input", str(two), "--property", "k-tight",
                                "--k", "2"])
    assert code == 2 and out.splitlines()[0] == "false" and "witness" in out
    code, out, _ = run(capsys, ["check", "--input", str(two), "--property",
                                "equivalence-classes"])
    assert code == 0 and "classes" in out
    code, out, _ = run(capsys, ["check", "--input", c4, "--property", "chromatic"])
    assert code == 0 and "chromatic_number = 2" in out
    code, _, _ = run(capsys, ["check", "--input", c4, "--property", "k-linear"])
    assert code == 1  # --k required


def test_curve_csv(capsys, k33):
    code, out, _ = run(capsys, ["curve", "--input", k33, "--p-from", "1",
                                "--p-to", "6", "--steps", "11"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p,lambda,lambda_min,h,f"
    lams = [float(ln.split(",")[1]) for ln in lines[1:]]
    ref = [6 / 3 ** (3 / p) for p in np.linspace(1, 6, 11)]
    assert lams == pytest.approx(ref, abs=1e-6)
    assert all(b >= a - 1e-9 for a, b in zip(lams, lams[1:]))


def test_oracle_cmd(capsys, c4):
    code, out, _ = run(capsys, ["oracle", "--input", c4, "--p", "2",
                                "--target", "min", "--samples", "4000"])
    assert code == 0
    assert "oracle = -2.00" in out


def test_construct_families(capsys, tmp_path):
    out_path = str(tmp_path / "b.json")
    code, out, _ = run(capsys, ["construct", "--family", "beta-star", "--r", "3",
                                "--k", "4", "--out", out_path])
    assert code == 0
    assert ps.read_file(out_path) == ps.beta_star(3, 4)
    code, _, err = run(capsys, ["construct", "--family", "cycle", "--r", "3",
                                "--n", "3", "--out", out_path])
    assert code == 1 and "n > r" in err
    out_txt = str(tmp_path / "t.txt")
    code, _, _ = run(capsys, ["construct", "--family", "turan", "--n", "6",
                              "--k", "3", "--out", out_txt, "--format", "text"])
    assert code == 0
    assert ps.read_file(out_txt) == ps.turan(6, 3)
    code, _, _ = run(capsys, ["construct", "--family", "multipartite", "--r", "3",
                              "--parts", "2,2,2", "--out", out_path])
    assert code == 0
    assert ps.read_file(out_path) == ps.complete_multipartite(3, [2, 2, 2])


def test_random_cmd(capsys):
    code, out, _ = run(capsys, ["random", "--r", "3", "--n", "12", "--prob", "0.5",
                                "--q", "2", "--trials", "2", "--seed", "1", "--json"])
    assert code == 0
    rep = json.loads(out)
    assert len(rep["results"]["trials"]) == 2
    _, out2, _ = run(capsys, ["random", "--r", "3", "--n", "12", "--prob", "0.5",
                              "--q", "2", "--trials", "2", "--seed", "1", "--json"])
    assert out == out2  # byte-identical reruns
