import csv
import io
import json
import subprocess
import sys
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from skewhowe.characters import mn_character
from skewhowe.cli import EXIT_FAILED, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, main, parse_config
from skewhowe.dims import f_dim
from skewhowe.errors import TheoremCheckFailure
from skewhowe.partitions import Partition

from test_tableaux import WORKED_INPUT, WORKED_OUTPUT

P = Partition


def run(capsys, *argv):
    status = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return status, out, err


def test_verify_two_by_two(capsys):
    status, out, _ = run(capsys, "verify", "--m", 2, "--n", 2)
    body = json.loads(out)
    assert status == EXIT_OK and body["ok"]
    assert len(body["checks"]) == 25
    assert {c["status"] for c in body["checks"]} == {"exact-equal"}
    for check in body["checks"]:
        for row in check["rows"]:
            assert row["lhs"] == row["rhs"]


def test_verify_single_p(capsys):
    status, out, _ = run(capsys, "verify", "--m", 3, "--n", 3, "--p", 4)
    assert status == EXIT_OK
    assert {c["params"].get("p", 4) for c in json.loads(out)["checks"]} == {4}


@pytest.mark.parametrize("argv", [
    ["verify", "--m", 0, "--n", 2],
    ["verify", "--m", 2, "--n", 2, "--p", 5],
    ["table", "--m", 2, "--n", 2],
    ["sample", "--m", 2, "--n", 2, "--p", 1, "--samples", 0],
    ["sample", "--m", 2, "--n", 2, "--p", 1, "--sampler", "bogus"],
    ["shape", "--m", 2, "--n", 2, "--p", 1, "--samples", 1],
    ["table", "--m", 2, "--n", 2, "--p", 1, "--format", "svg"],
    ["verify", "--m", 2, "--n", 2, "--seed", -1],
    ["nonsense", "--m", 2, "--n", 2],
    ["bijection", "--m", 2, "--n", 2, "--tableau", "[[2,1]]"],
    ["bijection", "--m", 2, "--n", 2, "--shape", "not json"],
])
def test_usage_errors(capsys, argv):
    status, out, err = run(capsys, *argv)
    assert status == EXIT_USAGE and out == "" and err


def test_resource_cap(capsys):
    status, out, err = run(capsys, "verify", "--m", 7, "--n", 7)
    assert status == EXIT_RESOURCE and "cap" in err and out == ""


def test_identity_failure_maps_to_exit_one(capsys, monkeypatch):
    import skewhowe.cli as cli

    def broken(cfg):
        raise TheoremCheckFailure("forced")

    monkeypatch.setitem(cli.COMMANDS, "verify", broken)
    status, _, err = run(capsys, "verify", "--m", 2, "--n", 2)
    assert status == EXIT_FAILED and "forced" in err


def test_table_json(capsys):
    status, out, _ = run(capsys, "table", "--m", 2, "--n", 2, "--p", 2)
    body = json.loads(out)
    assert status == EXIT_OK
    assert [(a["partition"], a["weight"]) for a in body["atoms"]] == [([2], "1/2"), ([1, 1], "1/2")]


@pytest.mark.parametrize("p, atom", [(0, []), (6, [3, 3])])
def test_table_trivial(capsys, p, atom):
    _, out, _ = run(capsys, "table", "--m", 2, "--n", 3, "--p", p)
    assert [(a["partition"], a["weight"]) for a in json.loads(out)["atoms"]] == [(atom, "1")]


def test_table_csv(capsys):
    _, out, _ = run(capsys, "table", "--m", 3, "--n", 3, "--p", 4, "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert sum(Fraction(int(r["weight_num"]), int(r["weight_den"])) for r in rows) == 1
    assert all(json.loads(r["partition"]) for r in rows)


def test_sample_full_rectangle_is_constant(capsys):
    _, out, _ = run(capsys, "sample", "--m", 2, "--n", 3, "--p", 6, "--samples", 50, "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 50 and {r["partition"] for r in rows} == {"[3,3]"}


def test_sample_is_byte_identical_per_seed(capsys, tmp_path):
    outs = []
    for name in ("a", "b"):
        path = tmp_path / f"{name}.json"
        run(capsys, "sample", "--m", 3, "--n", 3, "--p", 4, "--samples", 2000, "--seed", 9, "--out", path)
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    _, other, _ = run(capsys, "sample", "--m", 3, "--n", 3, "--p", 4, "--samples", 2000, "--seed", 10)
    assert other.encode() != outs[0]


def test_sample_summary_has_tv(capsys):
    _, out, _ = run(capsys, "sample", "--m", 3, "--n", 3, "--p", 4, "--samples", 100000,
                    "--sampler", "chain", "--seed", 1)
    body = json.loads(out)
    assert body["header"]["seed_derivation"]
    assert body["summary"]["total"] == 100000 and body["summary"]["tv_distance"] < 0.01


def test_shape_zero_p(capsys):
    _, out, _ = run(capsys, "shape", "--m", 3, "--n", 5, "--p", 0, "--samples", 10)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 5 and all(float(r["mean_height"]) == 0 for r in rows)


@pytest.mark.slow
def test_shape_large_csv(capsys):
    _, out, _ = run(capsys, "shape", "--m", 20, "--n", 40, "--p", 400, "--samples", 2000, "--seed", 3)
    rows = list(csv.DictReader(io.StringIO(out)))
    heights = [float(r["mean_height"]) for r in rows]
    assert len(rows) == 40
    assert all(a >= b for a, b in zip(heights, heights[1:]))


def test_shape_svg(capsys):
    _, out, _ = run(capsys, "shape", "--m", 4, "--n", 8, "--p", 12, "--samples", 30,
                    "--format", "svg", "--overlay", 5)
    root = ET.fromstring(out.split("\n", 1)[1])
    assert len(root.findall("{http://www.w3.org/2000/svg}path")) == 6


def test_shape_json_reports_steps(capsys):
    _, out, _ = run(capsys, "shape", "--m", 4, "--n", 8, "--p", 12, "--samples", 30, "--format", "json")
    body = json.loads(out)
    assert len(body["profile"]) == 8 and body["step_count"]["min"] >= 1


def test_character_two_by_three(capsys):
    status, out, _ = run(capsys, "character", "--m", 2, "--n", 3, "--p", 2)
    body = json.loads(out)
    assert status == EXIT_OK and body["ok"]
    rows = body["checks"][0]["rows"]
    assert {tuple(r["cycle_type"]): (r["lhs"], r["rhs"]) for r in rows} == {(1, 1): ("1", "1"), (2,): ("1/5", "1/5")}


def test_character_two_by_two_p4(capsys):
    status, out, _ = run(capsys, "character", "--m", 2, "--n", 2, "--p", 4, "--p-prime", 4)
    body = json.loads(out)
    rows = body["checks"][0]["rows"]
    assert status == EXIT_OK and len(rows) == 5
    for r in rows:
        assert Fraction(r["lhs"]) == Fraction(mn_character(P([2, 2]), P(r["cycle_type"])), f_dim(P([2, 2])))


def test_character_p_one(capsys):
    _, out, _ = run(capsys, "character", "--m", 3, "--n", 2, "--p", 1)
    rows = json.loads(out)["checks"][0]["rows"]
    assert len(rows) == 1 and rows[0]["lhs"] == rows[0]["rhs"] == "1"


def test_character_cap(capsys):
    status, _, _ = run(capsys, "character", "--m", 4, "--n", 4, "--p", 2)
    assert status == EXIT_RESOURCE


def test_bijection_worked_example(capsys):
    status, out, _ = run(capsys, "bijection", "--m", 4, "--n", 8, "--tableau", json.dumps(WORKED_INPUT))
    body = json.loads(out)
    assert status == EXIT_OK
    assert body["pairs"][0]["complement"] == WORKED_OUTPUT
    assert body["pairs"][0]["complement_shape"] == [6, 4, 3, 1]


def test_bijection_empty_shape(capsys):
    _, out, _ = run(capsys, "bijection", "--m", 3, "--n", 2, "--shape", "[]")
    pairs = json.loads(out)["pairs"]
    assert pairs == [{"tableau": [], "complement": [[1, 1], [2, 2], [3, 3]]}]


def test_bijection_all_shapes_in_three_by_three(capsys):
    status, out, _ = run(capsys, "bijection", "--m", 3, "--n", 3)
    body = json.loads(out)
    assert status == EXIT_OK and body["ok"] and len(body["checks"]) == 20


def test_bijection_cap(capsys):
    status, _, _ = run(capsys, "bijection", "--m", 9, "--n", 9, "--shape", "[9,9,9,9]")
    assert status == EXIT_RESOURCE


def test_parse_config_defaults():
    cfg = parse_config(["shape", "--m", "2", "--n", "3", "--p", "1"])
    assert cfg.format == "csv" and cfg.sampler == "syt" and cfg.output is None


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "skewhowe", "table", "--m", "1", "--n", "1", "--p", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["atoms"][0]["weight"] == "1"
