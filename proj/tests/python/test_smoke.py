"""Smoke tests for the python module and the CLI."""

import json
import os
import subprocess

import pytest

import coxdepth


def test_parse_and_format():
    assert coxdepth.parse_window("-2,1,3", "B") == [-2, 1, 3]
    assert coxdepth.format_window([-2, 1, 3]) == "-2,1,3"
    with pytest.raises(Exception):
        coxdepth.parse_window("-2,1,3", "D")


def test_depth_examples():
    assert coxdepth.depth("B", [-4, -2, -3, -1])["total"] == 8
    assert coxdepth.depth("D", [-4, -2, -3, -1])["total"] == 6
    assert coxdepth.depth("A", [4, 2, 5, 1, 3])["total"] == 5
    assert coxdepth.depth_alt("B", [-4, -2, -3, -1]) == 8
    assert coxdepth.length("B", [-2, 1]) == {"inv": 0, "neg": 1, "nsp": 1, "total": 2}


def test_blocks():
    assert coxdepth.blocks_b([4, -3, 1, -2, 7, 5, -6, 9, -8])["cuts"] == [4, 7, 9]
    assert coxdepth.oddness_b([4, -3, 1, -2, 7, 5, -6, 9, -8]) == 2
    assert coxdepth.oddness_d([-2, 1, 3, 4, -5, -7, -8, 6]) == 3
    assert coxdepth.direct_sum([1], [1]) == [1, 2]


def test_factorize_roundtrip():
    result = coxdepth.factorize("B", [-6, -3, -2, 8, 7, 5, 9, -4, -1], word=True)
    assert result["depth_cost"] == 22
    assert len(result["reflections"]) == 15
    assert result["verification"]["all_ok"]
    assert len(result["word"]) == coxdepth.length("B", [-6, -3, -2, 8, 7, 5, 9, -4, -1])["total"]

    result = coxdepth.factorize("D", [5, -1, -3, 2, -4, 6, 9, -8, 7])
    assert result["depth_cost"] == 20
    assert len(result["reflections"]) == 12
    assert result["verification"]["all_ok"]


def test_oracle_statistics():
    stats = coxdepth.oracle("A", [4, 2, 5, 1, 3])
    assert (stats["lt"], stats["lr"], stats["ls"], stats["dp"]) == (2, 4, 6, 5)


def test_classify_and_counts():
    verdict = coxdepth.classify("B", [-4, -2, -3, -1])
    assert not verdict["depth_eq_length"]
    assert not verdict["short_braid_avoiding"]
    assert coxdepth.count_depth_eq_length("B", 3) == 14
    assert coxdepth.closed_form_depth_eq_length("B", 3) == 14
    assert coxdepth.count_boolean("B", 2) == 5
    assert coxdepth.max_depth_profile("D", 5) == (12, 8)
    assert len(coxdepth.all_elements("D", 3)) == 24
    lists = coxdepth.pattern_lists()
    assert len(lists["d_boolean"]) == 21


CLI = os.environ.get("COXDEPTH_CLI")


@pytest.mark.skipif(CLI is None, reason="COXDEPTH_CLI not set")
def test_cli_stat():
    out = subprocess.run(
        [CLI, "stat", "--type", "B", "--w", "-4,-2,-3,-1"],
        check=True, capture_output=True, text=True,
    )
    payload = json.loads(out.stdout)
    assert payload["depth"]["total"] == 8
    out = subprocess.run(
        [CLI, "stat", "--type", "D", "--w", "-4,-2,-3,-1"],
        check=True, capture_output=True, text=True,
    )
    assert json.loads(out.stdout)["depth"]["total"] == 6


@pytest.mark.skipif(CLI is None, reason="COXDEPTH_CLI not set")
def test_cli_factor_oracle_classify():
    out = subprocess.run(
        [CLI, "factor", "--type", "D", "--w", "5,-1,-3,2,-4,6,9,-8,7", "--word"],
        check=True, capture_output=True, text=True,
    )
    payload = json.loads(out.stdout)
    assert payload["factorization"]["depth_cost"] == 20
    assert payload["verification"]["all_ok"]
    assert len(payload["word"]) == payload["factorization"]["length_cost"]

    out = subprocess.run(
        [CLI, "oracle", "--type", "B", "--n", "4", "--w", "-4,-2,-3,-1"],
        check=True, capture_output=True, text=True,
    )
    payload = json.loads(out.stdout)
    assert (payload["dp"], payload["lt"]) == (8, 3)

    out = subprocess.run(
        [CLI, "classify", "--type", "B", "--w", "3,2,1"],
        check=True, capture_output=True, text=True,
    )
    payload = json.loads(out.stdout)
    assert not payload["avoids"]["b_depth_eq_length"]


@pytest.mark.skipif(CLI is None, reason="COXDEPTH_CLI not set")
def test_cli_count_and_errors(tmp_path):
    out = subprocess.run(
        [CLI, "count", "--type", "B", "--n", "3", "--stat", "dp_eq_ls"],
        check=True, capture_output=True, text=True,
    )
    tables = json.loads(out.stdout)
    assert tables[0]["counts"]["0"] == 14
    assert tables[1]["source"] == "closed_form"

    csv_path = tmp_path / "counts.csv"
    subprocess.run(
        [CLI, "count", "--type", "B", "--n", "1", "--stat", "depth", "--csv", str(csv_path)],
        check=True, capture_output=True, text=True,
    )
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0] == "family,n,statistic,key,count,source"
    assert lines[1:] == ["B,1,depth,0,1,enumerated", "B,1,depth,1,1,enumerated"]

    bad = subprocess.run([CLI, "stat", "--type", "B", "--w", "1,1"], capture_output=True, text=True)
    assert bad.returncode == 2

    bad = subprocess.run([CLI, "stat", "--w", "1,2"], capture_output=True, text=True)
    assert bad.returncode == 2


@pytest.mark.skipif(CLI is None, reason="COXDEPTH_CLI not set")
def test_cli_verify_all():
    out = subprocess.run(
        [CLI, "verify-all", "--type", "D", "--max-n", "4"],
        check=True, capture_output=True, text=True,
    )
    payload = json.loads(out.stdout)
    assert payload["all_ok"]


def test_deterministic_output():
    a = coxdepth.depth_distribution("B", 2)
    b = coxdepth.depth_distribution("B", 2)
    assert a == b
    assert coxdepth.shallow_elements("B", 2) == coxdepth.all_elements("B", 2)
