"""Exit codes, output formats, and cross-method agreement at the CLI surface."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

import treewalks.cli as cli
from treewalks.rationals import parse_number
from treewalks.recurrence import build_table, tree_weights


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- walks ---------------------------------------------------------------------


def test_walks_plain_parity_filtered(capsys):
    code, out, _ = run(capsys, "walks", "-m", "3", "-i", "0", "-n", "6", "--parity-filter")
    assert code == 0
    assert out == "1 3 15 87\n"


def test_walks_gf_central_binomials(capsys):
    code, out, _ = run(
        capsys, "walks", "-m", "2", "-n", "8", "--method", "gf", "--parity-filter"
    )
    assert code == 0
    assert out == "1 2 6 20 70\n"


def test_walks_unfiltered_by_default(capsys):
    code, out, _ = run(capsys, "walks", "-m", "3", "-n", "4")
    assert code == 0
    assert out == "1 0 3 0 15\n"


def test_walks_gf_rejects_single_edge(capsys):
    code, out, err = run(capsys, "walks", "-m", "1", "-n", "4", "--method", "gf")
    assert code == 2
    assert out == ""
    assert "m=1" in err


def test_walks_dp_accepts_single_edge(capsys):
    code, out, _ = run(capsys, "walks", "-m", "1", "-n", "4", "--parity-filter")
    assert code == 0
    assert out == "1 1 1\n"


def test_walks_tree_method_guard(capsys):
    code, _, err = run(
        capsys, "walks", "-m", "3", "-n", "12", "--method", "tree", "--max-states", "10"
    )
    assert code == 3
    assert "error" in err


@pytest.mark.parametrize("fmt", ["plain", "csv", "bfile"])
def test_methods_emit_identical_bytes(capsys, fmt):
    outputs = set()
    for method in ("dp", "gf", "tree"):
        code, out, _ = run(
            capsys, "walks", "-m", "3", "-i", "1", "-n", "7", "--method", method,
            "--format", fmt,
        )
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_walks_json_metadata_and_values(capsys):
    code, out, _ = run(
        capsys, "walks", "-m", "4", "-i", "0", "-n", "6", "--method", "gf",
        "--format", "json", "--parity-filter",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["m"] == 4 and doc["i"] == 0 and doc["method"] == "gf"
    assert doc["n"] == [0, 2, 4, 6]
    assert doc["values"] == ["1", "4", "28", "232"]


# --- dyck ----------------------------------------------------------------------


def test_dyck_enum_catalan(capsys):
    code, out, _ = run(
        capsys, "dyck", "1", "1", "1", "-n", "8", "--method", "enum", "--parity-filter"
    )
    assert code == 0
    assert out == "1 1 2 5 14\n"


def test_dyck_gf_row_one(capsys):
    code, out, _ = run(capsys, "dyck", "1", "2", "3", "-i", "1", "-n", "5", "--method", "gf")
    assert code == 0
    assert out == "0 1 0 5 0 29\n"


def test_dyck_gf_rejects_zero_c2(capsys):
    code, _, err = run(capsys, "dyck", "1", "0", "5", "-n", "4", "--method", "gf")
    assert code == 2
    assert "c2" in err


def test_dyck_dp_accepts_zero_c2(capsys):
    code, out, _ = run(capsys, "dyck", "1", "0", "5", "-n", "4", "--parity-filter")
    assert code == 0
    assert out == "1 5 25\n"


def test_dyck_rational_weights_round_trip(capsys):
    code, out, _ = run(
        capsys, "dyck", "1", "1/2", "2", "-n", "8", "--format", "json", "--method", "gf"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["weights"] == {"c1": "1", "c2": "1/2", "c3": "2"}
    table = build_table(cli.WeightConfig(1, Fraction(1, 2), 2), 8)
    values = [parse_number(s) for s in doc["values"]]
    assert values == [table.count(0, n) for n in doc["n"]]


def test_dyck_enum_guard(capsys):
    code, _, err = run(
        capsys, "dyck", "1", "1", "1", "-n", "25", "--method", "enum", "--max-states", "100"
    )
    assert code == 3
    assert "error" in err


def test_dyck_rejects_malformed_weight(capsys):
    code, _, _ = run(capsys, "dyck", "1", "x", "3", "-n", "4")
    assert code == 2


# --- output formats --------------------------------------------------------------


def test_csv_round_trip(capsys):
    code, out, _ = run(capsys, "walks", "-m", "3", "-n", "6", "--format", "csv", "--parity-filter")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,value"
    table = build_table(tree_weights(3), 6)
    for line in lines[1:]:
        n, value = line.split(",")
        assert parse_number(value) == table.count(0, int(n))


def test_bfile_degree_four(capsys):
    code, out, _ = run(capsys, "bfile", "-m", "4", "-i", "0", "--count", "4")
    assert code == 0
    assert out == "0 1\n1 4\n2 28\n3 232\n"


def test_bfile_degree_three(capsys):
    code, out, _ = run(capsys, "bfile", "-m", "3", "-i", "0", "--count", "5")
    assert code == 0
    assert out == "0 1\n1 3\n2 15\n3 87\n4 543\n"


def test_bfile_shifted_start(capsys):
    code, out, _ = run(capsys, "bfile", "-m", "2", "-i", "0", "--count", "3", "--start", "1")
    assert code == 0
    assert out == "1 1\n2 2\n3 6\n"


def test_bfile_round_trip(capsys):
    code, out, _ = run(capsys, "bfile", "-m", "3", "-i", "2", "--count", "4")
    assert code == 0
    table = build_table(tree_weights(3), 2 + 2 * 3)
    for k, line in enumerate(out.splitlines()):
        index, value = line.split(" ")
        assert int(index) == k
        assert parse_number(value) == table.count(2, 2 + 2 * k)


def test_bfile_lines_have_no_extra_whitespace(capsys):
    _, out, _ = run(capsys, "bfile", "-m", "2", "-i", "0", "--count", "3")
    for line in out.splitlines():
        assert line == line.strip()
        assert line.count(" ") == 1


# --- verify -----------------------------------------------------------------------


def test_verify_all_passes(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "all", "-n", "6", "--m-max", "3")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") >= 10


def test_verify_base_cases_only(capsys):
    code, out, _ = run(capsys, "verify", "-n", "0", "--m-max", "2")
    assert code == 0
    assert "FAIL" not in out


def test_verify_scope_selects_checks(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "freegroup", "-n", "4")
    assert code == 0
    assert "free-group" in out
    assert "enumeration" not in out


def test_verify_reports_failures(capsys, monkeypatch):
    monkeypatch.setattr(cli, "enumerate_dyck", lambda w, i, n, max_states=0: Fraction(999))
    code, out, _ = run(capsys, "verify", "--scope", "dyck", "-n", "4")
    assert code == 1
    assert "FAIL" in out
    assert "expected" in out


def test_verify_rejects_bad_bounds(capsys):
    code, _, _ = run(capsys, "verify", "-n", "-1")
    assert code == 2


# --- argparse plumbing --------------------------------------------------------------


def test_unknown_method_is_usage_error(capsys):
    code, _, _ = run(capsys, "walks", "-m", "3", "-n", "4", "--method", "magic")
    assert code == 2


def test_missing_subcommand_is_usage_error(capsys):
    code, _, _ = run(capsys)
    assert code == 2


def test_negative_length_is_usage_error(capsys):
    code, _, _ = run(capsys, "walks", "-m", "3", "-n", "-4")
    assert code == 2


def test_help_exits_cleanly(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "walks" in out and "verify" in out
