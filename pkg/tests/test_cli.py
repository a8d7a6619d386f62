import csv
import io
import json

import pytest

from matchspec import cli, theorems
from matchspec.families import build_named
from matchspec.graphs import parse_graph6, to_graph6
from matchspec.spectral import spectral_radius


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_text(capsys, tmp_path):
    path = tmp_path / "g.g6"
    path.write_text(to_graph6(build_named("thm11-exc2", k=1)) + "\n")
    code, out, _ = run_cli(capsys, "analyze", "--input", str(path))
    assert code == 0
    assert "n, m:             6, 12" in out
    assert "1-extendable:     False" in out
    assert "listed exception" in out
    assert "criterion agrees: True" in out


def test_analyze_json_matches_library(capsys, tmp_path):
    g = build_named("thm13-f3", n=10)
    path = tmp_path / "g.g6"
    path.write_text(to_graph6(g) + "\n")
    code, out, _ = run_cli(capsys, "analyze", "--input", str(path),
                           "--out", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 10 and doc["m"] == 31
    assert abs(doc["rho"] - spectral_radius(g).rho) < 1e-12
    assert doc["one_excludable"]["holds"] is False
    t13 = doc["theorems"]["t13"]
    assert t13["is_listed_exception"] and t13["threshold"] == 31
    t16 = doc["theorems"]["t16"]
    assert abs(t16["measured"] - t16["threshold"]) <= 1e-9


def test_analyze_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("C~\n"))
    code, out, _ = run_cli(capsys, "analyze")
    assert code == 0
    assert "n, m:             4, 6" in out


def test_analyze_edgelist_and_odd_order(capsys, tmp_path):
    path = tmp_path / "g.edges"
    path.write_text("5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out, _ = run_cli(capsys, "analyze", "--input", str(path),
                           "--format", "edgelist")
    assert code == 0
    assert "N/A (odd order)" in out


def test_construct_variants(capsys):
    code, out, _ = run_cli(capsys, "construct", "thm13-f2")
    assert code == 0 and parse_graph6(out.strip()).m == 19
    code, out2, _ = run_cli(capsys, "construct", "--family", "thm13-f2")
    assert code == 0 and out2 == out
    code, _, err = run_cli(capsys, "construct")
    assert code == 2
    code, out, _ = run_cli(capsys, "construct", "K(3)+K(5)", "--edgelist")
    lines = out.strip().splitlines()
    assert code == 0 and lines[1] == "8" and len(lines) == 2 + 14
    code, out, err = run_cli(capsys, "construct", "w2:n=9")
    assert code == 2 and "even" in err


def test_verify_theorem_builtin(capsys):
    code, out, _ = run_cli(capsys, "verify", "--theorem", "t11", "--k", "1",
                           "--n", "6")
    assert code == 0
    assert "counterexamples:   0" in out
    assert "exceptions found:  2" in out


def test_verify_theorem_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--theorem", "t16", "--n", "6",
                           "--min-degree", "2", "--out", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["counterexamples"] == []
    assert [e["family"] for e in doc["exceptions_found"]] == ["thm13-f1"]


def test_verify_exit_one_on_counterexample(capsys, monkeypatch):
    # with the exception registry emptied, the true exceptions must surface
    # as counterexamples and flip the exit code
    monkeypatch.setattr(theorems, "exception_candidates", lambda t, n: [])
    code, out, _ = run_cli(capsys, "verify", "--theorem", "t11", "--k", "1",
                           "--n", "6")
    assert code == 1
    assert "COUNTEREXAMPLE" in out


def test_verify_fixture_via_env(capsys, monkeypatch, n8_fixture_path):
    import os
    monkeypatch.setenv(cli.FIXTURES_ENV, os.path.dirname(n8_fixture_path))
    code, out, _ = run_cli(capsys, "verify", "--theorem", "t11", "--k", "2",
                           "--n", "8")
    assert code == 0
    assert "graphs scanned:    11117" in out


def test_verify_missing_source(capsys, monkeypatch):
    monkeypatch.delenv(cli.FIXTURES_ENV, raising=False)
    code, _, err = run_cli(capsys, "verify", "--theorem", "t11", "--k", "1",
                           "--n", "10")
    assert code == 2 and "--input" in err


def test_verify_lemma_and_charpolys(capsys):
    code, out, _ = run_cli(capsys, "verify", "--lemma", "l2.4",
                           "--grid", "n=6..10")
    assert code == 0 and "0 violations" in out
    code, out, _ = run_cli(capsys, "verify", "--charpolys")
    assert code == 0 and "0 violations" in out
    code, out, _ = run_cli(capsys, "verify", "--lemma", "l2.1",
                           "--grid", "trials=20,seed=3")
    assert code == 0 and "20 instances" in out


def test_verify_option_validation(capsys):
    code, _, err = run_cli(capsys, "verify", "--lemma", "l2.4",
                           "--theorem", "t11")
    assert code == 2
    code, _, err = run_cli(capsys, "verify", "--theorem", "t14", "--n", "6")
    assert code == 2 and "--k" in err


def test_thresholds_text_and_row(capsys):
    code, out, _ = run_cli(capsys, "thresholds", "--n", "6..12", "--k", "1")
    assert code == 0
    row = next(l for l in out.splitlines() if l.startswith("6 "))
    assert "12" in row and "4.201472" in row and "10" in row and "3.626198" in row


def test_thresholds_k2_rows_respect_order_floor(capsys):
    # k=2 needs n >= 2k+2 = 6; nothing below the floor appears
    code, out, _ = run_cli(capsys, "thresholds", "--n", "2..10", "--k", "2")
    assert code == 0
    lines = [l for l in out.splitlines()[1:] if l.strip()]
    assert [int(l.split()[0]) for l in lines] == [6, 8, 10]
    code, _, err = run_cli(capsys, "thresholds", "--n", "2..4", "--k", "2")
    assert code == 2


def test_thresholds_json_and_csv_agree(capsys):
    code, json_out, _ = run_cli(capsys, "thresholds", "--n", "6..10",
                                "--k", "1", "--out", "json")
    assert code == 0
    doc = json.loads(json_out)
    assert doc["schema"] == cli.THRESHOLDS_SCHEMA
    code, csv_out, _ = run_cli(capsys, "thresholds", "--n", "6..10",
                               "--k", "1", "--out", "csv")
    rows = list(csv.DictReader(io.StringIO(csv_out)))
    assert len(rows) == len(doc["rows"])
    for row, ref in zip(rows, doc["rows"]):
        assert int(row["n"]) == ref["n"]
        assert int(row["size_extendable"]) == ref["size_extendable"]
        assert abs(float(row["spectral_extendable"]) - ref["spectral_extendable"]) < 1e-9


def test_thresholds_bad_range(capsys):
    code, _, err = run_cli(capsys, "thresholds", "--n", "12..6")
    assert code == 2
