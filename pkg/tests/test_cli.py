"""End-to-end exercises of the command-line interface."""

import json
import subprocess
import sys

import pytest

from perfpart.cli import main

CIRCULANT_ROWS = "11100\n01110\n00111\n10011\n11001\n"


@pytest.fixture()
def run(capsys):
    def invoke(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out

    return invoke


@pytest.fixture()
def circulant_file(tmp_path):
    path = tmp_path / "circulant.txt"
    path.write_text(CIRCULANT_ROWS)
    return str(path)


def usage_error(*argv):
    with pytest.raises(SystemExit) as err:
        main(list(argv))
    assert err.value.code == 2


def test_count_human_plus_json(run):
    code, out = run("count", "--r", "1", "--m", "6", "--oracle")
    assert code == 0
    human, payload_line = out.strip().splitlines()
    assert human == "n=6 matchings=265 degree=5 divisible=yes"
    payload = json.loads(payload_line)
    assert payload["count"] == payload["rook_count"] == payload["oracle_count"] == 265
    assert payload["degree"] == 5 and payload["divisible"] is True


def test_count_json_only(run):
    code, out = run("count", "--r", "0", "--n", "4", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 24 and payload["m"] is None
    assert payload["rook_count"] == 24 and payload["oracle_count"] is None


def test_count_matrix_runs_the_permanent(run, circulant_file):
    code, out = run("count", "--matrix", circulant_file, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == payload["oracle_count"] == 13
    assert payload["rook_count"] is None
    assert payload["degree"] == 3 and payload["divisible"] is False


def test_count_usage_errors(circulant_file):
    usage_error("count")
    usage_error("count", "--matrix", circulant_file, "--r", "1")
    usage_error("count", "--r", "1")  # missing m
    usage_error("count", "--matrix", "/no/such/file")


def test_enumerate_plain_and_classified(run):
    code, out = run("enumerate", "--r", "1", "--n", "4", "--m", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 9 and lines[0] == "(1 2)(3 4)"

    code, out = run("enumerate", "--r", "1", "--m", "6", "--classify")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 265
    assert lines[0].split("\t") == ["(1 2)(3 4)(5 6)", "C222"]

    code, out = run("enumerate", "--r", "1", "--m", "4", "--json")
    assert code == 0
    records = json.loads(out)
    assert len(records) == 9 and records[0] == {"cycles": "(1 2)(3 4)"}


def test_enumerate_classify_needs_a_known_family():
    usage_error("enumerate", "--r", "1", "--m", "4", "--classify")


def test_construct_l61_golden_then_verify(run, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out = run("construct", "--target", "l61", "--golden")
    assert code == 0
    assert "wrote l61.json: 53 parts of 5" in out
    assert "golden: all 53 parts match the reference tables" in out
    assert (tmp_path / "l61.json").exists()

    code, out = run("verify", "l61.json")
    assert code == 0
    assert out.startswith("PASS: 53 parts, 265 matchings")


def test_construct_other_axis_fails_golden(run, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out = run("construct", "--target", "l61", "--y0", "2", "--golden", "--json")
    assert code == 1
    payload = json.loads(out)
    assert payload["golden_ok"] is False
    assert payload["golden_missing"] and payload["golden_unexpected"]

    # without the golden diff the same build is still a valid certificate
    code, out = run("verify", "l61.json", "--json")
    assert code == 0 and json.loads(out)["ok"] is True


def test_construct_l82_audit(run, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out = run("construct", "--target", "l82", "--audit", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["parts"] == 792 and payload["part_size"] == 6
    assert payload["audit"] == {
        "type1_parts": 384,
        "type2_parts": 384,
        "type3_parts": 24,
        "S0_1": 768,
        "S0_rest": 1536,
        "S1": 1536,
        "S2": 768,
        "S4": 144,
    }


def test_construct_group_targets(run, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out = run("construct", "--target", "knn:4")
    assert code == 0 and "wrote knn4.json: 6 parts of 4" in out
    code, out = run("verify", "knn4.json")
    assert code == 0

    code, out = run("construct", "--target", "l2nn:3", "--out", "two_holes.json")
    assert code == 0 and "wrote two_holes.json: 12 parts of 3" in out
    code, out = run("verify", "two_holes.json")
    assert code == 0


def test_construct_usage_errors():
    usage_error("construct", "--target", "nope")
    usage_error("construct", "--target", "knn:x")
    usage_error("construct", "--target", "l61", "--audit")
    usage_error("construct", "--target", "l82", "--golden")
    usage_error("construct", "--target", "knn:3", "--y0", "2")
    usage_error("construct", "--target", "l61", "--seed", "(1 2)(3 4)")


def test_certificates_are_byte_stable(run, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    run("construct", "--target", "l61", "--out", "a.json")
    run("construct", "--target", "l61", "--out", "b.json")
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_verify_detects_tampering(run, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    run("construct", "--target", "l61")
    payload = json.loads((tmp_path / "l61.json").read_text())
    parts = payload["parts"]
    parts[0][0], parts[1][0] = parts[1][0], parts[0][0]
    (tmp_path / "bad.json").write_text(json.dumps(payload))

    code, out = run("verify", "bad.json")
    assert code == 1
    assert out.startswith("FAIL") and "coverage" in out

    code, out = run("verify", "bad.json", "--json")
    assert code == 1
    report = json.loads(out)
    assert report["ok"] is False and report["violations"]


def test_verify_unreadable_file(run, tmp_path):
    code, out = run("verify", str(tmp_path / "missing.json"))
    assert code == 1 and "unreadable certificate" in out

    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 3}')
    code, out = run("verify", str(bad))
    assert code == 1 and "unreadable certificate" in out


def test_search_target_found(run, tmp_path):
    out_path = str(tmp_path / "l41.json")
    code, out = run("search", "--target", "l41", "--out", out_path)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "FOUND: 3 parts of 3"
    assert lines[1] == "  part 1: (1 2)(3 4); (1 3 2 4); (1 4 2 3)"

    code, out = run("verify", out_path)
    assert code == 0 and out.startswith("PASS: 3 parts, 9 matchings")


def test_search_all_counts_partitions(run):
    code, out = run("search", "--target", "l41", "--all", "--json")
    assert code == 0 and json.loads(out) == {"partitions": 1}


def test_search_matrix_none_is_not_an_error(run, circulant_file):
    code, out = run("search", "--matrix", circulant_file)
    assert code == 0 and out.startswith("NONE")
    code, out = run("search", "--matrix", circulant_file, "--json")
    assert code == 0 and json.loads(out) == {"found": False}


def test_search_budget_exhaustion(run):
    code, out = run("search", "--target", "l62", "--budget", "3")
    assert code == 1 and out.startswith("UNDECIDED")
    code, out = run("search", "--target", "l62", "--budget", "3", "--json")
    assert code == 1 and json.loads(out)["error"] == "budget exhausted"


def test_search_usage_errors(circulant_file):
    usage_error("search")
    usage_error("search", "--target", "l99")
    usage_error("search", "--target", "l41", "--matrix", circulant_file)


def test_check_extendability(run):
    code, out = run("check", "--r", "0", "--n", "3")
    assert code == 0
    assert out.strip() == "OK: all 6 matchings extend to a 1-factorization"

    code, out = run("check", "--r", "1", "--m", "4", "--json")
    assert code == 0 and json.loads(out) == {"total": 9, "blocked": []}


def test_module_entry_point_runs_in_a_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "perfpart.cli", "count", "--r", "1", "--m", "4", "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 9
