import json

import pytest

from ellisem.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "--bundled", "paper")
    assert code == 0
    assert "not completely regular; witness aab" in out
    assert "backward almost distal: True" in out


def test_analyze_bijective(capsys):
    code, out, _ = run(capsys, "analyze", "--bundled", "bijective")
    assert code == 0
    assert "almost distal; nearly simple predicted" in out
    assert "declined" in out


def test_analyze_json_deterministic(capsys):
    code, first, _ = run(capsys, "analyze", "--bundled", "paper", "--format", "json")
    assert code == 0
    code, second, _ = run(capsys, "analyze", "--bundled", "paper", "--format", "json")
    assert code == 0
    assert first == second  # byte-identical
    doc = json.loads(first)
    assert doc["fiber_semigroup"]["elements"] == ["aaa", "aab", "abc", "bbb", "ccc"]


def test_analyze_dot(capsys):
    code, out, _ = run(capsys, "analyze", "--bundled", "paper", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph eggbox")


def test_analyze_file_and_out_dir(tmp_path, capsys):
    target = tmp_path / "sub.txt"
    target.write_text("alphabet: a b\nrules:\na: b a b\nb: a b a\n")
    code, out, _ = run(
        capsys, "analyze", str(target), "--format", "json", "--out", str(tmp_path)
    )
    assert code == 0
    assert (tmp_path / "analysis.json").exists()


def test_analyze_parse_error_exit_1(tmp_path, capsys):
    bad = tmp_path / "bad.sub"
    bad.write_text("alphabet: a b\nrules:\na: a b\nb: a\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 1
    assert "non-constant" in err


def test_analyze_missing_file_exit_1(capsys):
    code, _, err = run(capsys, "analyze", "/nonexistent/path.sub")
    assert code == 1


def test_verify_paper_example(capsys):
    code, out, _ = run(capsys, "verify-paper-example")
    assert code == 0
    assert "all 14 golden assertions pass" in out
    assert out.count("PASS") == 14


def test_verify_tampered_file_exit_2(tmp_path, capsys):
    tampered = tmp_path / "tampered.sub"
    tampered.write_text("alphabet: a b c\nrules:\na: a a c a a\nb: a b c a a\nc: a c c a a\n")
    code, out, _ = run(capsys, "verify-paper-example", "--file", str(tampered))
    assert code == 2
    assert "FAIL" in out


def test_verify_json_format(capsys):
    code, out, _ = run(capsys, "verify-paper-example", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] and len(doc["assertions"]) == 14


def test_oracle_cpreg(capsys):
    code, out, _ = run(capsys, "oracle", "cpreg", "--degree", "3")
    assert code == 0
    assert "regular_degree_3=21" in out
    assert ": ok" in out


def test_oracle_json(capsys):
    code, out, _ = run(
        capsys, "oracle", "dichotomy", "--z3-samples", "2", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc[0]["ok"]
