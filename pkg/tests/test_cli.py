import json
from pathlib import Path

import pytest

from thetavex import cli
from thetavex.classify import VerifySummary

GOLDEN = Path(__file__).parent / "golden"

BIG_WINDOW = "10 1 5 3 -2 -4 6 -9 -8 -7"
BIG_TRIPLE = "3 4 5 6 9; 8 6 5 4 2; 7 4 2 -3 -6"


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# classify


def test_classify_member_text(capsys):
    code, out, err = run(capsys, "classify", BIG_WINDOW)
    assert code == 0 and err == ""
    assert out == (
        "window: 10 1 5 3 -2 -4 6 -9 -8 -7\n"
        "theta-vexillary: yes\n"
        "triple: 3 4 5 6 9; 8 6 5 4 2; 7 4 2 -3 -6\n"
        "corners:\n"
        "  (3, 8, 7) ne_path\n"
        "  (4, 6, 4) ne_path\n"
        "  (5, 5, 2) ne_path\n"
        "  (6, 4, -3) ne_path\n"
        "  (6, 2, -1) unessential\n"
        "  (7, 2, -3) optional\n"
        "  (9, 2, -6) ne_path\n"
    )


def test_classify_non_member_text(capsys):
    code, out, _ = run(capsys, "classify", "-1 3 2")
    assert code == 1
    assert "theta-vexillary: no" in out
    assert "pattern witness: -1 3 2 at positions 1 2 3" in out
    assert "stray corner: (1, 1, 1)" in out
    assert "triple:" not in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "2 1", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["schema"] == "1"
    assert obj["theta_vexillary"] is True
    assert obj["triple"] == {"k": [1], "p": [2], "q": [-1], "n": 2}
    assert obj["corners"] == [{"k": 1, "p": 2, "q": -1, "class": "ne_path"}]


def test_classify_bad_window(capsys):
    code, out, err = run(capsys, "classify", "bogus")
    assert code == 2 and out == ""
    assert err == "error: bad window token 'bogus': not an integer\n"


# ---------------------------------------------------------------------------
# diagram


def test_diagram_golden_small(capsys):
    code, out, _ = run(capsys, "diagram", "-2 3 1")
    assert code == 0
    assert out == (GOLDEN / "diagram_neg2_3_1.txt").read_text()


def test_diagram_golden_big(capsys):
    code, out, _ = run(capsys, "diagram", BIG_WINDOW)
    assert code == 0
    assert out == (GOLDEN / "diagram_big.txt").read_text()


def test_diagram_crosses_flag(capsys):
    _, plain, _ = run(capsys, "diagram", "-2 3 1")
    _, crossed, _ = run(capsys, "diagram", "-2 3 1", "--show-crosses")
    assert "x" not in plain
    assert "x" in crossed


# ---------------------------------------------------------------------------
# construct


def test_construct_prints_window_and_inverse(capsys):
    code, out, _ = run(capsys, "construct", BIG_TRIPLE, "-n", "10")
    assert code == 0
    assert out == "10 1 5 3 -2 -4 6 -9 -8 -7\n2 -5 4 -6 3 7 -10 -9 -8 1\n"


def test_construct_json(capsys):
    code, out, _ = run(capsys, "construct", "1; 2; -1", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj == {
        "schema": "1",
        "triple": {"k": [1], "p": [2], "q": [-1], "n": 2},
        "window": [2, 1],
        "inverse": [2, 1],
    }


def test_construct_default_rank_too_small(capsys):
    # without -n the rank defaults to 9, one short for this triple
    code, _, err = run(capsys, "construct", BIG_TRIPLE)
    assert code == 2
    assert "minimum feasible rank is 10" in err


def test_construct_invalid_triple_names_condition(capsys):
    code, _, err = run(capsys, "construct", "1 2; 2 1; 2 -2")
    assert code == 2
    assert "A2" in err


def test_construct_bad_shape(capsys):
    code, _, err = run(capsys, "construct", "2 1; 2 1; 2 1")
    assert code == 2
    assert "strictly increasing" in err


# ---------------------------------------------------------------------------
# recover


def test_recover_round_trip_text(capsys):
    code, out, _ = run(capsys, "recover", BIG_WINDOW)
    assert code == 0
    assert out == BIG_TRIPLE + "\n"


def test_recover_json(capsys):
    code, out, _ = run(capsys, "recover", BIG_WINDOW, "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["schema"] == "1"
    assert obj["triple"]["k"] == [3, 4, 5, 6, 9]


def test_recover_non_member(capsys):
    code, out, _ = run(capsys, "recover", "-1 3 2")
    assert code == 1
    assert out == "NOT THETA-VEXILLARY\n"


# ---------------------------------------------------------------------------
# verify


def test_verify_small_group(capsys):
    code, out, _ = run(capsys, "verify", "2")
    assert code == 0
    assert out == "8 total, 8 theta-vexillary, 0 mismatches\n"


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "2", "--json")
    assert code == 0
    assert json.loads(out) == {
        "schema": "1",
        "n": 2,
        "total": 8,
        "theta_vexillary": 8,
        "mismatches": [],
    }


def test_verify_output_identical_across_jobs(capsys):
    code1, out1, _ = run(capsys, "verify", "4", "--jobs", "1")
    code2, out2, _ = run(capsys, "verify", "4", "--jobs", "2")
    assert (code1, out1) == (code2, out2)


def test_verify_reports_mismatches(capsys, monkeypatch):
    fake = VerifySummary(6, 46080, 15968, ((3, 5, 1, 6, -2, 4),))
    monkeypatch.setattr(cli, "verify_equivalence", lambda *a, **kw: fake)
    code, out, _ = run(capsys, "verify", "6", "--allow-large")
    assert code == 1
    assert "mismatch: 3 5 1 6 -2 4" in out


# ---------------------------------------------------------------------------
# enumerate


def test_enumerate_small_group(capsys):
    code, out, _ = run(capsys, "enumerate", "2")
    assert code == 0
    assert out.splitlines() == [
        "-2 -1",
        "-2 1",
        "-1 -2",
        "-1 2",
        "1 -2",
        "1 2",
        "2 -1",
        "2 1",
    ]


def test_enumerate_guard_message(capsys):
    code, _, err = run(capsys, "enumerate", "9")
    assert code == 2
    assert "--allow-large" in err


# ---------------------------------------------------------------------------
# argument handling


def test_missing_subcommand_is_usage_error(capsys):
    assert cli.main([]) == 2
    assert "usage" in capsys.readouterr().err


def test_help_exits_zero(capsys):
    assert cli.main(["--help"]) == 0
    assert "Classify, construct" in capsys.readouterr().out
