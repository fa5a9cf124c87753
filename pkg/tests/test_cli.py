import io
import json
import subprocess
import sys

import pytest

from orthoext.cli import (
    EXIT_BUDGET,
    EXIT_IMPOSSIBLE,
    EXIT_OK,
    EXIT_UNSUPPORTED,
    EXIT_USAGE,
    UsageError,
    parse_vector_file,
    run,
)
from orthoext.errors import InvalidInput
from orthoext.intvec import parse_vectors, vec, verify_ortho_set

SCHEMA = {"command", "input", "status", "n_squared"}


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call("--json", *argv)
    return code, json.loads(text)


@pytest.fixture
def pair_file(tmp_path):
    p = tmp_path / "pair.txt"
    p.write_text("4 5 6 7\n-7 -2 -3 8\n")
    return p


def test_parse_vector_file(pair_file, tmp_path):
    assert parse_vector_file(pair_file) == [vec(4, 5, 6, 7), vec(-7, -2, -3, 8)]
    c = tmp_path / "c.txt"
    c.write_text("# comment\n# another\n")
    with pytest.raises(InvalidInput, match="no vectors"):
        parse_vector_file(c)
    r = tmp_path / "r.txt"
    r.write_text("1 2\n3 4 5\n")
    with pytest.raises(InvalidInput, match=":2:"):
        parse_vector_file(r)
    with pytest.raises(UsageError):
        parse_vector_file(tmp_path / "missing.txt")


def test_complete_text(pair_file):
    code, text = call("complete", "--file", str(pair_file))
    assert code == EXIT_OK
    assert "gram: 126*I" in text
    vs = parse_vectors(text)
    assert len(vs) == 4
    assert vs[:2] == [vec(4, 5, 6, 7), vec(-7, -2, -3, 8)]
    assert verify_ortho_set(vs).squared_norm == 126


def test_complete_json(pair_file):
    code, d = call_json("complete", "--file", str(pair_file))
    assert code == EXIT_OK
    assert SCHEMA | {"added"} <= d.keys()
    assert d["status"] == "Completed" and d["n_squared"] == 126
    assert d["added"] == [[5, 4, -9, 2], [-6, 9, 0, -3]]


def test_complete_impossible_and_unsupported():
    code, d = call_json("complete", "--vec", "1 4 10")
    assert code == EXIT_IMPOSSIBLE and d["status"] == "Impossible" and d["reason"]
    code, _ = call("complete", "--vec", "1,2,3,4,5,6")
    assert code == EXIT_UNSUPPORTED


def test_complete_needs_input():
    code, _ = call("complete")
    assert code == EXIT_USAGE


def test_partner():
    code, d = call_json("partner", "--vec", "1 3 5")
    assert code == EXIT_IMPOSSIBLE
    assert d["reason"] == "no equal-norm orthogonal partner (exhaustive)"
    code, d = call_json("partner", "--vec", "1 4 10")
    assert code == EXIT_OK and d["status"] == "Found"
    w = vec(*d["result"])
    assert w.norm2 == 117 and sum(a * b for a, b in zip(w, (1, 4, 10))) == 0


def test_enumerate_and_classify():
    code, d = call_json("enumerate", "--n", "18")
    assert code == EXIT_OK and d["result"] == [[0, 3, 3], [1, 1, 4]]
    code, d = call_json("classify", "--n", "98", "--cross-check")
    assert code == EXIT_OK
    assert d["result"]["in_C3_12"] and not d["result"]["in_C3_13"]


def test_diffset_threads():
    code, text = call("diffset", "--limit", "300")
    assert code == EXIT_OK
    assert text.split() == "18 45 50 72 85 90 98 117 125 130 162 180 200 242 245 250 288".split()
    code2, text2 = call("diffset", "--limit", "300", "--threads", "2")
    assert (code2, text2) == (code, text)


def test_budget_exit_code(monkeypatch):
    assert call("classify", "--n", "6000")[0] == EXIT_BUDGET
    assert call("classify", "--n", "6000", "--budget", "7000")[0] == EXIT_OK
    monkeypatch.setenv("ORTHO_BUDGET", "50")
    assert call("classify", "--n", "60")[0] == EXIT_BUDGET
    assert call("classify", "--n", "60", "--budget", "100")[0] == EXIT_OK


def test_config_file(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# batch settings\nbudget = 40\njson = true\n")
    code, text = call("--config", str(cfg), "enumerate", "--n", "50")
    assert code == EXIT_BUDGET and json.loads(text)["status"] == "BudgetExceeded"
    code, text = call("--config", str(cfg), "enumerate", "--n", "50", "--budget", "60")
    assert code == EXIT_OK and json.loads(text)["result"]
    bad = tmp_path / "bad.cfg"
    bad.write_text("budget\n")
    assert call("--config", str(bad), "enumerate", "--n", "5")[0] == EXIT_USAGE


def test_clifford_search():
    code, d = call_json("clifford-search", "--n", "5")
    assert code == EXIT_OK and len(d["result"]) == 5
    assert call("clifford-search", "--n", "20")[0] == EXIT_USAGE


def test_cross_products():
    code, d = call_json(
        "cross7", "--v", "8 8 24 64 8 8 16", "--w", "-9 9 9 -18 18 63 18", "--k1", "8", "--k2", "9"
    )
    assert code == EXIT_OK and d["result"] == [-1, -13, 53, -20, -30, -11, 28]
    code, d = call_json(
        "cross8",
        "--x", "12 -24 -12 12 -24 24 -36 12",
        "--y", "30 15 -15 -15 -15 -30 0 30",
        "--z", "40 20 20 20 20 20 0 0",
        "--k", "12", "15", "20",
    )
    assert code == EXIT_OK and d["result"] == [2, 0, -33, -27, 26, 30, 9, 11]
    assert call("cross7", "--v", "1 2", "--w", "3 4")[0] == EXIT_USAGE
    assert call("cross7", "--v", "1 0 0 0 0 0 0", "--w", "0 1 0 0 0 0 0", "--k1", "1")[0] == EXIT_USAGE


def test_verify(pair_file, tmp_path):
    code, d = call_json("verify", "--file", str(pair_file))
    assert code == EXIT_OK and d["status"] == "Valid" and d["n_squared"] == 126
    bad = tmp_path / "bad.txt"
    bad.write_text("1 1\n1 0\n")
    code, d = call_json("verify", "--file", str(bad))
    assert code == EXIT_IMPOSSIBLE and d["status"] == "Invalid"


def test_usage_errors(tmp_path):
    assert call("frobnicate")[0] == EXIT_USAGE
    assert call("complete", "--file", str(tmp_path / "nope.txt"))[0] == EXIT_USAGE
    assert call("enumerate")[0] == EXIT_USAGE
    assert call("complete", "--vec", "1 x 3")[0] == EXIT_USAGE


@pytest.mark.parametrize(
    "argv",
    [
        ["complete", "--vec", "3 4"],
        ["partner", "--vec", "1 3 5"],
        ["enumerate", "--n", "35"],
        ["classify", "--n", "18"],
        ["diffset", "--limit", "50"],
        ["clifford-search", "--n", "4"],
        ["cross7", "--v", "1 0 0 0 0 0 0", "--w", "0 1 0 0 0 0 0"],
        ["cross8", "--x", "1 0 0 0 0 0 0 0", "--y", "0 1 0 0 0 0 0 0", "--z", "0 0 1 0 0 0 0 0"],
    ],
)
def test_json_schema_is_stable(argv):
    _, d = call_json(*argv)
    assert SCHEMA <= d.keys()
    assert ("added" in d) != ("result" in d)
    assert d["command"] == argv[0]


def test_round_trip_of_printed_sets(pair_file):
    for argv in (["complete", "--file", str(pair_file)], ["complete", "--vec", "2 3 6"]):
        _, text = call(*argv)
        once = parse_vectors(text)
        _, again = call("complete", *sum((["--vec", " ".join(map(str, v))] for v in once), []))
        assert parse_vectors(again) == once


def test_module_entry_point(pair_file):
    proc = subprocess.run(
        [sys.executable, "-m", "orthoext", "complete", "--file", str(pair_file)],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "gram: 126*I" in proc.stdout
