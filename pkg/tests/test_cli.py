import io
import json
import subprocess
import sys

import pytest

from divfun import identities
from divfun.cli import UsageError, main, parse_range


def run(*argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv), out)
    return code, out.getvalue()


# --- dfun ---------------------------------------------------------------------


def test_dfun_examples():
    assert run("dfun", "--kind", "c", "--j", "2", "--n", "10") == (0, "10 2\n")
    assert run("dfun", "--kind", "d", "--j", "1", "--range", "1..3") == (0, "1 1\n2 1\n3 1\n")
    assert run("dfun", "--kind", "cr", "--j", "2", "--r", "1", "--n", "8") == (0, "8 3\n")


def test_dfun_formats():
    code, text = run("dfun", "--kind", "d", "--j", "3", "--range", "19..20", "--format", "csv")
    assert text == "n,value\n19,3\n20,18\n"
    code, text = run("dfun", "--kind", "d", "--j", "3", "--n", "20", "--format", "json")
    assert text == '{"n":20,"value":18}\n'


@pytest.mark.parametrize(
    "argv",
    [
        ("dfun", "--kind", "d", "--j", "2", "--r", "1", "--n", "8"),
        ("dfun", "--kind", "c", "--j", "2"),
        ("dfun", "--kind", "c", "--j", "2", "--n", "3", "--range", "1..4"),
        ("dfun", "--kind", "c", "--j", "2", "--range", "5..1"),
        ("dfun", "--kind", "c", "--j", "2", "--n", "0"),
        ("dfun", "--kind", "x", "--j", "2", "--n", "3"),
        ("dfun", "--kind", "c", "--j", "-1", "--n", "3"),
        ("dfun", "--kind", "c", "--j", "2", "--n", "3", "--threads", "0"),
        ("nope",),
        (),
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_threads_do_not_change_output():
    base = ("dfun", "--kind", "cr", "--j", "2", "--r", "2", "--range", "1..400", "--format", "json")
    outputs = {run(*base, "--threads", str(t))[1] for t in (1, 2, 8)}
    assert len(outputs) == 1
    outputs = {run("squares", "count", "--range", "1..120", "--threads", str(t))[1] for t in (1, 4)}
    assert len(outputs) == 1


def test_parse_range():
    assert parse_range("3..5") == range(3, 6)
    with pytest.raises(UsageError):
        parse_range("3-5")


# --- identities -----------------------------------------------------------------


def test_identities_suites_pass():
    code, text = run("identities", "--suite", "core", "--nmax", "300")
    assert code == 0 and text.strip().endswith("identities hold")
    assert "FAIL" not in text
    code, text = run("identities", "--suite", "squares", "--nmax", "50", "--format", "json")
    assert code == 0
    rows = [json.loads(line) for line in text.splitlines()]
    assert rows and all(r["status"] == "pass" for r in rows)
    assert list(rows[0]) == ["suite", "name", "anchor", "status", "detail"]


def test_identities_bound_too_small():
    assert run("identities", "--suite", "core", "--nmax", "1")[0] == 2


def test_identity_failure_exits_1(monkeypatch):
    def broken(nmax):
        raise identities.Failure("forced")

    bad = identities.Identity("core", "always fails", "0 = 1", broken)
    monkeypatch.setattr(identities, "REGISTRY", identities.REGISTRY + [bad])
    code, text = run("identities", "--suite", "core", "--nmax", "20")
    assert code == 1 and "FAIL" in text and "always fails" in text


# --- squares ------------------------------------------------------------------


def test_squares_count():
    assert run("squares", "count", "--n", "6") == (0, "7\n")
    assert run("squares", "count", "--n", "7") == (0, "1\n")
    assert run("squares", "count", "--range", "6..8", "--format", "csv") == (0, "n,count\n6,7\n7,1\n8,10\n")


def test_squares_enumerate():
    code, text = run("squares", "enumerate", "--n", "2", "--format", "json")
    assert code == 0
    assert text == '{"n":2,"rows":[[1,2],[3,4]],"path_set":{"i":[2],"j":[2]}}\n'
    code, text = run("squares", "enumerate", "--n", "2")
    assert text == "1 2\n3 4\n\n"
    code, text = run("squares", "enumerate", "--n", "6", "--format", "json")
    assert len(text.splitlines()) == 7
    assert run("squares", "count", "--n", "-3")[0] == 2


# --- sds ----------------------------------------------------------------------


def test_sds_enumerate():
    code, text = run("sds", "enumerate", "--m", "3")
    assert code == 0 and len(text.splitlines()) == 7
    assert "1 3 5 | 6 18 30" in text.splitlines()
    assert run("sds", "enumerate", "--m", "3", "--inclusive") == (0, "1 2 3 | 7 14 21\n")
    assert run("sds", "count", "--m", "3") == (0, "7\n")
    assert run("sds", "count", "--m", "0")[0] == 2


def test_sds_verify(monkeypatch, tmp_path):
    good = '{"m":3,"inclusive":false,"A":[1,3,5],"B":[6,18,30]}\n'
    assert run("sds", "verify", stdin=good, monkeypatch=monkeypatch)[0] == 0
    bad = '{"A":[1,2],"B":[3,4]}'
    code, text = run("sds", "verify", stdin=bad, monkeypatch=monkeypatch)
    assert code == 1 and text.startswith("FAIL")
    path = tmp_path / "sys.json"
    path.write_text('[{"A":[1,2,3],"B":[7,14,21]}]')
    assert run("sds", "verify", "--inclusive", "--input", str(path))[0] == 0
    assert run("sds", "verify", "--input", str(tmp_path / "missing.json"))[0] == 2


@pytest.mark.parametrize("text", ["", "not json", '{"A":[1]}', '{"A":[2,1],"B":[3,4]}', "[1, 2]"])
def test_sds_verify_malformed(monkeypatch, text):
    assert run("sds", "verify", stdin=text, monkeypatch=monkeypatch)[0] == 2


# --- series -------------------------------------------------------------------


def test_series_ratio():
    code, text = run("series", "ratio", "--j", "1", "--s", "3", "--N", "20000",
                     "--prime-limit", "1000", "--term-limit", "20000", "--format", "json")
    assert code == 0
    row = json.loads(text)
    assert abs(row["closed_form"] - 0.2020569031595942) < 1e-9
    assert row["abs_diff"] < 1e-7
    assert run("series", "ratio", "--j", "2", "--s", "0.5")[0] == 2
    assert run("series", "ratio", "--j", "4")[0] == 2


def test_series_coeffs():
    code, text = run("series", "coeffs", "--kind", "zm1pow", "--j", "2", "--N", "10")
    assert code == 0
    assert [int(line.split()[1]) for line in text.splitlines()] == [0, 0, 0, 1, 0, 2, 0, 2, 1, 2]
    code, text = run("series", "coeffs", "--kind", "zratio", "--r", "2", "--N", "6", "--format", "csv")
    assert text.splitlines()[-1] == "6,16"
    assert run("series", "coeffs", "--N", "0")[0] == 2


# --- oracle -------------------------------------------------------------------


def test_oracle_commands():
    code, text = run("oracle", "factorizations", "--n", "12", "--j", "2", "--proper")
    assert code == 0 and sorted(text.splitlines()) == ["2 6", "3 4", "4 3", "6 2"]
    code, text = run("oracle", "splittings", "--n", "2", "--format", "csv")
    assert text == "A,B,principal_reversible\n0 1,0 2,True\n"
    assert run("oracle", "splittings", "--n", "9")[0] == 2


# --- process level -------------------------------------------------------------


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "divfun", "sds", "enumerate", "--m", "4", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.count(b"\n") == 10
    bad = subprocess.run([sys.executable, "-m", "divfun", "series", "ratio", "--s", "1"], capture_output=True)
    assert bad.returncode == 2 and b"error" in bad.stderr
