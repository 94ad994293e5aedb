import io
import json
import subprocess
import sys

import pytest

from cases import MALFORMED
from harmonic_congruences.cli import run


def call(*argv):
    out, err = io.BytesIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue().decode(), err.getvalue()


def test_verify_con7_json():
    code, out, _ = call("verify", "--primes", "7..100", "--ids", "con7", "--format", "json", "--jobs", "1")
    doc = json.loads(out)
    assert code == 0
    assert [r["p"] for r in doc["results"]] == [7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                                 73, 79, 83, 89, 97]
    assert {r["status"] for r in doc["results"]} == {"pass"}


def test_eval_q2():
    assert call("eval", "--expr", "q2", "--prime", "7", "--exp", "1")[:2] == (0, "2\n")


def test_verify_empty_range():
    code, out, _ = call("verify", "--primes", "8..10", "--format", "json")
    assert code == 0
    assert json.loads(out)["results"] == []


def test_verify_fails_on_bad_catalog(tmp_path):
    path = tmp_path / "cat.txt"
    path.write_text("# one wrong entry\nwrong | p>3 | H(p-1) === 1 (mod p)\n", encoding="utf-8")
    code, out, err = call("verify", "--primes", "5..30", "--catalog", str(path), "--format", "csv", "--jobs", "1")
    assert code == 1
    assert out.splitlines()[0] == "id,p,status,lhs,rhs"
    assert "fail" in err


def test_verify_error_exit(tmp_path):
    path = tmp_path / "cat.txt"
    path.write_text("x | p>3 | 1/p === 0 (mod p)\n", encoding="utf-8")
    assert call("verify", "--primes", "5..7", "--catalog", str(path), "--jobs", "1")[0] == 1


def test_skips_do_not_fail():
    code, out, _ = call("verify", "--primes", "2..3", "--format", "csv", "--jobs", "1")
    assert code == 0
    assert out.count("skipped") == 80


def test_informational_p5_goes_to_stderr():
    code, out, err = call("verify", "--primes", "7..7", "--ids", "con7", "--format", "json",
                          "--informational-p5", "--jobs", "1")
    assert code == 0
    assert "info p=5 con7: pass" in err
    assert "info" not in out
    json.loads(out)


@pytest.mark.parametrize("argv", [
    ["verify", "--primes", "10"],
    ["verify", "--primes", "20..10"],
    ["verify", "--primes", "7..2000000"],
    ["verify", "--ids", "con999", "--primes", "7..7"],
    ["verify", "--format", "xml"],
    ["verify", "--jobs", "0"],
    ["verify", "--catalog", "/nonexistent/catalog.txt", "--primes", "7..7"],
    ["eval", "--expr", "q2 +", "--prime", "7", "--exp", "1"],
    ["eval", "--expr", "q2", "--prime", "9", "--exp", "1"],
    ["eval", "--expr", "q2", "--prime", "7", "--exp", "4"],
    ["eval", "--expr", "q2"],
    ["bernoulli", "--prime", "7", "--exp", "1", "--index", "9"],
    ["bernoulli", "--prime", "7", "--exp", "1", "--index", "2", "--method", "powersum"],
    ["identities", "--which", "9.9"],
    ["catalog", "--show", "nope"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    code, out, _ = call(*argv)
    assert code == 2
    assert out == ""


@pytest.mark.parametrize("text, fragment", MALFORMED)
def test_malformed_catalog_file(tmp_path, text, fragment):
    path = tmp_path / "bad.txt"
    path.write_text("ok | p>3 | 0 === 0 (mod p)\n" + text + "\n", encoding="utf-8")
    code, out, err = call("verify", "--catalog", str(path), "--primes", "7..7")
    assert code == 2
    assert out == ""
    assert err.startswith("parse error: 2:")


def test_eval_non_unit_is_failure():
    code, out, err = call("eval", "--expr", "1/p", "--prime", "7", "--exp", "2")
    assert code == 1
    assert out == ""
    assert "NotInvertible" in err


def test_bernoulli_methods():
    assert call("bernoulli", "--prime", "7", "--exp", "1") == (0, "recurrence: 3\npowersum: 3\n", "")
    assert call("bernoulli", "--prime", "11", "--exp", "1", "--method", "powersum")[:2] == (0, "4\n")
    assert call("bernoulli", "--prime", "7", "--exp", "1", "--index", "2")[:2] == (0, "6\n")


def test_identities_command():
    code, out, _ = call("identities", "--max-n", "20")
    assert code == 0
    assert out.splitlines() == ["2.4: n=1..20 ok", "3.1: n=2..20 ok", "4.1: n=1..20 ok", "4.2: n=1..20 ok",
                                "integral: n=1..20 ok"]


def test_catalog_list_and_show():
    code, out, _ = call("catalog", "--list")
    assert code == 0
    assert len(out.splitlines()) == 40
    code, out, _ = call("catalog", "--show", "con4")
    assert out == "con4 | p>5 | sum(k=1..p - 1, H(k)/(k^2*2^k)) === (5/8)*B(p - 3) (mod p)\n"


def test_shown_entries_reload(tmp_path):
    _, listing, _ = call("catalog", "--list")
    lines = [call("catalog", "--show", row.split()[0])[1] for row in listing.splitlines()]
    path = tmp_path / "copy.txt"
    path.write_text("".join(lines), encoding="utf-8")
    a = call("verify", "--primes", "5..60", "--format", "json", "--jobs", "1")
    b = call("verify", "--primes", "5..60", "--format", "json", "--jobs", "1", "--catalog", str(path))
    assert a[1] == b[1]


def test_subprocess_streams():
    proc = subprocess.run(
        [sys.executable, "-m", "harmonic_congruences", "verify", "--primes", "7..30", "--format", "json"],
        capture_output=True, check=False,
    )
    assert proc.returncode == 0
    json.loads(proc.stdout)
    assert b"pairs" in proc.stderr


def test_subprocess_parse_error_exit():
    proc = subprocess.run(
        [sys.executable, "-m", "harmonic_congruences", "eval", "--expr", "B(", "--prime", "7", "--exp", "1"],
        capture_output=True, check=False,
    )
    assert proc.returncode == 2
    assert proc.stdout == b""
    assert b"parse error: 1:3:" in proc.stderr
