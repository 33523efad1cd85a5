import json
import subprocess
import sys

import pytest

from higher_specht.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--format", "json", *argv)
    return code, json.loads(out), out


def test_stats_tableau(capsys):
    code, body, _ = run_json(capsys, "stats", "--tableau", "1 2 4 / 3 5 / 6 7", "--k", "4", "--range", "1,4")
    assert code == 0
    assert body["mu_cocharge"]["4"] == {"cc_tab": [[0, 0, 0], [0, 1], [2, 2]],
                                        "cc_tab_prime": [[1, 1, 0], [0, 0], [0, 0]],
                                        "cc_mu": 5, "cc_mu_prime": 2}
    assert body["range"]["maj"] == 2
    assert body["reading_word"] == [6, 7, 3, 5, 1, 2, 4]


def test_stats_word(capsys):
    code, body, _ = run_json(capsys, "stats", "--word", "25314")
    assert code == 0 and body["cocharge"]["total"] == 5


def test_rsk_and_phi(capsys):
    code, out, _ = run(capsys, "rsk", "568913472")
    assert code == 0 and out.strip() == "1 2 4 7 / 3 6 8 9 / 5"
    code, out, _ = run(capsys, "phi", "1 2 4 5 / 3 6 7 9 / 8")
    assert code == 0 and out.strip() == "1 2 4 7 / 3 6 8 9 / 5"


def test_specht_and_straighten(capsys):
    code, body, _ = run_json(capsys, "specht", "2 3 / 1", "--straighten")
    assert code == 0
    assert body["straighten"] == {"1 3 / 2": "-1/1"}


def test_higher_specht_variants(capsys):
    code, out, _ = run(capsys, "higher-specht", "--T", "1 2 / 3 4", "--S", "1 3 / 2 4", "--k", "2")
    assert code == 0 and "x4*y1" in out
    code, body, _ = run_json(capsys, "higher-specht", "--T", "1 2 / 3", "--S", "1 3 / 2", "--aty")
    assert code == 0 and body["F"]["n"] == 3
    code, out, _ = run(capsys, "higher-specht", "--T", "1 2 / 3", "--c", "0,0,1")
    assert code == 0
    code, _, err = run(capsys, "higher-specht", "--T", "1 2 / 3")
    assert code == 2 and "usage error" in err


def test_ideal_and_hilbert(capsys):
    code, body, _ = run_json(capsys, "ideal", "hook(2,1)")
    assert code == 0 and len(body["generators"]) > 0
    code, body, _ = run_json(capsys, "hilbert", "hook(3,2)")
    assert code == 0 and body["total"] == 6
    code, _, err = run(capsys, "hilbert", "pk(3,1)")
    assert code == 2
    code, body, _ = run_json(capsys, "hilbert", "pk(3,1)", "--d1", "1", "--d2", "1")
    assert code == 0


def test_frobenius_commands(capsys):
    code, out, _ = run(capsys, "frobenius", "--formula", "stembridge:3,2")
    assert code == 0 and out.strip() == "s(3) + (q + t)*s(2,1) + q*t*s(1,1,1)"
    code, out, _ = run(capsys, "frobenius", "--compare", "stembridge:3,2", "ccmu:3,2", "--allow-swap")
    assert code == 0 and out.strip() in ("equal", "equal after q<->t swap")
    code, out, _ = run(capsys, "frobenius", "--compare", "stembridge:4,2", "ccmu:4,2", "--allow-swap")
    assert code == 0 and out.strip() == "equal after q<->t swap"
    code, out, _ = run(capsys, "frobenius", "--compare", "quotient:hook(3,2)", "ccmu:3,2")
    assert code == 0 and out.strip() == "equal"
    code, out, _ = run(capsys, "frobenius", "--compare", "stembridge:3,2", "ls:3")
    assert code == 1 and out.startswith("unequal")
    code, out, _ = run(capsys, "frobenius", "--quotient", "diagonal(2)")
    assert code == 0 and "s(2)" in out


@pytest.mark.parametrize("argv", [
    ("verify", "bijection", "5"), ("verify", "degrees", "5"), ("verify", "hook-basis", "3", "2"),
    ("verify", "pk-basis", "3", "1"), ("verify", "dr", "2"), ("verify", "apolar", "3"),
    ("verify", "paper-examples"),
])
def test_verify_suites_pass(capsys, argv):
    code, body, _ = run_json(capsys, *argv)
    assert code == 0 and body["passed"]


def test_verify_reports_known_discrepancy(capsys):
    code, body, _ = run_json(capsys, "verify", "paper-examples")
    known = [c for c in body["checks"] if c.get("known_discrepancy")]
    assert code == 0 and len(known) == 1 and not known[0]["passed"]


@pytest.mark.parametrize("argv", [
    (), ("verify", "bogus", "3"), ("verify", "hook-basis", "4"), ("verify", "dr"),
    ("stats",), ("rsk", "12a"), ("phi", "2 1"), ("ideal", "hook(3,5)"), ("--format", "xml", "rsk", "1"),
    ("frobenius",), ("frobenius", "--formula", "mystery:1"),
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_internal_inconsistency_exit_3(capsys, monkeypatch):
    from higher_specht import cli
    from higher_specht.errors import InternalInconsistency

    def boom(args):
        raise InternalInconsistency("ranks disagree")

    monkeypatch.setitem(cli.COMMANDS, "rsk", boom)
    code, _, err = run(capsys, "rsk", "12")
    assert code == 3 and "ranks disagree" in err


def test_json_is_byte_identical_across_runs_and_workers(capsys):
    a = run(capsys, "--format", "json", "--workers", "1", "verify", "hook-basis", "4", "2")[1]
    b = run(capsys, "--format", "json", "--workers", "2", "verify", "hook-basis", "4", "2")[1]
    c = run(capsys, "--format", "json", "--workers", "1", "verify", "hook-basis", "4", "2")[1]
    assert a == b == c


def test_cache_dir_flag(capsys, tmp_path):
    from higher_specht import quotients
    try:
        code, body, _ = run_json(capsys, "--cache-dir", str(tmp_path), "hilbert", "diagonal(2)")
        assert code == 0 and body["total"] == 3
        assert list(tmp_path.glob("*.json"))
    finally:
        quotients.set_cache_dir(None)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "higher_specht", "rsk", "31425"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1 2 5 / 3 4"
