import hashlib
import json
import subprocess
import sys

import pytest

from whapar.cli import main, run_command


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def report_hash(text):
    d = json.loads(text)
    d.pop("timing")
    return hashlib.sha256(json.dumps(d, sort_keys=True).encode()).hexdigest()


@pytest.mark.parametrize("path", ["trivial.groupoid.json", "z2.groupoid.json", "z3.groupoid.json",
                                  "discrete2.groupoid.json", "pair2.groupoid.json", "sweedler_pair.json"])
def test_check_passes(capsys, path):
    code, out = run(capsys, "check", path)
    assert code == 0
    assert out.strip().endswith("check %s: pass" % path)


@pytest.mark.parametrize("path, axiom", [("broken.json", "iii"), ("broken_counit.json", "ii")])
def test_check_fails_with_witness(capsys, path, axiom):
    code, out = run(capsys, "check", path)
    assert code == 1
    assert "witness %s at" % axiom in out
    assert "identity suites not run" in out


def test_hpar_oracle_line(capsys):
    code, out = run(capsys, "hpar", "z3.groupoid.json", "--oracle")
    assert code == 0
    assert "dim=8, oracle=8, certified" in out
    assert "trajectory 3 7 9 8 8 8" in out


def test_hpar_sweedler_not_stabilized(capsys):
    code, out = run(capsys, "hpar", "sweedler_pair.json")
    assert code == 3
    assert "infinite-dimensional" in out


def test_hpar_export(tmp_path, capsys):
    dest = tmp_path / "z2.hpar.json"
    code, _ = run(capsys, "hpar", "z2.json", "--export", str(dest))
    assert code == 0
    assert json.loads(dest.read_text())["format"] == "whapar-hpar/1"


@pytest.mark.parametrize("convention", ["bohm", "literal"])
def test_algebroid(capsys, convention):
    code, out = run(capsys, "algebroid", "z2.groupoid.json", "--convention", convention)
    assert code == 0, out


def test_qisg(capsys):
    assert run(capsys, "qisg", "z3.groupoid.json")[0] == 0
    code, out = run(capsys, "qisg", "sweedler_pair.json")
    assert code == 0
    assert "skipped: not cocommutative" in out


def test_smash(capsys):
    code, out = run(capsys, "smash", "sweedler_q.action.json")
    assert code == 0, out
    assert "smash dim=4, partial smash dim=2" in out
    code, out = run(capsys, "smash", "sweedler_q_pa3.action.json")
    assert code == 1
    assert "witness PA3" in out


def test_parrep(capsys):
    code, out = run(capsys, "parrep", "sweedler_q.parrep.json")
    assert code == 0, out
    code, out = run(capsys, "parrep", "sweedler_q_both.parrep.json")
    assert code == 1


def test_parrep_exhaustive_search_recorded():
    code, r = run_command(["parrep", "z2_partial.parrep.json", "--exhaustive", "--json"])
    assert code == 0
    assert r.results["pr6_search"]["result"] == "no counterexample found at this dimension"


def test_wrong_kind_and_missing_file(capsys):
    assert run(capsys, "smash", "z2.json")[0] == 2
    code, out = run(capsys, "check", "nope.json")
    assert code == 2 and "input error" in out


def test_threads_env(monkeypatch, capsys):
    monkeypatch.setenv("WHAPAR_THREADS", "zero")
    assert run(capsys, "check", "z2.json")[0] == 2
    monkeypatch.setenv("WHAPAR_THREADS", "4")
    code, out = run(capsys, "check", "z2.json", "--json")
    assert code == 0 and json.loads(out)["threads"] == 4


def test_bad_seed_and_degree(capsys):
    with pytest.raises(SystemExit):
        main(["check", "z2.json", "--seed", "-1"])
    assert run(capsys, "hpar", "z2.json", "--max-degree", "0")[0] == 2


def test_json_report_is_deterministic(capsys):
    hashes = set()
    for _ in range(2):
        code, out = run(capsys, "parrep", "sweedler_q.parrep.json", "--json", "--seed", "7")
        hashes.add(report_hash(out))
    assert len(hashes) == 1
    d = json.loads(out)
    assert d["seed"] == 7 and d["status"] == "pass" and d["input"]["file"] == "sweedler_q.parrep.json"


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "whapar.cli", "check", "z2.json"], capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.strip().endswith("check z2.json: pass")
