import io
import json

import pytest

from parity_complexes import cli, simplex
from parity_complexes.cli import main, split_ids
from parity_complexes.document import parse_complex, serialize_complex
from parity_complexes.errors import SoundnessAlarm

from conftest import AS_FAILING, make

PATH = ["--cell", "0,01,12", "{2, 01, 12}"]


@pytest.fixture
def s2_file(tmp_path):
    p = tmp_path / "s2.json"
    p.write_text(serialize_complex(simplex(2)))
    return str(p)


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_split_ids():
    assert split_ids("{0, 01 ,12}") == ["0", "01", "12"]
    assert split_ids("[a]") == ["a"] and split_ids("()") == []


def test_gen_then_check_from_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "gen", "simplex", "2")
    assert code == 0 and parse_complex(out) is not None
    code, out, _ = run(capsys, "check", "-", stdin=out, monkeypatch=monkeypatch)
    assert code == 0
    assert out.count(": pass") == 8


def test_gen_to_file(capsys, tmp_path):
    target = tmp_path / "c.json"
    assert run(capsys, "gen", "cube", "2", "-o", str(target))[0] == 0
    assert len(parse_complex(target.read_text())) == 9


def test_gen_over_cap_is_usage(capsys):
    code, _, err = run(capsys, "gen", "simplex", "7")
    assert code == 1 and "error" in err


def test_usage_errors(capsys, s2_file):
    assert run(capsys)[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "check", s2_file, "--axioms", "ax9")[0] == 1


def test_check_json_and_failure(capsys, tmp_path):
    p = tmp_path / "as.json"
    p.write_text(serialize_complex(make(AS_FAILING)))
    code, out, _ = run(capsys, "check", str(p), "--axioms", "as,r1", "--json")
    assert code == 3
    reports = json.loads(out)
    assert [(r["axiom"], r["verdict"]) for r in reports] == [("AS", "fail"), ("R1", "pass")]
    code, out, _ = run(capsys, "check", str(p), "--axioms", "ax1,3b")
    assert code == 0 and out.splitlines() == ["AX1: pass", "AX3B: pass"]


def test_unreadable_inputs_exit_2(capsys, tmp_path):
    missing = tmp_path / "m.json"
    missing.write_text('{"elements": [{"id": "e", "dim": 1, "minus": ["z"], "plus": []}]}')
    code, _, err = run(capsys, "check", str(missing))
    assert code == 2 and "missing id 'z'" in err
    assert run(capsys, "check", str(tmp_path / "nope.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "check", str(bad))[0] == 2


def test_pre_failure_exits_3(capsys, tmp_path):
    p = tmp_path / "pre.json"
    p.write_text('{"elements": [{"id": "a", "dim": 0}, {"id": "e", "dim": 1, "minus": ["a"], "plus": ["a"]}]}')
    code, out, _ = run(capsys, "check", str(p))
    assert code == 3 and "disjoint" in out
    assert run(capsys, "atoms", str(p))[0] == 3


def test_atoms_and_cells(capsys, s2_file):
    code, out, _ = run(capsys, "atoms", s2_file, "--element", "012")
    assert code == 0 and out.startswith("012: M = ")
    assert run(capsys, "atoms", s2_file, "--element", "99")[0] == 2
    code, out, _ = run(capsys, "cells", s2_file)
    assert code == 0 and out.startswith("8 cells")
    code, out, _ = run(capsys, "cells", s2_file, "--brute-force")
    assert out.startswith("8 cells")
    assert run(capsys, "cells", s2_file, "--max-universe", "3")[0] == 3


def test_excise_and_decompose(capsys, s2_file):
    code, out, _ = run(capsys, "excise", s2_file, *PATH)
    assert code == 0
    assert "level 0" in out and "pivot 01" in out
    code, out, _ = run(capsys, "excise", s2_file, *PATH, "--json")
    assert json.loads(out)["early"]["M"] == ["0", "01"]
    code, out, _ = run(capsys, "decompose", s2_file, *PATH, "--verify")
    assert code == 0 and out.strip() == "(0 (leaf 01) (leaf 12))"
    code, out, _ = run(capsys, "decompose", s2_file, *PATH, "--json", "--assume-tight")
    assert json.loads(out) == {"level": 0, "early": {"leaf": "01"}, "late": {"leaf": "12"}}
    code, out, _ = run(capsys, "excise", s2_file, "--cell", "0,01", "1,01")
    assert code == 0 and "atomic" in out


def test_bad_cells(capsys, s2_file):
    assert run(capsys, "excise", s2_file, "--cell", "0,01", "0,01")[0] == 3
    assert run(capsys, "excise", s2_file, "--cell", "0,xx", "1")[0] == 2


def test_excise_needs_a_parity_complex(capsys, tmp_path):
    p = tmp_path / "ax1.json"
    p.write_text(serialize_complex(make({
        "a": (0, "", ""), "b": (0, "", ""), "c": (0, "", ""),
        "e": (1, "a", "b"), "f": (1, "a", "c"), "t": (2, "e", "f"),
    })))
    assert run(capsys, "decompose", str(p), "--cell", "a,e", "b,e")[0] == 3


def test_soundness_alarm_exits_4(capsys, s2_file, monkeypatch):
    def alarm(*a, **k):
        raise SoundnessAlarm("forced")
    monkeypatch.setattr(cli, "decompose", alarm)
    code, _, err = run(capsys, "decompose", s2_file, *PATH)
    assert code == 4 and "soundness alarm: forced" in err


def test_verify(capsys, s2_file, tmp_path, monkeypatch):
    t = tmp_path / "t.txt"
    t.write_text("(0 (leaf 01) (leaf 12))")
    code, out, _ = run(capsys, "verify", s2_file, "--tree", str(t), *PATH)
    assert code == 0 and out.strip() == "ok"
    t.write_text("(0 (leaf 12) (leaf 01))")
    assert run(capsys, "verify", s2_file, "--tree", str(t), *PATH)[0] == 3
    code, _, _ = run(capsys, "verify", s2_file, "--tree", "-", "--cell", "0,02", "2,02",
                     stdin='{"leaf": "01"}', monkeypatch=monkeypatch)
    assert code == 3


def test_diagram(capsys, s2_file):
    code, out, _ = run(capsys, "diagram", s2_file, *PATH)
    assert code == 0
    assert out.startswith("digraph complex {")
    assert '"0" -> "1" [label="01", penwidth=2]' in out
    assert 'label="012: 02 => 01, 12", color=gray' in out
