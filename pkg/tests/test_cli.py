import json
import subprocess
import sys

import pytest

from walkhopf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_adc_lists_cuts_in_time_order(capsys):
    code, out, _ = run(capsys, "adc", "34555444678879")
    assert code == 0
    assert json.loads(out) == [[3, 4], [2, 4], [6, 7], [5, 7], [1, 7], [10, 11], [9, 12]]


def test_les_lew_skeleton_eadc(capsys):
    assert json.loads(run(capsys, "les", "1232341")[1]) == [[0, 6], [1, 3]]
    assert json.loads(run(capsys, "lew", "12324522", "--k", "4")[1]) == [1, 2, 4]
    assert json.loads(run(capsys, "skeleton", "12324522")[1]) == [1, 2]
    assert len(json.loads(run(capsys, "eadc", "123324441")[1])) == 8
    assert len(json.loads(run(capsys, "eadc", "123324441", "--n", "2")[1])) == 4


def test_classify(capsys):
    data = json.loads(run(capsys, "classify", "123454321")[1])
    assert data == {"class": "other", "cactus": True, "tower": True, "corolla": None}


def test_coprod_kinds(capsys):
    assert json.loads(run(capsys, "coprod", "--kind", "cp", "123451")[1]) == []
    hopf = json.loads(run(capsys, "coprod", "1233234441")[1])
    assert len(hopf) == 10
    assert all(t["coeff"] == "1" for t in hopf)
    assert len(json.loads(run(capsys, "coprod", "--kind", "brace:2", "1233234441")[1])) == 4
    prec = json.loads(run(capsys, "coprod", "--kind", "prec", "111")[1])
    succ = json.loads(run(capsys, "coprod", "--kind", "succ", "111")[1])
    assert len(prec) == 2 and len(succ) == 1
    assert len(json.loads(run(capsys, "coprod", "33|44")[1])) == 4


def test_antipode_options(capsys):
    closed = json.loads(run(capsys, "antipode", "12223445")[1])
    rec = json.loads(run(capsys, "antipode", "--method", "recursive", "12223445")[1])
    assert closed == rec and len(closed) == 8
    sym = json.loads(run(capsys, "antipode", "--algebra", "sym", "1111")[1])
    assert {t["coeff"] for t in sym} == {"-1", "2"}


def test_cactus_and_tree(capsys):
    data = json.loads(run(capsys, "cactus", "12121")[1])
    assert data["cactus"] == [1, 2, 1, 3, 1] and data["is_cactus"] is False
    dot = run(capsys, "tree", "--format", "dot", "12332331")[1]
    assert dot.startswith("digraph")
    tree = json.loads(run(capsys, "tree", "12332331")[1])
    assert len(tree["nodes"]) == 4


def test_gen_and_graph_file(capsys, tmp_path):
    walks = json.loads(run(capsys, "gen", "--count", "3", "--vertices", "1", "--min-len", "3", "--max-len", "3")[1])
    assert walks == [[1, 1, 1, 1]] * 3
    g = tmp_path / "g.json"
    g.write_text(json.dumps({"vertices": [1, 2], "arcs": [[1, 2], [2, 1]]}))
    assert run(capsys, "les", "121", "--graph", str(g))[0] == 0
    assert run(capsys, "les", "1221", "--graph", str(g))[0] == 2
    assert run(capsys, "les", "121", "--graph", str(tmp_path / "missing.json"))[0] == 2
    gen = json.loads(run(capsys, "gen", "--count", "5", "--max-len", "4", "--graph", str(g))[1])
    assert all(a != b for w in gen for a, b in zip(w, w[1:]))


@pytest.mark.parametrize("argv", [
    ["les", ""], ["les", "1a"], ["coprod", "--kind", "brace:x", "121"], ["coprod", "--kind", "nope", "121"],
    ["coprod", "--kind", "cp", "11|22"], ["antipode", "11|22"], ["lew", "12", "--k", "9"],
    ["gen", "--vertices", "0"],
])
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["check", "--suite", "nope"])
    assert exc.value.code == 2


def test_check_reports_and_exit_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, "check", "--suite", "antipode", "--count", "200", "--vertices", "4",
                       "--max-len", "10", "--seed", "7")
    report = json.loads(out)
    assert code == 0 and report["failures"] == [] and report["instances"] == 200

    import walkhopf.checks as checks
    monkeypatch.setitem(checks.SUITES, "brace", lambda w, rng, g, n: [checks._fail("x", w, 0, 1)])
    code, out, _ = run(capsys, "check", "--suite", "brace", "--count", "2")
    assert code == 3 and len(json.loads(out)["failures"]) == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "walkhopf.cli", "skeleton", "12324522"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout) == [1, 2]
