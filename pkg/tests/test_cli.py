import json

import pytest

from filtereq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_pass(capsys):
    code, out, _ = run(
        capsys, "check", "--fn", '{"kind":"builtin","name":"reverse"}',
        "--law", "filter", "--scope", "3,4",
    )
    assert code == 0
    assert "pass at scope (A=3, L=4)" in out


def test_check_fail_with_witness(capsys):
    code, out, _ = run(
        capsys, "check", "--fn", '{"kind":"builtin","name":"triangle"}',
        "--law", "filter", "--scope", "3,4",
    )
    assert code == 1
    assert "fail" in out and "witness" in out


def test_check_all_laws_json(capsys):
    code, out, _ = run(
        capsys, "check", "--fn", '{"kind":"builtin","name":"reverse"}',
        "--scope", "2,3", "--format", "json",
    )
    assert code == 1  # reverse fails the tail law
    payload = json.loads(out)
    verdicts = {r["law"]: r["verdict"] for r in payload["reports"]}
    assert verdicts["map"].startswith("pass")
    assert verdicts["filter"].startswith("pass")
    assert verdicts["tail"] == "fail"


def test_check_malformed_function(capsys):
    code, _, err = run(capsys, "check", "--fn", '{"kind":"nope"}')
    assert code == 2
    assert "error" in err


def test_check_bad_scope(capsys):
    code, _, err = run(
        capsys, "check", "--fn", '{"kind":"builtin","name":"reverse"}',
        "--scope", "0,4",
    )
    assert code == 2


def test_enumerate_counts(capsys):
    for k, expected in ((0, 1), (1, 2), (2, 6)):
        code, out, _ = run(capsys, "enumerate", "--k", str(k))
        assert code == 0
        assert out.splitlines()[0].startswith("%d terms" % expected)


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--k", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 6
    assert {"blocks": [["P", 2]]} in payload["terms"]


def test_extrapolate_worked_example(tmp_path, capsys):
    rows = [
        {"keep": [1, 2], "output": [1, 2, 2]},
        {"keep": [2, 3], "output": [2, 2, 3]},
        {"keep": [1, 3], "output": [1, 3]},
    ]
    path = tmp_path / "examples.json"
    path.write_text(json.dumps(rows))
    code, out, _ = run(
        capsys, "extrapolate", "--examples", str(path), "--input", "[3,2,1,2]",
    )
    assert code == 0
    assert "[1, 2, 2, 3]" in out


def test_extrapolate_inline_json_and_json_format(capsys):
    rows = json.dumps(
        [
            {"keep": [1, 2], "output": [1, 2, 2]},
            {"keep": [2, 3], "output": [2, 2, 3]},
            {"keep": [1, 3], "output": [1, 3]},
        ]
    )
    code, out, _ = run(
        capsys, "extrapolate", "--examples", rows, "--input", "[3,2,1,2]",
        "--format", "json",
    )
    assert code == 0
    assert json.loads(out) == {"ok": True, "output": [1, 2, 2, 3]}


def test_extrapolate_examples_from_stdin(capsys, monkeypatch):
    import io

    rows = json.dumps([{"keep": [0, 1], "output": [0, 1]},
                       {"keep": [0, 2], "output": [0, 2]},
                       {"keep": [1, 2], "output": [1, 2]}])
    monkeypatch.setattr("sys.stdin", io.StringIO(rows))
    code, out, _ = run(capsys, "extrapolate", "--examples", "-", "--input", "[0,1,2]")
    assert code == 0
    assert "[0, 1, 2]" in out


def test_extrapolate_incomplete_table_exits_one(capsys):
    rows = json.dumps([{"keep": [1, 2], "output": [1, 2, 2]}])
    code, out, _ = run(capsys, "extrapolate", "--examples", rows, "--input", "[3,2,1,2]")
    assert code == 1
    assert "MissingSublist" in out


def test_extrapolate_nfe_mode(capsys):
    code, out, _ = run(
        capsys, "extrapolate", "--mode", "nfe",
        "--examples", '{"input":[1,2],"output":[2,1,2,1]}',
        "--input", "[1,2,3]",
    )
    assert code == 0
    assert "[3, 2, 1, 3, 2, 1]" in out


def test_extrapolate_nfe_bad_example(capsys):
    code, _, err = run(
        capsys, "extrapolate", "--mode", "nfe",
        "--examples", '{"input":[1,1],"output":[1]}', "--input", "[1,2,3]",
    )
    assert code == 2


def test_amal_command(capsys):
    blob = json.dumps(
        {
            "universe": [0, 1, 2],
            "entries": [
                {"remove": 0, "list": [1, 2]},
                {"remove": 1, "list": [0, 2]},
                {"remove": 2, "list": [0, 1]},
            ],
        }
    )
    code, out, _ = run(capsys, "amal", "--examples", blob)
    assert code == 0
    assert "[0, 1, 2]" in out


def test_amal_failure_exits_one(capsys):
    blob = json.dumps(
        {
            "universe": [1, 2, 3],
            "entries": [
                {"remove": 1, "list": [2]},
                {"remove": 2, "list": [3]},
                {"remove": 3, "list": [1]},
            ],
        }
    )
    code, out, _ = run(capsys, "amal", "--examples", blob)
    assert code == 1
    assert "NoUniqueHead" in out


def test_amal_bad_collection(capsys):
    blob = json.dumps({"universe": [0, 1], "entries": [{"remove": 9, "list": []}]})
    code, _, err = run(capsys, "amal", "--examples", blob)
    assert code == 2


def test_demo_transcript(capsys):
    code, out, _ = run(capsys, "demo")
    assert code == 0
    assert "[1, 2, 2, 3]" in out
    assert "[4, 4, 4, 4, 7, 7, 7, 7, 8]" in out
    assert "identity" in out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["check"])  # --fn is required
    assert exc.value.code == 2
