"""Command-line client: exit codes, channels, and byte-stable output."""

import json
import subprocess
import sys

import pytest

import wdseg.api
from wdseg.cli import run
from wdseg.errors import InternalInvariantError

SPECIAL2 = {
    "q": 2,
    "P": {"field": {"type": "rational"}, "rows": [["1", "0"], ["0", "1/2"]]},
    "N": {"field": {"type": "rational"}, "rows": [["0", "0"], ["1", "0"]]},
}


def run_cli(tmp_path, command, payload, name="req"):
    inp = tmp_path / f"{name}.json"
    outp = tmp_path / f"{name}.out"
    inp.write_text(json.dumps(payload))
    code = run([command, "--input", str(inp), "--output", str(outp)])
    return code, outp.read_bytes()


def test_happy_path_and_determinism(tmp_path):
    code1, out1 = run_cli(tmp_path, "bs", SPECIAL2, "a")
    code2, out2 = run_cli(tmp_path, "bs", SPECIAL2, "b")
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.endswith(b"\n")
    parsed = json.loads(out1)
    assert parsed["segments"] == [{"line": "1", "start": 0, "len": 2}]
    # canonical form: sorted keys, no spaces
    assert out1 == json.dumps(parsed, sort_keys=True, separators=(",", ":")).encode() + b"\n"


def test_reads_stdin_writes_stdout(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", type("S", (), {"read": staticmethod(lambda: json.dumps({"n": 3}))})())
    code = run(["length-bound"])
    assert code == 0
    assert capsys.readouterr().out == '{"bound":21}\n'


def test_domain_error_exit_2(tmp_path):
    code, out = run_cli(tmp_path, "fss", dict(SPECIAL2, q=6))
    assert code == 2
    assert "error" in json.loads(out)


def test_invalid_json_exit_2(tmp_path):
    inp = tmp_path / "bad.json"
    outp = tmp_path / "bad.out"
    inp.write_text("{not json")
    code = run(["leq", "--input", str(inp), "--output", str(outp)])
    assert code == 2
    assert "error" in json.loads(outp.read_text())


def test_non_object_payload_exit_2(tmp_path):
    inp = tmp_path / "arr.json"
    outp = tmp_path / "arr.out"
    inp.write_text("[1,2]")
    code = run(["leq", "--input", str(inp), "--output", str(outp)])
    assert code == 2


def test_missing_input_file_exit_2(tmp_path):
    outp = tmp_path / "x.out"
    code = run(["leq", "--input", str(tmp_path / "absent.json"), "--output", str(outp)])
    assert code == 2
    assert "cannot read input" in json.loads(outp.read_text())["error"]


def test_unknown_command_usage_error():
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2


def test_internal_invariant_exit_3(tmp_path, monkeypatch):
    def boom(rep, p):
        raise InternalInvariantError("deliberately tripped")

    monkeypatch.setattr(wdseg.api, "specialize", boom)
    code, out = run_cli(tmp_path, "specialize", {"rep": SPECIAL2, "p": 5})
    assert code == 3
    assert json.loads(out) == {"error": "deliberately tripped"}


def test_console_script_subprocess(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "wdseg.cli", "length-bound"],
        input=b'{"n":4}',
        capture_output=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == b'{"bound":315}\n'
    bad = subprocess.run(
        [sys.executable, "-m", "wdseg.cli", "length-bound"],
        input=b'{"n":-1}',
        capture_output=True,
    )
    assert bad.returncode == 2
    assert b"error" in bad.stdout
