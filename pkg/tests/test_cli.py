import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from nucalc.cli import Check, Equiv, UsageError, build_parser, main, parse_world, run, to_command
from nucalc.worlds import World

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

HEADLINE = {
    "drop": ("drop_lhs.nu", "drop_rhs.nu", "int", "direct"),
    "swap": ("swap_lhs.nu", "swap_rhs.nu", "name", "direct"),
    "private": ("priv.nu", "false_fn.nu", "name -> bool", "parametric"),
}


def call(*argv, stdin: str | None = None):
    """Run the CLI in a subprocess; returns (exit code, stdout, stderr)."""
    proc = subprocess.run([sys.executable, "-m", "nucalc.cli", *map(str, argv)], input=stdin,
                          capture_output=True, text=True, timeout=60)
    return proc.returncode, proc.stdout, proc.stderr


def run_args(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(to_command([str(a) for a in argv]), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(HEADLINE))
def test_headline_equations_match_golden_files(name, tmp_path):
    a, b, ty, method = HEADLINE[name]
    proof = tmp_path / "proof.json"
    code, out, _ = run_args("equiv", DATA / a, DATA / b, "--type", ty, "--method", method, "--emit-proof", proof)
    assert code == 0
    assert out == (GOLDEN / f"{name}.verdict.json").read_text()
    assert json.loads(proof.read_text()) == json.loads((GOLDEN / f"{name}.proof.json").read_text())


def test_headline_output_is_stable_across_processes():
    a, b, ty, method = HEADLINE["swap"]
    first = call("equiv", DATA / a, DATA / b, "--type", ty, "--method", method)
    assert first == call("equiv", DATA / a, DATA / b, "--type", ty, "--method", method)
    assert first[0] == 0
    assert first[1] == (GOLDEN / "swap.verdict.json").read_text()


@pytest.mark.parametrize("method", ["direct", "oracle"])
def test_private_name_is_unknown_without_spans(method):
    code, out, _ = run_args("equiv", DATA / "priv.nu", DATA / "false_fn.nu", "--type", "name -> bool",
                            "--method", method, "--fuel", 500)
    assert code == 2
    assert json.loads(out)["verdict"] == "unknown"


def test_distinguished_exit_code(tmp_path):
    (tmp_path / "t.nu").write_text("true")
    (tmp_path / "f.nu").write_text("false")
    code, out, _ = run_args("equiv", tmp_path / "t.nu", tmp_path / "f.nu", "--type", "bool", "--method", "oracle")
    assert code == 1
    assert json.loads(out) == {"verdict": "distinguished", "context": "fun (x:bool). x",
                               "left": True, "right": False}


def test_no_proof_file_without_equivalence(tmp_path):
    proof = tmp_path / "p.json"
    code, _, _ = run_args("equiv", DATA / "priv.nu", DATA / "false_fn.nu", "--type", "name -> bool",
                          "--emit-proof", proof)
    assert code == 2
    assert not proof.exists()


def test_pretty_certificate_goes_to_stderr(monkeypatch):
    monkeypatch.delenv("NU_COLOR", raising=False)
    code, out, err = run_args("equiv", DATA / "swap_lhs.nu", DATA / "swap_rhs.nu", "--type", "name", "--pretty")
    assert code == 0
    assert json.loads(out)["verdict"] == "equivalent"
    assert "leg x'      [0↦1, 1↦0]" in err
    assert "\x1b[" not in err


def test_check_and_eval():
    assert run_args("check", DATA / "priv.nu") == (0, '{"type": "name -> bool"}\n', "")
    code, out, _ = run_args("eval", DATA / "countdown.nu")
    assert json.loads(out) == {"status": "done", "supply": 0, "value": {"bool": True}}
    code, out, _ = run_args("eval", DATA / "countdown.nu", "--fuel", 3)
    assert json.loads(out) == {"status": "diverge"}
    code, out, _ = run_args("eval", DATA / "drop_lhs.nu", "--semantics", "abstract", "--world", "{4}")
    assert json.loads(out) == {"status": "done", "world": [4, 5], "value": {"int": 42}}
    code, out, _ = run_args("eval", DATA / "swap_lhs.nu", "--supply", 7)
    assert json.loads(out) == {"status": "done", "supply": 9, "value": {"name": 7}}


def test_stdin_input():
    assert call("check", "-", stdin="let x = new in x = x") == (0, '{"type": "bool"}\n', "")


def test_syntax_and_type_errors_exit_65():
    code, _, err = call("check", DATA / "broken.nu")
    assert code == 65 and json.loads(err)["error"] == "NuSyntaxError"
    code, _, err = call("check", DATA / "illtyped.nu")
    assert code == 65 and json.loads(err)["error"] == "TypeCheckError"
    code, _, err = call("equiv", DATA / "drop_lhs.nu", DATA / "drop_rhs.nu", "--type", "bool")
    assert code == 65


def test_usage_errors_exit_64(tmp_path):
    assert call("frobnicate")[0] == 64
    assert call("equiv", DATA / "drop_lhs.nu", DATA / "drop_rhs.nu")[0] == 64
    assert call("check", tmp_path / "missing.nu")[0] == 64
    assert call("eval", DATA / "drop_lhs.nu", "--fuel", "-1")[0] == 64
    assert call("eval", DATA / "drop_lhs.nu", "--semantics", "abstract", "--world", "{a}")[0] == 64


def test_corpus_is_deterministic_and_typechecks():
    first = call("corpus", "--seed", 3, "--count", 15, "--depth", 5)
    assert first == call("corpus", "--seed", 3, "--count", 15, "--depth", 5)
    lines = first[1].splitlines()
    assert len(lines) == 15
    for line in lines:
        item = json.loads(line)
        assert call("check", "-", stdin=item["term"])[1] == json.dumps({"type": item["type"]}) + "\n"


def test_world_parsing():
    assert parse_world("{}") == World()
    assert parse_world("{0, 2}") == World([0, 2])
    assert parse_world("1,3") == World([1, 3])
    with pytest.raises(UsageError):
        parse_world("{x}")


def test_command_objects():
    assert to_command(["check", "a.nu"]) == Check("a.nu")
    cmd = to_command(["equiv", "a", "b", "--type", "int", "--ext", "2"])
    assert isinstance(cmd, Equiv) and cmd.budgets.ext == 2 and cmd.method == "direct"
    assert build_parser().prog == "nu"


def test_main_returns_exit_code(capsys):
    assert main(["check", str(DATA / "drop_lhs.nu")]) == 0
    assert capsys.readouterr().out == '{"type": "int"}\n'
