import json

from katoweights.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_kato_command_text(capsys):
    code, out, _ = run_cli(capsys, "kato", "--n", "4", "--weight", "2,2", "--I", "2")
    assert code == 0
    assert "k^2 = 3/5" in out
    assert "0.774596669241" in out
    assert "sharp: yes" in out


def test_kato_command_json(capsys):
    code, out, _ = run_cli(
        capsys, "kato", "--n", "4", "--weight", "2,2", "--I", "2", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["version"] == "1"
    assert payload["query"]["command"] == "kato"
    assert payload["result"]["k_squared"] == "3/5"
    assert payload["result"]["sharp"] is True
    assert payload["result"]["equality_case"]["gradient_set"] == [1]


def test_decompose_command(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--n", "5", "--weight", "1/2,1/2")
    assert code == 0
    assert "N = 2" in out
    code, out, _ = run_cli(
        capsys, "decompose", "--n", "5", "--weight", "1/2,1/2", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["result"]["N"] == 2
    assert [c["w"] for c in payload["result"]["components"]] == ["1/2", "-2"]


def test_elliptic_command(capsys):
    code, out, _ = run_cli(
        capsys, "elliptic", "--n", "4", "--weight", "3,1", "--I", "2,4"
    )
    assert code == 0
    assert "minimal elliptic sets: {1}  {3}  {2,4}" in out
    assert "I = [2, 4]: elliptic" in out


def test_table_commands(capsys):
    code, out, _ = run_cli(capsys, "table", "--dim3", "--rmax", "3")
    assert code == 0
    assert "rarita-schwinger" in out
    assert "sqrt(14/15)" in out
    code, out, _ = run_cli(capsys, "table", "--dim4", "--rmax", "4", "--format", "json")
    payload = json.loads(out)
    gl = [
        row
        for row in payload["result"]["rows"]
        if row["operator"] == "spin-field" and row["r"] == 4 and row["s"] == 0
    ]
    assert gl and gl[0]["k_squared"] == "3/5"


def test_table_requires_choice(capsys):
    code, _, err = run_cli(capsys, "table")
    assert code == 2
    assert "dim3" in err


def test_validation_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "kato", "--n", "4", "--weight", "0,1", "--I", "1")
    assert code == 2
    assert "error" in err


def test_oracle_command(capsys):
    code, out, _ = run_cli(
        capsys,
        "oracle",
        "--n",
        "4",
        "--rep",
        "standard",
        "--I",
        "1",
        "--restarts",
        "4",
    )
    assert code == 0
    assert "k^2=" in out and "defect=" in out


def test_verify_identities_small(capsys, monkeypatch):
    # shrink the sweep so the CLI path stays fast in unit tests
    from katoweights import suites

    monkeypatch.setitem(
        suites.SUITES, "identities", lambda: suites.suite_identities(5, 2)
    )
    code, out, _ = run_cli(capsys, "verify", "--suite", "identities")
    assert code == 0
    assert "[PASS] suite identities" in out


def test_determinism(capsys):
    _, out1, _ = run_cli(
        capsys, "oracle", "--n", "4", "--rep", "standard", "--I", "1", "--seed", "7",
        "--restarts", "4", "--format", "json",
    )
    _, out2, _ = run_cli(
        capsys, "oracle", "--n", "4", "--rep", "standard", "--I", "1", "--seed", "7",
        "--restarts", "4", "--format", "json",
    )
    assert out1 == out2
