import json

import pytest

from eulerchi.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_euler_table(capsys):
    code, out, _ = run(capsys, "euler", "--max", "4")
    rows = json.loads(out)
    assert code == 0
    assert [r["E_n"] for r in rows] == ["1", "-1/2", "0", "1/4", "0"]
    assert rows[2]["E_n(x)"] == ["0", "-1", "1"]


def test_euler_default_uses_env(capsys, monkeypatch):
    monkeypatch.setenv("EULERCHI_TRUNCATION", "5")
    _, out, _ = run(capsys, "euler")
    assert len(json.loads(out)) == 6


def test_euler_csv(capsys):
    code, out, _ = run(capsys, "euler", "--max", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,E_n,E_n(x)", "0,1,[1]", "1,-1/2,[-1/2; 1]", "2,0,[0; -1; 1]"]


def test_characters(capsys):
    code, out, _ = run(capsys, "characters", "--modulus", "3")
    chars = json.loads(out)
    assert code == 0 and len(chars) == 2
    assert [v["coeffs"] for v in chars[1]["values"]] == [["0"], ["1"], ["-1"]]
    assert chars[1]["conductor"] == 3 and chars[1]["order"] == 2
    assert set(chars[0]) >= {"modulus", "conductor", "order", "values"}


def test_gen_euler(capsys):
    code, out, _ = run(capsys, "gen-euler", "--modulus", "3", "--char-index", "1", "--max", "3")
    data = json.loads(out)
    assert code == 0
    assert data["numbers"][0] == {"order": 2, "coeffs": ["-2"]}
    assert len(data["polynomials"]) == 4
    assert data["character"]["modulus"] == 3


def test_power_sum(capsys):
    code, out, _ = run(capsys, "power-sum", "-d", "3", "-j", "1", "--k", "0", "1", "--n", "2")
    rows = json.loads(out)
    assert code == 0 and rows[0]["T"]["coeffs"] == ["-4"]


def test_fermionic(capsys):
    code, out, _ = run(capsys, "fermionic", "-d", "5", "-j", "1", "--k", "3", "--p", "3", "--N", "2")
    (row,) = json.loads(out)
    assert code == 0 and row["passed"] and row["valuation"] >= 2


def test_verify_theorem1_passes(capsys):
    code, out, _ = run(
        capsys, "verify", "--identity", "theorem1", "--modulus", "3",
        "--w1", "1", "3", "5", "--w2", "1", "3", "5", "--max-l", "12",
    )
    reports = json.loads(out)
    assert code == 0 and len(reports) == 2 * 9 * 13
    assert all(r["passed"] for r in reports)


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "theorem2", "--modulus", "3", "--max-n", "2", "--printed")
    assert code == 1
    assert any(not r["passed"] for r in json.loads(out))


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--identity", "theorem1", "--modulus", "4"],
        ["verify", "--identity", "theorem1", "--w1", "2"],
        ["verify", "--identity", "fermionic", "--modulus", "3", "--p", "3"],
        ["verify", "--identity", "fermionic", "--modulus", "5", "--p", "9"],
        ["verify", "--identity", "eq13", "--n-values", "2"],
        ["gen-euler", "--modulus", "5", "--char-index", "9"],
        ["fermionic", "-d", "5", "--k", "1", "--p", "5", "--N", "1"],
        ["fermionic", "-d", "5", "--k", "1", "--p", "3", "--N", "1", "--x", "abc"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--identity", "nope"])
    assert exc.value.code == 2


def test_output_is_deterministic(capsys, tmp_path):
    argv = ["verify", "--identity", "tchi-all", "--modulus", "5", "--w1", "1", "3", "--w2", "3", "--max-l", "3"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv, "--jobs", "2")
    assert first == second
    target = tmp_path / "out.json"
    run(capsys, *argv, "--output", str(target))
    assert target.read_text(encoding="utf-8") == first


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "eq13", "--modulus", "3", "--max-k", "1", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "identity,parameters,passed,discrepancy"
    assert len(lines) == 1 + 2 * 2 * 3
