import json

import pytest

from sqtilings.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_paper_format(capsys):
    code, out, _ = run(capsys, "table", "--s", "2", "--n", "3", "--m", "5",
                       "--format", "paper")
    assert code == 0
    assert out == "2 3 5 : 1 8 12 : 21\n"


def test_table_defaults_to_paper_format(capsys):
    code, out, _ = run(capsys, "table", "--s", "2", "--n", "3", "--m", "5")
    assert (code, out) == (0, "2 3 5 : 1 8 12 : 21\n")


def test_table_range_csv(capsys):
    code, out, _ = run(capsys, "table", "--s", "2", "--n", "2", "--m-max", "2",
                       "--format", "csv")
    assert code == 0
    assert out == (
        "s,n,m,k,count\n"
        "2,2,0,0,1\n"
        "2,2,1,0,1\n"
        "2,2,2,0,1\n"
        "2,2,2,1,1\n"
    )


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--s", "3", "--n", "6", "--m", "6",
                       "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert records == [
        {"s": 3, "n": 6, "m": 6, "counts": [1, 16, 30, 12, 1], "row_sum": 60}
    ]


def test_table_requires_one_length_flag(capsys):
    code, _, err = run(capsys, "table", "--s", "2", "--n", "3")
    assert code == 2
    assert "exactly one of --m or --m-max" in err
    code, _, _ = run(capsys, "table", "--s", "2", "--n", "3", "--m", "4",
                     "--m-max", "5")
    assert code == 2


def test_gf_exact_output(capsys):
    code, out, _ = run(capsys, "gf", "--s", "2", "--n", "2")
    assert code == 0
    assert out == "(1) / (1 - z - z^2*t)\n"


def test_gf_row_sums_line(capsys):
    code, out, _ = run(capsys, "gf", "--s", "2", "--n", "2", "--row-sums")
    assert code == 0
    assert out == "(1) / (1 - z - z^2*t)\n(1) / (1 - z - z^2)\n"


def test_gf_dimension_cap_exit_code(capsys):
    code, _, err = run(capsys, "gf", "--s", "2", "--n", "10", "--gf-cap", "50")
    assert code == 2
    assert "dimension 89" in err


def test_state_cap_exit_code(capsys):
    code, _, err = run(capsys, "table", "--s", "2", "--n", "16", "--m", "3",
                       "--state-cap", "100")
    assert code == 2
    assert "cap is 100" in err


def test_square_paper_lines(capsys):
    code, out, _ = run(capsys, "square", "--s", "2", "--size-max", "3")
    assert code == 0
    assert out == (
        "2 1 1 : 1 : 1\n"
        "2 2 2 : 1 1 : 2\n"
        "2 3 3 : 1 4 : 5\n"
    )


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "gf.txt"
    code, out, _ = run(capsys, "gf", "--s", "2", "--n", "3", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == "(1) / (1 - z - 2*z^2*t)\n"


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--s-max", "2", "--n-max", "4",
                       "--m-max", "4", "--oracle-cap", "16")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("[PASS] basic count identities:")
    assert lines[-1].endswith("all passed")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--s-max", "2", "--n-max", "3",
                       "--m-max", "3", "--oracle-cap", "0", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert len(payload["reports"]) == 5


def test_cas_emits_script_and_checks(capsys):
    code, out, err = run(capsys, "cas", "--s", "2", "--n", "2", "--check")
    assert code == 0
    assert out.startswith("eq_0 := x0 = 1 + z*x0 + z*x1;\n")
    assert out.endswith("print(normal(subs(sol, x0)));\n")
    assert "cas round-trip ok" in err


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.strip() == "0.1.0"
