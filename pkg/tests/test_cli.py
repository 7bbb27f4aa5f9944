import json
from pathlib import Path

import pytest

from motwedge import cli, tables

GOLDEN = Path(__file__).parent / "golden" / "wedge_through_70.tsv"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_alpha(capsys):
    assert run(capsys, "alpha", "7")[:2] == (0, "3\n")
    code, out, _ = run(capsys, "alpha", "13", "--json")
    assert json.loads(out) == {"n": 13, "alpha": 3}


def test_degree(capsys):
    code, out, _ = run(capsys, "degree", "d0*e0*r")
    assert code == 0 and "(61,14,34)" in out and "coweight=27" in out
    code, out, _ = run(capsys, "degree", "--wedge", "tau*Dh1*g", "1", "0", "--json")
    assert json.loads(out)["degree"] == [53, 13, 28]


def test_status_exit_codes(capsys):
    code, out, _ = run(capsys, "status", "e0^1*g^2")
    assert code == 0 and "EmptyProven" in out and "If α(t+k) > t" in out
    assert run(capsys, "status", "e0^1*g^7")[0] == 3
    code, out, _ = run(capsys, "status", "e0^1*g^7", "--conjectures", "--json")
    assert code == 0 and json.loads(out)["verdict"] == "NonEmptyConditional"
    code, _, err = run(capsys, "status", "e0^x")
    assert code == 1 and err
    code, _, err = run(capsys, "status", "wedge(h2,0,0)")
    assert code == 2 and "unknown" in err


def test_degree_unknown_token(capsys):
    code, out, err = run(capsys, "degree", "zzz")
    assert code == 2 and out == "" and "zzz" in err


def test_usage_errors_are_parse_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["alpha"])
    assert exc.value.code == 1


def test_witness(capsys):
    assert run(capsys, "witness", "tau*d0^2", "--target", "tau", "1", "1")[:2] == (0, "verified\n")
    assert run(capsys, "witness", "tau*d0^2", "--target", "tau", "1", "2")[1] == "rejected\n"
    assert run(capsys, "witness", "d0*l", "--target", "d0*l", "0", "0")[0] == 3


def test_image_test(capsys):
    code, out, _ = run(capsys, "image-test", "h1^-9 * a1^3 * v2^2", "--json")
    data = json.loads(out)
    assert data["in_image"] and data["certificate"] == "v2^1 * v4^1"
    code, out, _ = run(capsys, "image-test", "a1")
    assert "in_image\tno" in out


def test_oracles(capsys):
    code, out, _ = run(capsys, "oracle", "image", "--max-coweight", "24")
    assert code == 0 and "result\tmatch" in out
    code, out, _ = run(capsys, "oracle", "coweight", "--t", "1", "--k", "3", "--json")
    data = json.loads(out)
    assert data["solvable"] and data["match"]


def test_tau_commands(capsys):
    code, out, _ = run(capsys, "tau-region", "2", "1", "--json")
    assert json.loads(out)["witness"] == "tau*P*d0^2*e0^3"
    assert run(capsys, "tau-region", "1", "4")[0] == 3
    code, out, _ = run(capsys, "tau-row", "4k", "3", "1")
    assert "NotTauDivisible" in out
    code, out, _ = run(capsys, "higher-weight", "gr")
    assert out == "absent\n"


def test_chart_tsv(capsys):
    code, out, _ = run(capsys, "chart", "--stem-max", "70", "--format", "tsv")
    assert out == GOLDEN.read_text(encoding="utf-8")
    assert len(out.splitlines()) - 1 == 58


def test_chart_files(tmp_path, capsys):
    svg, png = tmp_path / "w.svg", tmp_path / "w.png"
    code, out, _ = run(capsys, "chart", "--stem-max", "70", "--format", "svg", "--out", str(svg), "--plot", str(png))
    assert code == 0 and out == ""
    assert svg.read_text(encoding="utf-8").count("<circle") == 58
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


@pytest.mark.parametrize("name", tables.TABLE_NAMES)
def test_tables_dump_round_trip(capsys, name):
    code, out, _ = run(capsys, "tables", "dump", name)
    assert code == 0
    assert list(tables.parse(name, out)) == list(tables.current(name))


def test_output_is_deterministic(capsys):
    first = run(capsys, "chart", "--stem-max", "90", "--json")[1]
    assert run(capsys, "chart", "--stem-max", "90", "--json")[1] == first
