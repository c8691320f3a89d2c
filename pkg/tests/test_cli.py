import json

import pytest

from app.cli.main import main
from app.core.config import settings


@pytest.fixture(autouse=True)
def no_unit_index(monkeypatch):
    monkeypatch.setattr(settings, "COUNT_UNIT_INDEX", False)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_poly_text(capsys):
    assert run(capsys, "poly", "19")[:2] == (0, "1,3,3\n")
    assert run(capsys, "poly", "2^5-1")[1] == "1,1,1,1,1\n"
    assert run(capsys, "poly", "13", "--mod", "2")[1] == "1,0,0\n"
    assert run(capsys, "poly", "19", "--eval", "2")[1] == "19\n"
    assert run(capsys, "poly", "p[3,2]", "--degree")[1] == "3\n"


def test_poly_json(capsys):
    code, out, _ = run(capsys, "poly", "H[1]", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"n": 19, "coefficients": ["1", "3", "3"], "pretty": "3t^2+3t+1"}


def test_errors_become_payloads(capsys):
    code, out, err = run(capsys, "poly", "banana")
    assert code == 2
    assert out == ""
    payload = json.loads(err.strip().splitlines()[-1])
    assert payload["status"] == "error"
    assert payload["error_type"] == "parse_error"

    code, _, err = run(capsys, "poly", "13", "--mod", "1")
    assert code == 2
    assert json.loads(err.strip().splitlines()[-1])["error_type"] == "bad_modulus"

    code, _, err = run(capsys, "search", "--r", "0", "--m", "2", "--max", "2^40")
    assert code == 3
    assert json.loads(err.strip().splitlines()[-1])["error_type"] == "bound_too_large"

    code, out, err = run(capsys, "search", "--r", "0", "--m", "2", "--max", "100", "--workers", "0")
    assert code == 2
    assert out == ""
    assert json.loads(err.strip().splitlines()[-1])["error_type"] == "precondition_violated"


def test_argparse_rejects_unknown_choice():
    with pytest.raises(SystemExit):
        main(["verify", "--identity", "lemma9"])


def test_search_csv_and_count(capsys, tmp_path):
    code, out, _ = run(capsys, "search", "--r", "0", "--m", "3", "--max", "2^15")
    assert code == 0
    assert out.splitlines() == ["n,binary,r,m", "19,(1 0 0 1 1)_{2},0,3", "181,(1 0 1 1 0 1 0 1)_{2},0,3", "29899,(1 1 1 0 1 0 0 1 1 0 0 1 0 1 1)_{2},0,3"]

    assert run(capsys, "search", "--r", "0", "--m", "3", "--max", "2^15", "--count")[1] == "3\n"

    target = tmp_path / "sols.csv"
    code, out, _ = run(capsys, "search", "--r", "2", "--m", "3", "--max", "2^12", "--exclude", "trivial-twos", "--out", str(target))
    assert out == "4\n"
    assert target.read_text().splitlines()[1:] == ["83,(1 0 1 0 0 1 1)_{2},2,3", "359,(1 0 1 1 0 0 1 1 1)_{2},2,3", "631,(1 0 0 1 1 1 0 1 1 1)_{2},2,3", "2633,(1 0 1 0 0 1 0 0 1 0 0 1)_{2},2,3"]


def test_search_json(capsys):
    code, out, _ = run(capsys, "search", "--r", "1", "--m", "3", "--max", "2^13", "--exclude", "trivial-all-ones", "--format", "json")
    data = json.loads(out)
    assert data["solutions"] == [157, 4789]
    assert data["exclusions"] == ["trivial-all-ones"]
    assert data["unit_index_counted"] is False


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "lemma2", "--range", "n=1..8")
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True
    assert data["cells"] == 8
    assert run(capsys, "verify", "--identity", "lemma2", "--range", "n=1..8", "--format", "json")[1] == out


def test_conjecture_command(capsys, tmp_path):
    target = tmp_path / "c.json"
    code, out, _ = run(capsys, "conjecture", "minus-one", "--grid", "bound=30", "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["conjecture"] == "minus-one"


def test_mine_from_file(capsys, tmp_path):
    source = tmp_path / "sols.csv"
    source.write_text("n,binary,r,m\n5,(1 0 1)_{2},0,2\n41,(1 0 1 0 0 1)_{2},0,2\n209,(1 1 0 1 0 0 0 1)_{2},0,2\n929,(1 1 1 0 1 0 0 0 0 1)_{2},0,2\n")
    code, out, _ = run(capsys, "mine", "--input", str(source))
    assert code == 0
    [triple] = json.loads(out)["triples"]
    assert (triple["p"], triple["q"], triple["u"], triple["accepted"]) == ("16", "-12", "1", True)

    code, _, err = run(capsys, "mine")
    assert code == 2
    assert json.loads(err.strip().splitlines()[-1])["error_type"] == "precondition_violated"


def test_table5_and_plotdata(capsys):
    code, out, _ = run(capsys, "table", "5", "--format", "json")
    assert code == 0
    assert len(json.loads(out)) == 7

    code, out, _ = run(capsys, "plotdata", "--series", "pi02", "--xmax", "64", "--samples", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x,value,series"
    assert [line.split(",")[0] for line in lines[1:]] == ["16", "32", "48", "64"]

    code, out, _ = run(capsys, "plotdata", "--series", "pi02", "--xmax", "64", "--samples", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert [p["x"] for p in data] == [16, 32, 48, 64]
    assert {p["series"] for p in data} == {"pi02"}
    assert data[0]["value"] == 2  # 5 and 13
