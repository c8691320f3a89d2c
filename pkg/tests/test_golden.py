import pytest

from app.core.config import settings
from app.core.errors import PreconditionViolated
from app.services.families import big_h_index
from app.services.golden import big_h_values, format_binary, table1_rows, table5_rows, table_solutions_rows


def test_format_binary():
    assert format_binary(19) == "(1 0 0 1 1)_{2}"
    assert format_binary(19, spaced=False) == "(10011)_{2}"


def test_big_h_fixture():
    assert big_h_values()[:4] == [big_h_index(n) for n in range(4)]


def test_table1_first_row():
    [row] = table1_rows(k_max=15)
    assert row.cells["k"] == 15
    assert row.cells["pi02"] == 97
    assert row.expected == {"pi02": 97, "pi12": 82}


def test_table2_prefix(monkeypatch):
    monkeypatch.setattr(settings, "COUNT_UNIT_INDEX", False)
    rows = table_solutions_rows(2, bound=2**15)
    assert [r.cells["n"] for r in rows] == [19, 181, 29899]
    assert all(r.matches for r in rows)


def test_table5():
    rows = table5_rows()
    assert len(rows) == 7
    assert all(r.matches for r in rows)
    assert [r.cells["n"] for r in rows if not r.cells["congruence_holds"]] == [205]
    assert rows[2].cells["binary"] == "(11001101)_{2}"


def test_bad_table_arguments():
    with pytest.raises(PreconditionViolated):
        table_solutions_rows(5)
    with pytest.raises(PreconditionViolated):
        table1_rows(k_max=3, k_min=5)
