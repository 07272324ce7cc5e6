import json

import pytest

from cliffdiag.functions.table import generator_table, table_csv, table_json


def test_generator_table():
    rows = generator_table(3, 1, 3)

    assert rows == [
        {"w": 1, "m": 1, "exps": [1], "generator": "j/3", "order": 3},
        {"w": 2, "m": 1, "exps": [2], "generator": "j^2/3", "order": 3},
        {"w": 3, "m": 2, "exps": [1], "generator": "j/9", "order": 9},
    ]


@pytest.mark.parametrize("p, n, w_max", [(2, 1, 5), (3, 2, 4), (5, 2, 6)])
def test_generator_table_counts(p, n, w_max):
    rows = generator_table(p, n, w_max)

    for row in rows:
        level = (p - 1) * (row["m"] - 1) + sum(row["exps"])
        assert level == row["w"]
        assert row["order"] == p ** row["m"]


def test_table_csv():
    assert table_csv(2, 1, 3) == (
        "w,m,exps,generator,order\n1,1,1,j/2,2\n2,2,1,j/4,4\n3,3,1,j/8,8\n"
    )


def test_table_csv_two_qudits():
    lines = table_csv(2, 2, 2).splitlines()

    assert lines[1:] == [
        "1,1,1 0,j1/2,2",
        "1,1,0 1,j2/2,2",
        "2,1,1 1,j1*j2/2,2",
        "2,2,1 0,j1/4,4",
        "2,2,0 1,j2/4,4",
    ]


def test_table_json():
    data = json.loads(table_json(2, 2, 2))

    assert data["p"] == 2
    assert data["n"] == 2
    assert len(data["rows"]) == 5
    assert data["levels"] == [
        {"w": 1, "group": "U(1) x Z2 x Z2"},
        {"w": 2, "group": "U(1) x Z4 x Z4 x Z2"},
    ]


def test_table_invalid():
    with pytest.raises(ValueError):
        generator_table(4, 1, 2)
