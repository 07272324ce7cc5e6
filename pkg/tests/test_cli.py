import json
import logging

import pytest

from cliffdiag import cli
from cliffdiag.constants import EXIT_DISAGREEMENT, EXIT_OK, EXIT_USAGE, LOG_LEVEL
from cliffdiag.hierarchy import HierarchyLevel


def invoke(runner, *args):
    return runner.invoke(cli.main, list(args))


def test_classify_verify(runner):
    result = invoke(runner, "classify", "--p", "2", "--gate", "T", "--verify")

    assert result.exit_code == EXIT_OK
    assert result.output == (
        "Level: 3\n"
        "Polynomial: j/8\n"
        "Global phase: 0/1\n"
        "Generators: U_{3,(1)}^1\n"
        "  closed_form: 3\n"
        "  recursive: 3\n"
        "  matrix: 3\n"
        "All classifiers agree.\n"
    )


@pytest.mark.parametrize(
    "args, level",
    [
        (["--p", "2", "--gate", "CZ"], 2),
        (["--p", "2", "--n", "2", "--phases", "0,0,0,1/2"], 2),
        (["--p", "3", "--uma", "2:1"], 3),
        (["--p", "5", "--phase-gate", "2:2"], 8),
        (["--p", "3", "--phases", "0,1/9,2/9"], 3),
        (
            ["--p", "3", "--term", "1:2:1", "--term", "2:2:2", "--global-phase", "1/2"],
            4,
        ),
        (["--p", "2", "--phases", "0,1/3"], "not_in_hierarchy"),
    ],
)
def test_classify_json(runner, args, level):
    result = invoke(runner, "classify", "--json", "--verify", *args)

    assert result.exit_code == EXIT_OK
    report = json.loads(result.output)
    assert report["level"] == level
    assert report["agreed"]


def test_classify_spec_file(runner, spec_file):
    result = invoke(runner, "classify", "--spec", spec_file("qutrit_terms.json"))

    assert result.exit_code == EXIT_OK
    assert result.output.splitlines()[:3] == [
        "Level: 4",
        "Polynomial: (2j^2 + j)/9",
        "Global phase: 1/2",
    ]


@pytest.mark.parametrize(
    "args",
    [
        ["--p", "2"],
        ["--p", "2", "--gate", "T", "--phases", "0,1/8"],
        ["--gate", "T"],
        ["--p", "2", "--gate", "Q"],
        ["--p", "3", "--gate", "S"],
        ["--p", "4", "--gate", "Z"],
        ["--p", "2", "--term", "1:3"],
        ["--p", "2", "--phases", "0,1/8,0"],
        ["--p", "2", "--spec", "missing.json"],
    ],
)
def test_classify_usage_errors(runner, args):
    result = invoke(runner, "classify", *args)

    assert result.exit_code == EXIT_USAGE


@pytest.mark.parametrize(
    "name", ["two_sources.json", "extra_field.json", "empty_terms.json"]
)
def test_classify_invalid_spec_file(runner, spec_file, name):
    result = invoke(runner, "classify", "--spec", spec_file(name))

    assert result.exit_code == EXIT_USAGE


def test_classify_spec_file_with_qudit_count(runner, spec_file):
    result = invoke(runner, "classify", "--n", "1", "--spec", spec_file("t_gate.json"))

    assert result.exit_code == EXIT_OK
    assert result.output.splitlines()[0] == "Level: 3"


def test_classify_disagreement(runner, monkeypatch):
    monkeypatch.setattr(
        "cliffdiag.functions.classify.level_recursive_oracle",
        lambda table: HierarchyLevel(7),
    )

    result = invoke(runner, "classify", "--p", "2", "--gate", "T", "--verify")

    assert result.exit_code == EXIT_DISAGREEMENT
    assert "  recursive: 7" in result.output
    assert result.output.endswith("Classifiers disagree!\n")


@pytest.mark.parametrize(
    "args, output",
    [
        (["--p", "3", "--phase-gate", "0:1"], "2j^2/3\nGlobal phase: 1/3\n"),
        (["--p", "3", "--phases", "0,1/3,0"], "(2j^2 + 2j)/3\n"),
        (["--p", "2", "--phases", "1/8,3/8"], "j/4\nGlobal phase: 1/8\n"),
        (["--p", "2", "--n", "2", "--gate", "CZ"], "j1*j2/2\n"),
    ],
)
def test_canon(runner, args, output):
    result = invoke(runner, "canon", *args)

    assert result.exit_code == EXIT_OK
    assert result.output == output


def test_canon_json(runner):
    result = invoke(runner, "canon", "--p", "3", "--term", "1:2:3", "--json")

    assert result.exit_code == EXIT_OK
    assert json.loads(result.output) == {
        "p": 3,
        "n": 1,
        "polynomial": "(3j^2 + 7j)/9",
        "global_phase": "0/1",
        "terms": [
            {"coeff": 7, "den_exp": 2, "exps": [1]},
            {"coeff": 3, "den_exp": 2, "exps": [2]},
        ],
    }


def test_canon_not_in_hierarchy(runner):
    result = invoke(runner, "canon", "--p", "3", "--phases", "0,1/2,0")

    assert result.exit_code == EXIT_USAGE
    assert "not in the Clifford hierarchy" in result.stderr


def test_group(runner):
    result = invoke(runner, "group", "--p", "3", "--w", "2")

    assert result.exit_code == EXIT_OK
    assert result.output == "U(1) x Z3 x Z3\n"


def test_group_enumerate_json(runner):
    result = invoke(
        runner, "group", "--p", "2", "--n", "2", "--w", "2", "--enumerate", "--json"
    )

    assert result.exit_code == EXIT_OK
    report = json.loads(result.output)
    assert report["group"] == "U(1) x Z4 x Z4 x Z2"
    assert report["enumeration"] == {"count": 32, "expected": 32, "ok": True}


def test_group_uncorrected_mismatch(runner):
    result = invoke(
        runner, "group", "--p", "2", "--w", "1", "--enumerate", "--uncorrected"
    )

    assert result.exit_code == EXIT_DISAGREEMENT
    assert "MISMATCH" in result.output


def test_group_too_large(runner):
    result = invoke(
        runner,
        "group",
        "--p",
        "5",
        "--n",
        "2",
        "--w",
        "5",
        "--enumerate",
        "--limit",
        "1000",
    )

    assert result.exit_code == EXIT_USAGE
    assert "exceed the limit of 1000" in result.stderr


@pytest.mark.parametrize(
    "args",
    [["--p", "4", "--w", "1"], ["--p", "2", "--w", "0"], ["--w", "2"], ["--p", "2"]],
)
def test_group_usage_errors(runner, args):
    assert invoke(runner, "group", *args).exit_code == EXIT_USAGE


def test_table_csv(runner):
    result = invoke(runner, "table", "--p", "2", "--w-max", "3")

    assert result.exit_code == EXIT_OK
    assert result.output == (
        "w,m,exps,generator,order\n1,1,1,j/2,2\n2,2,1,j/4,4\n3,3,1,j/8,8\n"
    )


def test_table_json(runner):
    result = invoke(runner, "table", "--p", "3", "--w-max", "2", "--format", "json")

    assert result.exit_code == EXIT_OK
    data = json.loads(result.output)
    assert [row["generator"] for row in data["rows"]] == ["j/3", "j^2/3"]


def test_table_usage_error(runner):
    assert invoke(runner, "table", "--p", "6", "--w-max", "2").exit_code == EXIT_USAGE


def test_log_level(runner):
    result = invoke(runner, "--log-level", "debug", "group", "--p", "2", "--w", "1")
    level = logging.getLogger("cliffdiag").level
    logging.getLogger("cliffdiag").setLevel(LOG_LEVEL)

    assert result.exit_code == EXIT_OK
    assert result.output == "U(1) x Z2\n"
    assert level == logging.DEBUG
