import pytest

from cliffdiag.arith import PhaseFraction
from cliffdiag.functions.classify import (
    CLOSED_FORM,
    MATRIX,
    RECURSIVE,
    ClassifyReport,
    classify,
    polynomial_json,
)
from cliffdiag.functions.gate_spec import GateSpec
from cliffdiag.hierarchy import NOT_IN_HIERARCHY, HierarchyLevel
from cliffdiag.phasepoly import PhasePolynomial


def test_polynomial_json():
    poly = PhasePolynomial.build(3, 1, {(1,): 1, (2,): 2}, 2, PhaseFraction(1, 2))

    assert polynomial_json(poly) == {
        "global_phase": "1/2",
        "terms": [
            {"coeff": 1, "den_exp": 2, "exps": [1]},
            {"coeff": 2, "den_exp": 2, "exps": [2]},
        ],
    }


@pytest.mark.parametrize(
    "spec, level",
    [
        (GateSpec(2, gate="T"), 3),
        (GateSpec(2, gate="CZ"), 2),
        (GateSpec(3, phases=("0", "1/3", "2/3")), 1),
        (GateSpec(3, terms=((1, 2, (1,)), (2, 2, (2,))), global_phase="1/2"), 4),
        (GateSpec(5, gate="P3:1"), 4),
    ],
)
def test_classify(spec, level):
    report = classify(spec)

    assert report.level == HierarchyLevel(level)
    assert report.classifiers == {CLOSED_FORM: HierarchyLevel(level)}
    assert report.agreed


def test_classify_verify():
    report = classify(GateSpec(2, gate="CCZ"), verify=True)

    assert report.classifiers == {
        CLOSED_FORM: HierarchyLevel(3),
        RECURSIVE: HierarchyLevel(3),
        MATRIX: HierarchyLevel(3),
    }
    assert report.skipped == {}
    assert report.agreed


def test_classify_verify_skips_large_gates():
    report = classify(GateSpec(2, gate="CCZ"), verify=True, matrix_limit=4)

    assert MATRIX not in report.classifiers
    assert report.skipped == {MATRIX: "8 basis states"}
    assert "  matrix: skipped (8 basis states)" in report.to_text()


def test_classify_not_in_hierarchy():
    report = classify(GateSpec(2, phases=("1/6", "1/2")), verify=True)

    assert report.level == NOT_IN_HIERARCHY
    assert report.polynomial is None
    assert report.global_phase == PhaseFraction(1, 6)
    assert report.agreed
    assert report.to_json()["level"] == "not_in_hierarchy"
    assert report.to_json()["terms"] == []


def test_report_to_text(t_gate_dict):
    report = classify(GateSpec(**t_gate_dict), verify=True)

    assert report.to_text() == (
        "Level: 3\n"
        "Polynomial: j/8\n"
        "Global phase: 0/1\n"
        "Generators: U_{3,(1)}^1\n"
        "  closed_form: 3\n"
        "  recursive: 3\n"
        "  matrix: 3\n"
        "All classifiers agree."
    )


def test_report_to_text_without_verify():
    report = classify(GateSpec(2, 2, phases=("0", "0", "1/4", "3/4")))

    assert report.to_text() == (
        "Level: 2\n"
        "Polynomial: (2j1*j2 + j1)/4\n"
        "Global phase: 0/1\n"
        "Generators: U_{2,(1,0)}^1 * U_{2,(1,1)}^2"
    )


def test_report_to_json():
    report = classify(GateSpec(2, gate="S"), verify=True)

    assert report.to_json() == {
        "p": 2,
        "n": 1,
        "level": 2,
        "global_phase": "0/1",
        "terms": [{"coeff": 1, "den_exp": 2, "exps": [1]}],
        "generators": [{"m": 2, "exps": [1], "power": 1}],
        "classifiers": {"closed_form": 2, "recursive": 2, "matrix": 2},
        "agreed": True,
    }


def test_disagreement_is_reported():
    report = ClassifyReport(
        2,
        1,
        HierarchyLevel(3),
        PhaseFraction(),
        classifiers={CLOSED_FORM: HierarchyLevel(3), RECURSIVE: HierarchyLevel(2)},
    )

    assert not report.agreed
    assert report.to_text().endswith("Classifiers disagree!")
    assert report.to_json()["agreed"] is False
