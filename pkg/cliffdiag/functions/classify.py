import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from cliffdiag import texts
from cliffdiag.arith import PhaseFraction
from cliffdiag.constants import MATRIX_LIMIT
from cliffdiag.errors import NotInHierarchy
from cliffdiag.functions.gate_spec import GateSpec
from cliffdiag.hierarchy import (
    NOT_IN_HIERARCHY,
    Decomposition,
    HierarchyLevel,
    decompose,
    level_closed_form,
    level_recursive_oracle,
)
from cliffdiag.operators import level_matrix
from cliffdiag.phasepoly import PhasePolynomial, from_function_table
from cliffdiag.utils import log

logger = logging.getLogger("cliffdiag")

CLOSED_FORM = "closed_form"
RECURSIVE = "recursive"
MATRIX = "matrix"


def polynomial_json(poly: PhasePolynomial) -> Dict[str, Any]:
    """Global phase and terms of a polynomial in the wire format."""
    return {
        "global_phase": str(poly.global_phase),
        "terms": [
            {"coeff": c, "den_exp": poly.precision, "exps": list(a)}
            for a, c in poly.coefficients
        ],
    }


@dataclass
class ClassifyReport:
    """Outcome of classifying one gate.

    Attributes:
        p (int): Qudit dimension.
        n (int): Number of qudits.
        level (HierarchyLevel): Level from the closed form.
        global_phase (PhaseFraction): Phase of |0...0>.
        polynomial (Optional[PhasePolynomial]): Canonical polynomial;
            None for gates outside the hierarchy.
        decomposition (Optional[Decomposition]): Generators of the gate.
        classifiers (Dict[str, HierarchyLevel]): Level found by each
            classifier that ran.
        skipped (Dict[str, str]): Classifiers that didn't run, with the reason.
    """

    p: int
    n: int
    level: HierarchyLevel
    global_phase: PhaseFraction
    polynomial: Optional[PhasePolynomial] = None
    decomposition: Optional[Decomposition] = None
    classifiers: Dict[str, HierarchyLevel] = field(default_factory=dict)
    skipped: Dict[str, str] = field(default_factory=dict)

    @property
    def agreed(self) -> bool:
        return len(set(self.classifiers.values())) <= 1

    def to_json(self) -> Dict[str, Any]:
        if self.polynomial is not None:
            body = polynomial_json(self.polynomial)
        else:
            body = {"global_phase": str(self.global_phase), "terms": []}
        generators = self.decomposition.generators if self.decomposition else ()
        return {
            "p": self.p,
            "n": self.n,
            "level": self.level.to_json(),
            **body,
            "generators": [
                {"m": g.precision, "exps": list(g.exponents), "power": g.power}
                for g in generators
            ],
            "classifiers": {k: v.to_json() for k, v in self.classifiers.items()},
            "agreed": self.agreed,
        }

    def to_text(self) -> str:
        text = texts["classify"]
        lines = [
            text["level"].format(level=self.level),
            text["polynomial"].format(
                polynomial=self.polynomial if self.polynomial is not None else "-"
            ),
            text["global_phase"].format(global_phase=self.global_phase),
        ]
        if self.decomposition is not None:
            generators = " * ".join(str(g) for g in self.decomposition.generators)
            lines.append(text["generators"].format(generators=generators or "-"))
        if len(self.classifiers) > 1 or self.skipped:
            for name, level in self.classifiers.items():
                lines.append(text["classifier"].format(name=name, level=level))
            for name, reason in self.skipped.items():
                lines.append(text["skipped"].format(name=name, reason=reason))
            lines.append(text["agreed"] if self.agreed else text["disagreed"])
        return "\n".join(lines)


@log
def classify(
    spec: GateSpec, verify: bool = False, matrix_limit: int = MATRIX_LIMIT
) -> ClassifyReport:
    """Finds the hierarchy level of a gate.

    The closed form always runs. With verify, the recursive oracle and,
    when the space has at most matrix_limit basis states, the operator
    classifier run as well.

    Args:
        spec (GateSpec): Gate to classify.
        verify (bool, optional): Run the independent classifiers.
            Defaults to False.
        matrix_limit (int, optional): Size guard of the operator classifier.

    Returns:
        ClassifyReport: Level, canonical form and classifier record.
    """
    table = spec.table()
    try:
        poly: Optional[PhasePolynomial] = from_function_table(table)
    except NotInHierarchy:
        poly = None
    level = level_closed_form(poly) if poly is not None else NOT_IN_HIERARCHY
    report = ClassifyReport(
        table.p,
        table.n,
        level,
        table[0],
        poly,
        decompose(poly) if poly is not None else None,
        {CLOSED_FORM: level},
    )
    if verify:
        report.classifiers[RECURSIVE] = level_recursive_oracle(table)
        size = table.p ** table.n
        if size <= matrix_limit:
            report.classifiers[MATRIX] = level_matrix(table, matrix_limit)
        else:
            report.skipped[MATRIX] = f"{size} basis states"
        if not report.agreed:
            logger.error("Classifiers disagree on %s: %s", table, report.classifiers)
    return report
