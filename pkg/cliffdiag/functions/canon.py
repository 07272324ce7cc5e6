from typing import Any, Dict

from cliffdiag import texts
from cliffdiag.functions.classify import polynomial_json
from cliffdiag.functions.gate_spec import GateSpec
from cliffdiag.phasepoly import PhasePolynomial
from cliffdiag.utils import log


@log
def canonical_form(spec: GateSpec) -> PhasePolynomial:
    """Canonical polynomial of a gate.

    Raises:
        NotInHierarchy: If some phase has a denominator that isn't a power of p.
    """
    return spec.polynomial()


def canon_json(poly: PhasePolynomial) -> Dict[str, Any]:
    return {
        "p": poly.p,
        "n": poly.n,
        "polynomial": str(poly),
        **polynomial_json(poly),
    }


def canon_text(poly: PhasePolynomial) -> str:
    text = texts["canon"]
    lines = [text["polynomial"].format(polynomial=poly)]
    if poly.global_phase:
        lines.append(text["global_phase"].format(global_phase=poly.global_phase))
    return "\n".join(lines)
