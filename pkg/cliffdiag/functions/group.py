from dataclasses import dataclass
from typing import Any, Dict, Optional

from cliffdiag import texts
from cliffdiag.constants import ENUMERATION_LIMIT, LevelSpec
from cliffdiag.hierarchy import (
    CyclicFactorization,
    Enumeration,
    enumerate_level,
    group_structure,
)
from cliffdiag.utils import log


@dataclass
class GroupReport:
    spec: LevelSpec
    factorization: CyclicFactorization
    enumeration: Optional[Enumeration] = None

    @property
    def ok(self) -> bool:
        return self.enumeration is None or self.enumeration.ok

    def to_json(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "p": self.spec.p,
            "n": self.spec.n,
            "w": self.spec.w,
            "group": str(self.factorization),
            "factors": [
                {"exps": list(a), "order": order}
                for a, order in self.factorization.factors
            ],
        }
        if self.enumeration is not None:
            result["enumeration"] = {
                "count": self.enumeration.count,
                "expected": self.enumeration.expected,
                "ok": self.enumeration.ok,
            }
        return result

    def to_text(self) -> str:
        text = texts["group"]
        lines = [text["factorization"].format(factorization=self.factorization)]
        if self.enumeration is not None:
            lines.append(
                text["enumeration"].format(
                    count=self.enumeration.count,
                    expected=self.enumeration.expected,
                    status=text["ok"] if self.enumeration.ok else text["failed"],
                )
            )
        return "\n".join(lines)


@log
def group(
    spec: LevelSpec,
    enumerate_gates: bool = False,
    corrected: bool = True,
    limit: int = ENUMERATION_LIMIT,
) -> GroupReport:
    """Cyclic decomposition of a level, optionally checked by enumeration.

    Args:
        spec (LevelSpec): p, n and w.
        enumerate_gates (bool, optional): Count the gates of the level by
            brute force. Defaults to False.
        corrected (bool, optional): Use the shifted exponent. Defaults to True.
        limit (int, optional): Size guard of the enumeration.

    Raises:
        TooLarge: If the enumeration has too many candidates.

    Returns:
        GroupReport: Factorization and enumeration result.
    """
    factorization = group_structure(spec, corrected)
    enumeration = None
    if enumerate_gates:
        enumeration = enumerate_level(spec, corrected=corrected, limit=limit)
    return GroupReport(spec, factorization, enumeration)
