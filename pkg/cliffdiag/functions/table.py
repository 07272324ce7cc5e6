import csv
import io
import json
from typing import Any, Dict, List

from cliffdiag.constants import LevelSpec
from cliffdiag.hierarchy import format_generator, group_structure, level_generators
from cliffdiag.utils import log

FIELDS = ["w", "m", "exps", "generator", "order"]


@log
def generator_table(p: int, n: int, w_max: int) -> List[Dict[str, Any]]:
    """Lists the generators U_{m,a} of every level up to w_max.

    Args:
        p (int): Prime.
        n (int): Number of qudits.
        w_max (int): Highest level.

    Returns:
        List[Dict[str, Any]]: One row per pair (m, a) of S_w, with the
            order p^m of the generator.
    """
    rows = []
    for w in range(1, w_max + 1):
        for m, a in level_generators(p, n, w):
            rows.append(
                {
                    "w": w,
                    "m": m,
                    "exps": list(a),
                    "generator": format_generator(p, m, a),
                    "order": p ** m,
                }
            )
    return rows


def table_json(p: int, n: int, w_max: int) -> str:
    levels = [
        {"w": w, "group": str(group_structure(LevelSpec(p, n, w)))}
        for w in range(1, w_max + 1)
    ]
    result = {"p": p, "n": n, "rows": generator_table(p, n, w_max), "levels": levels}
    return json.dumps(result)


def table_csv(p: int, n: int, w_max: int) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in generator_table(p, n, w_max):
        writer.writerow({**row, "exps": " ".join(str(x) for x in row["exps"])})
    return buffer.getvalue()
