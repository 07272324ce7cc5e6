"""Constructors for the named diagonal gates.

Besides the gates listed in data/gates.yaml, two families are named
by their parameters: U<m>:<a1>,...,<an> is the generator U_{m,a} with
phase j^a/p^m and P<k>:<m> is the phase gate applying exp(2*pi*i/p^m)
to |k> only.
"""
import logging
import re
from typing import Optional, Sequence, Tuple

from cliffdiag import gate_catalog
from cliffdiag.arith import PhaseFraction, PrimeModulus
from cliffdiag.errors import UnknownGate
from cliffdiag.phasepoly import (
    FunctionTable,
    PhasePolynomial,
    from_function_table,
    to_function_table,
)
from cliffdiag.utils import Monomial

logger = logging.getLogger("cliffdiag")

GENERATOR_NAME = re.compile(r"^U(?P<m>\d+):(?P<a>\d+(?:,\d+)*)$")
PHASE_GATE_NAME = re.compile(r"^P(?P<k>\d+):(?P<m>\d+)$")


def generator_polynomial(p: int, m: int, a: Sequence[int]) -> PhasePolynomial:
    """Builds U_{m,a}, the gate with phase j_1^{a_1}...j_n^{a_n} / p^m.

    Args:
        p (int): Prime.
        m (int): Precision, m >= 1.
        a (Sequence[int]): Nonzero exponent vector with entries <= p-1.

    Raises:
        UnknownGate: If the parameters don't name a generator.

    Returns:
        PhasePolynomial: Canonical polynomial of the generator.
    """
    PrimeModulus(p)
    a = tuple(a)
    if m < 1:
        raise UnknownGate(f"Generators need precision m >= 1, got {m}.")
    if not a or not any(a) or any(not 0 <= x <= p - 1 for x in a):
        raise UnknownGate(f"{a} is not a nonzero exponent vector for p={p}.")
    return PhasePolynomial.build(p, len(a), {a: 1}, m)


def phase_gate_table(p: int, k: int, m: int) -> FunctionTable:
    """Phase table of P_k^(m), which multiplies |k> by exp(2*pi*i/p^m)."""
    PrimeModulus(p)
    if not 0 <= k <= p - 1:
        raise UnknownGate(f"Phase-gate index {k} is out of range for p={p}.")
    if m < 1:
        raise UnknownGate(f"Phase gates need precision m >= 1, got {m}.")
    phase = PhaseFraction(1, p ** m)
    return FunctionTable(
        p, 1, tuple(phase if j == k else PhaseFraction() for j in range(p))
    )


def delta_polynomial(p: int, k: int, m: int) -> PhasePolynomial:
    """Interpolated delta function delta_k(j) over the denominator p^m.

    This is the polynomial of P_k^(m); for k = 0 the constant term of
    delta_0 is carried by the global phase.
    """
    return from_function_table(phase_gate_table(p, k, m))


def parse_gate_name(name: str) -> Tuple[str, Tuple[int, ...]]:
    """Splits a gate name into its family and parameters.

    Args:
        name (str): Catalog name (e.g. CZ), U<m>:<a1>,... or P<k>:<m>.

    Raises:
        UnknownGate: If the name matches no family.

    Returns:
        Tuple[str, Tuple[int, ...]]: ("catalog", ()), ("generator", (m, *a))
            or ("phase", (k, m)).
    """
    name = name.strip()
    if name in gate_catalog:
        return "catalog", ()
    match = GENERATOR_NAME.match(name)
    if match:
        exponents = tuple(int(x) for x in match.group("a").split(","))
        return "generator", (int(match.group("m")),) + exponents
    match = PHASE_GATE_NAME.match(name)
    if match:
        return "phase", (int(match.group("k")), int(match.group("m")))
    raise UnknownGate(f"Unknown gate: {name!r}")


def _catalog_gate(name: str, p: int) -> Tuple[int, Monomial]:
    entry = gate_catalog[name]
    primes = entry.get("primes")
    if primes and p not in primes:
        raise UnknownGate(f"{name} is only defined for p in {primes}.")
    return entry["precision"], tuple(entry["exponents"])


def named_gate_table(name: str, p: int, n: Optional[int] = None) -> FunctionTable:
    """Builds the phase table of a named gate.

    Args:
        name (str): Gate name.
        p (int): Prime.
        n (Optional[int], optional): Number of qudits. The gate fixes n,
            so this only has to agree with it.

    Raises:
        UnknownGate: If the name, its parameters or n are invalid.

    Returns:
        FunctionTable: Phases of the gate.
    """
    PrimeModulus(p)
    family, parameters = parse_gate_name(name)
    if family == "phase":
        k, m = parameters
        table = phase_gate_table(p, k, m)
    else:
        if family == "catalog":
            m, a = _catalog_gate(name.strip(), p)
        else:
            m, a = parameters[0], parameters[1:]
        table = to_function_table(generator_polynomial(p, m, a))
    if n is not None and n != table.n:
        raise UnknownGate(f"{name} acts on {table.n} qudits, not {n}.")
    logger.debug("Built %s for p=%d: %s", name, p, table)
    return table
