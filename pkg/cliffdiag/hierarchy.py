"""Levels of diagonal gates in the Clifford hierarchy.

Two independent classifiers live here. level_closed_form reads the level
off the canonical polynomial: a coefficient c_a over p^M whose lowest
nonzero base-p digit sits at position t contributes the level
(p-1)(M-t-1) + wt(a). level_recursive_oracle only uses the definition of
the hierarchy: a diagonal gate U is a Pauli up to phase, or its level is
one more than the largest level of the diagonal parts V_i in
U X(e_i) U^dagger = X(e_i) V_i.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from typing import Dict, List, Optional, Sequence, Tuple

from cliffdiag.arith import PhaseFraction, PrimeModulus
from cliffdiag.constants import (
    ENUMERATION_CHUNK,
    ENUMERATION_LIMIT,
    ENUMERATION_WORKERS,
    NOT_IN_HIERARCHY_LABEL,
    LevelSpec,
)
from cliffdiag.errors import ClassifierDisagreement, NotInHierarchy, TooLarge
from cliffdiag.gates import named_gate_table
from cliffdiag.phasepoly import (
    FunctionTable,
    PhasePolynomial,
    from_function_table,
    to_function_table,
)
from cliffdiag.utils import (
    Monomial,
    base_p_digits,
    basis_vectors,
    format_factorization,
    format_polynomial,
    log,
    valuation,
    weight,
)

logger = logging.getLogger("cliffdiag")


@dataclass(frozen=True)
class HierarchyLevel:
    """Level w >= 1 of a diagonal gate, or None if it is in no level."""

    w: Optional[int]

    def __post_init__(self):
        if self.w is not None and self.w < 1:
            raise ValueError("Levels start at 1.")

    @property
    def in_hierarchy(self) -> bool:
        return self.w is not None

    def to_json(self):
        return self.w if self.in_hierarchy else NOT_IN_HIERARCHY_LABEL

    def __str__(self) -> str:
        return str(self.to_json())


NOT_IN_HIERARCHY = HierarchyLevel(None)


@dataclass(frozen=True)
class GeneratorTerm:
    """The gate U_{m,a}^power, whose phase is power * j^a / p^m."""

    precision: int
    exponents: Monomial
    power: int

    def __post_init__(self):
        if self.precision < 1:
            raise ValueError("Generators have precision at least 1.")
        if not any(self.exponents):
            raise ValueError("The constant monomial is a global phase.")
        if self.power < 1:
            raise ValueError("Generator powers are positive.")

    def to_polynomial(self, p: int) -> PhasePolynomial:
        return PhasePolynomial.build(
            p, len(self.exponents), {self.exponents: self.power}, self.precision
        )

    def __str__(self) -> str:
        a = ",".join(str(x) for x in self.exponents)
        return f"U_{{{self.precision},({a})}}^{self.power}"


@dataclass(frozen=True)
class Decomposition:
    generators: Tuple[GeneratorTerm, ...]
    global_phase: PhaseFraction = field(default_factory=PhaseFraction)


@dataclass(frozen=True)
class CyclicFactorization:
    """C^w_d as U(1) times a product of cyclic p-groups.

    Attributes:
        factors (Tuple[Tuple[Monomial, int], ...]): One cyclic factor
            per monomial, with its order.
        includes_continuous_phase (bool): The U(1) of global phases
            is always present.
    """

    factors: Tuple[Tuple[Monomial, int], ...]
    includes_continuous_phase: bool = True

    @property
    def orders(self) -> List[int]:
        return [order for _, order in self.factors]

    @property
    def order(self) -> int:
        """Order of the finite part, i.e. the number of gates mod phase."""
        return reduce(lambda x, y: x * y, self.orders, 1)

    def __str__(self) -> str:
        return format_factorization(self.orders)


@log
def level_closed_form(poly: PhasePolynomial) -> HierarchyLevel:
    """Reads the hierarchy level off a canonical polynomial.

    Args:
        poly (PhasePolynomial): Canonical polynomial.

    Returns:
        HierarchyLevel: Level; a pure global phase is level 1.
    """
    p, precision = poly.p, poly.precision
    level = 1
    for a, c in poly.coefficients:
        for t, digit in enumerate(base_p_digits(c, p, precision)):
            if digit:
                level = max(level, (p - 1) * (precision - t - 1) + weight(a))
    return HierarchyLevel(level)


def _reduce(
    p: int, precision: int, values: Sequence[int]
) -> Tuple[int, Tuple[int, ...]]:
    """Sets theta(0) = 0 and lowers the precision as far as possible."""
    modulus = p ** precision
    origin = values[0]
    values = [(v - origin) % modulus for v in values]
    while precision > 0 and all(v % p == 0 for v in values):
        precision -= 1
        values = [v // p for v in values]
    return precision, tuple(values)


def _is_pauli(p: int, n: int, precision: int, values: Tuple[int, ...]) -> bool:
    """Checks whether a reduced table is linear with denominator p."""
    if precision == 0:
        return True
    if precision > 1:
        return False
    slopes = [values[p ** (n - 1 - i)] for i in range(n)]
    for index, j in enumerate(basis_vectors(p, n)):
        if values[index] != sum(w * x for w, x in zip(slopes, j)) % p:
            return False
    return True


def _difference(
    p: int, n: int, precision: int, values: Tuple[int, ...], axis: int
) -> Tuple[int, ...]:
    modulus = p ** precision
    stride = p ** (n - 1 - axis)
    result = []
    for index, value in enumerate(values):
        digit = (index // stride) % p
        shifted = index + stride if digit < p - 1 else index - (p - 1) * stride
        result.append((values[shifted] - value) % modulus)
    return tuple(result)


def _oracle_level(
    p: int,
    n: int,
    precision: int,
    values: Sequence[int],
    memo: Dict[Tuple[int, Tuple[int, ...]], int],
) -> int:
    key = _reduce(p, precision, values)
    if key in memo:
        return memo[key]
    precision, reduced = key
    if _is_pauli(p, n, precision, reduced):
        level = 1
    else:
        differences = (_difference(p, n, precision, reduced, i) for i in range(n))
        level = 1 + max(_oracle_level(p, n, precision, d, memo) for d in differences)
    memo[key] = level
    return level


@log
def level_recursive_oracle(table: FunctionTable) -> HierarchyLevel:
    """Finds the level of a phase table from the hierarchy's definition.

    Args:
        table (FunctionTable): Phases of the gate.

    Returns:
        HierarchyLevel: Level, or NOT_IN_HIERARCHY when some phase has
            a denominator that isn't a power of p.
    """
    try:
        precision, values = table.normalized().to_integers()
    except NotInHierarchy:
        return NOT_IN_HIERARCHY
    return HierarchyLevel(_oracle_level(table.p, table.n, precision, values, {}))


def decompose(poly: PhasePolynomial) -> Decomposition:
    """Splits a gate into generators U_{M,a}^{c_a} and a global phase.

    Args:
        poly (PhasePolynomial): Canonical polynomial.

    Returns:
        Decomposition: One generator per nonzero coefficient.
    """
    return Decomposition(
        tuple(GeneratorTerm(poly.precision, a, c) for a, c in poly.coefficients),
        poly.global_phase,
    )


def recompose(decomposition: Decomposition, p: int, n: int) -> PhasePolynomial:
    """Multiplies the generators of a decomposition back together."""
    poly = PhasePolynomial.build(p, n, {}, 0, decomposition.global_phase)
    for term in decomposition.generators:
        poly = poly + term.to_polynomial(p)
    return poly


def generator_order(term: GeneratorTerm, p: int) -> int:
    """Order of U_{m,a}^power modulo global phase, p^(m - v_p(power))."""
    return p ** max(term.precision - valuation(term.power, p), 0)


def gate_order(poly: PhasePolynomial) -> int:
    """Order of the gate modulo global phase.

    The precision of a canonical polynomial is minimal, so some
    coefficient is a unit and p^M is the smallest power killing all of them.
    """
    return poly.p ** poly.precision


def _check_level_spec(spec: LevelSpec) -> None:
    PrimeModulus(spec.p)
    if spec.n < 1:
        raise ValueError("There must be at least one qudit.")
    if spec.w < 1:
        raise ValueError("Levels start at 1.")


def _nonzero_monomials(p: int, n: int) -> List[Monomial]:
    return [a for a in basis_vectors(p, n) if any(a)]


def group_structure(spec: LevelSpec, corrected: bool = True) -> CyclicFactorization:
    """Decomposes C^w_d into cyclic factors.

    Each nonzero monomial a with wt(a) <= w contributes Z_{p^m} with
    m = floor((w - wt(a)) / (p-1)) + 1. With corrected=False the
    trailing +1 is dropped, which undercounts every level (for
    instance it gives the trivial group for w = 1).

    Args:
        spec (LevelSpec): p, n and w.
        corrected (bool, optional): Use the shifted exponent.
            Defaults to True.

    Returns:
        CyclicFactorization: Factors in row-major monomial order.
    """
    _check_level_spec(spec)
    p, n, w = spec
    shift = 1 if corrected else 0
    factors = []
    for a in _nonzero_monomials(p, n):
        if weight(a) > w:
            continue
        m = (w - weight(a)) // (p - 1) + shift
        if m >= 1:
            factors.append((a, p ** m))
    return CyclicFactorization(tuple(factors))


def level_generators(p: int, n: int, w: int) -> List[Tuple[int, Monomial]]:
    """Lists S_w, the pairs (m, a) with (p-1)(m-1) + wt(a) = w.

    Args:
        p (int): Prime.
        n (int): Number of qudits.
        w (int): Level.

    Returns:
        List[Tuple[int, Monomial]]: Pairs sorted by precision, then
            with j1 before j2.
    """
    _check_level_spec(LevelSpec(p, n, w))
    pairs = []
    for a in _nonzero_monomials(p, n):
        rest = w - weight(a)
        if rest >= 0 and rest % (p - 1) == 0:
            pairs.append((rest // (p - 1) + 1, a))
    return sorted(pairs, key=lambda pair: (pair[0], [-x for x in pair[1]]))


def format_generator(p: int, m: int, a: Monomial) -> str:
    """Formats the exponent of U_{m,a}, e.g. j1*j2/4."""
    return format_polynomial([(a, 1)], p, m)


def uses_only_pth_roots(table: FunctionTable) -> bool:
    """Checks that every normalized phase has a denominator dividing p."""
    return all(p.denominator in (1, table.p) for p in table.normalized().values)


@dataclass(frozen=True)
class Enumeration:
    """Result of scanning every gate of a level."""

    spec: LevelSpec
    count: int
    expected: int
    gates: Tuple[PhasePolynomial, ...] = ()

    @property
    def ok(self) -> bool:
        return self.count == self.expected


def _decode(code: int, modulus: int, monomials: List[Monomial]) -> Dict[Monomial, int]:
    coefficients = {}
    for a in monomials:
        code, c = divmod(code, modulus)
        if c:
            coefficients[a] = c
    return coefficients


@log
def enumerate_level(
    spec: LevelSpec,
    collect: bool = False,
    verify_sample: int = 0,
    corrected: bool = True,
    limit: int = ENUMERATION_LIMIT,
    workers: int = ENUMERATION_WORKERS,
    chunk: int = ENUMERATION_CHUNK,
) -> Enumeration:
    """Counts the gates of C^w_d modulo global phase by brute force.

    Every gate of level <= w has precision at most
    floor((w-1)/(p-1)) + 1, so all coefficient vectors over that
    precision are scanned. Chunks of candidates are scanned by a
    thread pool; the result doesn't depend on the schedule.

    Args:
        spec (LevelSpec): p, n and w.
        collect (bool, optional): Keep the gates found. Defaults to False.
        verify_sample (int, optional): Number of gates found to
            cross-check with level_recursive_oracle. Defaults to 0.
        corrected (bool, optional): Passed to group_structure for the
            expected count. Defaults to True.
        limit (int, optional): Maximum number of candidates.
        workers (int, optional): Number of scanning threads.
        chunk (int, optional): Candidates per task.

    Raises:
        TooLarge: If there are more than limit candidates.
        ClassifierDisagreement: If a sampled gate gets two levels.

    Returns:
        Enumeration: Count, the count predicted by group_structure
            and the gates when collect is set.
    """
    _check_level_spec(spec)
    p, n, w = spec
    bound = (w - 1) // (p - 1) + 1
    modulus = p ** bound
    monomials = _nonzero_monomials(p, n)
    candidates = modulus ** len(monomials)
    if candidates > limit:
        logger.warning("Refusing to scan %d candidates for %s", candidates, spec)
        raise TooLarge(f"{candidates} candidates exceed the limit of {limit}.")
    keep = collect or verify_sample > 0

    def scan(start: int) -> Tuple[int, List[PhasePolynomial]]:
        count = 0
        found = []
        for code in range(start, min(start + chunk, candidates)):
            coefficients = _decode(code, modulus, monomials)
            poly = PhasePolynomial.build(p, n, coefficients, bound)
            if level_closed_form(poly).w <= w:
                count += 1
                if keep:
                    found.append(poly)
        logger.debug("Scanned from candidate %d: %d found", start, count)
        return count, found

    with ThreadPoolExecutor(workers) as executor:
        results = list(executor.map(scan, range(0, candidates, chunk)))

    count = sum(c for c, _ in results)
    gates = [poly for _, found in results for poly in found]
    if verify_sample:
        step = max(1, len(gates) // verify_sample)
        for poly in gates[::step][:verify_sample]:
            closed = level_closed_form(poly)
            recursive = level_recursive_oracle(to_function_table(poly))
            if closed != recursive:
                logger.error("Levels disagree for %s: %s, %s", poly, closed, recursive)
                raise ClassifierDisagreement(
                    f"{poly}: closed form gives {closed}, recursion gives {recursive}."
                )
    expected = group_structure(spec, corrected).order
    return Enumeration(spec, count, expected, tuple(gates) if collect else ())


@log
def level_of_named(name: str, p: int, n: Optional[int] = None) -> HierarchyLevel:
    """Classifies a named gate with both classifiers.

    Args:
        name (str): Z, S, T, CZ, CS, CCZ, U<m>:<a1>,... or P<k>:<m>.
        p (int): Prime.
        n (int, optional): Number of qudits; inferred from the gate.

    Raises:
        UnknownGate: If the name or its parameters are invalid.
        ClassifierDisagreement: If the classifiers disagree.

    Returns:
        HierarchyLevel: Level of the gate.
    """
    table = named_gate_table(name, p, n)
    closed = level_closed_form(from_function_table(table))
    recursive = level_recursive_oracle(table)
    if closed != recursive:
        logger.error("Levels disagree for %s: %s, %s", name, closed, recursive)
        raise ClassifierDisagreement(
            f"{name}: closed form gives {closed}, recursion gives {recursive}."
        )
    return closed
