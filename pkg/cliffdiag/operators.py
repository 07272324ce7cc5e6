"""Generalized permutation operators and the qudit Pauli group.

Every operator here maps basis states to basis states up to a phase:

    |j> -> exp(2*pi*i*phase(j)) |perm(j)>

with the phase attached to the source state j. The class is closed
under products and inverses and contains X(v), Z(w) and every diagonal
gate, so conjugations are computed exactly without dense matrices.
Basis states are addressed by their row-major flat index.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple, Union

from cliffdiag.arith import PhaseFraction, PrimeModulus
from cliffdiag.constants import MATRIX_LIMIT
from cliffdiag.errors import DimensionMismatch, MalformedConjugation, TooLarge
from cliffdiag.hierarchy import NOT_IN_HIERARCHY, HierarchyLevel
from cliffdiag.phasepoly import FunctionTable, direction_vector
from cliffdiag.utils import (
    BasisVector,
    basis_vectors,
    index_to_vector,
    log,
    unit_vector,
    vector_to_index,
)

logger = logging.getLogger("cliffdiag")


@dataclass(frozen=True)
class GeneralizedPermutationOp:
    """A permutation of the basis followed by per-state phases.

    Attributes:
        p (int): Qudit dimension.
        n (int): Number of qudits.
        permutation (Tuple[int, ...]): Flat index of the image of each
            basis state.
        phases (FunctionTable): Phase picked up by each source state.
    """

    p: int
    n: int
    permutation: Tuple[int, ...]
    phases: FunctionTable

    def __post_init__(self):
        PrimeModulus(self.p)
        size = self.p ** self.n
        if (self.phases.p, self.phases.n) != (self.p, self.n):
            raise DimensionMismatch("The phase table acts on a different space.")
        if sorted(self.permutation) != list(range(size)):
            raise ValueError("The permutation is not a bijection of the basis.")

    @property
    def size(self) -> int:
        return self.p ** self.n

    @property
    def is_diagonal(self) -> bool:
        return all(k == j for j, k in enumerate(self.permutation))

    def __matmul__(
        self, other: "GeneralizedPermutationOp"
    ) -> "GeneralizedPermutationOp":
        return compose(self, other)

    def apply(self, j: Sequence[int]) -> Tuple[PhaseFraction, BasisVector]:
        """Image of |j> as (phase, basis vector)."""
        index = vector_to_index(j, self.p)
        target = self.permutation[index]
        return self.phases[index], index_to_vector(target, self.p, self.n)

    def normalized(self) -> "GeneralizedPermutationOp":
        """Representative modulo global phase, with phase(0) = 0."""
        return GeneralizedPermutationOp(
            self.p, self.n, self.permutation, self.phases.normalized()
        )


@dataclass(frozen=True)
class PauliElement:
    """The Pauli operator exp(2*pi*i*phase) X(v) Z(w)."""

    x_part: BasisVector
    z_part: BasisVector
    phase: PhaseFraction

    def to_operator(self, p: int) -> GeneralizedPermutationOp:
        n = len(self.x_part)
        product = compose(pauli_x(p, n, self.x_part), pauli_z(p, n, self.z_part))
        return scalar(product, self.phase)


def _check_shape(a: GeneralizedPermutationOp, b: GeneralizedPermutationOp) -> None:
    if (a.p, a.n) != (b.p, b.n):
        raise DimensionMismatch(
            f"Operators on (p={a.p}, n={a.n}) and (p={b.p}, n={b.n}) can't be combined."
        )


def identity(p: int, n: int) -> GeneralizedPermutationOp:
    return diagonal(FunctionTable(p, n, (PhaseFraction(),) * p ** n))


def diagonal(table: FunctionTable) -> GeneralizedPermutationOp:
    """The diagonal gate with the given phases."""
    return GeneralizedPermutationOp(
        table.p, table.n, tuple(range(table.p ** table.n)), table
    )


def scalar(
    op: GeneralizedPermutationOp, phase: PhaseFraction
) -> GeneralizedPermutationOp:
    """Multiplies an operator by the global phase exp(2*pi*i*phase)."""
    values = tuple(x + phase for x in op.phases.values)
    return GeneralizedPermutationOp(
        op.p, op.n, op.permutation, FunctionTable(op.p, op.n, values)
    )


def compose(
    a: GeneralizedPermutationOp, b: GeneralizedPermutationOp
) -> GeneralizedPermutationOp:
    """Operator product a * b (b acts first).

    Args:
        a (GeneralizedPermutationOp): Left factor.
        b (GeneralizedPermutationOp): Right factor.

    Raises:
        DimensionMismatch: If the operators act on different spaces.

    Returns:
        GeneralizedPermutationOp: The exact product.
    """
    _check_shape(a, b)
    permutation = tuple(a.permutation[k] for k in b.permutation)
    phases = tuple(b.phases[j] + a.phases[k] for j, k in enumerate(b.permutation))
    return GeneralizedPermutationOp(
        a.p, a.n, permutation, FunctionTable(a.p, a.n, phases)
    )


def inverse(op: GeneralizedPermutationOp) -> GeneralizedPermutationOp:
    """Exact inverse (the adjoint, since the operator is unitary)."""
    permutation = [0] * op.size
    phases = [PhaseFraction()] * op.size
    for j, k in enumerate(op.permutation):
        permutation[k] = j
        phases[k] = -op.phases[j]
    return GeneralizedPermutationOp(
        op.p, op.n, tuple(permutation), FunctionTable(op.p, op.n, tuple(phases))
    )


def pauli_x(p: int, n: int, v: Sequence[int]) -> GeneralizedPermutationOp:
    """X(v): |j> -> |j + v>."""
    v = direction_vector(v, n, p)
    permutation = tuple(
        vector_to_index([(x + y) % p for x, y in zip(j, v)], p)
        for j in basis_vectors(p, n)
    )
    return GeneralizedPermutationOp(
        p, n, permutation, FunctionTable(p, n, (PhaseFraction(),) * p ** n)
    )


def pauli_z(p: int, n: int, w: Sequence[int]) -> GeneralizedPermutationOp:
    """Z(w): |j> -> omega^<w,j> |j> with omega = exp(2*pi*i/p)."""
    w = direction_vector(w, n, p)
    return diagonal(
        FunctionTable.from_function(
            p, n, lambda j: PhaseFraction(sum(x * y for x, y in zip(w, j)), p)
        )
    )


def conjugate(
    op: GeneralizedPermutationOp, by: GeneralizedPermutationOp
) -> GeneralizedPermutationOp:
    """Returns by * op * by^dagger."""
    return compose(compose(by, op), inverse(by))


def conjugate_diagonal(
    table: FunctionTable, v: Union[int, Sequence[int]]
) -> FunctionTable:
    """Diagonal part V of U X(v) U^dagger = X(v) V.

    Args:
        table (FunctionTable): Phases of the diagonal gate U.
        v (Union[int, Sequence[int]]): Axis i (meaning e_i) or a vector.

    Raises:
        MalformedConjugation: If the product isn't X(v) times a
            diagonal gate.

    Returns:
        FunctionTable: Phases of V.
    """
    x = pauli_x(table.p, table.n, direction_vector(v, table.n, table.p))
    product = conjugate(x, diagonal(table))
    residual = compose(inverse(x), product)
    if not residual.is_diagonal:
        raise MalformedConjugation(
            f"U X(v) U^dagger is not X(v) times a diagonal for {table}."
        )
    return residual.phases


def _phase_group_contains(phase: PhaseFraction, p: int) -> bool:
    # <i> for qubits, <omega> otherwise
    bound = 4 if p == 2 else p
    return bound % phase.denominator == 0


def pauli_decomposition(
    op: GeneralizedPermutationOp, modulo_phase: bool = False
) -> Optional[PauliElement]:
    """Writes an operator as exp(2*pi*i*phase) X(v) Z(w) if possible.

    Args:
        op (GeneralizedPermutationOp): Operator.
        modulo_phase (bool, optional): Accept any global phase instead of
            only the phases of the Pauli group. Defaults to False.

    Returns:
        Optional[PauliElement]: The decomposition, or None if op isn't
            a Pauli operator.
    """
    p, n = op.p, op.n
    v = index_to_vector(op.permutation[0], p, n)
    for j in basis_vectors(p, n):
        target = vector_to_index([(x + y) % p for x, y in zip(j, v)], p)
        if op.permutation[vector_to_index(j, p)] != target:
            return None
    phase = op.phases[0]
    linear = op.phases.normalized()
    w = []
    for i in range(n):
        slope = linear[unit_vector(i, n)]
        if p % slope.denominator:
            return None
        w.append(slope.numerator * (p // slope.denominator))
    for index, j in enumerate(basis_vectors(p, n)):
        if linear[index] != PhaseFraction(sum(x * y for x, y in zip(w, j)), p):
            return None
    if not modulo_phase and not _phase_group_contains(phase, p):
        return None
    return PauliElement(tuple(v), tuple(w), phase)


def is_pauli(op: GeneralizedPermutationOp, modulo_phase: bool = False) -> bool:
    return pauli_decomposition(op, modulo_phase) is not None


@log
def is_clifford(op: GeneralizedPermutationOp) -> bool:
    """Checks that op maps every X(e_i) and Z(e_i) to a Pauli up to phase."""
    for i in range(op.n):
        e = unit_vector(i, op.n)
        for pauli in (pauli_x(op.p, op.n, e), pauli_z(op.p, op.n, e)):
            if not is_pauli(conjugate(pauli, op), modulo_phase=True):
                return False
    return True


# Operators over integer phase numerators modulo p^M. Same composition
# rule as GeneralizedPermutationOp, without building PhaseFractions.
IntegerOp = Tuple[Tuple[int, ...], Tuple[int, ...]]


def _compose_integers(a: IntegerOp, b: IntegerOp, modulus: int) -> IntegerOp:
    permutation = tuple(a[0][k] for k in b[0])
    phases = tuple((b[1][j] + a[1][k]) % modulus for j, k in enumerate(b[0]))
    return permutation, phases


def _inverse_integers(op: IntegerOp, modulus: int) -> IntegerOp:
    permutation = [0] * len(op[0])
    phases = [0] * len(op[0])
    for j, k in enumerate(op[0]):
        permutation[k] = j
        phases[k] = -op[1][j] % modulus
    return tuple(permutation), tuple(phases)


def _reduce_integers(
    p: int, precision: int, values: Sequence[int]
) -> Tuple[int, Tuple[int, ...]]:
    """Sets phase(0) = 0 and drops common factors of p."""
    origin = values[0]
    values = tuple((v - origin) % p ** precision for v in values)
    while precision > 0 and all(v % p == 0 for v in values):
        precision -= 1
        values = tuple(v // p for v in values)
    return precision, values


def _is_pauli_integers(
    p: int, n: int, precision: int, values: Tuple[int, ...]
) -> bool:
    """Diagonal Pauli test on a reduced table, matching pauli_decomposition."""
    if precision == 0:
        return True
    if precision > 1:
        return False
    w = [values[vector_to_index(unit_vector(i, n), p)] for i in range(n)]
    return all(
        values[index] == sum(x * y for x, y in zip(w, j)) % p
        for index, j in enumerate(basis_vectors(p, n))
    )


def _conjugate_integers(
    values: Tuple[int, ...], x: IntegerOp, modulus: int
) -> Tuple[int, ...]:
    """Integer counterpart of conjugate_diagonal for a fixed X(v)."""
    d = (tuple(range(len(values))), values)
    x_inverse = _inverse_integers(x, modulus)
    product = _compose_integers(
        _compose_integers(d, x, modulus), _inverse_integers(d, modulus), modulus
    )
    residual = _compose_integers(x_inverse, product, modulus)
    if any(k != j for j, k in enumerate(residual[0])):
        raise MalformedConjugation("U X(v) U^dagger is not X(v) times a diagonal.")
    return residual[1]


def _matrix_level(
    p: int,
    n: int,
    precision: int,
    values: Sequence[int],
    shifts: Sequence[IntegerOp],
    memo: Dict[Tuple[int, Tuple[int, ...]], int],
) -> int:
    key = _reduce_integers(p, precision, values)
    if key in memo:
        return memo[key]
    precision, reduced = key
    if _is_pauli_integers(p, n, precision, reduced):
        level = 1
    else:
        modulus = p ** precision
        level = 1 + max(
            _matrix_level(
                p, n, precision, _conjugate_integers(reduced, x, modulus), shifts, memo
            )
            for x in shifts
        )
    memo[key] = level
    return level


@log
def level_matrix(
    gate: Union[FunctionTable, GeneralizedPermutationOp], limit: int = MATRIX_LIMIT
) -> HierarchyLevel:
    """Finds the level of a diagonal gate by conjugating operators.

    Args:
        gate (Union[FunctionTable, GeneralizedPermutationOp]): Diagonal gate.
        limit (int, optional): Largest number of basis states accepted.
            Defaults to MATRIX_LIMIT.

    Raises:
        ValueError: If the operator isn't diagonal.
        TooLarge: If the space has more than limit basis states.

    Returns:
        HierarchyLevel: Level, or NOT_IN_HIERARCHY when some phase has
            a denominator that isn't a power of p.
    """
    if isinstance(gate, GeneralizedPermutationOp):
        if not gate.is_diagonal:
            raise ValueError("Only diagonal operators can be classified.")
        gate = gate.phases
    if gate.p ** gate.n > limit:
        size = gate.p ** gate.n
        logger.warning("Refusing to conjugate operators on %d basis states", size)
        raise TooLarge(f"{size} basis states exceed the limit of {limit}.")
    # the recursion only terminates for gates of the hierarchy
    if not all(phase.p_power(gate.p) for phase in gate.normalized().values):
        return NOT_IN_HIERARCHY
    precision, values = gate.to_integers()
    shifts = [pauli_x(gate.p, gate.n, unit_vector(i, gate.n)) for i in range(gate.n)]
    integer_shifts = [(x.permutation, (0,) * x.size) for x in shifts]
    return HierarchyLevel(
        _matrix_level(gate.p, gate.n, precision, values, integer_shifts, {})
    )
