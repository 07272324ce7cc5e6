"""Phase polynomials and phase tables of diagonal qudit gates.

A diagonal gate on n qudits of prime dimension p is fixed by its phase
function theta: Z_p^n -> Q/Z, the gate being |j> -> exp(2*pi*i*theta(j))|j>.
FunctionTable stores theta point by point; PhasePolynomial stores it as

    theta(j) = global_phase + sum_a c_a * j_1^{a_1}...j_n^{a_n} / p^M

with per-variable degrees a_i <= p-1 and c_a in Z_{p^M}. Basis states
are always evaluated through their integer representatives 0..p-1.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import (
    Callable,
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from cliffdiag.arith import PhaseFraction, PrimeModulus
from cliffdiag.errors import DimensionMismatch, InconsistentDifference, NotInHierarchy
from cliffdiag.utils import (
    BasisVector,
    Monomial,
    basis_vectors,
    format_polynomial,
    index_to_vector,
    monomial_value,
    unit_vector,
    vector_to_index,
)

logger = logging.getLogger("cliffdiag")

Direction = Union[int, Sequence[int]]


@dataclass(frozen=True)
class FunctionTable:
    """Phases of a diagonal gate, one per basis state.

    values[k] is the phase of the basis state whose row-major
    index is k (last qudit fastest).
    """

    p: int
    n: int
    values: Tuple[PhaseFraction, ...]

    def __post_init__(self):
        if self.n < 1:
            raise DimensionMismatch("A table needs at least one qudit.")
        if len(self.values) != self.p ** self.n:
            raise DimensionMismatch(
                f"Expected {self.p ** self.n} phases for p={self.p}, n={self.n}, "
                f"got {len(self.values)}."
            )

    @classmethod
    def from_values(
        cls, p: int, n: int, values: Iterable[Union[PhaseFraction, str]]
    ) -> "FunctionTable":
        """Builds a table from phases or "num/den" strings."""
        phases = tuple(
            v if isinstance(v, PhaseFraction) else PhaseFraction.parse(v)
            for v in values
        )
        return cls(p, n, phases)

    @classmethod
    def from_function(
        cls, p: int, n: int, func: Callable[[BasisVector], PhaseFraction]
    ) -> "FunctionTable":
        """Builds a table by evaluating func on every basis vector."""
        return cls(p, n, tuple(func(j) for j in basis_vectors(p, n)))

    def __getitem__(self, j: Union[int, Sequence[int]]) -> PhaseFraction:
        if isinstance(j, int):
            return self.values[j]
        self._check_vector(j)
        return self.values[vector_to_index(j, self.p)]

    def __len__(self) -> int:
        return len(self.values)

    def _check_vector(self, j: Sequence[int]) -> None:
        if len(j) != self.n or any(not 0 <= x < self.p for x in j):
            raise DimensionMismatch(
                f"{tuple(j)} is not a vector in Z_{self.p}^{self.n}."
            )

    def _check_shape(self, other: "FunctionTable") -> None:
        if (self.p, self.n) != (other.p, other.n):
            raise DimensionMismatch(
                f"Tables for (p={self.p}, n={self.n}) and "
                f"(p={other.p}, n={other.n}) can't be combined."
            )

    def __add__(self, other: "FunctionTable") -> "FunctionTable":
        """Phase table of the product of the two gates."""
        self._check_shape(other)
        return FunctionTable(
            self.p, self.n, tuple(x + y for x, y in zip(self.values, other.values))
        )

    def __sub__(self, other: "FunctionTable") -> "FunctionTable":
        return self + (-other)

    def __neg__(self) -> "FunctionTable":
        """Phase table of the inverse gate."""
        return FunctionTable(self.p, self.n, tuple(-x for x in self.values))

    def scaled(self, k: int) -> "FunctionTable":
        """Phase table of the k-th power of the gate."""
        return FunctionTable(self.p, self.n, tuple(x * k for x in self.values))

    def normalized(self) -> "FunctionTable":
        """Removes the global phase by setting theta(0) = 0."""
        origin = self.values[0]
        return FunctionTable(self.p, self.n, tuple(x - origin for x in self.values))

    def to_integers(self) -> Tuple[int, Tuple[int, ...]]:
        """Writes every phase over the common denominator p^M.

        Raises:
            NotInHierarchy: If some denominator isn't a power of p.

        Returns:
            Tuple[int, Tuple[int, ...]]: M and the numerators in Z_{p^M}.
        """
        exponents = []
        for phase in self.values:
            if not phase.p_power(self.p):
                raise NotInHierarchy(
                    f"Phase {phase} has a denominator that isn't a power of {self.p}."
                )
            exponents.append(_exponent_of(phase.denominator, self.p))
        precision = max(exponents)
        scale = self.p ** precision
        return precision, tuple(
            phase.numerator * (scale // phase.denominator) for phase in self.values
        )

    def __str__(self) -> str:
        return "[" + ", ".join(str(v) for v in self.values) + "]"


def _exponent_of(q: int, p: int) -> int:
    e = 0
    while q > 1:
        q //= p
        e += 1
    return e


@dataclass(frozen=True)
class PhasePolynomial:
    """Canonical phase polynomial of a diagonal gate.

    Use PhasePolynomial.build to canonicalize arbitrary coefficients;
    the constructor only accepts canonical data.

    Attributes:
        p (int): Qudit dimension (prime).
        n (int): Number of qudits.
        precision (int): M, the exponent of the common denominator p^M.
            Minimal: some coefficient is a unit unless there are none.
        coefficients (Tuple[Tuple[Monomial, int], ...]): Sorted pairs
            of nonzero monomials and coefficients in (0, p^M).
        global_phase (PhaseFraction): Phase carried by every basis state.
    """

    p: int
    n: int
    precision: int
    coefficients: Tuple[Tuple[Monomial, int], ...]
    global_phase: PhaseFraction = field(default_factory=PhaseFraction)

    def __post_init__(self):
        PrimeModulus(self.p)
        modulus = self.p ** self.precision
        monomials = [a for a, _ in self.coefficients]
        if monomials != sorted(set(monomials)):
            raise ValueError("Monomials must be distinct and sorted.")
        for a, c in self.coefficients:
            _check_monomial(a, self.p, self.n)
            if not any(a):
                raise ValueError("The constant term belongs to the global phase.")
            if not 0 < c < modulus:
                raise ValueError(f"Coefficient {c} is not a nonzero residue.")
        if self.coefficients:
            if all(c % self.p == 0 for _, c in self.coefficients):
                raise ValueError(f"Precision {self.precision} is not minimal.")
        elif self.precision != 0:
            raise ValueError("A constant polynomial has precision 0.")

    @classmethod
    def build(
        cls,
        p: int,
        n: int,
        coefficients: Mapping[Monomial, int],
        precision: int,
        global_phase: Optional[PhaseFraction] = None,
    ) -> "PhasePolynomial":
        """Canonicalizes a polynomial with per-variable degrees <= p-1.

        Coefficients are reduced mod p^precision, zeros are dropped, a
        constant term is moved into the global phase and the precision
        is lowered while every coefficient is divisible by p.

        Args:
            p (int): Qudit dimension.
            n (int): Number of qudits.
            coefficients (Mapping[Monomial, int]): Monomials and integer
                coefficients over the denominator p^precision.
            precision (int): Exponent of the denominator.
            global_phase (Optional[PhaseFraction], optional): Defaults to 0.

        Returns:
            PhasePolynomial: Canonical polynomial.
        """
        if precision < 0:
            raise ValueError("Precision can't be negative.")
        phase = global_phase if global_phase is not None else PhaseFraction()
        modulus = p ** precision
        terms: Dict[Monomial, int] = {}
        for a, c in coefficients.items():
            a = tuple(a)
            _check_monomial(a, p, n)
            if not any(a):
                phase = phase + PhaseFraction(c, modulus)
                continue
            c %= modulus
            if c:
                terms[a] = (terms.get(a, 0) + c) % modulus
        terms = {a: c for a, c in terms.items() if c}
        while precision > 0 and all(c % p == 0 for c in terms.values()):
            precision -= 1
            terms = {a: c // p for a, c in terms.items()}
        return cls(p, n, precision, tuple(sorted(terms.items())), phase)

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self.coefficients)

    @property
    def is_constant(self) -> bool:
        return not self.coefficients

    def _rescaled(self, precision: int) -> Dict[Monomial, int]:
        scale = self.p ** (precision - self.precision)
        return {a: c * scale for a, c in self.coefficients}

    def __add__(self, other: "PhasePolynomial") -> "PhasePolynomial":
        """Polynomial of the product of the two gates."""
        if (self.p, self.n) != (other.p, other.n):
            raise DimensionMismatch("Polynomials on different spaces can't be added.")
        precision = max(self.precision, other.precision)
        terms = self._rescaled(precision)
        for a, c in other._rescaled(precision).items():
            terms[a] = terms.get(a, 0) + c
        return PhasePolynomial.build(
            self.p, self.n, terms, precision, self.global_phase + other.global_phase
        )

    def __neg__(self) -> "PhasePolynomial":
        """Polynomial of the inverse gate."""
        return PhasePolynomial.build(
            self.p,
            self.n,
            {a: -c for a, c in self.coefficients},
            self.precision,
            -self.global_phase,
        )

    def __sub__(self, other: "PhasePolynomial") -> "PhasePolynomial":
        return self + (-other)

    def power(self, k: int) -> "PhasePolynomial":
        """Polynomial of the k-th power of the gate."""
        return PhasePolynomial.build(
            self.p,
            self.n,
            {a: k * c for a, c in self.coefficients},
            self.precision,
            self.global_phase * k,
        )

    def __str__(self) -> str:
        return format_polynomial(self.coefficients, self.p, self.precision)


def _check_monomial(a: Sequence[int], p: int, n: int) -> None:
    if len(a) != n:
        raise DimensionMismatch(f"Monomial {tuple(a)} doesn't have {n} exponents.")
    if any(not 0 <= x <= p - 1 for x in a):
        raise ValueError(f"Exponents of {tuple(a)} must lie in [0, {p - 1}].")


def evaluate(poly: PhasePolynomial, j: Sequence[int]) -> PhaseFraction:
    """Evaluates the phase of a basis state.

    Args:
        poly (PhasePolynomial): Gate.
        j (Sequence[int]): Basis vector with components in [0, p-1].

    Raises:
        DimensionMismatch: If j doesn't belong to Z_p^n.

    Returns:
        PhaseFraction: theta(j).
    """
    if len(j) != poly.n or any(not 0 <= x < poly.p for x in j):
        raise DimensionMismatch(f"{tuple(j)} is not a vector in Z_{poly.p}^{poly.n}.")
    modulus = poly.p ** poly.precision
    total = sum(c * monomial_value(a, j) for a, c in poly.coefficients)
    return poly.global_phase + PhaseFraction(total % modulus, modulus)


def to_function_table(poly: PhasePolynomial) -> FunctionTable:
    """Evaluates a polynomial on every basis state."""
    return FunctionTable.from_function(poly.p, poly.n, lambda j: evaluate(poly, j))


@lru_cache(maxsize=None)
def lagrange_matrix(p: int, modulus: int) -> Tuple[Tuple[int, ...], ...]:
    """Coefficients of the delta functions over Z_modulus.

    Entry [d][k] is the coefficient of j^d in
    delta_k(j) = prod_{k' != k} (j - k') / (k - k'). Every k - k' is a
    unit because |k - k'| < p.

    Args:
        p (int): Prime.
        modulus (int): A power of p.

    Returns:
        Tuple[Tuple[int, ...], ...]: p x p matrix.
    """
    columns = []
    for k in range(p):
        numerator = [1]
        denominator = 1
        for other in range(p):
            if other == k:
                continue
            # multiply by (j - other)
            shifted = [0] + numerator
            for d, c in enumerate(numerator):
                shifted[d] -= other * c
            numerator = shifted
            denominator *= k - other
        inverse = pow(denominator % modulus, -1, modulus) if modulus > 1 else 0
        columns.append([c * inverse % modulus for c in numerator])
    return tuple(tuple(columns[k][d] for k in range(p)) for d in range(p))


def _transform_axis(
    values: List[int],
    p: int,
    n: int,
    axis: int,
    matrix: Tuple[Tuple[int, ...], ...],
    modulus: int,
) -> List[int]:
    stride = p ** (n - 1 - axis)
    block = stride * p
    result = list(values)
    for start in range(0, len(values), block):
        for offset in range(stride):
            base = start + offset
            fiber = [values[base + k * stride] for k in range(p)]
            for d in range(p):
                row = matrix[d]
                result[base + d * stride] = (
                    sum(row[k] * fiber[k] for k in range(p)) % modulus
                )
    return result


def interpolate(values: Sequence[int], p: int, n: int, precision: int) -> List[int]:
    """Finds polynomial coefficients from integer phase numerators.

    Solves the interpolation one variable at a time. The result is
    indexed like the input: entry k is the coefficient of the
    monomial whose exponent vector has row-major index k.

    Args:
        values (Sequence[int]): theta(j) * p^precision for every j.
        p (int): Prime.
        n (int): Number of qudits.
        precision (int): Exponent of the denominator.

    Returns:
        List[int]: Coefficients in Z_{p^precision}.
    """
    modulus = p ** precision
    coefficients = [v % modulus for v in values]
    if precision == 0:
        return coefficients
    matrix = lagrange_matrix(p, modulus)
    for axis in range(n):
        coefficients = _transform_axis(coefficients, p, n, axis, matrix, modulus)
    return coefficients


def from_function_table(table: FunctionTable) -> PhasePolynomial:
    """Interpolates the canonical polynomial of a phase table.

    The global phase is the phase of |0...0>. Functions Z_p^n -> Z_{p^M}
    and polynomials with per-variable degree <= p-1 over Z_{p^M} are in
    bijection, so the result is unique.

    Args:
        table (FunctionTable): Phases of the gate.

    Raises:
        NotInHierarchy: If a normalized phase has a denominator that
            isn't a power of p.

    Returns:
        PhasePolynomial: Canonical polynomial.
    """
    try:
        precision, numerators = table.normalized().to_integers()
    except NotInHierarchy:
        logger.debug("Can't interpolate %s", table)
        raise
    coefficients = interpolate(numerators, table.p, table.n, precision)
    terms = {
        index_to_vector(k, table.p, table.n): c for k, c in enumerate(coefficients) if c
    }
    return PhasePolynomial.build(table.p, table.n, terms, precision, table.values[0])


def from_terms(
    p: int,
    n: int,
    terms: Iterable[Tuple[int, int, Sequence[int]]],
    global_phase: Optional[PhaseFraction] = None,
) -> PhasePolynomial:
    """Builds a polynomial from (coefficient, denominator exponent, exponents).

    Exponents may exceed p-1; such terms are brought into canonical
    form by re-interpolating the phase table (j^p and j differ as
    integers mod p^M, so Fermat reduction is not used).

    Args:
        p (int): Prime.
        n (int): Number of qudits.
        terms (Iterable[Tuple[int, int, Sequence[int]]]): Each term
            contributes coefficient * j^exponents / p^den_exp.
        global_phase (Optional[PhaseFraction], optional): Defaults to 0.

    Returns:
        PhasePolynomial: Canonical polynomial.
    """
    terms = [(c, e, tuple(a)) for c, e, a in terms]
    for _, e, a in terms:
        if e < 0:
            raise ValueError("Denominator exponents can't be negative.")
        if len(a) != n or any(x < 0 for x in a):
            raise DimensionMismatch(f"Invalid exponent vector {a} for {n} qudits.")
    offset = global_phase if global_phase is not None else PhaseFraction()

    def phase(j: BasisVector) -> PhaseFraction:
        total = offset
        for c, e, a in terms:
            total = total + PhaseFraction(c * monomial_value(a, j), p ** e)
        return total

    return from_function_table(FunctionTable.from_function(p, n, phase))


def direction_vector(direction: Direction, n: int, p: int) -> BasisVector:
    if isinstance(direction, int):
        if not 0 <= direction < n:
            raise DimensionMismatch(f"Axis {direction} is out of range for {n} qudits.")
        return unit_vector(direction, n)
    v = tuple(direction)
    if len(v) != n:
        raise DimensionMismatch(f"{v} is not a vector in Z_{p}^{n}.")
    return tuple(x % p for x in v)


def shift_difference(table: FunctionTable, direction: Direction) -> FunctionTable:
    """Finite difference of a phase table along X(v).

    output(j) = theta(j + v) - theta(j) with j + v taken mod p. This is
    the diagonal part of U X(v) U^dagger = X(v) V.

    Args:
        table (FunctionTable): Phases of U.
        direction (Direction): Axis i (meaning v = e_i) or a vector v.

    Returns:
        FunctionTable: Phases of V.
    """
    p, n = table.p, table.n
    v = direction_vector(direction, n, p)
    values = []
    for j in basis_vectors(p, n):
        shifted = tuple((x + y) % p for x, y in zip(j, v))
        values.append(table[shifted] - table[j])
    return FunctionTable(p, n, tuple(values))


def integrate_difference(delta: FunctionTable, phi: PhaseFraction) -> FunctionTable:
    """Rebuilds a single-qudit phase table from its differences.

    Solves theta(j) - theta(j-1) = delta(j) + phi for j = 1..p-1 with
    theta(0) = 0. The equation at j = 0 (theta(0) - theta(p-1)) then
    holds exactly when sum_j delta(j) + p*phi = 0 (mod 1).

    Args:
        delta (FunctionTable): Differences, one qudit.
        phi (PhaseFraction): Constant offset of every difference.

    Raises:
        DimensionMismatch: If delta acts on more than one qudit.
        InconsistentDifference: If the differences don't close up.

    Returns:
        FunctionTable: theta with theta(0) = 0.
    """
    if delta.n != 1:
        raise DimensionMismatch("Only single-qudit differences can be integrated.")
    p = delta.p
    total = phi * p
    for value in delta.values:
        total = total + value
    if total:
        raise InconsistentDifference(
            f"Differences add up to {total} instead of 0 around the cycle."
        )
    theta = [PhaseFraction()]
    for j in range(1, p):
        theta.append(theta[-1] + delta[j] + phi)
    return FunctionTable(p, 1, tuple(theta))


def monomial_difference(a: int, p: int, m: int) -> PhasePolynomial:
    """Polynomial of j^a - (j-1)^a over the denominator p^m.

    Expanding with binomial coefficients gives
    -sum_{d<a} C(a, d) (-1)^{a-d} j^d, whose leading term is a*j^{a-1}.

    Args:
        a (int): Exponent, 1 <= a <= p-1.
        p (int): Prime.
        m (int): Precision.

    Returns:
        PhasePolynomial: Single-qudit polynomial; the constant term
            ends up in the global phase.
    """
    if not 1 <= a <= p - 1:
        raise ValueError(f"The exponent must lie in [1, {p - 1}], got {a}.")
    coefficients = {(d,): -comb(a, d) * (-1) ** (a - d) for d in range(a)}
    return PhasePolynomial.build(p, 1, coefficients, m)
