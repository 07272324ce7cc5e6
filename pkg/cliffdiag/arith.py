"""Exact arithmetic: residue rings, phases in Q/Z and power sums.

Nothing in here uses floating point. Phases are measured in turns,
so exp(2*pi*i*x) is represented by the rational x modulo 1.
"""
import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce, wraps
from math import comb, gcd
from typing import Callable, List, Tuple, TypeVar, Union

import sympy

from cliffdiag.errors import CaseNotApplicable, ModulusMismatch, NotAUnit, NotPrime
from cliffdiag.utils import is_power_of

logger = logging.getLogger("cliffdiag")
RT = TypeVar("RT")


@dataclass(frozen=True)
class PrimeModulus:
    """A prime qudit dimension p."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not sympy.isprime(self.p):
            raise NotPrime(f"{self.p!r} is not a prime.")

    def __int__(self) -> int:
        return self.p

    def power(self, m: int) -> int:
        return self.p ** m


def check(func: Callable[..., RT]) -> Callable[..., RT]:
    """Makes sure both operands live in the same ring"""

    @wraps(func)
    def method(self, other):
        if isinstance(other, int):
            other = Residue(other, self.modulus_exponent, self.prime)
        elif (
            not isinstance(other, Residue)
            or self.prime != other.prime
            or self.modulus_exponent != other.modulus_exponent
        ):
            raise ModulusMismatch(f"Can't combine {self!r} with {other!r}.")
        return func(self, other)

    return method


class Residue:
    """An element of the ring Z_{p^m}.

    Args:
        value (int): Any integer; it is reduced into [0, p^m).
        modulus_exponent (int): m >= 1.
        prime (Union[PrimeModulus, int]): p.
    """

    __slots__ = ("value", "modulus_exponent", "prime")

    def __init__(
        self, value: int, modulus_exponent: int, prime: Union[PrimeModulus, int]
    ):
        if not isinstance(prime, PrimeModulus):
            prime = PrimeModulus(prime)
        if modulus_exponent < 1:
            raise ValueError("The modulus exponent must be at least 1.")
        self.prime = prime
        self.modulus_exponent = modulus_exponent
        self.value = value % self.modulus

    @property
    def modulus(self) -> int:
        return self.prime.power(self.modulus_exponent)

    @property
    def p(self) -> int:
        return self.prime.p

    @check
    def __add__(self, other: "Residue") -> "Residue":
        return Residue(self.value + other.value, self.modulus_exponent, self.prime)

    __radd__ = __add__

    @check
    def __sub__(self, other: "Residue") -> "Residue":
        return Residue(self.value - other.value, self.modulus_exponent, self.prime)

    @check
    def __rsub__(self, other: "Residue") -> "Residue":
        return other - self

    @check
    def __mul__(self, other: "Residue") -> "Residue":
        return Residue(self.value * other.value, self.modulus_exponent, self.prime)

    __rmul__ = __mul__

    def __neg__(self) -> "Residue":
        return Residue(-self.value, self.modulus_exponent, self.prime)

    def __pow__(self, exponent: int) -> "Residue":
        if not isinstance(exponent, int):
            raise TypeError("Exponents must be integers.")
        if exponent < 0:
            return unit_inverse(self) ** -exponent
        return Residue(
            pow(self.value, exponent, self.modulus), self.modulus_exponent, self.prime
        )

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.value == other % self.modulus
        if not isinstance(other, Residue):
            return NotImplemented
        return (
            self.value == other.value
            and self.modulus_exponent == other.modulus_exponent
            and self.prime == other.prime
        )

    def __hash__(self) -> int:
        return hash((self.value, self.modulus_exponent, self.prime.p))

    def __repr__(self) -> str:
        return f"Residue({self.value}, {self.modulus_exponent}, {self.prime.p})"


def unit_inverse(a: Residue) -> Residue:
    """Inverts a unit of Z_{p^m}.

    Args:
        a (Residue): Residue not divisible by p.

    Raises:
        NotAUnit: If p divides a.

    Returns:
        Residue: b with a*b = 1 (mod p^m).
    """
    if a.value % a.p == 0:
        raise NotAUnit(f"{a.value} is not invertible modulo {a.modulus}.")
    return Residue(pow(a.value, -1, a.modulus), a.modulus_exponent, a.prime)


class PhaseFraction:
    """A phase exp(2*pi*i*x) stored as the reduced rational x in [0, 1).

    Args:
        numerator (int, optional): Defaults to 0.
        denominator (int, optional): Defaults to 1.
    """

    __slots__ = ("_value",)

    def __init__(self, numerator: Union[int, Fraction] = 0, denominator: int = 1):
        self._value = Fraction(numerator, denominator) % 1

    @classmethod
    def parse(cls, text: str) -> "PhaseFraction":
        """Parses "num/den" (or a bare integer) measured in turns."""
        numerator, _, denominator = text.strip().partition("/")
        try:
            return cls(int(numerator), int(denominator) if denominator else 1)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"Invalid phase: {text!r}") from None

    @property
    def numerator(self) -> int:
        return self._value.numerator

    @property
    def denominator(self) -> int:
        return self._value.denominator

    def as_fraction(self) -> Fraction:
        return self._value

    def p_power(self, p: int) -> bool:
        """Checks whether the denominator is a power of p (p^0 included)."""
        return is_power_of(self._value.denominator, p)

    def __add__(self, other: "PhaseFraction") -> "PhaseFraction":
        if not isinstance(other, PhaseFraction):
            return NotImplemented
        return PhaseFraction(self._value + other._value)

    def __sub__(self, other: "PhaseFraction") -> "PhaseFraction":
        if not isinstance(other, PhaseFraction):
            return NotImplemented
        return PhaseFraction(self._value - other._value)

    def __neg__(self) -> "PhaseFraction":
        return PhaseFraction(-self._value)

    def __mul__(self, k: int) -> "PhaseFraction":
        if not isinstance(k, int):
            return NotImplemented
        return PhaseFraction(self._value * k)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self._value != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhaseFraction):
            return NotImplemented
        return self._value == other._value

    def __hash__(self) -> int:
        return hash(self._value)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self) -> str:
        return f"PhaseFraction({self.numerator}, {self.denominator})"


class BernoulliTable:
    """Bernoulli numbers B_0, B_1, ... with B_1 = -1/2.

    Entries are computed on demand with the recurrence
    sum_{k=0}^{n} C(n+1, k) B_k = 0 and cached. The cache is
    guarded by a lock so a table can be shared between threads.
    """

    def __init__(self):
        self._entries: List[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError("Bernoulli numbers are indexed from 0.")
        with self._lock:
            while len(self._entries) <= k:
                n = len(self._entries)
                s = sum(comb(n + 1, i) * b for i, b in enumerate(self._entries))
                self._entries.append(-s / (n + 1))
            return self._entries[k]

    def __len__(self) -> int:
        return len(self._entries)

    def denominators_lcm(self, upto: int) -> int:
        """Returns lcm of the denominators of B_0..B_upto."""
        return reduce(
            lambda x, y: x * y // gcd(x, y),
            (self[k].denominator for k in range(upto + 1)),
            1,
        )


BERNOULLI = BernoulliTable()


def power_sum_direct(j: int, a: int, p: int, m: int) -> Residue:
    """Computes sum_{k=1}^{j} k^a modulo p^m term by term.

    Args:
        j (int): Upper limit, j >= 0 (j = 0 gives the empty sum).
        a (int): Exponent, a >= 1.
        p (int): Prime.
        m (int): Modulus exponent.

    Returns:
        Residue: The power sum in Z_{p^m}.
    """
    modulus = p ** m
    total = sum(pow(k, a, modulus) for k in range(1, j + 1))
    return Residue(total, m, p)


def faulhaber_coefficients(
    a: int, table: BernoulliTable = BERNOULLI
) -> Tuple[int, List[int]]:
    """Clears the denominators of Faulhaber's formula.

    L*(a+1)*sum(j, a) = sum_k c_k j^{a+1-k} with integer c_k, where
    L is the lcm of the denominators of B_0..B_a.

    Args:
        a (int): Exponent of the power sum.
        table (BernoulliTable, optional): Bernoulli numbers to use.

    Returns:
        Tuple[int, List[int]]: L*(a+1) and the coefficients c_0..c_a.
    """
    lcm = table.denominators_lcm(a)
    coefficients = []
    for k in range(a + 1):
        c = lcm * (-1) ** k * comb(a + 1, k) * table[k]
        # L clears every denominator
        assert c.denominator == 1
        coefficients.append(int(c))
    return lcm * (a + 1), coefficients


def power_sum_faulhaber(
    j: int, a: int, p: int, m: int, table: BernoulliTable = BERNOULLI
) -> Residue:
    """Computes sum_{k=1}^{j} k^a modulo p^m with Faulhaber's formula.

    Only valid while p divides none of the denominators involved,
    which holds for a <= p-2.

    Args:
        j (int): Upper limit, j >= 0.
        a (int): Exponent, 1 <= a <= p-2.
        p (int): Prime.
        m (int): Modulus exponent.
        table (BernoulliTable, optional): Bernoulli numbers to use.

    Raises:
        CaseNotApplicable: If a >= p-1. Such sums must be obtained
            by interpolation instead.

    Returns:
        Residue: The power sum in Z_{p^m}.
    """
    if a < 1:
        raise ValueError("The exponent must be at least 1.")
    if a >= p - 1:
        raise CaseNotApplicable(
            f"Faulhaber's formula needs a <= p-2, got a={a} for p={p}."
        )
    normalizer, coefficients = faulhaber_coefficients(a, table)
    inverse = unit_inverse(Residue(normalizer, m, p))
    modulus = p ** m
    cleared = sum(c * pow(j, a + 1 - k, modulus) for k, c in enumerate(coefficients))
    return inverse * Residue(cleared, m, p)
