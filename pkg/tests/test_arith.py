from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from cliffdiag.arith import (
    BERNOULLI,
    BernoulliTable,
    PhaseFraction,
    PrimeModulus,
    Residue,
    faulhaber_coefficients,
    power_sum_direct,
    power_sum_faulhaber,
    unit_inverse,
)
from cliffdiag.errors import (
    CaseNotApplicable,
    CliffdiagError,
    ModulusMismatch,
    NotAUnit,
    NotPrime,
)

primes = st.sampled_from([2, 3, 5, 7])
exponents = st.integers(min_value=1, max_value=3)
phases = st.builds(
    PhaseFraction, st.integers(-1000, 1000), st.integers(min_value=1, max_value=1000)
)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 101])
def test_prime_modulus(p):
    assert int(PrimeModulus(p)) == p
    assert PrimeModulus(p).power(2) == p * p


@pytest.mark.parametrize("p", [0, 1, 4, 9, 91, -3])
def test_prime_modulus_rejects_composites(p):
    with pytest.raises(NotPrime):
        PrimeModulus(p)


def test_not_prime_is_value_error():
    with pytest.raises(ValueError):
        Residue(1, 1, 6)
    assert issubclass(NotPrime, CliffdiagError)


@pytest.mark.parametrize(
    "a, b, op, expected",
    [
        ((7, 2, 3), (5, 2, 3), "add", 3),
        ((5, 3, 2), (3, 3, 2), "mul", 7),
        ((2, 2, 3), (5, 2, 3), "sub", 6),
    ],
)
def test_residue_ops(a, b, op, expected):
    x, y = Residue(*a), Residue(*b)
    result = {"add": x + y, "mul": x * y, "sub": x - y}[op]

    assert result == expected
    assert result.value == expected


def test_residue_pow():
    assert Residue(2, 1, 5) ** 4 == 1
    assert Residue(2, 2, 3) ** -1 == 5
    assert Residue(3, 2, 5) ** 0 == 1


def test_residue_with_ints():
    x = Residue(4, 1, 5)

    assert x + 3 == 2
    assert 3 + x == 2
    assert 2 * x == 3
    assert 1 - x == 2
    assert -x == 1


@pytest.mark.parametrize(
    "a, b",
    [
        ((1, 2, 3), (1, 1, 3)),
        ((1, 1, 3), (1, 1, 5)),
    ],
)
def test_residue_modulus_mismatch(a, b):
    with pytest.raises(ModulusMismatch):
        Residue(*a) + Residue(*b)


def test_residue_rejects_bad_exponent():
    with pytest.raises(ValueError):
        Residue(1, 0, 3)


@given(primes, exponents, st.integers(), st.integers(), st.integers())
def test_residue_ring_axioms(p, m, a, b, c):
    x, y, z = Residue(a, m, p), Residue(b, m, p), Residue(c, m, p)

    assert 0 <= (x * y + z).value < p ** m
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x - x == 0


@pytest.mark.parametrize(
    "a, expected",
    [
        ((2, 2, 3), 5),
        ((3, 3, 2), 3),
        ((7, 2, 5), 18),
    ],
)
def test_unit_inverse(a, expected):
    x = Residue(*a)
    inverse = unit_inverse(x)

    assert inverse == expected
    assert x * inverse == 1


@given(primes, exponents, st.integers())
def test_unit_inverse_property(p, m, a):
    x = Residue(a, m, p)
    if a % p == 0:
        with pytest.raises(NotAUnit):
            unit_inverse(x)
    else:
        assert x * unit_inverse(x) == 1


def test_not_a_unit():
    with pytest.raises(NotAUnit):
        unit_inverse(Residue(3, 2, 3))
    with pytest.raises(ArithmeticError):
        Residue(0, 1, 2) ** -1


@pytest.mark.parametrize(
    "text, numerator, denominator",
    [
        ("1/3", 1, 3),
        ("-1/3", 2, 3),
        ("5/4", 1, 4),
        ("2/4", 1, 2),
        ("0", 0, 1),
        ("7", 0, 1),
        (" 3/8 ", 3, 8),
    ],
)
def test_phase_fraction_parse(text, numerator, denominator):
    phase = PhaseFraction.parse(text)

    assert phase.numerator == numerator
    assert phase.denominator == denominator


@pytest.mark.parametrize("text", ["", "1/0", "a/3", "1/2/3", "0.5"])
def test_phase_fraction_parse_invalid(text):
    with pytest.raises(ValueError):
        PhaseFraction.parse(text)


def test_phase_fraction_str():
    assert str(PhaseFraction()) == "0/1"
    assert str(PhaseFraction(7, 8) + PhaseFraction(3, 8)) == "1/4"
    assert not PhaseFraction(3, 3)
    assert PhaseFraction(1, 4) * 4 == PhaseFraction()
    assert 3 * PhaseFraction(1, 4) == PhaseFraction(3, 4)


@pytest.mark.parametrize(
    "phase, p, expected",
    [
        (PhaseFraction(1, 8), 2, True),
        (PhaseFraction(0), 5, True),
        (PhaseFraction(1, 9), 3, True),
        (PhaseFraction(1, 6), 2, False),
        (PhaseFraction(1, 3), 2, False),
    ],
)
def test_phase_fraction_p_power(phase, p, expected):
    assert phase.p_power(p) is expected


@given(phases, phases, phases)
def test_phase_fraction_group_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + (-x) == PhaseFraction()
    assert x - y == x + (-y)
    for value in (x, x + y, x - z):
        assert 0 <= value.numerator < value.denominator
        assert sympy.gcd(value.numerator, value.denominator) == 1


def test_bernoulli_first_values():
    table = BernoulliTable()

    assert table[0] == 1
    assert table[1] == Fraction(-1, 2)
    assert table[2] == Fraction(1, 6)
    assert table[4] == Fraction(-1, 30)
    assert table[12] == Fraction(-691, 2730)
    assert len(table) == 13


@pytest.mark.parametrize("k", range(2, 31))
def test_bernoulli_matches_sympy(k):
    assert BERNOULLI[k] == Fraction(str(sympy.bernoulli(k)))


@pytest.mark.parametrize("k", range(3, 40, 2))
def test_bernoulli_odd_vanish(k):
    assert BERNOULLI[k] == 0


@pytest.mark.parametrize("n", range(1, 20))
def test_von_staudt_clausen(n):
    expected = 1
    for q in sympy.primerange(2, 2 * n + 2):
        if (2 * n) % (q - 1) == 0:
            expected *= q

    assert BERNOULLI[2 * n].denominator == expected


def test_bernoulli_negative_index():
    with pytest.raises(IndexError):
        BERNOULLI[-1]


def test_faulhaber_coefficients():
    # 4 * (1 + 2 + ... + j) = 2j^2 + 2j
    normalizer, coefficients = faulhaber_coefficients(1)

    assert normalizer == 4
    assert coefficients == [2, 2]


@pytest.mark.parametrize(
    "j, a, p, m, expected",
    [
        (2, 2, 3, 2, 5),
        (4, 2, 5, 1, 0),
        (4, 4, 5, 1, 4),
        (0, 3, 7, 2, 0),
    ],
)
def test_power_sum_direct(j, a, p, m, expected):
    assert power_sum_direct(j, a, p, m) == expected


@pytest.mark.parametrize(
    "j, a, p, m, expected",
    [
        (2, 2, 5, 1, 0),
        (3, 1, 5, 2, 6),
        (4, 3, 7, 2, 2),
    ],
)
def test_power_sum_faulhaber(j, a, p, m, expected):
    assert power_sum_faulhaber(j, a, p, m) == expected


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_power_sum_faulhaber_matches_direct(p, m):
    for a in range(1, p - 1):
        for j in range(3 * p + 1):
            assert power_sum_faulhaber(j, a, p, m) == power_sum_direct(j, a, p, m)


@pytest.mark.parametrize("p, a", [(2, 1), (3, 2), (5, 4), (5, 6), (7, 6)])
def test_power_sum_faulhaber_not_applicable(p, a):
    with pytest.raises(CaseNotApplicable):
        power_sum_faulhaber(3, a, p, 1)


def test_power_sum_faulhaber_rejects_zero_exponent():
    with pytest.raises(ValueError):
        power_sum_faulhaber(3, 0, 5, 1)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_power_sum_full_period(p):
    for a in range(1, p):
        expected = p - 1 if a == p - 1 else 0
        assert power_sum_direct(p - 1, a, p, 1) == expected
