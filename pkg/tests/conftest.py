import json
import random
from os.path import abspath, dirname, join
from typing import Callable

import pytest
from click.testing import CliRunner

from cliffdiag.arith import PhaseFraction
from cliffdiag.constants import DEFAULT_SEED
from cliffdiag.phasepoly import FunctionTable, PhasePolynomial, to_function_table
from cliffdiag.utils import basis_vectors

# ----------------- Data Files Fixtures -----------------


@pytest.fixture(scope="session")
def data_path():
    return join(dirname(abspath(__file__)), "data")


@pytest.fixture(scope="session")
def spec_file(data_path) -> Callable[[str], str]:
    def path(name: str) -> str:
        return join(data_path, name)

    return path


@pytest.fixture(scope="session")
def t_gate_dict(data_path):
    with open(join(data_path, "t_gate.json"), encoding="utf8") as f:
        return json.load(f)


# ----------------- Randomized Gates -----------------


@pytest.fixture(scope="function")
def rng():
    return random.Random(DEFAULT_SEED)


def make_random_polynomial(
    rng: random.Random, p: int, n: int, precision: int, density: float = 0.6
) -> PhasePolynomial:
    monomials = [a for a in basis_vectors(p, n) if any(a)]
    modulus = p ** precision
    coefficients = {
        a: rng.randrange(modulus) for a in monomials if rng.random() < density
    }
    global_phase = PhaseFraction(rng.randrange(12), 12)
    return PhasePolynomial.build(p, n, coefficients, precision, global_phase)


@pytest.fixture(scope="function")
def random_polynomial(rng):
    def make(p: int, n: int, precision: int, density: float = 0.6) -> PhasePolynomial:
        return make_random_polynomial(rng, p, n, precision, density)

    return make


@pytest.fixture(scope="function")
def random_table(rng):
    def make(p: int, n: int, precision: int) -> FunctionTable:
        return to_function_table(make_random_polynomial(rng, p, n, precision))

    return make


# ----------------- Named Gates -----------------


@pytest.fixture(scope="session")
def t_table():
    return FunctionTable.from_values(2, 1, ["0", "1/8"])


@pytest.fixture(scope="session")
def s_table():
    return FunctionTable.from_values(2, 1, ["0", "1/4"])


@pytest.fixture(scope="session")
def cz_table():
    return FunctionTable.from_values(2, 2, ["0", "0", "0", "1/2"])


@pytest.fixture(scope="session")
def ccz_table():
    return FunctionTable.from_values(2, 3, ["0"] * 7 + ["1/2"])


@pytest.fixture(scope="session")
def qutrit_z_table():
    return FunctionTable.from_values(3, 1, ["0", "1/3", "2/3"])


# ----------------- CLI -----------------


@pytest.fixture(scope="function")
def runner():
    return CliRunner(mix_stderr=False)
