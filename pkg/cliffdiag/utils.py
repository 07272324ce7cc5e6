import logging
from functools import wraps
from itertools import product
from typing import Callable, Iterator, List, Sequence, Tuple, TypeVar

Monomial = Tuple[int, ...]
BasisVector = Tuple[int, ...]

# Subscript-free variable names keep the output ASCII.
SINGLE_VARIABLE = "j"


def basis_vectors(p: int, n: int) -> Iterator[BasisVector]:
    """Iterates over Z_p^n in row-major order.

    The last component varies fastest, so the k-th vector yielded
    is the one whose flat index is k.

    Args:
        p (int): Qudit dimension.
        n (int): Number of qudits.

    Returns:
        Iterator[BasisVector]: Basis vectors as tuples.
    """
    return product(range(p), repeat=n)


def vector_to_index(j: Sequence[int], p: int) -> int:
    """Returns the row-major flat index of basis vector j."""
    index = 0
    for component in j:
        index = index * p + component
    return index


def index_to_vector(index: int, p: int, n: int) -> BasisVector:
    """Returns the basis vector whose row-major flat index is index."""
    components = [0] * n
    for i in range(n - 1, -1, -1):
        index, components[i] = divmod(index, p)
    return tuple(components)


def unit_vector(i: int, n: int) -> BasisVector:
    """Returns e_i (0-based) in Z_p^n."""
    return tuple(1 if k == i else 0 for k in range(n))


def weight(a: Sequence[int]) -> int:
    """Returns wt(a), the sum of the entries of an exponent vector."""
    return sum(a)


def monomial_value(a: Sequence[int], j: Sequence[int]) -> int:
    """Evaluates j_1^{a_1}...j_n^{a_n} on integer representatives."""
    value = 1
    for exponent, component in zip(a, j):
        if exponent:
            value *= component ** exponent
    return value


def valuation(c: int, p: int) -> int:
    """Returns the p-adic valuation of a nonzero integer."""
    if c == 0:
        raise ValueError("The valuation of 0 is infinite.")
    t = 0
    while c % p == 0:
        c //= p
        t += 1
    return t


def base_p_digits(c: int, p: int, length: int) -> List[int]:
    """Writes c (mod p^length) as its base-p digits, least significant first."""
    c %= p ** length
    digits = []
    for _ in range(length):
        c, digit = divmod(c, p)
        digits.append(digit)
    return digits


def is_power_of(q: int, p: int) -> bool:
    """Checks whether q = p^k for some k >= 0."""
    if q < 1:
        return False
    while q % p == 0:
        q //= p
    return q == 1


def format_monomial(a: Sequence[int]) -> str:
    """Formats an exponent vector as a product of variables.

    A single qudit uses the variable j, several qudits use j1, j2, ...

    Args:
        a (Sequence[int]): Exponent vector.

    Returns:
        str: Monomial (e.g. j^2 or j1*j2^2). The empty monomial is "1".
    """
    factors = []
    for i, exponent in enumerate(a):
        if exponent == 0:
            continue
        name = SINGLE_VARIABLE if len(a) == 1 else f"{SINGLE_VARIABLE}{i + 1}"
        factors.append(name if exponent == 1 else f"{name}^{exponent}")
    return "*".join(factors) if factors else "1"


def format_polynomial(
    terms: Sequence[Tuple[Monomial, int]], p: int, precision: int
) -> str:
    """Formats the exponent of a phase polynomial.

    Terms are listed by decreasing weight, so (2j^2 + 2j)/3 rather
    than (2j + 2j^2)/3, and j1 comes before j2 among equal weights.

    Args:
        terms (Sequence[Tuple[Monomial, int]]): Monomials and
            their coefficients in Z_{p^precision}.
        p (int): Qudit dimension.
        precision (int): Exponent of the common denominator.

    Returns:
        str: Human-readable polynomial.
    """
    if not terms:
        return "0"
    ordered = sorted(terms, key=lambda term: (-weight(term[0]), [-x for x in term[0]]))
    parts = []
    for a, coefficient in ordered:
        monomial = format_monomial(a)
        parts.append(monomial if coefficient == 1 else f"{coefficient}{monomial}")
    body = " + ".join(parts)
    if len(parts) > 1:
        body = f"({body})"
    denominator = p ** precision
    return body if denominator == 1 else f"{body}/{denominator}"


def format_factorization(orders: Sequence[int]) -> str:
    """Formats a product of cyclic groups with the U(1) global phase.

    Args:
        orders (Sequence[int]): Orders of the cyclic factors.

    Returns:
        str: Group (e.g. U(1) x Z4 x Z4 x Z2).
    """
    return " x ".join(["U(1)"] + [f"Z{order}" for order in orders])


RT = TypeVar("RT")


def log(func: Callable[..., RT]) -> Callable[..., RT]:
    """logs entering and exiting functions for debugging."""
    logger = logging.getLogger(func.__module__)

    @wraps(func)
    def wrapper(*args, **kwargs) -> RT:
        logger.debug("Entering: %s", func.__name__)
        result = func(*args, **kwargs)
        logger.debug("Exiting: %s", func.__name__)
        return result

    return wrapper
