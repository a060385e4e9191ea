import pytest

from hopftrees import Derivation, Polynomial, flat_connection
from hopftrees.verify import hall_fields


@pytest.fixture(scope="session")
def hall():
    """The two regression vector fields on Q[x1..x8]."""
    return hall_fields()


@pytest.fixture
def ring2():
    n = 2
    return {
        "n": n,
        "x1": Polynomial.variable(n, 1),
        "x2": Polynomial.variable(n, 2),
        "one": Polynomial.one(n),
        "d1": Derivation.basis(n, 1),
        "d2": Derivation.basis(n, 2),
        "flat": flat_connection(n),
    }
