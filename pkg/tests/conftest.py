import cmath
import math

import pytest

from semiabel.lattice import make_lattice

VARPI = 2.62205755429211981  # real half-lattice scale of y^2 = 4x^3 - 4x


@pytest.fixture
def square_lattice():
    return make_lattice(VARPI, VARPI * 1j)


@pytest.fixture
def hexagonal_lattice():
    return make_lattice(1.0, cmath.exp(1j * math.pi / 3))


@pytest.fixture
def noncm_lattice():
    # period ratio with irrational real and imaginary parts: no small
    # integer relation among (1, tau, tau^2)
    return make_lattice(1.0, complex(0.3 * math.sqrt(2.0), 0.5 * math.e))


@pytest.fixture
def generic_lattice():
    return make_lattice(1.3 + 0.2j, 0.4 + 1.7j)


def lattices_for_sweep():
    return [
        make_lattice(VARPI, VARPI * 1j),
        make_lattice(1.0, cmath.exp(1j * math.pi / 3)),
        make_lattice(1.3 + 0.2j, 0.4 + 1.7j),
        make_lattice(2.0, 0.5 + 2.5j),
        make_lattice(1.0, complex(0.3 * math.sqrt(2.0), 0.5 * math.e)),
    ]
