import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gext import Ring, cokernel, free_module_of, ring_module  # noqa: E402
from gext.free import GradedMatrix  # noqa: E402

P = 32003

QUARTIC_GENS = ["x*y - w*z", "y^3 - x*z^2", "w*y^2 - x^2*z", "x^3 - w^2*y"]


@pytest.fixture(scope="session")
def quartic_base():
    """S = k[w,x,y,z]."""
    return Ring(P, ("w", "x", "y", "z"))


@pytest.fixture(scope="session")
def quartic_ring():
    """Coordinate ring of the rational quartic curve in P^3."""
    return Ring(P, ("w", "x", "y", "z"), quotient=QUARTIC_GENS)


@pytest.fixture(scope="session")
def quartic_cokernel(quartic_base):
    """N = S/I as an S-module."""
    mat = GradedMatrix.from_entries(quartic_base, [QUARTIC_GENS], (0,))
    return cokernel(mat)


@pytest.fixture(scope="session")
def elliptic_ring():
    return Ring(P, ("x", "y", "z"), quotient=["x^3 + y^3 - z^3"])


@pytest.fixture(scope="session")
def del_pezzo_ring():
    return Ring(P, ("v", "w", "x", "y", "z"), quotient=["w*x", "y*z"])


@pytest.fixture(scope="session")
def del_pezzo_g(del_pezzo_ring):
    """G = coker [[v, w], [w, x]]."""
    mat = GradedMatrix.from_entries(del_pezzo_ring, [["v", "w"], ["w", "x"]],
                                    (0, 0))
    return cokernel(mat)


VERONESE_GENS = ["v^2 - u*x", "v*w - u*y", "w*x - v*y",
                 "w^2 - u*z", "w*y - v*z", "y^2 - x*z"]


@pytest.fixture(scope="session")
def veronese_ring():
    """Coordinate ring of the Veronese surface in P^5."""
    return Ring(P, ("u", "v", "w", "x", "y", "z"), quotient=VERONESE_GENS)


@pytest.fixture(scope="session")
def p2_ring():
    return Ring(P, ("x", "y", "z"))


@pytest.fixture(scope="session")
def p2_structure(p2_ring):
    return ring_module(p2_ring)


def line_bundle(ring, v):
    return free_module_of(ring, (-v,))
