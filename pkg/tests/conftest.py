import pytest

from thetacas import (
    FieldSpec,
    HypersurfaceRing,
    ModulePresentation,
    PolynomialRing,
)


def hypersurface(variables, f, characteristic=0, weights=None):
    S = PolynomialRing(FieldSpec(characteristic), variables, weights)
    return HypersurfaceRing(S, S.parse(f))


@pytest.fixture(scope="session")
def node():
    """A = k[x,y]/(xy), the one-dimensional node."""
    return hypersurface(["x", "y"], "x*y")


@pytest.fixture(scope="session")
def a1():
    """A = k[x,y,z]/(xy - z^2), the A1 surface singularity."""
    return hypersurface(["x", "y", "z"], "x*y - z^2")


@pytest.fixture(scope="session")
def quadric():
    """A = k[x,y,u,v]/(xy - uv), the three-dimensional quadric cone."""
    return hypersurface(["x", "y", "u", "v"], "x*y - u*v")


@pytest.fixture(scope="session")
def S2():
    """The regular ambient ring k[x,y] (no hypersurface quotient)."""
    return PolynomialRing(FieldSpec(0), ["x", "y"])


@pytest.fixture(scope="session")
def node_modules(node):
    return {
        "Ax": ModulePresentation.cyclic(node, ["x"]),
        "Ay": ModulePresentation.cyclic(node, ["y"]),
        "k": ModulePresentation.cyclic(node, ["x", "y"]),
    }


@pytest.fixture(scope="session")
def a1_modules(a1):
    return {
        "Axz": ModulePresentation.cyclic(a1, ["x", "z"]),
        "Azy": ModulePresentation.cyclic(a1, ["z", "y"]),
    }


@pytest.fixture(scope="session")
def quadric_modules(quadric):
    return {
        "Ap": ModulePresentation.cyclic(quadric, ["x", "u"]),
        "Aq": ModulePresentation.cyclic(quadric, ["x", "v"]),
        "Ax": ModulePresentation.cyclic(quadric, ["x"]),
    }
