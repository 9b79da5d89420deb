import pytest

from skeinalg import bundled_catalog, make_algebra

ALGEBRA_KEYS = [
    ("classic3", None),
    ("homflypt", None),
    ("gen-conway", None),
    ("gen-homflypt", None),
    ("nonlinear", 1),
    ("nonlinear", 2),
    ("nonlinear", 3),
]


@pytest.fixture(scope="session")
def corpus():
    return bundled_catalog()


@pytest.fixture(scope="session")
def diagrams(corpus):
    """name -> parsed Diagram, shared across the whole run."""
    return {e.name: e.diagram() for e in corpus}


@pytest.fixture(scope="session")
def algebras():
    return [make_algebra(name, k) for name, k in ALGEBRA_KEYS]
