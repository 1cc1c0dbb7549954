import pytest

from resnum.enumeration import EnumConstraints, enumerate_graphs


@pytest.fixture(scope="session")
def connected_by_order():
    """All connected isomorphism classes, keyed by order, up to 7."""
    return {
        n: tuple(enumerate_graphs(EnumConstraints(n))) for n in range(1, 8)
    }


@pytest.fixture(scope="session")
def trees_by_order():
    return {
        n: tuple(enumerate_graphs(EnumConstraints(n, trees_only=True)))
        for n in range(1, 13)
    }


@pytest.fixture(scope="session")
def constrained_by_order():
    # the degree/girth regime that stays tractable past order 7
    return {
        n: tuple(
            enumerate_graphs(EnumConstraints(n, max_degree=3, min_girth=5))
        )
        for n in (8, 9, 10)
    }
