import pytest

from cwmorse import builtin


@pytest.fixture(scope="session")
def disk():
    return builtin("disk")


@pytest.fixture(scope="session")
def sphere():
    return builtin("sphere")


@pytest.fixture(scope="session")
def cylinder():
    return builtin("cylinder")


@pytest.fixture(scope="session")
def mobius():
    return builtin("mobius")


@pytest.fixture(scope="session")
def torus():
    return builtin("torus")


def ids(K, *labels):
    """Cell ids for a list of labels."""
    return [K.by_label(s).id for s in labels]


def pairs(K, *tags):
    """Pairs from two-label tags like "1a" or ("10", "h00")."""
    out = []
    for t in tags:
        if isinstance(t, tuple):
            l, u = t
        else:
            l, u = t[0], t[1]
        out.append((K.by_label(l).id, K.by_label(u).id))
    return out
