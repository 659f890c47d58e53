import pytest

from matpaint.acceptance import Oracle
from matpaint.corpus import build_corpus


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """Named entries plus every tenth random one; quick enough for brute force."""
    return [e for i, e in enumerate(corpus) if not e.name.startswith("rand") or i % 10 == 0]


@pytest.fixture(scope="session")
def oracle():
    return Oracle()
