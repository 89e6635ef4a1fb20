import pytest

from cyclic_coloring.corpus import glued_instances, standard_corpus


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus()


@pytest.fixture(scope="session")
def glued():
    return glued_instances()
