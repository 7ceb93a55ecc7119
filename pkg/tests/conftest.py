import pytest

from helpers import random_lsa_corpus


@pytest.fixture(scope="session")
def lsa_corpus():
    return random_lsa_corpus()
