"""Shared fixtures: the builtin corpus and cached splitting contexts."""

import pytest
from hypothesis import settings

from fieldsep.corpus import builtin_corpus
from fieldsep.embeddings import normal_closure_context

settings.register_profile("suite", deadline=None, max_examples=50)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def corpus():
    """name -> parsed TowerSpec, one shared copy for the whole session."""
    return builtin_corpus()


@pytest.fixture(scope="session")
def contexts(corpus):
    """Lazily built normal-closure contexts keyed by corpus entry name."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = normal_closure_context(corpus[name].field)
        return cache[name]

    return get
