# -*- coding: utf-8 -*-
import pytest

from morphy.analysis import Analyzer
from morphy.corpus import read_corpus
from morphy.data import (load_default_paradigms, load_seed_lexicon,
                         read_desk_corpus_text)
from morphy.inflection import expand_full_form_lexicon
from morphy.tagger import train_models


@pytest.fixture(scope="session")
def classes():
    return load_default_paradigms()


@pytest.fixture(scope="session")
def lex(classes):
    return load_seed_lexicon()


@pytest.fixture(scope="session")
def analyzer(lex, classes):
    return Analyzer(lex, classes)


@pytest.fixture(scope="session")
def desk_corpus():
    return read_corpus(read_desk_corpus_text(), provenance="desk")


@pytest.fixture(scope="session")
def fullform(lex, classes):
    return expand_full_form_lexicon(lex, classes)


@pytest.fixture(scope="session")
def models_small(desk_corpus):
    return train_models(desk_corpus, "small")


@pytest.fixture(scope="session")
def models_large(desk_corpus):
    return train_models(desk_corpus, "large")
