# -*- coding: utf-8 -*-
"""Loaders for the data files shipped with the package: the paradigm class
table, the seed root lexicon and the hand-tagged desk corpus."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .inflection import load_paradigms
from .lexicon import load_lexicon


def _read(name: str) -> str:
    return (resources.files("morphy") / "data" / name).read_text("utf-8")


@lru_cache(maxsize=None)
def load_default_paradigms():
    return load_paradigms(_read("paradigms.tsv"))


def load_seed_lexicon():
    return load_lexicon(_read("seed_lexicon.tsv"), load_default_paradigms())


def read_desk_corpus_text() -> str:
    return _read("desk_corpus.tsv")
