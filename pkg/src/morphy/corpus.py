# -*- coding: utf-8 -*-
"""Annotated corpora.

Format: UTF-8, one token per line as ``surface<TAB>large tag``, a blank
line ends a sentence, ``#`` lines are comments.  Reading then writing is
byte-stable; writing then reading reproduces the corpus exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tags import LARGE, Tag, TagError, format_tag, parse_tag


class CorpusError(ValueError):
    """Raised for malformed corpus text; carries the offending line."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class AnnotatedCorpus:
    """Sentences of (surface, gold large tag) pairs."""

    sentences: tuple       # ((surface, Tag), ...) per sentence
    provenance: str = ""

    def __len__(self):
        return len(self.sentences)

    @property
    def token_count(self):
        return sum(len(s) for s in self.sentences)

    def tokens(self):
        for sent in self.sentences:
            yield from sent

    def sentence_surfaces(self):
        return [[s for s, _ in sent] for sent in self.sentences]


def read_corpus(text: str, provenance: str = "",
                line_filter=None) -> AnnotatedCorpus:
    """Parse corpus text.  ``line_filter`` (str -> bool), when given, drops
    non-textual lines before parsing."""
    sentences = []
    current = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        if line.startswith("#"):
            continue
        if line_filter is not None and not line_filter(line):
            continue
        if not line.strip():
            if current:
                sentences.append(tuple(current))
                current = []
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise CorpusError("expected surface<TAB>tag", lineno)
        surface, tag_str = fields
        if not surface:
            raise CorpusError("empty surface form", lineno)
        try:
            tag = parse_tag(tag_str, LARGE)
        except TagError as err:
            raise CorpusError(str(err), lineno) from err
        current.append((surface, tag))
    if current:
        sentences.append(tuple(current))
    return AnnotatedCorpus(sentences=tuple(sentences), provenance=provenance)


def write_corpus(corpus: AnnotatedCorpus) -> str:
    """Serialize: token lines, one blank line after each sentence."""
    chunks = []
    for sent in corpus.sentences:
        for surface, tag in sent:
            chunks.append(f"{surface}\t{format_tag(tag)}\n")
        chunks.append("\n")
    return "".join(chunks)


_PUNCT = ".!?:;,-()/\"«»"
_SENTENCE_END = ".!?"


def tokenize(text: str, abbreviations=()) -> list:
    """Whitespace tokenization with leading/trailing punctuation split off
    (known abbreviations keep their period)."""
    tokens = []
    for raw in text.split():
        lead = []
        while raw and raw[0] in _PUNCT and raw not in abbreviations:
            lead.append(raw[0])
            raw = raw[1:]
        trail = []
        while raw and raw[-1] in _PUNCT and raw not in abbreviations:
            trail.append(raw[-1])
            raw = raw[:-1]
        tokens.extend(lead)
        if raw:
            tokens.append(raw)
        tokens.extend(reversed(trail))
    return tokens


def split_sentences(tokens) -> list:
    """Group a token stream into sentences at sentence-final punctuation."""
    sentences = []
    current = []
    for t in tokens:
        current.append(t)
        if t in _SENTENCE_END:
            sentences.append(current)
            current = []
    if current:
        sentences.append(current)
    return sentences
