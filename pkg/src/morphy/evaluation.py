# -*- coding: utf-8 -*-
"""Corpus experiments: accuracy, learning curves, unknown-word
perturbation, ambiguity rates and n-gram growth statistics."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .analysis import CAP_PSEUDO_SUFFIX
from .corpus import AnnotatedCorpus
from .tagger import Models, candidate_tags, tag_church, tag_varcontext
from .tags import LARGE, SMALL, format_tag, map_large_to_small


class EvaluationError(ValueError):
    pass


@dataclass(frozen=True)
class EvalReport:
    token_count: int
    correct_count: int
    confusion: dict = field(compare=False)          # (gold, predicted) -> n
    punct_token_count: int = 0
    punct_correct_count: int = 0
    unknown_token_count: int = 0
    unknown_correct_count: int = 0

    @property
    def accuracy(self):
        return self.correct_count / self.token_count if self.token_count \
            else 0.0

    @property
    def accuracy_no_punct(self):
        n = self.token_count - self.punct_token_count
        c = self.correct_count - self.punct_correct_count
        return c / n if n else 0.0

    @property
    def unknown_token_accuracy(self):
        if not self.unknown_token_count:
            return None
        return self.unknown_correct_count / self.unknown_token_count

    def render(self) -> str:
        """Aligned plain text plus a machine-readable key<TAB>value part."""
        lines = [
            f"tokens              {self.token_count}",
            f"correct             {self.correct_count}",
            f"accuracy            {self.accuracy:.4f}",
            f"accuracy w/o punct  {self.accuracy_no_punct:.4f}",
        ]
        if self.unknown_token_count:
            lines.append(
                f"unknown tokens      {self.unknown_token_count}")
            lines.append(
                f"unknown accuracy    {self.unknown_token_accuracy:.4f}")
        worst = sorted(((n, g, p) for (g, p), n in self.confusion.items()
                        if g != p), reverse=True)[:10]
        if worst:
            lines.append("most frequent confusions (gold -> predicted):")
            for n, g, p in worst:
                lines.append(f"  {n:4d}  {g} -> {p}")
        lines.append("")
        lines.append(f"token_count\t{self.token_count}")
        lines.append(f"correct_count\t{self.correct_count}")
        lines.append(f"accuracy\t{self.accuracy!r}")
        lines.append(f"accuracy_no_punct\t{self.accuracy_no_punct!r}")
        lines.append(f"unknown_token_count\t{self.unknown_token_count}")
        lines.append(f"unknown_correct_count\t{self.unknown_correct_count}")
        return "".join(line + "\n" for line in lines)


def _gold_tag(tag, kind):
    return map_large_to_small(tag) if kind == SMALL and tag.kind == LARGE \
        else tag


def evaluate(gold: AnnotatedCorpus, predicted, kind: str) -> EvalReport:
    """Exact-match tag accuracy of predicted TaggedSentences against a gold
    corpus (mapped down for the small set).  Punctuation tokens are counted
    but also reported separately."""
    if len(predicted) != len(gold.sentences):
        raise EvaluationError("sentence count mismatch")
    token_count = correct = 0
    punct = punct_correct = 0
    unk = unk_correct = 0
    confusion = {}
    for gold_sent, pred_sent in zip(gold.sentences, predicted):
        if len(pred_sent.tokens) != len(gold_sent):
            raise EvaluationError("token count mismatch")
        flags = pred_sent.unknown or (False,) * len(gold_sent)
        for (g_surf, g_tag), (p_surf, p_tag), unknown in zip(
                gold_sent, pred_sent.tokens, flags):
            g = format_tag(_gold_tag(g_tag, kind))
            p = format_tag(p_tag)
            token_count += 1
            hit = int(g == p)
            correct += hit
            confusion[(g, p)] = confusion.get((g, p), 0) + 1
            if g.startswith("SZ"):
                punct += 1
                punct_correct += hit
            if unknown:
                unk += 1
                unk_correct += hit
    return EvalReport(token_count=token_count, correct_count=correct,
                      confusion=confusion, punct_token_count=punct,
                      punct_correct_count=punct_correct,
                      unknown_token_count=unk,
                      unknown_correct_count=unk_correct)


ALGORITHMS = ("church", "varcontext")


def tag_corpus(corpus: AnnotatedCorpus, models: Models, lex, classes,
               algo: str = "church"):
    """Tag every sentence of a corpus with the chosen algorithm."""
    if algo == "church":
        return [tag_church([s for s, _ in sent], models, lex, classes)
                for sent in corpus.sentences]
    if algo == "varcontext":
        return [tag_varcontext([s for s, _ in sent], models, lex, classes)
                for sent in corpus.sentences]
    raise EvaluationError(f"unknown algorithm {algo!r}")


def split_corpus(corpus: AnnotatedCorpus, holdout_tokens: int):
    """Reserve whole sentences from the end totalling at least
    holdout_tokens for evaluation."""
    total = 0
    cut = len(corpus.sentences)
    while cut > 0 and total < holdout_tokens:
        cut -= 1
        total += len(corpus.sentences[cut])
    train = AnnotatedCorpus(corpus.sentences[:cut], corpus.provenance)
    test = AnnotatedCorpus(corpus.sentences[cut:], corpus.provenance)
    return train, test


def _baseline_tag(corpus, models, lex, classes):
    """Zero-training baseline: every token takes its canonically first
    candidate (uniform suffix prior, canonical tie-break)."""
    from .tagger import TaggedSentence
    from .tags import parse_tag
    out = []
    for sent in corpus.sentences:
        tokens = []
        for i, (surface, _tag) in enumerate(sent):
            cands, _unk = candidate_tags(surface, lex, models, classes,
                                         sentence_initial=(i == 0))
            tokens.append((surface, parse_tag(cands[0][0], models.kind)))
        out.append(TaggedSentence(tokens=tuple(tokens)))
    return out


def learning_curve(corpus: AnnotatedCorpus, algo: str, kind: str, sizes,
                   holdout_tokens: int, lex=None, classes=None,
                   n_max: int = 3):
    """Accuracy on a fixed holdout after training on the first ``size``
    tokens (whole sentences) for each requested size."""
    from .tagger import train_models

    train_all, test = split_corpus(corpus, holdout_tokens)
    max_train = train_all.token_count
    points = []
    for size in sizes:
        if size > max_train:
            raise EvaluationError(
                f"training size {size} exceeds available {max_train} tokens")
        taken = []
        total = 0
        for sent in train_all.sentences:
            if size and total + len(sent) > size:
                break
            if not size:
                break
            taken.append(sent)
            total += len(sent)
        if not taken:
            # degenerate zero-size point: no-context baseline
            from .analysis import SuffixModel
            empty = Models(kind=kind, n_max=n_max,
                           ngram_counts={}, lexical_counts={},
                           suffix_model=SuffixModel(kind=kind))
            predicted = _baseline_tag(test, empty, lex, classes)
            points.append((size, evaluate(test, predicted, kind).accuracy))
            continue
        sub = AnnotatedCorpus(tuple(taken), corpus.provenance)
        models = train_models(sub, kind, n_max=n_max)
        predicted = tag_corpus(test, models, lex, classes, algo)
        points.append((size, evaluate(test, predicted, kind).accuracy))
    return points


# ---------------------------------------------------------------------------
# Unknown-word perturbation.

_ONSETS = ("br", "dr", "fl", "gl", "gr", "kl", "kn", "pr", "schw", "schl",
           "sp", "st", "tr", "zw", "bl", "kr")
_NUCLEI = ("a", "e", "i", "o", "u", "au", "ei", "ie", "ö", "ü")


def _pseudoword(rng, model, capitalized):
    """Random onset plus a real suffix sampled from the suffix model."""
    suffixes = [s for s in sorted(model.totals)
                if s != CAP_PSEUDO_SUFFIX and len(s) >= 2]
    core = rng.choice(_ONSETS) + rng.choice(_NUCLEI) + rng.choice(_ONSETS)
    if suffixes:
        core += rng.choice(suffixes)
    else:
        core += rng.choice(("ung", "te", "en", "er"))
    if capitalized:
        core = core[0].upper() + core[1:]
    return core


def perturb_unknowns(corpus: AnnotatedCorpus, rate: float, seed: int,
                     known=None, suffix_model=None) -> AnnotatedCorpus:
    """Replace floor(rate * N) uniformly chosen token surfaces with
    synthetic out-of-lexicon strings; gold tags stay.  Capitalization and an
    inflection-like suffix are preserved.  ``known`` is an optional
    container of surfaces the replacements must avoid."""
    if not 0 <= rate <= 1:
        raise EvaluationError("rate must be within [0, 1]")
    rng = random.Random(seed)
    n = corpus.token_count
    k = int(rate * n)
    if k == 0:
        return corpus
    positions = []
    for si, sent in enumerate(corpus.sentences):
        for ti in range(len(sent)):
            positions.append((si, ti))
    chosen = set(rng.sample(positions, k))
    model = suffix_model if suffix_model is not None else _EMPTY_SUFFIXES
    new_sentences = []
    for si, sent in enumerate(corpus.sentences):
        out = []
        for ti, (surface, tag) in enumerate(sent):
            if (si, ti) in chosen:
                for _ in range(100):
                    word = _pseudoword(rng, model, surface[:1].isupper())
                    if known is None or word not in known:
                        break
                out.append((word, tag))
            else:
                out.append((surface, tag))
        new_sentences.append(tuple(out))
    return AnnotatedCorpus(tuple(new_sentences), corpus.provenance)


class _EmptySuffixes:
    totals = {}


_EMPTY_SUFFIXES = _EmptySuffixes()


def ambiguity_rate(sentences, lex, models: Models, classes) -> float:
    """Mean number of candidate tags per token under the model's tag set."""
    total = 0
    count = 0
    for sent in sentences:
        for i, surface in enumerate(sent):
            cands, _unk = candidate_tags(surface, lex, models, classes,
                                         sentence_initial=(i == 0))
            total += len(cands)
            count += 1
    return total / count if count else 0.0


def ngram_growth(stream, n_values=(2, 3, 4), checkpoints=()):
    """Distinct n-gram counts of a token stream at each prefix checkpoint."""
    stream = list(stream)
    checkpoints = list(checkpoints) or [len(stream)]
    if any(a > b for a, b in zip(checkpoints, checkpoints[1:])):
        raise EvaluationError("checkpoints must be ascending")
    seen = {n: set() for n in n_values}
    table = []
    pos = 0
    for cp in checkpoints:
        cp = min(cp, len(stream))
        while pos < cp:
            pos += 1
            for n in n_values:
                if pos >= n:
                    seen[n].add(tuple(stream[pos - n:pos]))
        for n in n_values:
            table.append((cp, n, len(seen[n])))
    return table
