# -*- coding: utf-8 -*-
"""Supervised statistical disambiguation.

Candidate tags come from morphological analysis; the corpus supplies tag
n-gram counts, lexical (form, tag) counts and suffix statistics.  Two
decoders are provided: an exact trigram decoder maximizing the product of
lexical and interpolated contextual probabilities over the whole sentence,
and a greedy variable-context decoder that chooses, per ambiguous token,
the tag supported by the longest tag window attested in training.  A
brute-force enumerator with the identical objective serves as a test
oracle for the trigram decoder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from itertools import product

from .analysis import SuffixModel, analyze_token, guess_unknown
from .corpus import AnnotatedCorpus
from .lexicon import Lexicon
from .tags import LARGE, SMALL, format_tag, map_large_to_small, parse_tag

BOUNDARY = "<B>"


class TaggerError(ValueError):
    """Raised for untrainable corpora or undecodable input."""


@dataclass(frozen=True)
class TaggedSentence:
    """One decoded sentence: (surface, tag) per token.  ``unknown`` flags
    tokens that fell back to suffix guessing; ``boundary_note`` records the
    decoder's boundary convention."""

    tokens: tuple                 # ((surface, Tag), ...)
    boundary_note: str = "boundary pseudo-tags assumed at both ends"
    unknown: tuple = ()

    def tags(self):
        return tuple(t for _, t in self.tokens)

    def surfaces(self):
        return tuple(s for s, _ in self.tokens)


@dataclass(frozen=True)
class Models:
    """Trained model bundle for one tag set kind."""

    kind: str
    n_max: int
    ngram_counts: dict            # tuple of tag strings -> count
    lexical_counts: dict          # (surface, tag string) -> count
    suffix_model: SuffixModel
    lambdas: tuple = (0.1, 0.3, 0.6)
    epsilon: float = 1e-6
    lexical_uniform: bool = False
    prefix_totals: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        lam = self.lambdas
        if len(lam) != 3 or any(x < 0 for x in lam) or \
                abs(sum(lam) - 1.0) > 1e-9:
            raise TaggerError("interpolation weights must be >=0 and sum to 1")
        if not self.prefix_totals:
            totals = {}
            for gram, c in self.ngram_counts.items():
                totals[gram[:-1]] = totals.get(gram[:-1], 0) + c
            self.prefix_totals.update(totals)

    # -- probabilities -------------------------------------------------------

    def context_prob(self, tag: str, t1: str, t2: str) -> float:
        """Interpolated P(tag | t1, t2); sums to one over the vocabulary for
        every context seen in training (no flooring here)."""
        l1, l2, l3 = self.lambdas
        p = 0.0
        tot1 = self.prefix_totals.get((), 0)
        if tot1:
            p += l1 * self.ngram_counts.get((tag,), 0) / tot1
        tot2 = self.prefix_totals.get((t2,), 0)
        if tot2:
            p += l2 * self.ngram_counts.get((t2, tag), 0) / tot2
        tot3 = self.prefix_totals.get((t1, t2), 0)
        if tot3:
            p += l3 * self.ngram_counts.get((t1, t2, tag), 0) / tot3
        return p

    def context_score(self, tag: str, t1: str, t2: str) -> float:
        return max(self.context_prob(tag, t1, t2), self.epsilon)

    def lexical_prob(self, surface: str, tag: str) -> float:
        c = self.lexical_counts.get((surface, tag), 0)
        t = self.ngram_counts.get((tag,), 0)
        return max(c / t if t else 0.0, self.epsilon)

    def tag_prior(self, tag: str) -> float:
        tot = self.prefix_totals.get((), 0)
        if not tot:
            return 0.0
        return self.ngram_counts.get((tag,), 0) / tot

    @property
    def tag_vocabulary(self):
        return sorted(g[0] for g in self.ngram_counts if len(g) == 1)


def train_models(corpus: AnnotatedCorpus, kind: str, n_max: int = 3,
                 lambdas=(0.1, 0.3, 0.6), epsilon: float = 1e-6) -> Models:
    """Count tag n-grams up to n_max (sentences padded with boundary
    pseudo-tags), lexical pairs, and suffix statistics."""
    if not corpus.sentences:
        raise TaggerError("cannot train on an empty corpus")
    if n_max < 3:
        raise TaggerError("n_max must be at least 3")
    ngrams = {}
    lexical = {}
    suffix = SuffixModel(kind=kind)
    for sent in corpus.sentences:
        tags = []
        for surface, tag in sent:
            if kind == SMALL:
                tag = map_large_to_small(tag)
            t = format_tag(tag)
            tags.append(t)
            lexical[(surface, t)] = lexical.get((surface, t), 0) + 1
            suffix.add(surface, tag if kind == LARGE
                       else parse_tag(t, SMALL))
        padded = [BOUNDARY] * (n_max - 1) + tags + [BOUNDARY]
        for n in range(1, n_max + 1):
            for i in range(len(padded) - n + 1):
                gram = tuple(padded[i:i + n])
                ngrams[gram] = ngrams.get(gram, 0) + 1
    return Models(kind=kind, n_max=n_max, ngram_counts=ngrams,
                  lexical_counts=lexical, suffix_model=suffix,
                  lambdas=tuple(lambdas), epsilon=epsilon)


def ablate_lexical(models: Models) -> Models:
    """Make the lexical probability uniform over each token's candidates;
    n-gram counts are untouched.  Idempotent."""
    if models.lexical_uniform:
        return models
    return replace(models, lexical_uniform=True,
                   prefix_totals=models.prefix_totals)


# ---------------------------------------------------------------------------
# Candidate extraction.

def candidate_tags(surface: str, lex: Lexicon, models: Models,
                   classes: dict, sentence_initial: bool = False):
    """(tag, lexical probability) candidates for a surface form, from
    morphology where known, from suffix statistics otherwise.  The second
    element of the returned triple marks unknown forms."""
    analyses = analyze_token(surface, lex, classes,
                             sentence_initial=sentence_initial)
    unknown = not analyses
    cands = {}
    if not unknown:
        tags = set()
        for a in analyses:
            tag = a.tag if models.kind == LARGE else map_large_to_small(a.tag)
            tags.add(format_tag(tag))
        if models.lexical_uniform:
            for t in tags:
                cands[t] = 1.0 / len(tags)
        else:
            for t in tags:
                cands[t] = models.lexical_prob(surface, t)
    else:
        guessed = guess_unknown(surface, models.suffix_model)
        if models.lexical_uniform:
            for tag, _p in guessed:
                cands[format_tag(tag)] = 1.0 / len(guessed)
        else:
            for tag, p in guessed:
                t = format_tag(tag)
                prior = max(models.tag_prior(t), models.epsilon)
                cands[t] = max(p, models.epsilon) / prior
    ordered = sorted(cands)
    return [(t, cands[t]) for t in ordered], unknown


def _sentence_candidates(sentence, lex, models, classes):
    if not sentence:
        raise TaggerError("empty sentence")
    cands = []
    unknown_flags = []
    for i, surface in enumerate(sentence):
        c, unk = candidate_tags(surface, lex, models, classes,
                                sentence_initial=(i == 0))
        cands.append(c)
        unknown_flags.append(unk)
    return cands, tuple(unknown_flags)


# ---------------------------------------------------------------------------
# Exact trigram decoding.

def _score_step(models, prev2, prev1, tag, lexp):
    return math.log(models.context_score(tag, prev2, prev1)) + \
        math.log(max(lexp, models.epsilon))


def score_sequence(models: Models, candidates, seq) -> float:
    """Log score of a full tag sequence under the trigram objective,
    accumulated left to right (shared by decoder and oracle)."""
    lexp = {i: dict(c) for i, c in enumerate(candidates)}
    total = 0.0
    prev2 = prev1 = BOUNDARY
    for i, tag in enumerate(seq):
        total += _score_step(models, prev2, prev1, tag, lexp[i][tag])
        prev2, prev1 = prev1, tag
    total += math.log(models.context_score(BOUNDARY, prev2, prev1))
    return total


def _decode_trigram(models, candidates):
    """Viterbi over (prev, current) tag states.  Ties broken toward the
    lexicographically smallest tag-string sequence."""
    start = (BOUNDARY, BOUNDARY)
    beam = {start: (0.0, ())}
    for cands in candidates:
        nxt = {}
        for (p2, p1), (score, seq) in beam.items():
            for tag, lexp in cands:
                s = score + _score_step(models, p2, p1, tag, lexp)
                key = (p1, tag)
                cur = nxt.get(key)
                cand = (s, seq + (tag,))
                if cur is None or s > cur[0] or \
                        (s == cur[0] and cand[1] < cur[1]):
                    nxt[key] = cand
        beam = nxt
    best = None
    for (p2, p1), (score, seq) in beam.items():
        s = score + math.log(models.context_score(BOUNDARY, p2, p1))
        if best is None or s > best[0] or (s == best[0] and seq < best[1]):
            best = (s, seq)
    return best[1]


def tag_church(sentence, models: Models, lex: Lexicon,
               classes: dict) -> TaggedSentence:
    """Exact dynamic-programming decode of the trigram objective."""
    cands, unknown = _sentence_candidates(sentence, lex, models, classes)
    seq = _decode_trigram(models, cands)
    tokens = tuple((w, parse_tag(t, models.kind))
                   for w, t in zip(sentence, seq))
    return TaggedSentence(tokens=tokens, unknown=unknown)


def tag_bruteforce(sentence, models: Models, lex: Lexicon, classes: dict,
                   limit: int = 10 ** 6) -> TaggedSentence:
    """Exhaustive enumeration of all candidate tag sequences with the
    identical objective and tie-break; the test oracle for tag_church."""
    cands, unknown = _sentence_candidates(sentence, lex, models, classes)
    size = 1
    for c in cands:
        size *= len(c)
        if size > limit:
            raise TaggerError(
                f"candidate space exceeds {limit} sequences")
    # cached log factors; the sum below pairs them exactly like _score_step
    loglex = [{t: math.log(max(p, models.epsilon)) for t, p in c}
              for c in cands]
    logctx = {}

    def ctx(p2, p1, t):
        key = (p2, p1, t)
        v = logctx.get(key)
        if v is None:
            v = math.log(models.context_score(t, p2, p1))
            logctx[key] = v
        return v

    best = None
    for seq in product(*[[t for t, _ in c] for c in cands]):
        total = 0.0
        prev2 = prev1 = BOUNDARY
        for i, tag in enumerate(seq):
            total += ctx(prev2, prev1, tag) + loglex[i][tag]
            prev2, prev1 = prev1, tag
        total += ctx(prev2, prev1, BOUNDARY)
        if best is None or total > best[0] or \
                (total == best[0] and seq < best[1]):
            best = (total, seq)
    tokens = tuple((w, parse_tag(t, models.kind))
                   for w, t in zip(sentence, best[1]))
    return TaggedSentence(tokens=tokens, unknown=unknown)


# ---------------------------------------------------------------------------
# Variable-context decoding.

def _window_support(models, left, tag, right_cands, l_max, r_max):
    """Longest window (left context, tag, right possibilities) attested in
    the n-gram counts.  Returns (window length, best count)."""
    best_len, best_count = 0, 0
    for l in range(min(l_max, len(left)), -1, -1):
        ctx = tuple(left[len(left) - l:])
        for r in range(min(r_max, len(right_cands),
                           models.n_max - l - 1), -1, -1):
            if l + 1 + r < best_len:
                break
            count = _max_count_right(models, ctx + (tag,), right_cands, r)
            if count > 0:
                if l + 1 + r > best_len or \
                        (l + 1 + r == best_len and count > best_count):
                    best_len, best_count = l + 1 + r, count
    return best_len, best_count


def _max_count_right(models, gram, right_cands, r):
    if r == 0:
        return models.ngram_counts.get(gram, 0)
    best = 0
    for tag, _ in right_cands[0]:
        c = _max_count_right(models, gram + (tag,), right_cands[1:], r - 1)
        if c > best:
            best = c
    return best


def tag_varcontext(sentence, models: Models, lex: Lexicon, classes: dict,
                   assume_boundaries: bool = True) -> TaggedSentence:
    """Greedy left-to-right decode: each ambiguous token takes the tag
    supported by the longest attested window of already-assigned left tags,
    the candidate itself, and possible right tags.  Ties fall back to the
    window count, then the lexical probability, then canonical order."""
    cands, unknown = _sentence_candidates(sentence, lex, models, classes)
    l_pad = models.n_max - 1 if assume_boundaries else 0
    assigned = [BOUNDARY] * l_pad
    note = ("boundary pseudo-tags assumed at both ends" if assume_boundaries
            else "no boundary pseudo-tags assumed")
    for i, c in enumerate(cands):
        if len(c) == 1:
            assigned.append(c[0][0])
            continue
        right = cands[i + 1:]
        scored = []
        for tag, lexp in c:
            length, count = _window_support(
                models, assigned, tag, right,
                l_max=models.n_max - 1, r_max=models.n_max - 1)
            scored.append((-length, -count, -lexp, tag))
        scored.sort()
        assigned.append(scored[0][3])
    seq = assigned[l_pad:]
    tokens = tuple((w, parse_tag(t, models.kind))
                   for w, t in zip(sentence, seq))
    return TaggedSentence(tokens=tokens, boundary_note=note, unknown=unknown)


# ---------------------------------------------------------------------------
# Model persistence: line-oriented sections NGRAM / LEX / SUFFIX / META.

def save_models(models: Models) -> str:
    lines = []
    lines.append(f"META\tkind\t{models.kind}")
    lines.append(f"META\tn_max\t{models.n_max}")
    lines.append(f"META\tlambda1\t{models.lambdas[0]!r}")
    lines.append(f"META\tlambda2\t{models.lambdas[1]!r}")
    lines.append(f"META\tlambda3\t{models.lambdas[2]!r}")
    lines.append(f"META\tepsilon\t{models.epsilon!r}")
    lines.append(f"META\tlexical_uniform\t{int(models.lexical_uniform)}")
    lines.append(f"META\tsuffix_max_len\t{models.suffix_model.max_len}")
    for gram in sorted(models.ngram_counts):
        lines.append("NGRAM\t%d\t%s\t%d" % (
            len(gram), "|".join(gram), models.ngram_counts[gram]))
    for (surface, tag) in sorted(models.lexical_counts):
        lines.append("LEX\t%s\t%s\t%d" % (
            surface, tag, models.lexical_counts[(surface, tag)]))
    for (suffix, tag) in sorted(models.suffix_model.counts):
        lines.append("SUFFIX\t%s\t%s\t%d" % (
            suffix, tag, models.suffix_model.counts[(suffix, tag)]))
    return "".join(line + "\n" for line in lines)


def load_models(text: str) -> Models:
    meta = {}
    ngrams = {}
    lexical = {}
    suffix_counts = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.startswith("#"):
            continue
        fields = raw.split("\t")
        kind = fields[0]
        try:
            if kind == "META":
                meta[fields[1]] = fields[2]
            elif kind == "NGRAM":
                _, _n, grams, count = fields
                ngrams[tuple(grams.split("|"))] = int(count)
            elif kind == "LEX":
                _, surface, tag, count = fields
                lexical[(surface, tag)] = int(count)
            elif kind == "SUFFIX":
                _, suf, tag, count = fields
                suffix_counts[(suf, tag)] = int(count)
            else:
                raise ValueError(f"unknown section {kind!r}")
        except ValueError as err:
            raise TaggerError(f"line {lineno}: {err}") from err
    tag_kind = meta.get("kind", LARGE)
    suffix = SuffixModel(max_len=int(meta.get("suffix_max_len", 5)),
                         kind=tag_kind)
    for (suf, tag), count in suffix_counts.items():
        suffix.counts[(suf, tag)] = count
        suffix.totals[suf] = suffix.totals.get(suf, 0) + count
    return Models(
        kind=tag_kind, n_max=int(meta.get("n_max", 3)),
        ngram_counts=ngrams, lexical_counts=lexical, suffix_model=suffix,
        lambdas=(float(meta.get("lambda1", 0.1)),
                 float(meta.get("lambda2", 0.3)),
                 float(meta.get("lambda3", 0.6))),
        epsilon=float(meta.get("epsilon", 1e-6)),
        lexical_uniform=bool(int(meta.get("lexical_uniform", 0))))
