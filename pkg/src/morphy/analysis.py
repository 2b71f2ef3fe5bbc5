# -*- coding: utf-8 -*-
"""Word-form analysis.

Analysis inverts generation without a full-form table: all paradigm
suffixes are cut off the word form, the remainders (plus their
umlaut-reversed and ss/ß-restored variants) are looked up as stems, every
matching entry's form table is generated and only readings whose surface
equals the input survive.  Forms that resist direct analysis are attempted
as noun compounds, segmented by a longest-matching rule from right to
left.  Unknown forms get a tag distribution from suffix statistics.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

from .inflection import (FullFormLexicon, InflectionError, generate_forms,
                         _slot_core, _stem_for)
from .lexicon import Lexicon
from .tags import (LARGE, OPEN_CLASS_SMALL, SMALL, Tag, format_tag,
                   map_large_to_small, parse_tag)

_UMLAUT_REVERSE = (("äu", "au"), ("ä", "a"), ("ö", "o"), ("ü", "u"),
                   ("Äu", "Au"), ("Ä", "A"), ("Ö", "O"), ("Ü", "U"))

# Linking elements permitted at compound-internal boundaries.
LINKERS = ("s", "es", "n", "en", "er", "e")

_NUMBER_RE = re.compile(r"^\d+([.,]\d+)*$")


@dataclass(frozen=True)
class Analysis:
    """One morphological reading: citation lemma, large tag, and the lemma
    segments of a compound (a singleton for simple words)."""

    lemma: str
    tag: Tag
    segments: tuple = ()
    # (written piece, linker) pairs recording how a compound was matched;
    # empty for simple words.  Used to reassemble the original surface.
    pieces: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if not self.segments:
            object.__setattr__(self, "segments", (self.lemma,))

    def render(self, surface: str) -> str:
        segs = "/".join(self.segments)
        return f"{surface}\t{self.lemma}\t{format_tag(self.tag)}\t{segs}"


def _sort_key(a: Analysis):
    return (format_tag(a.tag), a.lemma, a.segments)


def _reverse_umlaut(s: str):
    """Candidate spellings with the rightmost umlaut undone."""
    best_i = -1
    best = None
    for uml, plain in _UMLAUT_REVERSE:
        i = s.rfind(uml)
        if i < 0:
            continue
        if i > best_i or (i == best_i and len(uml) > len(best[0])):
            best_i, best = i, (uml, plain)
    if best is None:
        return ()
    uml, plain = best
    return (s[:best_i] + plain + s[best_i + len(uml):],)


def _candidate_variants(remainder: str):
    out = [remainder]
    if remainder.endswith("ss"):
        out.append(remainder[:-2] + "ß")
    for base in tuple(out):
        out.extend(_reverse_umlaut(base))
    seen = set()
    uniq = []
    for c in out:
        if c not in seen:
            seen.add(c)
            uniq.append(c)
    return tuple(uniq)


class Analyzer:
    """Suffix-stripping analyzer over a lexicon and paradigm classes.

    Builds an index from every stem shape the paradigms can produce
    (transformed, prefixed, participle-marked, in stored orthography) to the
    entries it belongs to.  The index and per-entry form tables are cached
    until the lexicon version changes.
    """

    def __init__(self, lex: Lexicon, classes: dict):
        self.lexicon = lex
        self.classes = classes
        self._version = None
        self._stem_index = {}
        self._suffixes = ()
        self._noun_lemmas = {}
        self._segment_lemmas = {}
        self._tables = {}
        self._refresh()

    # -- index construction -------------------------------------------------

    def _refresh(self):
        if self._version == self.lexicon.version:
            return
        stem_index = {}
        suffixes = set([""])
        noun_lemmas = {}
        segment_lemmas = {}
        tables = {}
        surface_maps = {}
        for entry in self.lexicon.entries:
            cls = self.classes.get(entry.inflection_class)
            if cls is None:
                raise InflectionError(
                    f"entry {entry.root!r}: unknown class "
                    f"{entry.inflection_class!r}")
            table = generate_forms(entry, self.classes)
            tables[entry] = table
            smap = {}
            for surface, tag in table.rows:
                smap.setdefault(surface, []).append(tag)
            surface_maps[entry] = smap
            prefix = entry.prefix or ""
            for slot in cls.slots:
                if slot.marker == "zu_infix" and \
                        entry.prefix_kind != "separable":
                    continue
                suffixes.add(slot.suffix)
                if entry.override(slot.slot_id) is not None:
                    key = prefix + entry.override(slot.slot_id)
                else:
                    stem, _ = _stem_for(entry, slot.stem_transform)
                    marker = ""
                    if slot.marker == "ge_prefix_or_infix" and \
                            not entry.has_flag("no_ge_participle") and \
                            entry.prefix_kind != "inseparable":
                        marker = "ge"
                    elif slot.marker == "zu_infix":
                        marker = "zu"
                    key = prefix + marker + stem
                stem_index.setdefault(key, set()).add(entry)
            if entry.pos == "SUB":
                noun_lemmas.setdefault(table.lemma, set()).add(entry)
            if entry.pos in ("SUB", "ADJ") or entry.pos.startswith("VER"):
                seg_key = table.lemma if entry.pos == "SUB" else entry.root
                if entry.prefix_kind == "none":
                    segment_lemmas.setdefault(seg_key, set()).add(
                        (table.lemma,))
        self._stem_index = stem_index
        self._suffixes = tuple(
            sorted(suffixes, key=lambda s: (-len(s), s)))
        self._noun_lemmas = noun_lemmas
        self._segment_lemmas = segment_lemmas
        self._tables = tables
        self._surface_maps = surface_maps
        self._version = self.lexicon.version

    def table(self, entry):
        self._refresh()
        return self._tables[entry]

    # -- suffix stripping ----------------------------------------------------

    def candidate_roots(self, form: str):
        """All (root candidate, stripped suffix, note) triples obtained by
        cutting paradigm suffixes and undoing umlaut and the ß/ss shift."""
        self._refresh()
        out = []
        seen = set()
        for suffix in self._suffixes:
            if suffix and not form.endswith(suffix):
                continue
            if suffix and len(suffix) >= len(form):
                continue
            remainder = form[:len(form) - len(suffix)] if suffix else form
            for variant in _candidate_variants(remainder):
                if (variant, suffix) in seen:
                    continue
                seen.add((variant, suffix))
                note = "plain" if variant == remainder else "restored"
                out.append((variant, suffix, note))
        return out

    def _direct(self, form: str):
        """Readings whose generated surface equals the form exactly."""
        self._refresh()
        hits = set()
        for cand, _suffix, _note in self.candidate_roots(form):
            for entry in self._stem_index.get(cand, ()):
                lemma = self._tables[entry].lemma
                for tag in self._surface_maps[entry].get(form, ()):
                    hits.add((lemma, tag))
        return hits

    def analyze(self, form: str):
        """All readings of a single token; case-exact.  Falls back to
        compound segmentation when direct analysis fails."""
        hits = self._direct(form)
        if hits:
            analyses = [Analysis(lemma, tag) for lemma, tag in hits]
            return sorted(analyses, key=_sort_key)
        return self.segment_compound(form)

    def analyze_cased(self, form: str):
        """Union of readings of the form as written and with the initial
        letter lowercased (sentence-initial tolerance).  Compound
        segmentation runs once: it is case-tolerant by construction."""
        hits = set(self._direct(form))
        if form[:1].isupper():
            lowered = form[0].lower() + form[1:]
            if lowered != form:
                hits |= self._direct(lowered)
        if hits:
            return sorted((Analysis(lemma, tag) for lemma, tag in hits),
                          key=_sort_key)
        return self.segment_compound(form)

    # -- compounds ------------------------------------------------------------

    def _is_segment_lemma(self, piece: str):
        """Match a non-head compound segment against noun lemmas, verb stems
        and adjective bases; returns the recorded lemma or None."""
        cap = piece[:1].upper() + piece[1:]
        for key in (cap, piece):
            hit = self._segment_lemmas.get(key)
            if hit:
                return sorted(hit)[0][0]
        return None

    def _segment_prefix(self, rem: str, memo: dict):
        """Split a compound non-head remainder into lexicon segments.

        Returns the segmentation with the fewest pieces as a list of
        (lemma, written_piece, linker) triples, or None.  A doubled
        consonant swallowed at the boundary (written CC for CCC) is
        restored by re-using the boundary letter.
        """
        if rem == "":
            return []
        if rem in memo:
            return memo[rem]
        memo[rem] = None   # cycle guard for restored-consonant recursion
        best = None
        for linker in ("",) + tuple(LINKERS):
            if linker:
                if not rem.endswith(linker) or len(rem) <= len(linker):
                    continue
                r1 = rem[:-len(linker)]
            else:
                r1 = rem
            for k in range(len(r1), 0, -1):
                piece = r1[-k:]
                lemma = self._is_segment_lemma(piece)
                if lemma is not None:
                    left = r1[:-k]
                    sub = self._segment_prefix(left, memo)
                    if sub is not None:
                        result = sub + [(lemma, piece, linker)]
                        if best is None or len(result) < len(best):
                            best = result
                    # wider piece re-using the boundary consonant
                    if left and left[-1] == piece[0] and \
                            piece[0] not in "aeiouäöü":
                        sub = self._segment_prefix(left + piece[0], memo)
                        if sub is not None:
                            marked = sub[:-1] + [
                                (sub[-1][0], sub[-1][1][:-1], sub[-1][2])]
                            result = marked + [(lemma, piece, linker)]
                            if best is None or len(result) < len(best):
                                best = result
        memo[rem] = best
        return best

    def segment_compound(self, form: str):
        """Noun-compound readings: the longest analyzable noun suffix is the
        inflecting head, the remainder must split into lexicon segments with
        optional linking elements."""
        if len(form) < 2:
            return []
        for i in range(1, len(form)):
            head = form[i:]
            if len(head) < 2:
                break
            head_cap = head[0].upper() + head[1:]
            readings = {(lemma, tag) for lemma, tag in self._direct(head_cap)
                        if tag.pos == "SUB"}
            if not readings:
                continue
            parts = self._segment_prefix(form[:i], {})
            if parts is None:
                continue
            analyses = []
            for lemma, tag in sorted(readings):
                head_lemma = lemma
                compound_lemma = form[:i] + head_lemma[0].lower() + \
                    head_lemma[1:]
                segments = tuple(p[0] for p in parts) + (head_lemma,)
                pieces = tuple((p[1], p[2]) for p in parts) + ((head, ""),)
                analyses.append(Analysis(
                    lemma=compound_lemma, tag=tag, segments=segments,
                    pieces=pieces))
            return sorted(analyses, key=_sort_key)
        return []


# Convenience wrappers matching the operation signatures.

_ANALYZERS = {}


def _analyzer_for(lex: Lexicon, classes: dict) -> Analyzer:
    key = (id(lex), id(classes))
    an = _ANALYZERS.get(key)
    if an is None or an.lexicon is not lex or an.classes is not classes:
        an = Analyzer(lex, classes)
        _ANALYZERS[key] = an
    return an


def candidate_roots(form: str, lex: Lexicon, classes: dict):
    return _analyzer_for(lex, classes).candidate_roots(form)


def analyze(form: str, lex: Lexicon, classes: dict):
    return _analyzer_for(lex, classes).analyze(form)


def segment_compound(form: str, lex: Lexicon, classes: dict):
    return _analyzer_for(lex, classes).segment_compound(form)


def analyze_token(form: str, lex: Lexicon, classes: dict,
                  sentence_initial: bool = False):
    """User-facing analysis: numbers are recognized as such, capitalized
    forms additionally tried lowercased."""
    an = _analyzer_for(lex, classes)
    if _NUMBER_RE.match(form):
        return [Analysis(lemma=form, tag=Tag(LARGE, "ZAN"))]
    if sentence_initial:
        return an.analyze_cased(form)
    return an.analyze(form)


def fullform_analyze(form: str, ffl: FullFormLexicon, analyzer: Analyzer):
    """Lookup-based analysis over an expanded full-form lexicon, augmented
    by the same compound routine."""
    readings = ffl.lookup(form)
    if readings:
        return sorted((Analysis(lemma, tag) for lemma, tag in readings),
                      key=_sort_key)
    return analyzer.segment_compound(form)


# ---------------------------------------------------------------------------
# Unknown-word suffix statistics.

CAP_PSEUDO_SUFFIX = "^"


class SuffixModel:
    """Counts of (word-ending, tag) pairs for unknown-word prediction.

    Endings of length 1..max_len are counted for every training pair;
    capitalized forms are additionally counted under a capitalization
    pseudo-suffix.  Punctuation and number tags are skipped: they are closed
    classes an unknown alphabetic form can never belong to.
    """

    def __init__(self, max_len: int = 5, kind: str = LARGE):
        self.max_len = max_len
        self.kind = kind
        self.counts = {}        # (suffix, tag string) -> count
        self.totals = {}        # suffix -> count

    def __len__(self):
        return len(self.counts)

    def _count(self, suffix: str, tag: Tag, n: int = 1):
        key = (suffix, format_tag(tag))
        self.counts[key] = self.counts.get(key, 0) + n
        self.totals[suffix] = self.totals.get(suffix, 0) + n

    def add(self, form: str, tag: Tag):
        if tag.pos.startswith("SZ") or tag.pos == "ZAN":
            return
        for n in range(1, min(self.max_len, len(form) - 1) + 1):
            self._count(form[-n:], tag)
        if form[:1].isupper():
            self._count(CAP_PSEUDO_SUFFIX, tag)

    def distribution(self, suffix: str):
        total = self.totals.get(suffix)
        if not total:
            return {}
        return {t: c / total for (s, t), c in self.counts.items()
                if s == suffix}


def train_suffix_model(data, max_len: int = 5, kind: str = LARGE):
    """Train from an iterable of (surface form, Tag) pairs (an annotated
    corpus or an expanded full-form lexicon both flatten to that)."""
    model = SuffixModel(max_len=max_len, kind=kind)
    for form, tag in data:
        model.add(form, tag)
    return model


def pairs_from_fullform(ffl: FullFormLexicon):
    for surface, readings in ffl.items():
        for _lemma, tag in readings:
            yield surface, tag


def guess_unknown(form: str, model: SuffixModel, support: int = 3):
    """Tag distribution for an unknown form from its longest sufficiently
    attested ending, blended half/half with the capitalization distribution
    for capitalized forms.  Probabilities sum to one."""
    dist = {}
    for n in range(min(model.max_len, len(form) - 1), 0, -1):
        suffix = form[-n:]
        if model.totals.get(suffix, 0) >= support:
            dist = model.distribution(suffix)
            break
    if form[:1].isupper():
        cap = model.distribution(CAP_PSEUDO_SUFFIX)
        if cap and dist:
            merged = {t: 0.5 * dist.get(t, 0.0) + 0.5 * cap.get(t, 0.0)
                      for t in set(dist) | set(cap)}
            dist = merged
        elif cap:
            dist = cap
    if not dist:
        # open-class codes parse under either tag set kind
        dist = {format_tag(parse_tag(code, model.kind)): 1.0
                for code in OPEN_CLASS_SMALL}
    total = sum(dist.values())
    items = [(parse_tag(t, model.kind), p / total)
             for t, p in dist.items() if p > 0]
    items.sort(key=lambda tp: (-tp[1], format_tag(tp[0])))
    return items
