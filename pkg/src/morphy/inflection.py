# -*- coding: utf-8 -*-
"""Inflected-form generation.

A paradigm class is a list of slots; each slot holds a tag template, a
suffix, a stem transform and an optional participle marker.  Generation
walks the slots of an entry's class, applying vowel mutation, the old
orthography ß/ss alternation at stem-suffix boundaries, and ge-/zu- marker
placement for participles and extended infinitives.  Expanding every entry
of a lexicon yields a full-form lexicon usable for direct lookup.

Paradigm file format, one slot per line, UTF-8::

    class_id<TAB>slot_id<TAB>tag template<TAB>suffix<TAB>stem_transform<TAB>marker

The template may contain ``$G``, replaced by the entry's gender.  The first
slot of a class is its citation slot (nominative singular for nouns,
infinitive for verbs, positive base for adjectives); it supplies the lemma.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .lexicon import Lexicon, LexiconEntry
from .tags import LARGE, Tag, parse_tag

VOWELS = "aeiouäöüAEIOUÄÖÜ"

STEM_TRANSFORMS = (
    "none", "umlaut", "elide", "pret_stem", "part2_stem", "pres23_stem",
    "kj2_stem",
)
MARKERS = ("none", "ge_prefix_or_infix", "zu_infix")

_UMLAUT = {"a": "ä", "o": "ö", "u": "ü", "A": "Ä", "O": "Ö", "U": "Ü"}


class InflectionError(ValueError):
    """Raised for missing classes, bad slots or malformed paradigm data."""


def apply_umlaut(stem: str) -> str:
    """Mutate the rightmost a/o/u/au of a stem (au -> äu, checked first).

    Stems without a mutable vowel are returned unchanged; letter case is
    preserved.
    """
    for i in range(len(stem) - 1, -1, -1):
        ch = stem[i]
        if ch in "uU" and i > 0 and stem[i - 1] in "aA":
            return stem[:i - 1] + _UMLAUT[stem[i - 1]] + stem[i:]
        if ch in "aouAOU":
            return stem[:i] + _UMLAUT[ch] + stem[i + 1:]
    return stem


def elide_stem(stem: str) -> str:
    """Drop the unstressed e of a final -el, or of -er after a vowel.

    Adjective and determiner stems like "edel" or "euer" lose this e before
    declension endings (edlem, eurem); stems like "besser" keep it.
    """
    if len(stem) >= 3 and stem.endswith("el") and stem[-3] not in VOWELS:
        return stem[:-2] + "l"
    if len(stem) >= 3 and stem.endswith("er") and stem[-3] in VOWELS:
        return stem[:-2] + "r"
    return stem


def join_with_s_shift(stem: str, suffix: str, shift_enabled: bool) -> str:
    """Concatenate stem and suffix, turning a final ß into ss before a
    vowel-initial suffix when the entry's orthography flag is set."""
    if shift_enabled and suffix and stem.endswith("ß") and \
            suffix[0] in "aeiouäöü":
        return stem[:-1] + "ss" + suffix
    return stem + suffix


def mark_participle(stem_form: str, entry: LexiconEntry, marker: str) -> str:
    """Attach the ge- or zu- marker to an inflected core form.

    ge: prefixed for plain verbs, infixed between a separable prefix and the
    stem, and omitted for inseparable-prefix verbs and verbs flagged
    no_ge_participle.  zu: infixed after a separable prefix; for other verbs
    the plain form is returned (the standalone "zu" is a matter of syntax).
    """
    if not entry.pos.startswith("VER"):
        raise InflectionError(
            f"participle marking on non-verb entry {entry.root!r}")
    prefix = entry.prefix or ""
    if marker == "ge":
        if entry.has_flag("no_ge_participle"):
            return prefix + stem_form
        if entry.prefix_kind == "inseparable":
            return prefix + stem_form
        if entry.prefix_kind == "separable":
            return prefix + "ge" + stem_form
        return "ge" + stem_form
    if marker == "zu":
        if entry.prefix_kind == "separable":
            return prefix + "zu" + stem_form
        return prefix + stem_form
    raise InflectionError(f"unknown participle marker {marker!r}")


@dataclass(frozen=True)
class ParadigmSlot:
    slot_id: str
    tag_template: str
    suffix: str
    stem_transform: str
    marker: str


@dataclass(frozen=True)
class ParadigmClass:
    class_id: str
    slots: tuple

    @property
    def slot_ids(self):
        return frozenset(s.slot_id for s in self.slots)

    @property
    def transforms_used(self):
        return frozenset(s.stem_transform for s in self.slots)


def load_paradigms(source: str) -> dict:
    """Parse a paradigm class file into {class_id: ParadigmClass}."""
    slots_by_class = {}
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 6:
            raise InflectionError(
                f"line {lineno}: expected 6 tab-separated fields")
        class_id, slot_id, template, suffix, transform, marker = fields
        if transform not in STEM_TRANSFORMS:
            raise InflectionError(
                f"line {lineno}: unknown stem transform {transform!r}")
        if marker not in MARKERS:
            raise InflectionError(f"line {lineno}: unknown marker {marker!r}")
        slot = ParadigmSlot(slot_id, template, suffix, transform, marker)
        slots_by_class.setdefault(class_id, [])
        if slot_id in {s.slot_id for s in slots_by_class[class_id]}:
            raise InflectionError(
                f"line {lineno}: duplicate slot {slot_id!r} in {class_id!r}")
        slots_by_class[class_id].append(slot)
    return {cid: ParadigmClass(cid, tuple(slots))
            for cid, slots in slots_by_class.items()}


def save_paradigms(classes: dict) -> str:
    lines = []
    for cid in sorted(classes):
        for s in classes[cid].slots:
            lines.append("\t".join([cid, s.slot_id, s.tag_template, s.suffix,
                                    s.stem_transform, s.marker]))
    return "".join(line + "\n" for line in lines)


@lru_cache(maxsize=None)
def _template_tag(template: str, gender: str | None) -> Tag:
    text = template
    if "$G" in text:
        if gender is None:
            raise InflectionError(
                f"template {template!r} needs a gender")
        text = text.replace("$G", gender)
    return parse_tag(text, LARGE)


def _stem_for(entry: LexiconEntry, transform: str):
    """Resolve a slot's stem.  Returns (stem, shift_ok): the ß/ss shift only
    applies to stems still carrying the root's final ß."""
    root = entry.root
    if transform == "none":
        return root, True
    if transform == "umlaut":
        if entry.has_flag("umlaut_in_paradigm"):
            return apply_umlaut(root), True
        return root, True
    if transform == "elide":
        return elide_stem(root), True
    if transform in ("pret_stem", "part2_stem", "pres23_stem"):
        ov = entry.override(transform)
        if ov is not None:
            return ov, False
        return root, True
    if transform == "kj2_stem":
        ov = entry.override("kj2_stem")
        if ov is not None:
            return ov, False
        pret = entry.override("pret_stem")
        if pret is not None:
            return apply_umlaut(pret), False
        return root, True
    raise InflectionError(f"unknown stem transform {transform!r}")


@dataclass(frozen=True)
class FormTable:
    """All inflected forms of one entry: (surface, tag) rows plus the
    citation lemma."""

    lemma: str
    rows: tuple   # ((surface, Tag), ...)

    def surfaces(self):
        return tuple(s for s, _ in self.rows)


def render_lemma(entry: LexiconEntry, citation_core: str) -> str:
    """Citation form with the prefix rendered: (ein)nehmen for separable,
    ver-spielen for inseparable prefixes."""
    if entry.prefix and entry.prefix_kind == "separable":
        return f"({entry.prefix}){citation_core}"
    if entry.prefix and entry.prefix_kind == "inseparable":
        return f"{entry.prefix}-{citation_core}"
    return citation_core


def _slot_core(entry: LexiconEntry, slot: ParadigmSlot) -> str:
    """Inflected form of a slot before prefix attachment."""
    ov = entry.override(slot.slot_id)
    if ov is not None:
        return ov
    stem, shift_ok = _stem_for(entry, slot.stem_transform)
    shift = entry.has_flag("ss_sharp_shift") and shift_ok
    return join_with_s_shift(stem, slot.suffix, shift)


def generate_forms(entry: LexiconEntry, classes: dict) -> FormTable:
    """Produce every inflected form of an entry with its large tag."""
    cls = classes.get(entry.inflection_class)
    if cls is None:
        raise InflectionError(
            f"entry {entry.root!r}: unknown class {entry.inflection_class!r}")
    valid_keys = cls.slot_ids | cls.transforms_used
    for key, _ in entry.overrides:
        if key not in valid_keys:
            raise InflectionError(
                f"entry {entry.root!r}: override for nonexistent slot {key!r}")
    prefix = entry.prefix or ""
    rows = []
    seen = set()
    lemma = None
    for slot in cls.slots:
        if slot.marker == "zu_infix" and entry.prefix_kind != "separable":
            continue
        core = _slot_core(entry, slot)
        if entry.override(slot.slot_id) is not None:
            # overrides hold the fully marked form minus the prefix
            surface = prefix + core
        elif slot.marker == "ge_prefix_or_infix":
            surface = mark_participle(core, entry, "ge")
        elif slot.marker == "zu_infix":
            surface = mark_participle(core, entry, "zu")
        else:
            surface = prefix + core
        if lemma is None:
            lemma = render_lemma(entry, core)
        tag = _template_tag(slot.tag_template, entry.gender)
        if (surface, tag) not in seen:
            seen.add((surface, tag))
            rows.append((surface, tag))
    if lemma is None:
        raise InflectionError(
            f"class {cls.class_id!r} generated no forms for {entry.root!r}")
    return FormTable(lemma=lemma, rows=tuple(rows))


class FullFormLexicon:
    """Map from surface form to its set of (lemma, tag) readings."""

    def __init__(self, forms: dict):
        self._forms = forms

    def lookup(self, surface: str) -> frozenset:
        return self._forms.get(surface, frozenset())

    def __len__(self):
        return len(self._forms)

    def __contains__(self, surface):
        return surface in self._forms

    def items(self):
        return self._forms.items()

    def dump(self) -> str:
        """Interchange format: sorted ``surface<TAB>lemma<TAB>tag`` lines."""
        lines = []
        for surface, readings in self._forms.items():
            for lemma, tag in readings:
                lines.append(f"{surface}\t{lemma}\t{tag}")
        return "".join(line + "\n" for line in sorted(lines))


def expand_full_form_lexicon(lex: Lexicon, classes: dict) -> FullFormLexicon:
    """Union of the form tables of all entries."""
    forms = {}
    for entry in lex.entries:
        try:
            table = generate_forms(entry, classes)
        except InflectionError as err:
            raise InflectionError(
                f"entry {entry.root!r} ({entry.inflection_class}): {err}"
            ) from err
        for surface, tag in table.rows:
            forms.setdefault(surface, set()).add((table.lemma, tag))
    return FullFormLexicon(
        {s: frozenset(r) for s, r in forms.items()})
