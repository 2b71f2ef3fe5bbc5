# -*- coding: utf-8 -*-
import pytest
from hypothesis import given
from hypothesis import strategies as st

from morphy.inflection import (InflectionError, apply_umlaut, elide_stem,
                               expand_full_form_lexicon, generate_forms,
                               join_with_s_shift, load_paradigms,
                               mark_participle, save_paradigms)
from morphy.lexicon import LexiconEntry
from morphy.tags import LARGE, TagSet, format_tag, parse_tag


def entry_for(lex, root, pos="VER", prefix=None):
    hits = [e for e in lex.lookup_roots(root)
            if e.pos == pos and e.prefix == prefix]
    assert len(hits) == 1
    return hits[0]


def rows_of(lex, classes, root, pos="SUB", prefix=None):
    t = generate_forms(entry_for(lex, root, pos, prefix), classes)
    return {(s, format_tag(g)) for s, g in t.rows}, t


# -- umlaut -------------------------------------------------------------------

@pytest.mark.parametrize("stem,expected", [
    ("Haus", "Häus"),
    ("Fluß", "Flüß"),
    ("Meister", "Meister"),
    ("Apfel", "Äpfel"),
    ("Baum", "Bäum"),
    ("kuh", "küh"),
    ("lauf", "läuf"),
    ("Vogel", "Vögel"),
    ("xyz", "xyz"),
])
def test_apply_umlaut(stem, expected):
    assert apply_umlaut(stem) == expected


@given(st.text(alphabet="abcdefghijklmnopqrstuvwxyzäöüß", max_size=12))
def test_umlaut_preserves_length_and_alphabet(stem):
    out = apply_umlaut(stem)
    assert len(out) == len(stem)
    diff = [(a, b) for a, b in zip(stem, out) if a != b]
    assert len(diff) <= 1
    if diff:
        assert diff[0] in [("a", "ä"), ("o", "ö"), ("u", "ü")]


def test_umlaut_mutates_rightmost_vowel():
    assert apply_umlaut("Handtuch") == "Handtüch"
    assert apply_umlaut("Ausbau") == "Ausbäu"


# -- stem/suffix joining --------------------------------------------------------

def test_s_shift_examples():
    assert join_with_s_shift("Flüß", "e", True) == "Flüsse"
    assert join_with_s_shift("küß", "t", True) == "küßt"
    assert join_with_s_shift("spiel", "st", False) == "spielst"
    assert join_with_s_shift("Fuß", "es", False) == "Fußes"
    assert join_with_s_shift("Fluß", "", True) == "Fluß"


@given(st.text(alphabet="aelnrsßt", max_size=8),
       st.sampled_from(["", "e", "es", "st", "t", "en", "er"]))
def test_s_shift_never_fires_on_consonant_suffixes(stem, suffix):
    out = join_with_s_shift(stem, suffix, True)
    if not suffix or suffix[0] not in "aeiouäöü":
        assert out == stem + suffix


def test_elide_stem():
    assert elide_stem("edel") == "edl"
    assert elide_stem("dunkel") == "dunkl"
    assert elide_stem("teuer") == "teur"
    assert elide_stem("euer") == "eur"
    assert elide_stem("besser") == "besser"
    assert elide_stem("schnell") == "schnell"


# -- participle markers ----------------------------------------------------------

def test_mark_participle(lex):
    spielen = entry_for(lex, "spiel")
    assert mark_participle("spielt", spielen, "ge") == "gespielt"
    telefonieren = entry_for(lex, "telefonier")
    assert mark_participle("telefoniert", telefonieren, "ge") == "telefoniert"
    abspielen = entry_for(lex, "spiel", prefix="ab")
    assert mark_participle("spielen", abspielen, "zu") == "abzuspielen"
    assert mark_participle("spielt", abspielen, "ge") == "abgespielt"
    verspielen = entry_for(lex, "spiel", prefix="ver")
    assert mark_participle("spielt", verspielen, "ge") == "verspielt"
    assert mark_participle("spielen", verspielen, "zu") == "verspielen"
    with pytest.raises(InflectionError):
        mark_participle("Haus", entry_for(lex, "Fluß", "SUB"), "ge")


# -- generation -------------------------------------------------------------------

def test_fluss_table(lex, classes):
    rows, t = rows_of(lex, classes, "Fluß")
    assert t.lemma == "Fluß"
    assert ("Flüssen", "SUB DAT MAS PLU") in rows
    assert ("Flusses", "SUB GEN MAS SIN") in rows
    assert ("Flüsse", "SUB NOM MAS PLU") in rows


def test_kuessen_family(lex, classes):
    rows, t = rows_of(lex, classes, "küß", pos="VER")
    assert t.lemma == "küssen"
    assert ("küsse", "VER 1PE SIN PRÄ") in rows
    assert ("küsse", "VER 1PE SIN KJ1") in rows
    assert ("küsse", "VER 3PE SIN KJ1") in rows
    assert ("küsse", "VER IMP SIN") in rows
    assert ("küßt", "VER 3PE SIN PRÄ") in rows
    assert ("geküßt", "VER PA2") in rows


def test_einnehmen_joined_preterite(lex, classes):
    rows, t = rows_of(lex, classes, "nehm", pos="VER", prefix="ein")
    assert t.lemma == "(ein)nehmen"
    assert ("einnahm", "VER 1PE SIN PRT") in rows
    assert ("einnahm", "VER 3PE SIN PRT") in rows
    assert ("eingenommen", "VER PA2") in rows
    assert ("einzunehmen", "VER EIZ") in rows
    assert ("einnimmst", "VER 2PE SIN PRÄ") in rows


def test_long_vowel_sharp_s_is_kept(lex, classes):
    rows, _ = rows_of(lex, classes, "Fuß")
    assert ("Füße", "SUB NOM MAS PLU") in rows
    assert ("Fußes", "SUB GEN MAS SIN") in rows


def test_no_extended_infinitive_without_separable_prefix(lex, classes):
    rows, _ = rows_of(lex, classes, "spiel", pos="VER")
    assert not any(tag == "VER EIZ" for _, tag in rows)
    rows, _ = rows_of(lex, classes, "spiel", pos="VER", prefix="ver")
    assert not any(tag == "VER EIZ" for _, tag in rows)


def test_missing_class_and_bad_override(classes):
    with pytest.raises(InflectionError):
        generate_forms(LexiconEntry(root="x", pos="VER",
                                    inflection_class="nope"), classes)
    with pytest.raises(InflectionError):
        generate_forms(LexiconEntry(
            root="spiel", pos="VER", inflection_class="v_weak",
            overrides=(("no_such_slot", "y"),)), classes)


def test_every_generated_tag_is_valid(lex, classes):
    large = TagSet(LARGE)
    for e in lex.entries:
        for _, tag in generate_forms(e, classes).rows:
            assert parse_tag(format_tag(tag), LARGE) == tag


def test_generation_is_deterministic(lex, classes):
    for e in list(lex.entries)[:20]:
        assert generate_forms(e, classes) == generate_forms(e, classes)


def test_dialogue_alternative_forms_generated(lex, classes):
    # forms offered and chosen in the classification dialogue
    rows, _ = rows_of(lex, classes, "telefonier", pos="VER")
    assert ("telefonierst", "VER 2PE SIN PRÄ") in rows
    assert ("telefoniert", "VER PA2") in rows


def test_expand_full_form_lexicon(lex, classes, fullform):
    # the map equals the brute-force union of all form tables
    expected = {}
    for e in lex.entries:
        t = generate_forms(e, classes)
        for s, tag in t.rows:
            expected.setdefault(s, set()).add((t.lemma, tag))
    assert len(fullform) == len(expected)
    for surface, readings in expected.items():
        assert fullform.lookup(surface) == frozenset(readings)


def test_expand_empty():
    from morphy.lexicon import Lexicon
    assert len(expand_full_form_lexicon(Lexicon(), {})) == 0


def test_paradigm_file_round_trip(classes):
    text = save_paradigms(classes)
    again = load_paradigms(text)
    assert again == classes
    assert save_paradigms(again) == text
