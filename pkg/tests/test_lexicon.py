# -*- coding: utf-8 -*-
import pytest

from morphy.lexicon import (Lexicon, LexiconEntry, LexiconError,
                            load_lexicon, save_lexicon)

FLUSS = ("Fluß\tSUB\tn_es_e\tgender=MAS,"
         "flags=ss_sharp_shift,umlaut_in_paradigm\n")
NEHMEN = ("nehm\tVER\tv_strong\tprefix=ein,prefix_kind=separable,"
          "override.part2=genommen,override.pres23_stem=nimm,"
          "override.pret_stem=nahm\n")


def test_load_single_entry():
    lex = load_lexicon(FLUSS)
    assert len(lex) == 1
    e = lex.entries[0]
    assert e.root == "Fluß" and e.pos == "SUB" and e.gender == "MAS"
    assert e.has_flag("ss_sharp_shift") and e.has_flag("umlaut_in_paradigm")


def test_load_flags_split_across_tab_fields():
    # the flags value may itself be comma-separated
    text = "Fluß\tSUB\tn_es_e\tgender=MAS\tflags=umlaut_in_paradigm," \
           "ss_sharp_shift\n"
    lex = load_lexicon(text)
    assert lex.entries[0].flags == frozenset(
        ("umlaut_in_paradigm", "ss_sharp_shift"))


def test_load_prefixed_verb_with_overrides():
    lex = load_lexicon(NEHMEN)
    e = lex.entries[0]
    assert e.prefix == "ein" and e.prefix_kind == "separable"
    assert e.override("pret_stem") == "nahm"
    assert e.override("part2") == "genommen"


def test_empty_file_and_comments():
    assert len(load_lexicon("")) == 0
    assert len(load_lexicon("# nur ein Kommentar\n\n")) == 0


def test_malformed_line_reports_number():
    with pytest.raises(LexiconError) as err:
        load_lexicon("# ok\nFluß\tSUB\n")
    assert "line 2" in str(err.value)


def test_unknown_flag_and_class_rejected(classes):
    with pytest.raises(LexiconError):
        load_lexicon("Haus\tSUB\tn_es_er\tgender=NEU,flags=sparkly\n")
    with pytest.raises(LexiconError):
        load_lexicon("Haus\tSUB\tno_such_class\tgender=NEU\n", classes)


def test_nouns_need_gender():
    with pytest.raises(LexiconError):
        LexiconEntry(root="Haus", pos="SUB", inflection_class="n_es_er")


def test_round_trip_identity_and_byte_stability():
    text = FLUSS + NEHMEN + "spiel\tVER\tv_weak\n"
    lex = load_lexicon(text)
    saved = save_lexicon(lex)
    again = load_lexicon(saved)
    assert set(again.entries) == set(lex.entries)
    assert save_lexicon(again) == saved


def test_seed_lexicon_round_trip(lex, classes):
    saved = save_lexicon(lex)
    again = load_lexicon(saved, classes)
    assert set(again.entries) == set(lex.entries)
    assert save_lexicon(again) == saved


def test_save_order_is_deterministic():
    a = LexiconEntry(root="spiel", pos="VER", inflection_class="v_weak")
    b = LexiconEntry(root="Spiel", pos="SUB", inflection_class="n_es_e",
                     gender="NEU")
    assert save_lexicon(Lexicon([a, b])) == save_lexicon(Lexicon([b, a]))


def test_lookup_roots_exact_match(lex):
    hits = lex.lookup_roots("Fluß")
    assert len(hits) == 1 and hits[0].pos == "SUB"
    roots = {e.prefix for e in lex.lookup_roots("nehm")}
    assert roots == {None, "ein"}
    assert lex.lookup_roots("xyzzy") == []
    assert all(e.root == "mein" for e in lex.lookup_roots("mein"))


def test_duplicate_entries_rejected():
    lex = load_lexicon(FLUSS)
    with pytest.raises(LexiconError):
        lex.add_entry(lex.entries[0])


def test_homographs_allowed(lex):
    # "sie" is both the 3sg feminine and the 3pl personal pronoun
    assert len(lex.lookup_roots("sie")) == 2
