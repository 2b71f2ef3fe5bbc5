# -*- coding: utf-8 -*-
import random

import pytest

from morphy.analysis import (SuffixModel, analyze_token, guess_unknown,
                             pairs_from_fullform, train_suffix_model)
from morphy.tags import LARGE, SMALL, format_tag, parse_tag


def readings(analyzer, form, cased=True):
    out = analyzer.analyze_cased(form) if cased else analyzer.analyze(form)
    return {(a.lemma, format_tag(a.tag)) for a in out}


# -- candidate roots -----------------------------------------------------------

def test_candidate_roots_fluessen(analyzer):
    cands = {(c, s) for c, s, _ in analyzer.candidate_roots("Flüssen")}
    assert ("Fluß", "en") in cands
    assert ("Flüssen", "") in cands


def test_candidate_roots_kuesse(analyzer):
    cands = {(c, s) for c, s, _ in analyzer.candidate_roots("Küsse")}
    assert ("Kuß", "e") in cands
    cands = {(c, s) for c, s, _ in analyzer.candidate_roots("küsse")}
    assert ("kuß", "e") in cands


def test_candidate_roots_unmatched_tail(analyzer):
    assert analyzer.candidate_roots("xyz") == [("xyz", "", "plain")]


def test_candidate_roots_is_duplicate_free(analyzer):
    out = analyzer.candidate_roots("Flüssen")
    assert len(out) == len({(c, s) for c, s, _ in out})


# -- analysis of the documented forms -------------------------------------------

def test_analyze_kuesse_exactly_seven(analyzer):
    got = readings(analyzer, "Küsse")
    assert got == {
        ("Kuß", "SUB NOM MAS PLU"),
        ("Kuß", "SUB GEN MAS PLU"),
        ("Kuß", "SUB AKK MAS PLU"),
        ("küssen", "VER 1PE SIN PRÄ"),
        ("küssen", "VER 1PE SIN KJ1"),
        ("küssen", "VER 3PE SIN KJ1"),
        ("küssen", "VER IMP SIN"),
    }


def test_analyze_verspieltest(analyzer):
    assert readings(analyzer, "verspieltest", cased=False) == {
        ("ver-spielen", "VER 2PE SIN PRT"),
        ("ver-spielen", "VER 2PE SIN KJ2"),
    }


def test_analyze_edlem(analyzer):
    assert readings(analyzer, "edlem", cased=False) == {
        ("edel", "ADJ DAT NEU SIN"),
        ("edel", "ADJ DAT MAS SIN"),
    }


def test_analyze_unknown_is_empty(analyzer):
    assert analyzer.analyze("Grunzling") == []


def test_analyze_case_exact_by_default(analyzer):
    # the core function does not fall back to the lowercased reading
    noun_only = analyzer.analyze("Küsse")
    assert all(a.tag.pos == "SUB" for a in noun_only)


def test_analyze_deterministic_and_duplicate_free(analyzer):
    a = analyzer.analyze_cased("Winde")
    b = analyzer.analyze_cased("Winde")
    assert a == b
    assert len(a) == len({(x.lemma, x.tag, x.segments) for x in a})


# -- compounds -------------------------------------------------------------------

def test_bauernhaeusern(analyzer):
    out = analyzer.analyze_cased("Bauernhäusern")
    assert len(out) == 1
    a = out[0]
    assert format_tag(a.tag) == "SUB DAT NEU PLU"
    assert a.segments == ("Bauer", "Haus")
    assert a.lemma == "Bauernhaus"


def test_schiffahrtshafenmeisters(analyzer):
    out = analyzer.analyze_cased("Schiffahrtshafenmeisters")
    assert len(out) == 1
    a = out[0]
    assert format_tag(a.tag) == "SUB GEN MAS SIN"
    assert a.segments == ("Schiff", "Fahrt", "Hafen", "Meister")


def test_compound_reassembly_is_byte_exact(analyzer):
    for word in ("Bauernhäusern", "Schiffahrtshafenmeisters", "Haustür",
                 "Kinderbuch", "Spielkarte", "Stadthaus"):
        for a in analyzer.segment_compound(word):
            rebuilt = "".join(piece + linker for piece, linker in a.pieces)
            assert rebuilt == word


def test_uncoverable_remainder(analyzer):
    assert analyzer.segment_compound("Hausxyz") == []
    assert analyzer.analyze("Hausxyz") == []


def test_longest_head_preferred(analyzer):
    # "meister" wins over shorter noun suffixes of the same word
    out = analyzer.segment_compound("Hausmeister")
    assert out and out[0].segments == ("Haus", "Meister")


# -- number tokens ----------------------------------------------------------------

def test_numbers_get_the_number_tag(lex, classes):
    out = analyze_token("100", lex, classes)
    assert [(a.lemma, format_tag(a.tag)) for a in out] == [("100", "ZAN")]


# -- suffix statistics ---------------------------------------------------------------

def test_train_suffix_model_single_pair():
    model = SuffixModel(max_len=3)
    model.add("spielst", parse_tag("VER 2PE SIN", LARGE))
    got = {s: c for (s, _t), c in model.counts.items()}
    assert got == {"t": 1, "st": 1, "lst": 1}


def test_empty_model():
    model = train_suffix_model([])
    assert len(model) == 0


def test_suffix_mass_ung_is_noun(desk_corpus):
    model = train_suffix_model(
        ((w, t) for s in desk_corpus.sentences for w, t in s))
    # independent recount over the raw corpus ("jung" keeps this from
    # being exclusively nominal)
    expected = {}
    for sent in desk_corpus.sentences:
        for w, t in sent:
            if w.endswith("ung") and len(w) > 3 and not \
                    t.pos.startswith("SZ"):
                expected[t.pos] = expected.get(t.pos, 0) + 1
    noun_share = expected.get("SUB", 0) / sum(expected.values())
    dist = model.distribution("ung")
    assert sum(dist.values()) == pytest.approx(1.0)
    got_share = sum(p for t, p in dist.items() if t.startswith("SUB"))
    assert got_share == pytest.approx(noun_share)
    assert got_share > 0.5


def test_capitalization_pseudo_suffix():
    model = SuffixModel(max_len=2)
    model.add("Haus", parse_tag("SUB NOM NEU SIN", LARGE))
    model.add("lauf", parse_tag("VER IMP SIN", LARGE))
    caps = [s for (s, _t) in model.counts if s == "^"]
    assert len(caps) == 1


def test_punctuation_not_counted():
    model = SuffixModel()
    model.add("..", parse_tag("SZE", LARGE))
    model.add("12", parse_tag("ZAN", LARGE))
    assert len(model) == 0


# -- unknown-word guessing -------------------------------------------------------------

def test_guess_verspaetung_is_noun(fullform):
    model = train_suffix_model(pairs_from_fullform(fullform))
    dist = guess_unknown("Verspätung", model)
    total = sum(p for _, p in dist)
    assert total == pytest.approx(1.0, abs=1e-9)
    noun_mass = sum(p for t, p in dist if t.pos == "SUB")
    assert noun_mass > 0.5
    assert dist[0][0].pos == "SUB"


def test_guess_preterite_verb(fullform):
    model = train_suffix_model(pairs_from_fullform(fullform))
    dist = guess_unknown("grunzelte", model)
    top = dist[0][0]
    assert top.pos == "VER"
    assert top.feature("tense") in ("PRT", "KJ2")


def test_guess_with_empty_model_is_uniform_open_class():
    model = SuffixModel(kind=SMALL)
    dist = guess_unknown("Q", model)
    probs = {p for _, p in dist}
    assert len(probs) == 1
    assert sum(p for _, p in dist) == pytest.approx(1.0, abs=1e-9)
    assert {format_tag(t) for t, _ in dist} == {
        "SUB", "EIG", "VER", "VER INF", "VER PA2", "ADJ", "ADJ ADV", "ADV"}


def test_guess_never_returns_punctuation(desk_corpus):
    model = train_suffix_model(
        ((w, t) for s in desk_corpus.sentences for w, t in s))
    rng = random.Random(7)
    letters = "abcdefghijklmnopqrstuvwxyzäöüß"
    for _ in range(200):
        word = "".join(rng.choice(letters)
                       for _ in range(rng.randint(1, 12)))
        dist = guess_unknown(word, model)
        assert sum(p for _, p in dist) == pytest.approx(1.0, abs=1e-9)
        assert not any(t.pos.startswith("SZ") for t, _ in dist)


# -- round trip against generation ------------------------------------------------------

def test_round_trip_all_generated_forms(analyzer, fullform):
    for surface, expected in fullform.items():
        got = {(a.lemma, a.tag) for a in analyzer.analyze(surface)}
        assert expected <= got, surface


def test_fullform_oracle_equivalence(analyzer, fullform):
    from morphy.analysis import fullform_analyze
    rng = random.Random(10_000)
    letters = "abcdefghijklmnopqrstuvwxyzäöüß"
    for _ in range(2000):
        word = "".join(rng.choice(letters)
                       for _ in range(rng.randint(1, 14)))
        if rng.random() < 0.5:
            word = word[0].upper() + word[1:]
        via_suffix = analyzer.analyze(word)
        via_table = fullform_analyze(word, fullform, analyzer)
        assert via_suffix == via_table, word
