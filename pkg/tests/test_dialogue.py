# -*- coding: utf-8 -*-
import pytest

from morphy.dialogue import (DialogueError, answer, start_classification)
from morphy.inflection import generate_forms


def run(pos, root, choices):
    state = start_classification(pos, root)
    for c in choices:
        state = answer(state, c)
    return state


def test_telefonieren_transcript():
    state = start_classification("VER", "telefonieren")
    q1 = state.pending
    assert q1.text == "Wird das Verb schwach konjugiert?"
    assert q1.alternatives == ("Ja", "Nein")
    state = answer(state, 1)
    q2 = state.pending
    assert q2.text == "Wie lautet die 2. Person Singular Präsens?"
    assert q2.alternatives == ("du telefonierst", "du telefonierest",
                               "du telefoniert")
    state = answer(state, 1)
    q3 = state.pending
    assert q3.text == "Wie lautet das Partizip des Verbs?"
    assert q3.alternatives == ("telefoniert", "getelefoniert")
    state = answer(state, 1)
    assert state.complete
    e = state.draft
    assert e.root == "telefonier"
    assert e.inflection_class == "v_weak"
    assert e.has_flag("no_ge_participle")


def test_telefonieren_forms(classes):
    e = run("VER", "telefonieren", (1, 1, 1)).draft
    table = generate_forms(e, classes)
    surfaces = set(table.surfaces())
    assert "telefonierst" in surfaces
    assert ("telefoniert" in
            {s for s, t in table.rows if str(t) == "VER PA2"})


def test_spielen_with_ge_participle(classes):
    state = run("VER", "spielen", (1, 1))
    assert state.pending.alternatives == ("spielt", "gespielt")
    state = answer(state, 2)
    e = state.draft
    assert not e.has_flag("no_ge_participle")
    rows = {(s, str(t)) for s, t in generate_forms(e, classes).rows}
    assert ("gespielt", "VER PA2") in rows


def test_noun_dialogue_haus(classes):
    state = start_classification("SUB", "Haus")
    assert state.pending.qid == "gender"
    state = answer(state, 3)          # das Haus
    alts = state.pending.alternatives
    assert "die Häuser" in alts
    state = answer(state, alts.index("die Häuser") + 1)
    galts = state.pending.alternatives
    assert "des Hauses" in galts
    state = answer(state, galts.index("des Hauses") + 1)
    e = state.draft
    assert e.inflection_class == "n_es_er"
    assert e.gender == "NEU"
    assert e.has_flag("umlaut_in_paradigm")
    rows = {(s, str(t)) for s, t in generate_forms(e, classes).rows}
    assert ("Häusern", "SUB DAT NEU PLU") in rows


def test_feminine_noun_short_path():
    state = start_classification("SUB", "Blume")
    state = answer(state, 2)          # die Blume
    alts = state.pending.alternatives
    state = answer(state, alts.index("die Blumen") + 1)
    assert state.complete
    assert state.draft.inflection_class == "n_f_n"


def test_adjective_dialogue(classes):
    state = start_classification("ADJ", "alt")
    alts = state.pending.alternatives
    assert "älter" in alts
    state = answer(state, alts.index("älter") + 1)
    alts = state.pending.alternatives
    assert "der älteste" in alts
    state = answer(state, alts.index("der älteste") + 1)
    e = state.draft
    assert e.inflection_class == "adj_uml_est"
    rows = {s for s, _ in generate_forms(e, classes).rows}
    assert "älter" in rows and "älteste" in rows


def test_closed_class_completes_immediately():
    state = start_classification("PRP", "durch")
    assert state.complete
    assert state.pending is None
    assert state.draft.root == "durch"


def test_strong_verb_path(classes):
    state = start_classification("VER", "geben")
    state = answer(state, 2)          # not weak
    alts = state.pending.alternatives
    assert "du gibst" in alts
    state = answer(state, alts.index("du gibst") + 1)
    alts = state.pending.alternatives
    assert "ich gab" in alts
    state = answer(state, alts.index("ich gab") + 1)
    alts = state.pending.alternatives
    assert "gegeben" in alts
    state = answer(state, alts.index("gegeben") + 1)
    e = state.draft
    assert e.inflection_class == "v_strong"
    rows = {(s, str(t)) for s, t in generate_forms(e, classes).rows}
    assert ("gibst", "VER 2PE SIN PRÄ") in rows
    assert ("gab", "VER 3PE SIN PRT") in rows
    assert ("gegeben", "VER PA2") in rows


def test_errors():
    with pytest.raises(DialogueError):
        start_classification("VER", "")
    with pytest.raises(DialogueError):
        start_classification("VER", "Haus")    # not an infinitive
    state = start_classification("VER", "spielen")
    with pytest.raises(DialogueError):
        answer(state, 9)
    with pytest.raises(DialogueError):
        answer(state, 0)
    done = start_classification("PRP", "durch")
    with pytest.raises(DialogueError):
        answer(done, 1)


def _walk_all_paths(pos, root, classes, limit=8):
    """Exhaustively walk the dialogue tree; every leaf must be a valid,
    generable entry whose chosen surface alternatives it generates."""
    leaves = []

    def rec(state, chosen, depth):
        assert depth <= limit
        if state.complete:
            leaves.append((state.draft, chosen))
            return
        q = state.pending
        for i, alt in enumerate(q.alternatives, start=1):
            rec(answer(state, i), chosen + [(q.qid, alt)], depth + 1)

    rec(start_classification(pos, root), [], 0)
    assert leaves
    for entry, chosen in leaves:
        table = generate_forms(entry, classes)
        surfaces = set(table.surfaces())
        for qid, alt in chosen:
            form = alt.split(" ")[-1]
            if qid in ("pres2", "pres23", "plural", "pret", "genitive",
                       "part2", "part2s", "komp", "sup"):
                assert form in surfaces, (entry, qid, form)


def test_dialogue_soundness_and_completeness(classes):
    _walk_all_paths("VER", "spielen", classes)
    _walk_all_paths("VER", "trinken", classes)
    _walk_all_paths("SUB", "Haus", classes)
    _walk_all_paths("SUB", "Lampe", classes)
    _walk_all_paths("ADJ", "klein", classes)
    _walk_all_paths("ADJ", "lang", classes)
