#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Emit src/morphy/data/desk_corpus.tsv (~3000 hand-tagged tokens).

Sentences are built from grammatical templates over the seed lexicon, so
every gold tag is derived from the construction (case, agreement,
declension) and is guaranteed to be among the form's analyses.  The texture
is newspaper-plain declarative German with a few imperatives, questions and
subordinate clauses.
"""

import os
import random
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from morphy.data import load_default_paradigms, load_seed_lexicon
from morphy.inflection import elide_stem, generate_forms
from morphy.tags import format_tag, parse_tag

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "morphy", "data",
                   "desk_corpus.tsv")

classes = load_default_paradigms()
lex = load_seed_lexicon()

_tables = {}


def table(root, pos, prefix=None):
    key = (root, pos, prefix)
    if key not in _tables:
        hits = [e for e in lex.lookup_roots(root)
                if e.pos == pos and e.prefix == prefix]
        if len(hits) != 1:
            raise SystemExit(f"lexicon lookup failed for {key}")
        _tables[key] = (hits[0], generate_forms(hits[0], classes))
    return _tables[key]


def entry_gender(root):
    entry, _ = table(root, "SUB")
    return entry.gender


def form(root, pos, tag_str, prefix=None, pick=0):
    """Surface of the paradigm row with exactly this tag (pick'th match)."""
    _, t = table(root, pos, prefix)
    tag = parse_tag(tag_str, "large")
    matches = [s for s, g in t.rows if g == tag]
    if not matches:
        raise SystemExit(f"no row {tag_str!r} for {root} ({pos})")
    return matches[pick], tag_str


# Adjective ending by determiner type (weak after definite words, mixed
# after ein-words, strong without determiner).
ADJ_END = {
    "def": {("NOM", "MAS"): "e", ("NOM", "FEM"): "e", ("NOM", "NEU"): "e",
            ("NOM", "PLU"): "en", ("AKK", "MAS"): "en", ("AKK", "FEM"): "e",
            ("AKK", "NEU"): "e", ("AKK", "PLU"): "en",
            ("DAT", "MAS"): "en", ("DAT", "FEM"): "en", ("DAT", "NEU"): "en",
            ("DAT", "PLU"): "en", ("GEN", "MAS"): "en", ("GEN", "FEM"): "en",
            ("GEN", "NEU"): "en", ("GEN", "PLU"): "en"},
    "ind": {("NOM", "MAS"): "er", ("NOM", "FEM"): "e", ("NOM", "NEU"): "es",
            ("NOM", "PLU"): "en", ("AKK", "MAS"): "en", ("AKK", "FEM"): "e",
            ("AKK", "NEU"): "es", ("AKK", "PLU"): "en",
            ("DAT", "MAS"): "en", ("DAT", "FEM"): "en", ("DAT", "NEU"): "en",
            ("DAT", "PLU"): "en", ("GEN", "MAS"): "en", ("GEN", "FEM"): "en",
            ("GEN", "NEU"): "en", ("GEN", "PLU"): "en"},
    "none": {("NOM", "MAS"): "er", ("NOM", "FEM"): "e", ("NOM", "NEU"): "es",
             ("NOM", "PLU"): "e", ("AKK", "MAS"): "en", ("AKK", "FEM"): "e",
             ("AKK", "NEU"): "es", ("AKK", "PLU"): "e",
             ("DAT", "MAS"): "em", ("DAT", "FEM"): "er", ("DAT", "NEU"): "em",
             ("DAT", "PLU"): "en", ("GEN", "MAS"): "en", ("GEN", "FEM"): "er",
             ("GEN", "NEU"): "en", ("GEN", "PLU"): "er"},
}
ADJ_END["poss"] = ADJ_END["ind"]
ADJ_END["dem"] = ADJ_END["def"]


def adj(root, det, case, gender, number):
    g = gender if number == "SIN" else "PLU"
    ending = ADJ_END[det][(case, g)]
    surface = elide_stem(root) + ending
    tag = f"ADJ {case} {gender} SIN" if number == "SIN" else \
        f"ADJ {case} PLU"
    _, t = table(root, "ADJ")
    parsed = parse_tag(tag, "large")
    if (surface, parsed) not in t.rows:
        raise SystemExit(f"adjective row missing: {surface} {tag}")
    return surface, tag


def np(case, noun, det="def", adjective=None, number="SIN", poss="mein",
       archaic_dat=False):
    """Tokens of a noun phrase with correct agreement."""
    gender = entry_gender(noun)
    toks = []
    ntag = f"SUB {case} {gender} {number}"
    if det == "def":
        dtag = f"ART DEF {case} {gender} SIN" if number == "SIN" else \
            f"ART DEF {case} PLU"
        toks.append(form("d", "ART", dtag))
    elif det == "ind":
        toks.append(form("ein", "ART", f"ART IND {case} {gender} SIN"))
    elif det == "poss":
        ptag = f"PRO POS {case} {gender} SIN ATT" if number == "SIN" else \
            f"PRO POS {case} PLU ATT"
        toks.append(form(poss, "PRO POS", ptag))
    elif det == "dem":
        dtag = f"PRO DEM {case} {gender} SIN ATT" if number == "SIN" else \
            f"PRO DEM {case} PLU ATT"
        toks.append(form("dies", "PRO DEM", dtag))
    elif det == "none":
        pass
    else:
        raise SystemExit(f"unknown determiner {det!r}")
    if adjective:
        toks.append(adj(adjective, det, case, gender, number))
    toks.append(form(noun, "SUB", ntag, pick=0))
    return toks


def pers(word, tag):
    return [(word, tag)]


def tok(surface, tag):
    return [(surface, tag)]


PUNCT = {".": "SZE", "!": "SZE", "?": "SZE", ",": "SZK"}


def sent(*parts, end="."):
    tokens = []
    for p in parts:
        tokens.extend(p)
    tokens.append((end, PUNCT[end]))
    # capitalize the first surface like running text
    first, ftag = tokens[0]
    if first[0].islower() and not ftag.startswith("SZ"):
        tokens[0] = (first[0].upper() + first[1:], ftag)
    return tokens


rng = random.Random(19960)

SUBJ_NOUNS = ["Frau", "Vater", "Lehrer", "Junge", "Mädchen", "Kind",
              "Freund", "Student", "Mutter", "Tochter", "Bruder", "Katze",
              "Hund", "Meister", "Bauer", "Kunde", "Spieler", "Mensch"]
OBJ_NOUNS = ["Essen", "Buch", "Brief", "Haus", "Brot", "Lied", "Bild",
             "Apfel", "Kuchen", "Wein", "Fisch", "Wagen", "Mantel", "Glas",
             "Heft", "Foto", "Karte", "Blume", "Lampe", "Tasche", "Suppe",
             "Zeitung", "Uhr", "Antwort", "Frage", "Sprache", "Stuhl",
             "Tisch", "Boot", "Schiff", "Segel", "Pferd"]
DAT_NOUNS = ["Garten", "Haus", "Dorf", "Zimmer", "Küche", "Schule",
             "Kirche", "Stadt", "Straße", "Feld", "Berg", "Land", "Hafen"]
TRANS_3 = [("such", None), ("seh", None), ("hol", None), ("kauf", None),
           ("bring", None), ("find", None), ("lieb", None), ("zeig", None),
           ("mal", None), ("pack", None), ("trag", None), ("wasch", None),
           ("öffn", None), ("les", None), ("brauch", None)]
INTRANS = ["spiel", "sing", "tanz", "arbeit", "wander", "lächel",
           "schlaf", "wart", "telefonier", "segel", "schwimm", "kletter"]
ADJS = ["klein", "schnell", "schön", "alt", "jung", "neu", "grün", "blau",
        "rot", "warm", "kalt", "frisch", "laut", "ruhig", "freundlich",
        "verspielt", "edel", "dunkel", "teuer", "stark"]
PRED_ADJS = ["schnell", "klein", "alt", "jung", "schön", "kalt", "warm",
             "laut", "teuer", "gut", "ruhig", "frisch", "dunkel", "edel"]
ADVS = ["heute", "oft", "gern", "hier", "dort", "jetzt", "immer", "wieder",
        "manchmal", "draußen", "schon", "bald"]
PERS_SUBJ = [("ich", "PRO PER 1PE NOM SIN", "1sg"),
             ("du", "PRO PER 2PE NOM SIN", "2sg"),
             ("er", "PRO PER 3PE NOM MAS SIN", "3sg"),
             ("sie", "PRO PER 3PE NOM FEM SIN", "3sgf"),
             ("wir", "PRO PER 1PE NOM PLU", "1pl"),
             ("sie", "PRO PER 3PE NOM PLU", "3pl")]
PERS_TAGMAP = {"1sg": "1PE SIN", "2sg": "2PE SIN", "3sg": "3PE SIN",
               "3sgf": "3PE SIN", "1pl": "1PE PLU", "3pl": "3PE PLU"}
NAMES = [("Anna", "FEM"), ("Egon", "MAS"), ("Maria", "FEM"),
         ("Peter", "MAS"), ("Hansen", "MAS")]
POSS = ["mein", "dein", "sein", "ihr", "unser"]
PREP_DAT = [("in", "prp"), ("auf", "prp"), ("an", "prp")]


def v(root, tag, prefix=None):
    return [form(root, "VER", tag, prefix=prefix)]


def aux(root, tag):
    return [form(root, "VER AUX", tag)]


def sentences():
    out = []

    def emit(tokens):
        out.append(tokens)

    # The two showcase sentences, verbatim.
    emit(sent(np("NOM", "Frau"), v("bring", "VER 3PE SIN PRÄ"),
              np("AKK", "Essen")))
    emit(sent(pers("Ich", "PRO PER 1PE NOM SIN"),
              v("mein", "VER 1PE SIN PRÄ"),
              np("AKK", "Frau", det="poss", poss="mein")))
    # The winch sentence (imperative, archaic dative, participle).
    emit([("Winde", "VER IMP SIN"), ("das", "ART DEF AKK NEU SIN"),
          ("im", "PRP DAT"), ("Winde", "SUB DAT MAS SIN"),
          ("flatternde", "PA1 AKK NEU SIN"), ("Segel", "SUB AKK NEU SIN"),
          ("um", "PRP AKK"), ("die", "ART DEF AKK FEM SIN"),
          ("Winde", "SUB AKK FEM SIN"), (".", "SZE")])

    # Simple transitive clauses, the backbone pattern.
    for i in range(90):
        subj = rng.choice(SUBJ_NOUNS)
        obj = rng.choice(OBJ_NOUNS)
        verb, _ = rng.choice(TRANS_3)
        det_s = rng.choice(["def", "def", "def", "ind", "dem"])
        det_o = rng.choice(["def", "def", "ind", "poss"])
        adj_o = rng.choice(ADJS) if rng.random() < 0.35 else None
        adj_s = rng.choice(ADJS) if rng.random() < 0.2 else None
        emit(sent(np("NOM", subj, det=det_s, adjective=adj_s),
                  v(verb, "VER 3PE SIN PRÄ"),
                  np("AKK", obj, det=det_o, adjective=adj_o,
                     poss=rng.choice(POSS))))

    # Personal pronoun subject + transitive verb + possessive object.
    for i in range(40):
        word, ptag, agr = rng.choice(PERS_SUBJ)
        verb = rng.choice(["mein", "seh", "such", "lieb", "frag", "hör",
                           "brauch", "kauf"])
        vtag = f"VER {PERS_TAGMAP[agr]} PRÄ"
        obj = rng.choice(["Frau", "Freund", "Katze", "Buch", "Haus",
                          "Kind", "Hund", "Zeitung"])
        det = rng.choice(["poss", "poss", "def"])
        emit(sent(pers(word, ptag), v(verb, vtag),
                  np("AKK", obj, det=det, poss=rng.choice(POSS))))

    # Intransitives with adverbs.
    for i in range(35):
        if rng.random() < 0.5:
            word, ptag, agr = rng.choice(PERS_SUBJ)
            subj = pers(word, ptag)
            vtag = f"VER {PERS_TAGMAP[agr]} PRÄ"
        else:
            subj = np("NOM", rng.choice(SUBJ_NOUNS))
            vtag = "VER 3PE SIN PRÄ"
        verb = rng.choice(INTRANS)
        adv = rng.choice(ADVS)
        emit(sent(subj, v(verb, vtag), tok(adv, "ADV")))

    # Prepositional phrases (dative location).
    for i in range(30):
        subj = rng.choice(SUBJ_NOUNS)
        verb = rng.choice(["wohn", "spiel", "arbeit", "wart", "sing",
                           "schlaf"])
        prep, loc = rng.choice([("in", "Stadt"), ("in", "Küche"),
                                ("in", "Schule"), ("auf", "Straße"),
                                ("an", "Tür"), ("in", "Kirche"),
                                ("auf", "Feld"), ("in", "Wohnung")])
        emit(sent(np("NOM", subj), v(verb, "VER 3PE SIN PRÄ"),
                  tok(prep, "PRP DAT"), np("DAT", loc)))

    # Perfect tense with haben/sein.
    for i in range(30):
        subj = rng.choice(SUBJ_NOUNS)
        if rng.random() < 0.75:
            verb = rng.choice(["kauf", "hol", "such", "mal", "pack",
                               "spiel", "koch", "find"])
            obj = np("AKK", rng.choice(OBJ_NOUNS),
                     det=rng.choice(["def", "ind"]))
            emit(sent(np("NOM", subj), aux("hab", "VER AUX 3PE SIN PRÄ"),
                      obj, v(verb, "VER PA2")))
        else:
            verb = rng.choice(["komm", "geh", "lauf", "wander", "schwimm"])
            emit(sent(np("NOM", subj), aux("sei", "VER AUX 3PE SIN PRÄ"),
                      tok(rng.choice(ADVS), "ADV"), v(verb, "VER PA2")))

    # Modal + infinitive.
    for i in range(25):
        subj = rng.choice(SUBJ_NOUNS)
        modal = rng.choice(["könn", "woll", "soll", "müss", "dürf"])
        verb, _ = rng.choice(TRANS_3)
        obj = np("AKK", rng.choice(OBJ_NOUNS), det="def")
        emit(sent(np("NOM", subj),
                  [form(modal, "VER MOD", "VER MOD 3PE SIN PRÄ")],
                  obj, v(verb, "VER INF")))

    # Copula + predicative adjective.
    for i in range(25):
        subj = rng.choice(SUBJ_NOUNS + OBJ_NOUNS)
        degree = tok("sehr", "ADV") if rng.random() < 0.3 else []
        emit(sent(np("NOM", subj), aux("sei", "VER AUX 3PE SIN PRÄ"),
                  degree, tok(rng.choice(PRED_ADJS), "ADJ ADV")))

    # Subordinate daß / weil clauses (verb-final).
    for i in range(20):
        subj = rng.choice(SUBJ_NOUNS)
        konj = rng.choice(["daß", "weil", "wenn"])
        s2 = rng.choice(SUBJ_NOUNS)
        o2 = rng.choice(OBJ_NOUNS)
        verb, _ = rng.choice(TRANS_3)
        emit(sent(np("NOM", subj), v("sag", "VER 3PE SIN PRÄ"),
                  tok(",", "SZK"), tok(konj, "KON UNT"),
                  np("NOM", s2), np("AKK", o2),
                  v(verb, "VER 3PE SIN PRÄ")))

    # Separable verbs, finite (particle final) and zu-infinitive.
    for i in range(15):
        subj = rng.choice(SUBJ_NOUNS)
        pick = rng.random()
        if pick < 0.4:
            emit(sent(np("NOM", subj), v("nehm", "VER 3PE SIN PRÄ"),
                      np("AKK", rng.choice(["Essen", "Brot", "Suppe"])),
                      tok("ein", "ZUS")))
        elif pick < 0.7:
            emit(sent(np("NOM", subj), v("kauf", "VER 3PE SIN PRÄ"),
                      np("AKK", rng.choice(["Brot", "Wein", "Fisch"])),
                      tok("ein", "ZUS")))
        else:
            emit(sent(np("NOM", subj),
                      v("wünsch", "VER 3PE SIN PRÄ"), tok(",", "SZK"),
                      np("AKK", rng.choice(["Lied", "Spiel"])),
                      [form("spiel", "VER", "VER EIZ", prefix="ab")]))

    # Dative objects and pronouns.
    for i in range(20):
        word, ptag, agr = rng.choice(PERS_SUBJ)
        dat = rng.choice([("mir", "PRO PER 1PE DAT SIN"),
                          ("dir", "PRO PER 2PE DAT SIN"),
                          ("ihm", "PRO PER 3PE DAT MAS SIN"),
                          ("uns", "PRO PER 1PE DAT PLU")])
        verb = rng.choice(["geb", "zeig", "bring", "schenk"])
        vtag = f"VER {PERS_TAGMAP[agr]} PRÄ"
        emit(sent(pers(word, ptag), v(verb, vtag), tok(*dat),
                  np("AKK", rng.choice(OBJ_NOUNS), det="def")))

    # Reflexives.
    for i in range(8):
        subj = rng.choice(["Katze", "Junge", "Mädchen", "Kind"])
        emit(sent(np("NOM", subj), v("wasch", "VER 3PE SIN PRÄ"),
                  tok("sich", "PRO REF 3PE AKK SIN")))

    # Names.
    for i in range(15):
        n1, g1 = rng.choice(NAMES)
        n2, g2 = rng.choice(NAMES)
        if n1 == n2:
            continue
        verb = rng.choice(["seh", "such", "frag", "lieb"])
        emit(sent([(n1, f"EIG NOM {g1} SIN")], v(verb, "VER 3PE SIN PRÄ"),
                  [(n2, f"EIG AKK {g2} SIN")]))

    # Genitive attributes.
    for i in range(12):
        head = rng.choice(["Haus", "Buch", "Wagen", "Garten"])
        owner = rng.choice(["Lehrer", "Vater", "Meister", "Student"])
        emit(sent(np("NOM", head), np("GEN", owner),
                  aux("sei", "VER AUX 3PE SIN PRÄ"),
                  tok(rng.choice(PRED_ADJS), "ADJ ADV")))

    # Questions.
    for i in range(20):
        subj = rng.choice(SUBJ_NOUNS)
        obj = rng.choice(OBJ_NOUNS)
        verb, _ = rng.choice(TRANS_3)
        if rng.random() < 0.5:
            emit(sent(v(verb, "VER 3PE SIN PRÄ"), np("NOM", subj),
                      np("AKK", obj), end="?"))
        else:
            emit(sent(tok("wer", "PRO INR NOM SIN PRO"),
                      v(verb, "VER 3PE SIN PRÄ"), np("AKK", obj), end="?"))

    # Imperatives.
    for i in range(20):
        verb = rng.choice(["hol", "bring", "such", "zeig", "kauf", "öffn",
                           "mal", "pack"])
        emit(sent(v(verb, "VER IMP SIN", prefix=None),
                  np("AKK", rng.choice(OBJ_NOUNS), det="def"), end="!"))

    # Numbers and counting words.
    for i in range(10):
        word, ptag, agr = rng.choice(PERS_SUBJ)
        vtag = f"VER {PERS_TAGMAP[agr]} PRÄ"
        if rng.random() < 0.5:
            zal = rng.choice(["zwei", "drei", "vier", "fünf", "zehn"])
            emit(sent(pers(word, ptag), v("kauf", vtag), tok(zal, "ZAL"),
                      np("AKK", rng.choice(["Buch", "Bild", "Blume"]),
                         det="none", number="PLU")))
        else:
            num = rng.choice(["12", "100", "3"])
            emit(sent(pers(word, ptag), v("wart", vtag), tok(num, "ZAN"),
                      np("AKK", "Stunde", det="none", number="PLU")))

    # Coordination (plural agreement), intransitive and transitive.
    for i in range(26):
        s1 = rng.choice(SUBJ_NOUNS)
        s2 = rng.choice(SUBJ_NOUNS)
        if rng.random() < 0.5:
            verb = rng.choice(INTRANS)
            emit(sent(np("NOM", s1), tok("und", "KON NEB"), np("NOM", s2),
                      [form(verb, "VER", "VER 3PE PLU PRÄ")]))
        else:
            verb, _ = rng.choice(TRANS_3)
            emit(sent(np("NOM", s1), tok("und", "KON NEB"), np("NOM", s2),
                      [form(verb, "VER", "VER 3PE PLU PRÄ")],
                      np("AKK", rng.choice(OBJ_NOUNS), det="def")))

    # First person plural with the same verbs.
    for i in range(14):
        verb, _ = rng.choice(TRANS_3)
        emit(sent(pers("wir", "PRO PER 1PE NOM PLU"),
                  [form(verb, "VER", "VER 1PE PLU PRÄ")],
                  np("AKK", rng.choice(OBJ_NOUNS),
                     det=rng.choice(["def", "poss"]),
                     poss=rng.choice(POSS))))

    # Relative clauses.
    for i in range(24):
        gender, rel = rng.choice([("MAS", "der"), ("FEM", "die")])
        pool = (["Vater", "Lehrer", "Junge", "Meister", "Student"]
                if gender == "MAS" else ["Frau", "Mutter", "Katze",
                                         "Tochter"])
        subj = rng.choice(pool)
        emit(sent(np("NOM", subj), tok(",", "SZK"),
                  tok(rel, f"PRO REL NOM {gender} SIN PRO"),
                  tok(rng.choice(["dort", "hier"]), "ADV"),
                  v("wohn", "VER 3PE SIN PRÄ"), tok(",", "SZK"),
                  v(rng.choice(INTRANS), "VER 3PE SIN PRÄ")))

    # Compounds in running text.
    for i in range(6):
        comp = rng.choice([("Bauernhaus", "SUB AKK NEU SIN"),
                           ("Haustür", "SUB AKK FEM SIN"),
                           ("Kinderbuch", "SUB AKK NEU SIN"),
                           ("Spielkarte", "SUB AKK FEM SIN")])
        gender = comp[1].split()[2]
        emit(sent(np("NOM", rng.choice(SUBJ_NOUNS)),
                  v("seh", "VER 3PE SIN PRÄ"),
                  [form("d", "ART", f"ART DEF AKK {gender} SIN")],
                  [comp]))

    # Es gibt.
    for i in range(8):
        emit(sent(pers("es", "PRO PER 3PE NOM NEU SIN"),
                  v("geb", "VER 3PE SIN PRÄ"),
                  np("AKK", rng.choice(OBJ_NOUNS), det="ind")))

    # Preterite narrative.
    for i in range(20):
        subj = rng.choice(SUBJ_NOUNS)
        verb, tags = rng.choice([("bring", "VER 3PE SIN PRT"),
                                 ("hol", "VER 3PE SIN PRT"),
                                 ("kauf", "VER 3PE SIN PRT"),
                                 ("seh", "VER 3PE SIN PRT"),
                                 ("find", "VER 3PE SIN PRT"),
                                 ("sing", "VER 3PE SIN PRT")])
        emit(sent(np("NOM", subj), [form(verb, "VER", tags)],
                  np("AKK", rng.choice(OBJ_NOUNS), det="def")))

    # Two-way prepositions: motion takes the accusative, location the
    # dative -- same preposition surface, so the large tag set has to earn
    # its keep.  Goal and location noun pools are disjoint.
    for i in range(22):
        subj = rng.choice(SUBJ_NOUNS)
        prep = rng.choice(["in", "an", "auf"])
        if rng.random() < 0.5:
            goal = rng.choice(["Schule", "Stadt", "Kirche"])
            emit(sent(np("NOM", subj), v("geh", "VER 3PE SIN PRÄ"),
                      tok(prep, "PRP AKK"), np("AKK", goal)))
        else:
            loc = rng.choice(["Küche", "Straße", "Wohnung", "Tasche"])
            emit(sent(np("NOM", subj), v("wart", "VER 3PE SIN PRÄ"),
                      tok(prep, "PRP DAT"), np("DAT", loc)))

    # Bare plural objects (no determiner to give the case away).
    for i in range(16):
        word, ptag, agr = rng.choice(PERS_SUBJ)
        vtag = f"VER {PERS_TAGMAP[agr]} PRÄ"
        obj = rng.choice(["Blume", "Buch", "Apfel", "Lied", "Karte",
                          "Brief", "Bild"])
        emit(sent(pers(word, ptag),
                  v(rng.choice(["kauf", "mal", "such", "seh"]), vtag),
                  np("AKK", obj, det="none", number="PLU")))

    # Dative-object verbs.
    for i in range(14):
        subj = rng.choice(SUBJ_NOUNS)
        obj = rng.choice(["Frau", "Lehrer", "Vater", "Mutter", "Kind",
                          "Junge"])
        emit(sent(np("NOM", subj),
                  v(rng.choice(["dank", "antwort", "helf"]),
                    "VER 3PE SIN PRÄ"),
                  np("DAT", obj)))

    # The winch around the boat shed: keeps the lexical counts for the
    # showpiece homograph on the feminine reading.
    for i in range(6):
        verb = rng.choice(["seh", "such", "brauch", "zeig"])
        emit(sent(np("NOM", rng.choice(["Meister", "Spieler", "Bauer"])),
                  v(verb, "VER 3PE SIN PRÄ"), np("AKK", "Winde")))

    # Keep the three showcase sentences first; shuffle the rest so corpus
    # prefixes (learning-curve slices) mix all patterns.
    head, tail = out[:3], out[3:]
    rng.shuffle(tail)
    return head + tail


def main():
    out = sentences()
    total = sum(len(s) for s in out)
    lines = ["# desk corpus: synthetic hand-tagged German text "
             "(large tag set)"]
    for s in out:
        for surface, tag in s:
            # normalize the tag string through the parser
            lines.append(f"{surface}\t{format_tag(parse_tag(tag, 'large'))}")
        lines.append("")
    path = os.path.abspath(OUT)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {len(out)} sentences, {total} tokens to {path}")


if __name__ == "__main__":
    main()
