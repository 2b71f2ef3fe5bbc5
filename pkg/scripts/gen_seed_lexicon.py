#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Emit src/morphy/data/seed_lexicon.tsv.

A hand-curated root lexicon (~230 entries) in the pre-1996 orthography:
sharp s before consonants and finally (Fluß, küßt), ss between vowels after
a short vowel (Flusses, küssen).  Entries whose root-final ß alternates
carry the ss_sharp_shift flag; long-vowel stems (Fuß, heiß) do not.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from morphy.data import load_default_paradigms
from morphy.inflection import generate_forms
from morphy.lexicon import Lexicon, LexiconEntry, save_lexicon

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "morphy", "data",
                   "seed_lexicon.tsv")

E = []


def add(root, pos, cls, gender=None, prefix=None, prefix_kind="none",
        flags=(), **overrides):
    E.append(LexiconEntry(
        root=root, pos=pos, inflection_class=cls, gender=gender,
        prefix=prefix, prefix_kind=prefix_kind, flags=frozenset(flags),
        overrides=tuple(sorted(overrides.items()))))


UML = "umlaut_in_paradigm"
SS = "ss_sharp_shift"
NOGE = "no_ge_participle"


def noun(root, gender, cls, flags=()):
    add(root, "SUB", cls, gender=gender, flags=flags)


# --- nouns -----------------------------------------------------------------
noun("Fluß", "MAS", "n_es_e", (UML, SS))
noun("Kuß", "MAS", "n_es_e", (UML, SS))
noun("Fuß", "MAS", "n_es_e", (UML,))          # long vowel: Füße, Fußes
noun("Gast", "MAS", "n_es_e", (UML,))
noun("Platz", "MAS", "n_es_e", (UML,))
noun("Stuhl", "MAS", "n_es_e", (UML,))
noun("Baum", "MAS", "n_es_e", (UML,))
noun("Wind", "MAS", "n_es_e")
noun("Tag", "MAS", "n_es_e")
noun("Tisch", "MAS", "n_es_e")
noun("Hund", "MAS", "n_es_e")
noun("Brief", "MAS", "n_es_e")
noun("Weg", "MAS", "n_es_e")
noun("Berg", "MAS", "n_es_e")
noun("Freund", "MAS", "n_es_e")
noun("Wein", "MAS", "n_es_e")
noun("Stein", "MAS", "n_es_e")
noun("Fisch", "MAS", "n_es_e")
noun("Punkt", "MAS", "n_es_e")
noun("Krieg", "MAS", "n_es_e")
noun("Monat", "MAS", "n_s_e")
noun("Arm", "MAS", "n_s_e")
noun("Abend", "MAS", "n_s_e")
noun("Hafen", "MAS", "n_s_0n", (UML,))
noun("Wagen", "MAS", "n_s_0n")
noun("Garten", "MAS", "n_s_0n", (UML,))
noun("Vater", "MAS", "n_s_0", (UML,))
noun("Bruder", "MAS", "n_s_0", (UML,))
noun("Vogel", "MAS", "n_s_0", (UML,))
noun("Apfel", "MAS", "n_s_0", (UML,))
noun("Mantel", "MAS", "n_s_0", (UML,))
noun("Meister", "MAS", "n_s_0")
noun("Lehrer", "MAS", "n_s_0")
noun("Spieler", "MAS", "n_s_0")
noun("Sommer", "MAS", "n_s_0")
noun("Winter", "MAS", "n_s_0")
noun("Morgen", "MAS", "n_s_0n")
noun("Kuchen", "MAS", "n_s_0n")
noun("Onkel", "MAS", "n_s_0")
noun("Staat", "MAS", "n_es_en")
noun("Bauer", "MAS", "n_weak_n")
noun("Junge", "MAS", "n_weak_n")
noun("Kunde", "MAS", "n_weak_n")
noun("Neffe", "MAS", "n_weak_n")
noun("Löwe", "MAS", "n_weak_n")
noun("Mensch", "MAS", "n_weak_en")
noun("Student", "MAS", "n_weak_en")
noun("Präsident", "MAS", "n_weak_en")
noun("Elefant", "MAS", "n_weak_en")
noun("Frau", "FEM", "n_f_en")
noun("Fahrt", "FEM", "n_f_en")
noun("Zeitung", "FEM", "n_f_en")
noun("Arbeit", "FEM", "n_f_en")
noun("Zeit", "FEM", "n_f_en")
noun("Tür", "FEM", "n_f_en")
noun("Uhr", "FEM", "n_f_en")
noun("Antwort", "FEM", "n_f_en")
noun("Wohnung", "FEM", "n_f_en")
noun("Übung", "FEM", "n_f_en")
noun("Regierung", "FEM", "n_f_en")
noun("Verspätung", "FEM", "n_f_en")
noun("Straße", "FEM", "n_f_n")
noun("Blume", "FEM", "n_f_n")
noun("Karte", "FEM", "n_f_n")
noun("Kirche", "FEM", "n_f_n")
noun("Küche", "FEM", "n_f_n")
noun("Lampe", "FEM", "n_f_n")
noun("Schule", "FEM", "n_f_n")
noun("Stunde", "FEM", "n_f_n")
noun("Woche", "FEM", "n_f_n")
noun("Sprache", "FEM", "n_f_n")
noun("Frage", "FEM", "n_f_n")
noun("Reise", "FEM", "n_f_n")
noun("Katze", "FEM", "n_f_n")
noun("Tasche", "FEM", "n_f_n")
noun("Suppe", "FEM", "n_f_n")
noun("Winde", "FEM", "n_f_n")          # the winch
noun("Sonne", "FEM", "n_f_n")
noun("Seite", "FEM", "n_f_n")
noun("Hand", "FEM", "n_f_e", (UML,))
noun("Wand", "FEM", "n_f_e", (UML,))
noun("Nacht", "FEM", "n_f_e", (UML,))
noun("Stadt", "FEM", "n_f_e", (UML,))
noun("Maus", "FEM", "n_f_e", (UML,))
noun("Kuh", "FEM", "n_f_e", (UML,))
noun("Mutter", "FEM", "n_f_0", (UML,))
noun("Tochter", "FEM", "n_f_0", (UML,))
noun("Haus", "NEU", "n_es_er", (UML,))
noun("Buch", "NEU", "n_es_er", (UML,))
noun("Dorf", "NEU", "n_es_er", (UML,))
noun("Land", "NEU", "n_es_er", (UML,))
noun("Wort", "NEU", "n_es_er", (UML,))
noun("Glas", "NEU", "n_es_er", (UML,))
noun("Kind", "NEU", "n_es_er")
noun("Bild", "NEU", "n_es_er")
noun("Lied", "NEU", "n_es_er")
noun("Feld", "NEU", "n_es_er")
noun("Segel", "NEU", "n_s_0")
noun("Essen", "NEU", "n_s_0n")
noun("Fenster", "NEU", "n_s_0")
noun("Zimmer", "NEU", "n_s_0")
noun("Messer", "NEU", "n_s_0")
noun("Wasser", "NEU", "n_s_0")
noun("Mädchen", "NEU", "n_s_0n")
noun("Märchen", "NEU", "n_s_0n")
noun("Brot", "NEU", "n_es_e")
noun("Jahr", "NEU", "n_es_e")
noun("Spiel", "NEU", "n_es_e")
noun("Schiff", "NEU", "n_es_e")
noun("Pferd", "NEU", "n_es_e")
noun("Ziel", "NEU", "n_es_e")
noun("Heft", "NEU", "n_es_e")
noun("Boot", "NEU", "n_es_e")
noun("Auto", "NEU", "n_s_s")
noun("Foto", "NEU", "n_s_s")

add("Egon", "EIG", "eig", gender="MAS")
add("Peter", "EIG", "eig", gender="MAS")
add("Hansen", "EIG", "eig", gender="MAS")
add("Anna", "EIG", "eig", gender="FEM")
add("Maria", "EIG", "eig", gender="FEM")
add("Berlin", "EIG", "eig", gender="NEU")

# --- verbs (roots are infinitive stems) ------------------------------------
def weak(root, cls="v_weak", flags=(), **ov):
    add(root, "VER", cls, flags=flags, **ov)


weak("spiel")
weak("mein")
weak("kauf")
weak("mach")
weak("sag")
weak("frag")
weak("such")
weak("hör")
weak("hol")
weak("koch")
weak("lieb")
weak("leb")
weak("lern")
weak("lob")
weak("mal")
weak("zeig")
weak("wohn")
weak("wünsch")
weak("stell")
weak("leg")
weak("führ")
weak("brauch")
weak("glaub")
weak("dank")
weak("schenk")
weak("pack")
weak("küß", "v_weak_s", flags=(SS,))
weak("putz", "v_weak_s")
weak("tanz", "v_weak_s")
weak("telefonier", flags=(NOGE,))
weak("studier", flags=(NOGE,))
weak("arbeit", "v_weak_et")
weak("wart", "v_weak_et")
weak("antwort", "v_weak_et")
weak("red", "v_weak_et")
weak("öffn", "v_weak_et")
weak("flatter", "v_weak_n")
weak("wander", "v_weak_n")
weak("sammel", "v_weak_n")
weak("segel", "v_weak_n")
weak("kletter", "v_weak_n")
weak("lächel", "v_weak_n")

add("bring", "VER", "v_mixed", pret_stem="brach", part2_stem="brach")
add("denk", "VER", "v_mixed", pret_stem="dach", part2_stem="dach")


def strong(root, cls="v_strong", **ov):
    add(root, "VER", cls, **ov)


strong("nehm", pres23_stem="nimm", pret_stem="nahm", part2="genommen",
       imp_sg="nimm")
strong("geb", pres23_stem="gib", pret_stem="gab", imp_sg="gib")
strong("seh", pres23_stem="sieh", pret_stem="sah", imp_sg="sieh")
strong("fahr", pres23_stem="fähr", pret_stem="fuhr")
strong("lauf", pres23_stem="läuf", pret_stem="lief")
strong("komm", pret_stem="kam")
strong("geh", pret_stem="ging", part2="gegangen")
strong("steh", pret_stem="stand", part2="gestanden", kj2_stem="stünd")
strong("trink", pret_stem="trank", part2_stem="trunk")
strong("sing", pret_stem="sang", part2_stem="sung")
strong("spring", pret_stem="sprang", part2_stem="sprung")
strong("schlaf", pres23_stem="schläf", pret_stem="schlief")
strong("helf", pres23_stem="hilf", pret_stem="half", part2_stem="holf",
       kj2_stem="hülf", imp_sg="hilf")
strong("sprech", pres23_stem="sprich", pret_stem="sprach",
       part2_stem="sproch", imp_sg="sprich")
strong("schreib", pret_stem="schrieb")
strong("bleib", pret_stem="blieb")
strong("flieg", pret_stem="flog")
strong("trag", pres23_stem="träg", pret_stem="trug")
strong("wasch", pres23_stem="wäsch", pret_stem="wusch")
strong("ruf", pret_stem="rief")
strong("schlag", pres23_stem="schläg", pret_stem="schlug")
strong("steig", pret_stem="stieg")
strong("fall", pres23_stem="fäll", pret_stem="fiel")
strong("schwimm", pret_stem="schwamm", part2_stem="schwomm")
strong("les", "v_strong_s", pres23_stem="lies", pret_stem="las",
       imp_sg="lies")
strong("eß", "v_strong_s", pres23_stem="iß", pret_stem="aß",
       part2="gegessen", imp_sg="iß")
strong("sitz", "v_strong_s", pret_stem="saß", part2="gesessen")
strong("heiß", "v_strong_s", pret_stem="hieß")
strong("find", "v_strong_et", pret_stem="fand", part2_stem="fund")
strong("wind", "v_strong_et", pret_stem="wand", part2_stem="wund")
strong("bind", "v_strong_et", pret_stem="band", part2_stem="bund")
strong("halt", "v_strong_et", pres23_stem="hält", pret_stem="hielt",
       pres_2sg="hältst", pres_3sg="hält")

# Prefixed verbs: the base stays its own entry.
add("nehm", "VER", "v_strong", prefix="ein", prefix_kind="separable",
    pres23_stem="nimm", pret_stem="nahm", part2="genommen", imp_sg="nimm")
add("spiel", "VER", "v_weak", prefix="ab", prefix_kind="separable")
add("spiel", "VER", "v_weak", prefix="ver", prefix_kind="inseparable")
add("kauf", "VER", "v_weak", prefix="ein", prefix_kind="separable")
add("kauf", "VER", "v_weak", prefix="ver", prefix_kind="inseparable")
add("ruf", "VER", "v_strong", prefix="an", prefix_kind="separable",
    pret_stem="rief")
add("steh", "VER", "v_strong", prefix="auf", prefix_kind="separable",
    pret_stem="stand", part2="gestanden", kj2_stem="stünd")
add("steh", "VER", "v_strong", prefix="ver", prefix_kind="inseparable",
    pret_stem="stand", part2="standen", kj2_stem="stünd")
add("bring", "VER", "v_mixed", prefix="mit", prefix_kind="separable",
    pret_stem="brach", part2_stem="brach")
add("komm", "VER", "v_strong", prefix="an", prefix_kind="separable",
    pret_stem="kam")
add("zahl", "VER", "v_weak", prefix="be", prefix_kind="inseparable")
add("zähl", "VER", "v_weak", prefix="er", prefix_kind="inseparable")
add("such", "VER", "v_weak", prefix="be", prefix_kind="inseparable")
add("gewinn", "VER", "v_strong", flags=(NOGE,), pret_stem="gewann",
    part2="gewonnen")

# Auxiliaries and modals.
add("sei", "VER AUX", "v_aux", pret_stem="war", kj2_stem="wär",
    inf="sein", pres_1sg="bin", pres_2sg="bist", pres_3sg="ist",
    pres_1pl="sind", pres_2pl="seid", pres_3pl="sind",
    kj1_1sg="sei", kj1_3sg="sei", part2="gewesen", imp_pl="seid")
add("hab", "VER AUX", "v_aux_m", pres23_stem="ha", pret_stem="hat")
add("werd", "VER AUX", "v_aux", pres23_stem="wir", pres_3sg="wird",
    pret_1sg="wurde", pret_2sg="wurdest", pret_3sg="wurde",
    pret_1pl="wurden", pret_2pl="wurdet", pret_3pl="wurden",
    kj2_stem="würd", part2_stem="word", imp_sg="werde", imp_pl="werdet")
add("könn", "VER MOD", "v_mod", pres23_stem="kann", pret_stem="konn",
    part2_stem="konn")
add("woll", "VER MOD", "v_mod", pres23_stem="will", pret_stem="woll",
    kj2_stem="woll")
add("soll", "VER MOD", "v_mod", pres23_stem="soll", pret_stem="soll",
    kj2_stem="soll")
add("dürf", "VER MOD", "v_mod", pres23_stem="darf", pret_stem="durf")
add("mög", "VER MOD", "v_mod", pres23_stem="mag", pret_stem="moch",
    part2_stem="moch")
add("müss", "VER MOD", "v_mod_s", pres23_stem="muß", pret_stem="muß",
    part2_stem="muß")
add("wiss", "VER", "v_wiss", pres23_stem="weiß", pret_stem="wuß",
    part2_stem="wuß")

# --- adjectives ------------------------------------------------------------
def adj(root, cls="adj", flags=()):
    add(root, "ADJ", cls, flags=flags)


adj("schnell")
adj("klein")
adj("schön")
adj("neu", "adj_est")
adj("reich")
adj("froh")
adj("frisch", "adj_est")
adj("hübsch", "adj_est")
adj("edel")
adj("dunkel")
adj("teuer")
adj("sauber")
adj("verspielt", "adj_est")
adj("bekannt", "adj_est")
adj("grün")
adj("blau")
adj("rot", "adj_est")
adj("laut", "adj_est")
adj("breit", "adj_est")
adj("weit", "adj_est")
adj("alt", "adj_uml_est", (UML,))
adj("kalt", "adj_uml_est", (UML,))
adj("warm", "adj_uml_est", (UML,))
adj("jung", "adj_uml", (UML,))
adj("lang", "adj_uml", (UML,))
adj("stark", "adj_uml", (UML,))
adj("klug", "adj_uml", (UML,))
adj("gut", "adj_nocomp")
adj("leicht", "adj_est")
adj("schwer")
adj("ruhig")
adj("fleißig")
adj("glücklich")
adj("freundlich")

# --- articles, pronouns ----------------------------------------------------
add("d", "ART", "art_def")
add("ein", "ART", "art_ind")
add("ich", "PRO PER", "pp_1sg", gen="meiner", dat="mir", akk="mich")
add("du", "PRO PER", "pp_2sg", gen="deiner", dat="dir", akk="dich")
add("er", "PRO PER", "pp_3sg_m", gen="seiner", dat="ihm", akk="ihn")
add("sie", "PRO PER", "pp_3sg_f", gen="ihrer", dat="ihr", akk="sie")
add("es", "PRO PER", "pp_3sg_n", gen="seiner", dat="ihm", akk="es")
add("wir", "PRO PER", "pp_1pl", gen="unser", dat="uns", akk="uns")
add("ihr", "PRO PER", "pp_2pl", gen="euer", dat="euch", akk="euch")
add("sie", "PRO PER", "pp_3pl", gen="ihrer", dat="ihnen", akk="sie")
add("sich", "PRO REF", "ref_sich")
add("mir", "PRO REF", "ref_1s_dat")
add("mich", "PRO REF", "ref_1s_akk")
add("dir", "PRO REF", "ref_2s_dat")
add("dich", "PRO REF", "ref_2s_akk")
add("uns", "PRO REF", "ref_1pl")
add("euch", "PRO REF", "ref_2pl")
add("mein", "PRO POS", "pro_pos")
add("dein", "PRO POS", "pro_pos")
add("sein", "PRO POS", "pro_pos")
add("ihr", "PRO POS", "pro_pos")
add("unser", "PRO POS", "pro_pos")
add("euer", "PRO POS", "pro_pos")
add("dies", "PRO DEM", "pro_dem_dies")
add("d", "PRO DEM", "pro_dem_d")
add("d", "PRO REL", "pro_rel_d")
add("welch", "PRO INR", "pro_inr_welch")
add("w", "PRO INR", "pro_inr_w")
add("kein", "PRO IND", "pro_ind_ein")
add("jed", "PRO IND", "pro_ind_decl")
add("all", "PRO IND", "pro_ind_decl")
add("einig", "PRO IND", "pro_ind_decl")
add("viel", "PRO IND", "pro_ind_decl")
add("wenig", "PRO IND", "pro_ind_decl")
add("man", "PRO IND", "pro_ind_fix")
add("etwas", "PRO IND", "pro_ind_fix")
add("nichts", "PRO IND", "pro_ind_fix")
add("jemand", "PRO IND", "pro_ind_fix")
add("niemand", "PRO IND", "pro_ind_fix")

# --- adverbs, conjunctions, prepositions -----------------------------------
for w in ("hier", "dort", "heute", "morgen", "gestern", "immer", "nie",
          "oft", "schon", "noch", "sehr", "auch", "dann", "jetzt", "bald",
          "gern", "wieder", "vielleicht", "leider", "zusammen", "manchmal",
          "so", "nur", "fast", "ja", "nein", "doch", "draußen", "zu"):
    add(w, "ADV", "adv")
for w in ("damit", "dadurch", "dafür", "darauf", "darin", "davon", "dazu"):
    add(w, "ADV PRO", "adv_pro")
for w in ("und", "oder", "aber", "sondern"):
    add(w, "KON NEB", "kon_neb")
for w in ("daß", "weil", "wenn", "ob", "obwohl", "da", "bevor", "nachdem",
          "als", "damit"):
    add(w, "KON UNT", "kon_unt")
for w in ("als", "wie", "denn"):
    add(w, "KON VGL", "kon_vgl")
for w in ("um", "ohne"):
    add(w, "KON INF", "kon_inf")
for w in ("je", "desto"):
    add(w, "KON PRI", "kon_pri")
for w in ("durch", "für", "gegen", "um", "ohne", "ins", "ans", "aufs"):
    add(w, "PRP", "prp_akk")
for w in ("mit", "von", "zu", "bei", "nach", "aus", "seit", "im", "am",
          "beim", "zum", "zur", "vom"):
    add(w, "PRP", "prp_dat")
for w in ("wegen", "während", "trotz"):
    add(w, "PRP", "prp_gen")
for w in ("in", "an", "auf", "über", "unter", "vor", "zwischen", "hinter",
          "neben"):
    add(w, "PRP", "prp_da")
add("zu", "SKZ", "skz")
for w in ("ab", "an", "auf", "aus", "ein", "mit", "vor", "zurück", "weg",
          "los"):
    add(w, "ZUS", "zus")
for w in ("oh", "ach", "wau", "hurra"):
    add(w, "INJ", "inj")
for w in ("eins", "zwei", "drei", "vier", "fünf", "sechs", "sieben", "acht",
          "neun", "zehn", "elf", "zwölf", "zwanzig", "dreißig", "hundert",
          "tausend"):
    add(w, "ZAL", "zal")
for w in ("Dr.", "usw.", "z.B.", "Nr.", "bzw."):
    add(w, "ABK", "abk")
for w, cls in ((".", "sze"), ("!", "sze"), ("?", "sze"), (":", "szd"),
               ("-", "szg"), (",", "szk"), (";", "szs"), ("(", "szn"),
               (")", "szn"), ("/", "szn"), ('"', "szn")):
    add(w, cls.upper(), cls)


def main():
    classes = load_default_paradigms()
    lex = Lexicon()
    for e in E:
        lex.add_entry(e)
        generate_forms(e, classes)   # fail fast on bad data
    out = os.path.abspath(OUT)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("# seed root lexicon\n")
        fh.write(save_lexicon(lex))
    print(f"wrote {len(lex)} entries to {out}")


if __name__ == "__main__":
    main()
