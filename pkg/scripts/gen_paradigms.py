#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Emit src/morphy/data/paradigms.tsv.

The paradigm inventory is data, not code: regenerating after edits here
keeps the shipped table reproducible.  Slot order matters — the first slot
of a class is its citation slot.
"""

import os

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "morphy", "data",
                   "paradigms.tsv")

rows = []


def slot(cls, sid, template, suffix, transform="none", marker="none"):
    rows.append((cls, sid, template, suffix, transform, marker))


# ---------------------------------------------------------------------------
# Adjective-style declension: ending -> (case, gender, number) readings.
# Union over strong/weak/mixed declension types; plural rows carry no gender.
DECL = {
    "er": [("NOM", "MAS", "SIN"), ("DAT", "FEM", "SIN"), ("GEN", "FEM", "SIN"),
           ("GEN", None, "PLU")],
    "e": [("NOM", "MAS", "SIN"), ("NOM", "FEM", "SIN"), ("NOM", "NEU", "SIN"),
          ("AKK", "FEM", "SIN"), ("AKK", "NEU", "SIN"),
          ("NOM", None, "PLU"), ("AKK", None, "PLU")],
    "es": [("NOM", "NEU", "SIN"), ("AKK", "NEU", "SIN")],
    "em": [("DAT", "MAS", "SIN"), ("DAT", "NEU", "SIN")],
    "en": [("AKK", "MAS", "SIN"), ("DAT", "MAS", "SIN"), ("DAT", "FEM", "SIN"),
           ("DAT", "NEU", "SIN"), ("DAT", None, "PLU"),
           ("GEN", "MAS", "SIN"), ("GEN", "FEM", "SIN"), ("GEN", "NEU", "SIN"),
           ("GEN", None, "PLU"), ("NOM", None, "PLU"), ("AKK", None, "PLU")],
}


def cgn(case, gender, number):
    toks = [case]
    if gender:
        toks.append(gender)
    toks.append(number)
    return " ".join(toks)


def declined(cls, base_tag, stem_suffix, transform, id_prefix, extra=""):
    """One slot per (ending, reading) pair on top of a stem suffix."""
    for ending, readings in DECL.items():
        for case, gender, number in readings:
            sid = f"{id_prefix}{ending}_{case.lower()}"
            sid += f"_{gender.lower()}" if gender else "_pl"
            sid += f"_{number.lower()}" if gender else ""
            tag = f"{base_tag}{extra} {cgn(case, gender, number)}"
            # degree token sits between base and case in canonical order?
            slot(cls, sid, tag, stem_suffix + ending, transform)


# ---------------------------------------------------------------------------
# Nouns.  Classes n_<gen>_<pl>; vowel mutation in the plural is switched on
# by the entry flag umlaut_in_paradigm ("umlaut" transform is flag-gated).

def noun_class(cls, gen_suffix, pl, dat_pl, dat_e=False, weak=False):
    slot(cls, "nom_sg", "SUB NOM $G SIN", "")
    slot(cls, "gen_sg", "SUB GEN $G SIN", gen_suffix)
    slot(cls, "dat_sg", "SUB DAT $G SIN", gen_suffix if weak else "")
    if dat_e:
        slot(cls, "dat_sg_e", "SUB DAT $G SIN", "e")
    slot(cls, "akk_sg", "SUB AKK $G SIN", gen_suffix if weak else "")
    tr = "none" if weak else "umlaut"
    slot(cls, "nom_pl", "SUB NOM $G PLU", pl, tr)
    slot(cls, "gen_pl", "SUB GEN $G PLU", pl, tr)
    slot(cls, "dat_pl", "SUB DAT $G PLU", dat_pl, tr)
    slot(cls, "akk_pl", "SUB AKK $G PLU", pl, tr)


noun_class("n_s_e", "s", "e", "en")
noun_class("n_es_e", "es", "e", "en", dat_e=True)
noun_class("n_s_er", "s", "er", "ern")
noun_class("n_es_er", "es", "er", "ern", dat_e=True)
noun_class("n_s_0", "s", "", "n")          # stems not ending in n/s
noun_class("n_s_0n", "s", "", "")          # stems already ending in n
noun_class("n_es_0", "es", "", "n")
noun_class("n_es_0n", "es", "", "")
noun_class("n_s_s", "s", "s", "s")
noun_class("n_es_s", "es", "s", "s")
noun_class("n_s_n", "s", "n", "n")
noun_class("n_es_n", "es", "n", "n")
noun_class("n_s_en", "s", "en", "en")
noun_class("n_es_en", "es", "en", "en", dat_e=True)
noun_class("n_weak_n", "n", "n", "n", weak=True)
noun_class("n_weak_en", "en", "en", "en", weak=True)
noun_class("n_f_e", "", "e", "en")
noun_class("n_f_n", "", "n", "n")
noun_class("n_f_en", "", "en", "en")
noun_class("n_f_s", "", "s", "s")
noun_class("n_f_0", "", "", "n")

# Proper names: no plural, genitive -s.
slot("eig", "nom_sg", "EIG NOM $G SIN", "")
slot("eig", "gen_sg", "EIG GEN $G SIN", "s")
slot("eig", "dat_sg", "EIG DAT $G SIN", "")
slot("eig", "akk_sg", "EIG AKK $G SIN", "")

# ---------------------------------------------------------------------------
# Verbs.  PERS/NUM suffix tables per conjugation family.

P6 = [("1sg", "1PE SIN"), ("2sg", "2PE SIN"), ("3sg", "3PE SIN"),
      ("1pl", "1PE PLU"), ("2pl", "2PE PLU"), ("3pl", "3PE PLU")]


def verb_person_slots(cls, block, base, tense, suffixes, transform="none"):
    for (pid, feats), suf in zip(P6, suffixes):
        slot(cls, f"{block}_{pid}", f"{base} {feats} {tense}", suf, transform)


def verb_class(cls, base="VER", inf_suffix="en",
               pres=("e", "st", "t", "en", "t", "en"),
               pres23=("2sg", "3sg"),
               kj1=("e", "est", "e", "en", "et", "en"),
               pret=("te", "test", "te", "ten", "tet", "ten"),
               pret_transform="pret_stem",
               kj2=None, kj2_transform=None,
               imp_sg="e", imp_sg_bare="", imp_pl="t",
               part2="t", pa1=None, eiz=True):
    slot(cls, "inf", f"{base} INF", inf_suffix)
    for (pid, feats), suf in zip(P6, pres):
        tr = "pres23_stem" if pid in pres23 else "none"
        slot(cls, f"pres_{pid}", f"{base} {feats} PRÄ", suf, tr)
    verb_person_slots(cls, "kj1", base, "KJ1", kj1)
    verb_person_slots(cls, "pret", base, "PRT", pret, pret_transform)
    kj2 = kj2 or pret
    kj2_transform = kj2_transform or pret_transform
    verb_person_slots(cls, "kj2", base, "KJ2", kj2, kj2_transform)
    if imp_sg is not None:
        slot(cls, "imp_sg", f"{base} IMP SIN", imp_sg)
    if imp_sg_bare is not None:
        slot(cls, "imp_sg_b", f"{base} IMP SIN", imp_sg_bare)
    if imp_pl is not None:
        slot(cls, "imp_pl", f"{base} IMP PLU", imp_pl)
    slot(cls, "part2", f"{base} PA2", part2, "part2_stem",
         "ge_prefix_or_infix")
    if eiz:
        slot(cls, "eiz", f"{base} EIZ", inf_suffix, "none", "zu_infix")
    if pa1 is not None:
        slot(cls, "pa1", "PA1", pa1)
        declined(cls, "PA1", pa1, "none", "pa1_")


KJ2_E = ("e", "est", "e", "en", "et", "en")

# Weak conjugations.
verb_class("v_weak", pa1="end")
verb_class("v_weak_s", pres=("e", "t", "t", "en", "t", "en"), pa1="end")
verb_class("v_weak_et",
           pres=("e", "est", "et", "en", "et", "en"),
           pret=("ete", "etest", "ete", "eten", "etet", "eten"),
           imp_sg="e", imp_sg_bare=None, imp_pl="et", part2="et", pa1="end")
verb_class("v_weak_n", inf_suffix="n",
           pres=("e", "st", "t", "n", "t", "n"),
           kj1=("e", "est", "e", "n", "et", "n"), pa1="nd")

# Mixed: weak endings on an ablauting preterite stem (kj2 takes umlaut).
verb_class("v_mixed", pres23=("2sg", "3sg"),
           kj2_transform="kj2_stem", pa1="end")

# Strong conjugations.
verb_class("v_strong",
           pret=("", "st", "", "en", "t", "en"),
           kj2=KJ2_E, kj2_transform="kj2_stem",
           imp_sg="", imp_sg_bare=None, part2="en", pa1="end")
verb_class("v_strong_s", pres=("e", "t", "t", "en", "t", "en"),
           pres23=("2sg", "3sg"),
           pret=("", "t", "", "en", "t", "en"),
           kj2=KJ2_E, kj2_transform="kj2_stem",
           imp_sg="", imp_sg_bare=None, part2="en", pa1="end")
verb_class("v_strong_et", pres=("e", "est", "et", "en", "et", "en"),
           pret=("", "est", "", "en", "et", "en"),
           kj2=KJ2_E, kj2_transform="kj2_stem",
           imp_sg="e", imp_sg_bare=None, imp_pl="et", part2="en", pa1="end")

# Auxiliaries: strong skeleton, AUX tags, no extended infinitive.
verb_class("v_aux", base="VER AUX",
           pret=("", "st", "", "en", "t", "en"),
           kj2=KJ2_E, kj2_transform="kj2_stem",
           imp_sg="", imp_sg_bare=None, eiz=False)
verb_class("v_aux_m", base="VER AUX", kj2_transform="kj2_stem",
           imp_sg="e", imp_sg_bare="", eiz=False)

# Modals (and wissen, which conjugates alike but is a full verb): the
# singular present comes from the pres23 stem with bare 1st/3rd person.
def modal_class(cls, base, twosg):
    verb_class(cls, base=base,
               pres=("", twosg, "", "en", "t", "en"),
               pres23=("1sg", "2sg", "3sg"),
               kj2_transform="kj2_stem",
               imp_sg="e", imp_sg_bare=None, imp_pl=None, eiz=False)


modal_class("v_mod", "VER MOD", "st")
modal_class("v_mod_s", "VER MOD", "t")
modal_class("v_wiss", "VER", "t")

# ---------------------------------------------------------------------------
# Adjectives.  Citation slot is the uninflected base (also the adverbial
# reading).  Declined positives elide (edel -> edlem); superlatives keep the
# full stem (edelste).  Umlaut comparison is a class property gated by the
# entry flag, used by monosyllabic stems that never elide.

def adj_class(cls, sup_suffix, comparison=True, uml=False):
    ktr = "umlaut" if uml else "elide"
    slot(cls, "adv", "ADJ ADV", "")
    declined(cls, "ADJ", "", "elide", "p_")
    if comparison:
        slot(cls, "kom_adv", "ADJ KOM ADV", "er", ktr)
        declined(cls, "ADJ", "er", ktr, "k_", extra=" KOM")
        str_ = "umlaut" if uml else "none"
        slot(cls, "sup_adv", "ADJ SUP ADV", sup_suffix + "en", str_)
        declined(cls, "ADJ", sup_suffix, str_, "s_", extra=" SUP")


adj_class("adj", "st")
adj_class("adj_est", "est")
adj_class("adj_uml", "st", uml=True)
adj_class("adj_uml_est", "est", uml=True)
adj_class("adj_nocomp", "", comparison=False)

# ---------------------------------------------------------------------------
# Closed classes.

def fixed(cls, tag, sid="w"):
    slot(cls, sid, tag, "")


def forms_table(cls, spec_rows):
    """spec_rows: (slot_id, suffix, tag)"""
    for sid, suffix, tag in spec_rows:
        slot(cls, sid, tag, suffix)


# Definite article, root "d".
forms_table("art_def", [
    ("der_nm", "er", "ART DEF NOM MAS SIN"),
    ("die_nf", "ie", "ART DEF NOM FEM SIN"),
    ("das_nn", "as", "ART DEF NOM NEU SIN"),
    ("die_np", "ie", "ART DEF NOM PLU"),
    ("den_am", "en", "ART DEF AKK MAS SIN"),
    ("die_af", "ie", "ART DEF AKK FEM SIN"),
    ("das_an", "as", "ART DEF AKK NEU SIN"),
    ("die_ap", "ie", "ART DEF AKK PLU"),
    ("dem_dm", "em", "ART DEF DAT MAS SIN"),
    ("der_df", "er", "ART DEF DAT FEM SIN"),
    ("dem_dn", "em", "ART DEF DAT NEU SIN"),
    ("den_dp", "en", "ART DEF DAT PLU"),
    ("des_gm", "es", "ART DEF GEN MAS SIN"),
    ("der_gf", "er", "ART DEF GEN FEM SIN"),
    ("des_gn", "es", "ART DEF GEN NEU SIN"),
    ("der_gp", "er", "ART DEF GEN PLU"),
])

# Indefinite article, root "ein".
forms_table("art_ind", [
    ("nm", "", "ART IND NOM MAS SIN"),
    ("nf", "e", "ART IND NOM FEM SIN"),
    ("nn", "", "ART IND NOM NEU SIN"),
    ("am", "en", "ART IND AKK MAS SIN"),
    ("af", "e", "ART IND AKK FEM SIN"),
    ("an", "", "ART IND AKK NEU SIN"),
    ("dm", "em", "ART IND DAT MAS SIN"),
    ("df", "er", "ART IND DAT FEM SIN"),
    ("dn", "em", "ART IND DAT NEU SIN"),
    ("gm", "es", "ART IND GEN MAS SIN"),
    ("gf", "er", "ART IND GEN FEM SIN"),
    ("gn", "es", "ART IND GEN NEU SIN"),
])

# Possessive pronouns (mein, dein, sein, ihr, unser, euer).  Declined
# endings elide the stem so that euer -> eure.
POS_ATT = [
    ("att_nm", "", "NOM MAS SIN"), ("att_nn", "", "NOM NEU SIN"),
    ("att_an", "", "AKK NEU SIN"),
    ("att_nf", "e", "NOM FEM SIN"), ("att_af", "e", "AKK FEM SIN"),
    ("att_np", "e", "NOM PLU"), ("att_ap", "e", "AKK PLU"),
    ("att_dm", "em", "DAT MAS SIN"), ("att_dn", "em", "DAT NEU SIN"),
    ("att_am", "en", "AKK MAS SIN"), ("att_dp", "en", "DAT PLU"),
    ("att_df", "er", "DAT FEM SIN"), ("att_gf", "er", "GEN FEM SIN"),
    ("att_gp", "er", "GEN PLU"),
    ("att_gm", "es", "GEN MAS SIN"), ("att_gn", "es", "GEN NEU SIN"),
]
POS_PRO = [
    ("pro_nm", "er", "NOM MAS SIN"),
    ("pro_nf", "e", "NOM FEM SIN"), ("pro_af", "e", "AKK FEM SIN"),
    ("pro_np", "e", "NOM PLU"), ("pro_ap", "e", "AKK PLU"),
    ("pro_nn", "es", "NOM NEU SIN"), ("pro_an", "es", "AKK NEU SIN"),
    ("pro_dm", "em", "DAT MAS SIN"), ("pro_dn", "em", "DAT NEU SIN"),
    ("pro_am", "en", "AKK MAS SIN"), ("pro_dp", "en", "DAT PLU"),
]
for sid, suf, feats in POS_ATT:
    slot("pro_pos", sid, f"PRO POS {feats} ATT", suf,
         "elide" if suf else "none")
for sid, suf, feats in POS_PRO:
    slot("pro_pos", sid, f"PRO POS {feats} PRO", suf, "elide")

# dies- and welch- style declining pronouns, attributive and pronominal.
ER_DECL = [
    ("nm", "er", "NOM MAS SIN"),
    ("nf", "e", "NOM FEM SIN"), ("af", "e", "AKK FEM SIN"),
    ("np", "e", "NOM PLU"), ("ap", "e", "AKK PLU"),
    ("nn", "es", "NOM NEU SIN"), ("an", "es", "AKK NEU SIN"),
    ("gm", "es", "GEN MAS SIN"), ("gn", "es", "GEN NEU SIN"),
    ("dm", "em", "DAT MAS SIN"), ("dn", "em", "DAT NEU SIN"),
    ("am", "en", "AKK MAS SIN"), ("dp", "en", "DAT PLU"),
    ("df", "er", "DAT FEM SIN"), ("gf", "er", "GEN FEM SIN"),
    ("gp", "er", "GEN PLU"),
]


def er_decl_class(cls, base):
    for sid, suf, feats in ER_DECL:
        slot(cls, f"att_{sid}", f"{base} {feats} ATT", suf, "elide")
        slot(cls, f"pro_{sid}", f"{base} {feats} PRO", suf, "elide")


er_decl_class("pro_dem_dies", "PRO DEM")
er_decl_class("pro_inr_welch", "PRO INR")
er_decl_class("pro_ind_decl", "PRO IND")

# kein declines like an ein-word (bare attributive forms included).
for sid, suf, feats in POS_ATT:
    slot("pro_ind_ein", sid, f"PRO IND {feats} ATT", suf,
         "elide" if suf else "none")
for sid, suf, feats in POS_PRO:
    slot("pro_ind_ein", sid, f"PRO IND {feats} PRO", suf, "elide")

# der/die/das as demonstrative and relative pronoun, root "d".
D_PRO = [
    ("er_nm", "er", "NOM MAS SIN", "PRO"),
    ("ie_nf", "ie", "NOM FEM SIN", "PRO"),
    ("as_nn", "as", "NOM NEU SIN", "PRO"),
    ("ie_np", "ie", "NOM PLU", "PRO"),
    ("en_am", "en", "AKK MAS SIN", "PRO"),
    ("ie_af", "ie", "AKK FEM SIN", "PRO"),
    ("as_an", "as", "AKK NEU SIN", "PRO"),
    ("ie_ap", "ie", "AKK PLU", "PRO"),
    ("em_dm", "em", "DAT MAS SIN", "PRO"),
    ("er_df", "er", "DAT FEM SIN", "PRO"),
    ("em_dn", "em", "DAT NEU SIN", "PRO"),
    ("enen_dp", "enen", "DAT PLU", "PRO"),
    ("essen_gm", "essen", "GEN MAS SIN", "PRO"),
    ("eren_gf", "eren", "GEN FEM SIN", "PRO"),
    ("essen_gn", "essen", "GEN NEU SIN", "PRO"),
    ("eren_gp", "eren", "GEN PLU", "PRO"),
    ("essen_gm_a", "essen", "GEN MAS SIN", "ATT"),
    ("eren_gf_a", "eren", "GEN FEM SIN", "ATT"),
    ("essen_gn_a", "essen", "GEN NEU SIN", "ATT"),
    ("eren_gp_a", "eren", "GEN PLU", "ATT"),
]
for base, cls in (("PRO DEM", "pro_dem_d"), ("PRO REL", "pro_rel_d")):
    for sid, suf, feats, usage in D_PRO:
        slot(cls, sid, f"{base} {feats} {usage}", suf)

# wer/was, root "w".
forms_table("pro_inr_w", [
    ("wer", "er", "PRO INR NOM SIN PRO"),
    ("wen", "en", "PRO INR AKK SIN PRO"),
    ("wem", "em", "PRO INR DAT SIN PRO"),
    ("wessen", "essen", "PRO INR GEN SIN PRO"),
    ("was_n", "as", "PRO INR NOM SIN PRO"),
    ("was_a", "as", "PRO INR AKK SIN PRO"),
])

# Personal pronouns: the root supplies the nominative; oblique forms are
# per-entry slot overrides (ich -> mir/mich).
def personal(cls, feats):
    slot(cls, "nom", f"PRO PER {feats[0]} NOM {feats[1]}", "")
    slot(cls, "gen", f"PRO PER {feats[0]} GEN {feats[1]}", "")
    slot(cls, "dat", f"PRO PER {feats[0]} DAT {feats[1]}", "")
    slot(cls, "akk", f"PRO PER {feats[0]} AKK {feats[1]}", "")


personal("pp_1sg", ("1PE", "SIN"))
personal("pp_2sg", ("2PE", "SIN"))
personal("pp_1pl", ("1PE", "PLU"))
personal("pp_2pl", ("2PE", "PLU"))
personal("pp_3pl", ("3PE", "PLU"))
for cls, g in (("pp_3sg_m", "MAS"), ("pp_3sg_f", "FEM"), ("pp_3sg_n", "NEU")):
    slot(cls, "nom", f"PRO PER 3PE NOM {g} SIN", "")
    slot(cls, "gen", f"PRO PER 3PE GEN {g} SIN", "")
    slot(cls, "dat", f"PRO PER 3PE DAT {g} SIN", "")
    slot(cls, "akk", f"PRO PER 3PE AKK {g} SIN", "")

# Reflexives.
forms_table("ref_sich", [
    ("ds", "", "PRO REF 3PE DAT SIN"), ("as", "", "PRO REF 3PE AKK SIN"),
    ("dp", "", "PRO REF 3PE DAT PLU"), ("ap", "", "PRO REF 3PE AKK PLU"),
])
fixed("ref_1s_dat", "PRO REF 1PE DAT SIN")
fixed("ref_1s_akk", "PRO REF 1PE AKK SIN")
fixed("ref_2s_dat", "PRO REF 2PE DAT SIN")
fixed("ref_2s_akk", "PRO REF 2PE AKK SIN")
forms_table("ref_1pl", [
    ("d", "", "PRO REF 1PE DAT PLU"), ("a", "", "PRO REF 1PE AKK PLU")])
forms_table("ref_2pl", [
    ("d", "", "PRO REF 2PE DAT PLU"), ("a", "", "PRO REF 2PE AKK PLU")])

# Uninflected classes.
fixed("prp", "PRP")
fixed("prp_akk", "PRP AKK")
fixed("prp_dat", "PRP DAT")
fixed("prp_gen", "PRP GEN")
forms_table("prp_da", [("d", "", "PRP DAT"), ("a", "", "PRP AKK")])
fixed("kon_unt", "KON UNT")
fixed("kon_neb", "KON NEB")
fixed("kon_inf", "KON INF")
fixed("kon_vgl", "KON VGL")
fixed("kon_pri", "KON PRI")
fixed("adv", "ADV")
fixed("adv_pro", "ADV PRO")
fixed("pro_ind_fix", "PRO IND PRO")
fixed("skz", "SKZ")
fixed("zus", "ZUS")
fixed("inj", "INJ")
fixed("zal", "ZAL")
fixed("abk", "ABK")
fixed("szd", "SZD")
fixed("sze", "SZE")
fixed("szg", "SZG")
fixed("szk", "SZK")
fixed("szs", "SZS")
fixed("szn", "SZN")


def main():
    out = os.path.abspath(OUT)
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("# paradigm classes: class_id, slot_id, tag template, "
                 "suffix, stem_transform, marker\n")
        for r in rows:
            fh.write("\t".join(r) + "\n")
    print(f"wrote {len(rows)} slots to {out}")


if __name__ == "__main__":
    main()
