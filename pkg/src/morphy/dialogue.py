# -*- coding: utf-8 -*-
"""Question-driven lexicon classification.

A new word is classified by answering a minimal sequence of numbered
questions whose alternatives are concrete surface forms any native speaker
can recognize (weak conjugation? second person singular?  participle with
or without ge-?).  Every terminal state yields a complete lexicon entry,
and every surface form offered as a chosen alternative is generated by the
resulting entry's paradigm, so the dialogue can never produce an entry that
contradicts its own answers.

The noun and adjective trees follow the same recognition style as the verb
tree; their exact question inventory is a reconstruction.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .inflection import apply_umlaut, elide_stem
from .lexicon import LexiconEntry

SIBILANTS = ("s", "ß", "z", "x")


class DialogueError(ValueError):
    """Raised for bad dialogue input (empty root, bad choice, finished
    session)."""


@dataclass(frozen=True)
class Question:
    qid: str
    text: str
    alternatives: tuple


@dataclass(frozen=True)
class DialogueState:
    pos_track: str
    root: str                  # as typed (infinitive for verbs)
    answered: tuple = ()       # ((qid, choice), ...)
    pending: Question | None = None
    draft: LexiconEntry | None = None
    context: tuple = ()        # internal (key, value) scratch pairs

    @property
    def complete(self) -> bool:
        return self.draft is not None

    def ctx(self, key, default=None):
        for k, v in self.context:
            if k == key:
                return v
        return default

    def _with(self, **kw):
        return replace(self, **kw)

    def _push(self, **kv):
        return self._with(context=self.context + tuple(kv.items()))


# Classes picked directly for uninflected classes.
DIRECT_CLASSES = {
    "ADV": "adv", "ADV PRO": "adv_pro",
    "KON UNT": "kon_unt", "KON NEB": "kon_neb", "KON INF": "kon_inf",
    "KON VGL": "kon_vgl", "KON PRI": "kon_pri",
    "PRP": "prp", "SKZ": "skz", "ZUS": "zus", "INJ": "inj",
    "ZAL": "zal", "ABK": "abk",
    "SZD": "szd", "SZE": "sze", "SZG": "szg", "SZK": "szk",
    "SZS": "szs", "SZN": "szn",
}


def start_classification(pos: str, root: str) -> DialogueState:
    """Open a classification session for a root of the given word class."""
    if not root:
        raise DialogueError("empty root")
    state = DialogueState(pos_track=pos, root=root)
    if pos == "VER":
        if root.endswith("en"):
            stem = root[:-2]
        elif root.endswith("n"):
            stem = root[:-1]
        else:
            raise DialogueError(
                f"verb classification expects an infinitive, got {root!r}")
        state = state._push(stem=stem)
        return state._with(pending=Question(
            "weak", "Wird das Verb schwach konjugiert?", ("Ja", "Nein")))
    if pos == "SUB":
        return state._with(pending=_gender_question(root))
    if pos == "EIG":
        return state._with(pending=_gender_question(root))
    if pos == "ADJ":
        return state._with(pending=_adj_comparative_question(root))
    cls = DIRECT_CLASSES.get(pos)
    if cls is None:
        raise DialogueError(f"no classification dialogue for {pos!r}")
    return state._with(draft=LexiconEntry(
        root=root, pos=pos, inflection_class=cls))


def answer(state: DialogueState, choice: int) -> DialogueState:
    """Record a 1-based choice and advance the tree."""
    if state.complete:
        raise DialogueError("classification already complete")
    q = state.pending
    if q is None:
        raise DialogueError("no pending question")
    if not 1 <= choice <= len(q.alternatives):
        raise DialogueError(
            f"choice {choice} out of range 1..{len(q.alternatives)}")
    state = state._with(answered=state.answered + ((q.qid, choice),),
                        pending=None)
    handler = _HANDLERS[(state.pos_track, q.qid)]
    return handler(state, choice, q.alternatives[choice - 1])


# --- verb tree ---------------------------------------------------------------

def _weak_participle_question(state, cls):
    stem = state.ctx("stem")
    suf = "et" if cls == "v_weak_et" else "t"
    plain = stem + suf
    return state._push(cls=cls)._with(pending=Question(
        "part2", "Wie lautet das Partizip des Verbs?",
        (plain, "ge" + plain)))


def _ver_weak(state, choice, _alt):
    stem = state.ctx("stem")
    if choice == 1:
        variants = [f"du {stem}st", f"du {stem}est", f"du {stem}t"]
        return state._with(pending=Question(
            "pres2", "Wie lautet die 2. Person Singular Präsens?",
            tuple(variants)))
    # strong conjugation: ask for the changed present stem
    cands = [stem]
    uml = apply_umlaut(stem)
    if uml != stem:
        cands.append(uml)
    for a, b in (("e", "i"), ("e", "ie")):
        i = stem.rfind(a)
        if i >= 0:
            cand = stem[:i] + b + stem[i + 1:]
            if cand not in cands:
                cands.append(cand)
    return state._push(pres_cands=tuple(cands))._with(pending=Question(
        "pres23", "Wie lautet die 2. Person Singular Präsens?",
        tuple(f"du {c}{'t' if c.endswith(SIBILANTS) else 'st'}"
              for c in cands)))


def _ver_pres2(state, choice, _alt):
    root = state.root
    if choice == 2:
        cls = "v_weak_et"
    elif choice == 3:
        # 2nd person singular identical to the 3rd: sibilant stems
        cls = "v_weak_s"
    elif root.endswith(("eln", "ern")):
        cls = "v_weak_n"
    else:
        cls = "v_weak"
    return _weak_participle_question(state, cls)


def _ver_part2(state, choice, alt):
    stem = state.ctx("stem")
    flags = frozenset(("no_ge_participle",)) if choice == 1 else frozenset()
    entry = LexiconEntry(root=stem, pos="VER",
                         inflection_class=state.ctx("cls"),
                         flags=flags)
    return state._with(draft=entry)


_ABLAUT_PRET = ("a", "o", "u", "ie", "i")


_VOWELS = "aeiouäöü"


def _nucleus_variants(stem, replacements):
    """Replace the rightmost maximal vowel run of the stem."""
    end = -1
    for i in range(len(stem) - 1, -1, -1):
        if stem[i] in _VOWELS:
            end = i
            break
    if end < 0:
        return []
    start = end
    while start > 0 and stem[start - 1] in _VOWELS:
        start -= 1
    out = []
    for r in replacements:
        cand = stem[:start] + r + stem[end + 1:]
        if cand != stem and cand not in out:
            out.append(cand)
    return out


def _ver_pres23(state, choice, _alt):
    cands = state.ctx("pres_cands")
    pres23 = cands[choice - 1]
    stem = state.ctx("stem")
    pret_cands = _nucleus_variants(stem, _ABLAUT_PRET) or [stem]
    return state._push(pres23=pres23, pret_cands=tuple(pret_cands))._with(
        pending=Question(
            "pret", "Wie lautet die 1. Person Singular Präteritum?",
            tuple(f"ich {c}" for c in pret_cands)))


def _ver_pret(state, choice, _alt):
    stem = state.ctx("stem")
    pret = state.ctx("pret_cands")[choice - 1]
    part_cands = [f"ge{stem}en", f"ge{pret}en"]
    for c in _nucleus_variants(stem, ("o", "u")):
        cand = f"ge{c}en"
        if cand not in part_cands:
            part_cands.append(cand)
    return state._push(pret=pret, part_cands=tuple(part_cands))._with(
        pending=Question(
            "part2s", "Wie lautet das Partizip des Verbs?",
            tuple(part_cands)))


def _ver_part2s(state, choice, alt):
    stem = state.ctx("stem")
    pres23 = state.ctx("pres23")
    pret = state.ctx("pret")
    if stem.endswith(SIBILANTS):
        cls = "v_strong_s"
    elif stem.endswith(("d", "t")):
        cls = "v_strong_et"
    else:
        cls = "v_strong"
    overrides = {"pret_stem": pret}
    if pres23 != stem:
        overrides["pres23_stem"] = pres23
        overrides["imp_sg"] = pres23
    if alt != f"ge{stem}en":
        overrides["part2"] = alt
    entry = LexiconEntry(root=stem, pos="VER", inflection_class=cls,
                         overrides=tuple(sorted(overrides.items())))
    return state._with(draft=entry)


# --- noun tree ---------------------------------------------------------------

def _gender_question(root):
    return Question("gender", "Welches Genus hat das Substantiv?",
                    (f"der {root}", f"die {root}", f"das {root}"))


_GENDERS = ("MAS", "FEM", "NEU")


def _plural_candidates(root, gender):
    """(display form, plural suffix, umlaut flag) candidates."""
    uml = apply_umlaut(root)
    cands = []

    def put(form, suffix, flag):
        if form not in {c[0] for c in cands}:
            cands.append((form, suffix, flag))

    put(root + "e", "e", False)
    if uml != root:
        put(uml + "e", "e", True)
    if gender != "FEM":
        put(root + "er", "er", False)
        if uml != root:
            put(uml + "er", "er", True)
    if root.endswith(("e", "el", "er")):
        put(root + "n", "n", False)
    else:
        put(root + "en", "en", False)
    put(root, "", False)
    if uml != root and root.endswith(("el", "er", "en")):
        put(uml, "", True)
    if root[-1] in "aeiou":
        put(root + "s", "s", False)
    return tuple(cands)


def _sub_gender(state, choice, _alt):
    gender = _GENDERS[choice - 1]
    if state.pos_track == "EIG":
        return state._with(draft=LexiconEntry(
            root=state.root, pos="EIG", inflection_class="eig",
            gender=gender))
    cands = _plural_candidates(state.root, gender)
    return state._push(gender=gender, pl_cands=cands)._with(
        pending=Question("plural", "Wie lautet der Nominativ Plural?",
                         tuple(f"die {c[0]}" for c in cands)))


_FEM_CLASS = {"e": "n_f_e", "n": "n_f_n", "en": "n_f_en", "s": "n_f_s",
              "": "n_f_0"}


def _sub_plural(state, choice, _alt):
    _, pl_suffix, uml_flag = state.ctx("pl_cands")[choice - 1]
    gender = state.ctx("gender")
    flags = frozenset(("umlaut_in_paradigm",)) if uml_flag else frozenset()
    if gender == "FEM":
        return state._with(draft=LexiconEntry(
            root=state.root, pos="SUB",
            inflection_class=_FEM_CLASS[pl_suffix], gender=gender,
            flags=flags))
    gen_cands = ["s", "es"]
    if pl_suffix in ("n", "en") and not uml_flag:
        gen_cands.append(pl_suffix)
    return state._push(pl=pl_suffix, flags=flags,
                       gen_cands=tuple(gen_cands))._with(
        pending=Question("genitive", "Wie lautet der Genitiv Singular?",
                         tuple(f"des {state.root}{g}" for g in gen_cands)))


def _sub_genitive(state, choice, _alt):
    gen = state.ctx("gen_cands")[choice - 1]
    pl = state.ctx("pl")
    if gen in ("n", "en"):
        cls = "n_weak_n" if gen == "n" else "n_weak_en"
    elif pl == "":
        cls = f"n_{gen}_0n" if state.root.endswith("n") else f"n_{gen}_0"
    else:
        cls = f"n_{gen}_{pl}"
    return state._with(draft=LexiconEntry(
        root=state.root, pos="SUB", inflection_class=cls,
        gender=state.ctx("gender"), flags=state.ctx("flags")))


# --- adjective tree ----------------------------------------------------------

def _adj_comparative_question(root):
    base = elide_stem(root) + "er"
    uml = elide_stem(apply_umlaut(root)) + "er"
    alts = (base,) if uml == base else (base, uml)
    return Question("komp", "Wie lautet der Komparativ?", alts)


def _adj_komp(state, choice, alt):
    uml_flag = alt != elide_stem(state.root) + "er"
    stem = apply_umlaut(state.root) if uml_flag else state.root
    return state._push(uml=uml_flag)._with(pending=Question(
        "sup", "Wie lautet der Superlativ?",
        (f"der {stem}ste", f"der {stem}este")))


def _adj_sup(state, choice, _alt):
    uml = state.ctx("uml")
    cls = {(False, 1): "adj", (False, 2): "adj_est",
           (True, 1): "adj_uml", (True, 2): "adj_uml_est"}[(uml, choice)]
    flags = frozenset(("umlaut_in_paradigm",)) if uml else frozenset()
    return state._with(draft=LexiconEntry(
        root=state.root, pos="ADJ", inflection_class=cls, flags=flags))


_HANDLERS = {
    ("VER", "weak"): _ver_weak,
    ("VER", "pres2"): _ver_pres2,
    ("VER", "part2"): _ver_part2,
    ("VER", "pres23"): _ver_pres23,
    ("VER", "pret"): _ver_pret,
    ("VER", "part2s"): _ver_part2s,
    ("SUB", "gender"): _sub_gender,
    ("EIG", "gender"): _sub_gender,
    ("SUB", "plural"): _sub_plural,
    ("SUB", "genitive"): _sub_genitive,
    ("ADJ", "komp"): _adj_komp,
    ("ADJ", "sup"): _adj_sup,
}
